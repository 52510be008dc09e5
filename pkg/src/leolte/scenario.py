"""Scenario files, the end-to-end feasibility report and parameter sweeps.

Scenario files are YAML (JSON also accepted) with units spelled out in every
key.  An empty file yields the reference case: 1200 km altitude, 14 GHz
carrier, 45 deg elevation mask.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from . import doppler as dop
from .grid import doppler_margin, grid_for_bandwidth
from .handover import (
    ConstellationTrack,
    Mechanism,
    availability,
    handover_schedule,
    outage_model,
)
from .harq import (
    LTE_MAX_PROCESSES,
    ChannelModel,
    HarqConfig,
    Strategy,
    analytic_goodput,
    compare_configs,
    harq_id_bits,
    min_harq_processes,
    run_simulation,
    strategy_configs,
)
from .orbit import (
    OrbitScenario,
    PhysicalConstants,
    round_trip_time,
    slant_range,
    visibility_window,
)
from .timers import (
    CONTENTION_BASED,
    LteTimingConstants,
    max_timing_advance,
    ra_feasibility,
    rn_attach_plan,
    ta_applicability,
)


class ScenarioError(ValueError):
    """Invalid scenario file; ``problems`` lists every violation found."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid scenario:\n  " + "\n  ".join(self.problems))


@dataclass(frozen=True)
class OrbitSection:
    altitude_km: float = 1200.0
    carrier_hz: float = 14e9
    min_elevation_deg: float = 45.0
    earth_radius_km: float = 6371.0
    light_speed_km_s: float = 299792.458
    gravitational_constant_n_m2_kg2: float = 6.67e-11
    earth_mass_kg: float = 5.98e24


@dataclass(frozen=True)
class DopplerSection:
    limit_hz: float = 950.0
    gnss_compensation: bool = False
    position_error_km: float = 0.0
    marginal_fraction: float = 0.1
    bandwidth_mhz: float = 20.0
    cp_mode: str = "normal"


@dataclass(frozen=True)
class TimersSection:
    rar_window_ms: float = 10.0
    contention_timer_ms: float = 64.0
    attach_guard_ms: float = 5.0
    phase_i_round_trips: int = 3
    phase_ii_round_trips: int = 3


@dataclass(frozen=True)
class HarqSection:
    strategy: str = "FullBuffer"
    tti_ms: float = 1.0
    ack_window_ms: float = 8.0
    n_processes: int | None = None
    max_retx: int | None = 5
    repetitions: int | None = None
    reduced_processes: int = 8
    comparison_repetitions: int = 2
    duration_ms: float = 10_000.0


@dataclass(frozen=True)
class ChannelSection:
    block_error_prob: float = 0.1
    retx_error_multiplier: float = 1.0
    near_nack_fraction: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class HandoverSection:
    pass_period_s: float | None = None  # None: next satellite rises as the current one sets
    horizon_s: float = 86_400.0
    mechanism: str = "PhyBased"
    phy_retune_ms: float = 0.0
    n_ues: int = 0
    ra_exchange_ms: float = 15.0
    min_availability: float = 0.99


@dataclass(frozen=True)
class ScenarioFile:
    orbit: OrbitSection = field(default_factory=OrbitSection)
    rn_elevation_deg: float = 45.0
    gateway_elevation_deg: float = 45.0
    cell_radius_km: float = 100.0
    rtt_override_ms: float | None = None
    doppler: DopplerSection = field(default_factory=DopplerSection)
    timers: TimersSection = field(default_factory=TimersSection)
    harq: HarqSection = field(default_factory=HarqSection)
    channel: ChannelSection = field(default_factory=ChannelSection)
    handover: HandoverSection = field(default_factory=HandoverSection)
    output_dir: str = "."

    # -- domain objects ---------------------------------------------------

    def orbit_scenario(self) -> OrbitScenario:
        o = self.orbit
        return OrbitScenario(
            altitude_km=o.altitude_km,
            carrier_hz=o.carrier_hz,
            min_elevation_rad=math.radians(o.min_elevation_deg),
            constants=PhysicalConstants(
                o.earth_radius_km, o.light_speed_km_s, o.gravitational_constant_n_m2_kg2, o.earth_mass_kg
            ),
        )

    def timing_constants(self) -> LteTimingConstants:
        return LteTimingConstants(
            rar_window_ms=self.timers.rar_window_ms, contention_timer_ms=self.timers.contention_timer_ms
        )

    def rtt_ms(self) -> float:
        if self.rtt_override_ms is not None:
            return float(self.rtt_override_ms)
        sc = self.orbit_scenario()
        return round_trip_time(sc, math.radians(self.rn_elevation_deg), math.radians(self.gateway_elevation_deg)) * 1e3

    def harq_config(self, rtt_ms: float | None = None) -> HarqConfig:
        h = self.harq
        return HarqConfig(
            rtt_ms=self.rtt_ms() if rtt_ms is None else rtt_ms,
            strategy=Strategy(h.strategy),
            n_processes=h.n_processes,
            tti_ms=h.tti_ms,
            ack_window_ms=h.ack_window_ms,
            max_retx=h.max_retx,
            repetitions=h.repetitions,
        )

    def channel_model(self, seed: int | None = None) -> ChannelModel:
        c = self.channel
        return ChannelModel(
            c.block_error_prob, c.retx_error_multiplier, c.near_nack_fraction, c.seed if seed is None else seed
        )

    def constellation_track(self) -> ConstellationTrack:
        sc = self.orbit_scenario()
        period = self.handover.pass_period_s
        if period is None:
            period = visibility_window(sc).duration_s
        return ConstellationTrack(period, sc)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


_SECTIONS = {
    "orbit": OrbitSection,
    "doppler": DopplerSection,
    "timers": TimersSection,
    "harq": HarqSection,
    "channel": ChannelSection,
    "handover": HandoverSection,
}


def _coerce(value, annotation: str, where: str, problems: list):
    optional = "None" in annotation
    if value is None:
        if optional:
            return None
        problems.append(f"{where}: must not be null")
        return None
    if annotation.startswith("bool"):
        if isinstance(value, bool):
            return value
        problems.append(f"{where}: expected true/false, got {value!r}")
        return None
    if annotation.startswith("int"):
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            problems.append(f"{where}: expected an integer, got {value!r}")
            return None
        try:
            f = float(value)
        except ValueError:
            problems.append(f"{where}: expected an integer, got {value!r}")
            return None
        if not f.is_integer():
            problems.append(f"{where}: expected an integer, got {value!r}")
            return None
        return int(f)
    if annotation.startswith("float"):
        # YAML 1.1 reads "14e9" as a string
        if isinstance(value, bool):
            problems.append(f"{where}: expected a number, got {value!r}")
            return None
        try:
            return float(value)
        except (TypeError, ValueError):
            problems.append(f"{where}: expected a number, got {value!r}")
            return None
    if annotation.startswith("str"):
        if isinstance(value, str):
            return value
        problems.append(f"{where}: expected a string, got {value!r}")
        return None
    raise TypeError(annotation)


def _build(cls, raw, prefix, problems):
    if not isinstance(raw, dict):
        problems.append(f"{prefix or 'scenario'}: expected a mapping, got {type(raw).__name__}")
        return cls()
    fields = {f.name: f for f in dataclasses.fields(cls)}
    for key in raw:
        if key not in fields:
            problems.append(f"{prefix}{key}: unknown key (allowed: {', '.join(fields)})")
    kwargs = {}
    for name, f in fields.items():
        if name not in raw:
            continue
        if name in _SECTIONS and cls is ScenarioFile:
            kwargs[name] = _build(_SECTIONS[name], raw[name] if raw[name] is not None else {}, f"{name}.", problems)
        else:
            before = len(problems)
            v = _coerce(raw[name], str(f.type), prefix + name, problems)
            if len(problems) == before:
                kwargs[name] = v
    return cls(**kwargs)


def _check(sf: ScenarioFile) -> list[str]:
    p = []
    o = sf.orbit

    def need(cond, where, msg):
        if not cond:
            p.append(f"{where}: {msg}")

    need(o.altitude_km > 0, "orbit.altitude_km", f"must be > 0, got {o.altitude_km}")
    need(o.carrier_hz > 0, "orbit.carrier_hz", f"must be > 0, got {o.carrier_hz}")
    need(0 < o.min_elevation_deg < 90, "orbit.min_elevation_deg", f"must lie in (0, 90), got {o.min_elevation_deg}")
    for k in ("earth_radius_km", "light_speed_km_s", "gravitational_constant_n_m2_kg2", "earth_mass_kg"):
        need(getattr(o, k) > 0, f"orbit.{k}", f"must be > 0, got {getattr(o, k)}")
    for k in ("rn_elevation_deg", "gateway_elevation_deg"):
        v = getattr(sf, k)
        need(o.min_elevation_deg <= v <= 90, k, f"must lie in [orbit.min_elevation_deg, 90], got {v}")
    need(sf.cell_radius_km > 0, "cell_radius_km", f"must be > 0, got {sf.cell_radius_km}")
    if sf.rtt_override_ms is not None:
        need(sf.rtt_override_ms >= 0, "rtt_override_ms", f"must be >= 0, got {sf.rtt_override_ms}")

    d = sf.doppler
    need(d.limit_hz > 0, "doppler.limit_hz", f"must be > 0, got {d.limit_hz}")
    need(d.position_error_km >= 0, "doppler.position_error_km", f"must be >= 0, got {d.position_error_km}")
    need(d.marginal_fraction > 0, "doppler.marginal_fraction", f"must be > 0, got {d.marginal_fraction}")
    need(d.cp_mode in ("normal", "extended"), "doppler.cp_mode", f"must be normal or extended, got {d.cp_mode!r}")
    need(d.bandwidth_mhz in (1.4, 3, 5, 10, 15, 20), "doppler.bandwidth_mhz",
         f"must be one of 1.4, 3, 5, 10, 15, 20, got {d.bandwidth_mhz}")

    t = sf.timers
    need(0 <= t.rar_window_ms <= 10, "timers.rar_window_ms", f"must lie in [0, 10], got {t.rar_window_ms}")
    need(0 < t.contention_timer_ms <= 64, "timers.contention_timer_ms",
         f"must lie in (0, 64], got {t.contention_timer_ms}")
    need(t.attach_guard_ms >= 0, "timers.attach_guard_ms", f"must be >= 0, got {t.attach_guard_ms}")
    for k in ("phase_i_round_trips", "phase_ii_round_trips"):
        need(getattr(t, k) >= 0, f"timers.{k}", f"must be >= 0, got {getattr(t, k)}")

    h = sf.harq
    strategies = [s.value for s in Strategy]
    need(h.strategy in strategies, "harq.strategy", f"must be one of {strategies}, got {h.strategy!r}")
    need(h.tti_ms > 0, "harq.tti_ms", f"must be > 0, got {h.tti_ms}")
    need(h.duration_ms > 0, "harq.duration_ms", f"must be > 0, got {h.duration_ms}")
    need(h.reduced_processes >= 1, "harq.reduced_processes", f"must be >= 1, got {h.reduced_processes}")
    need(h.comparison_repetitions >= 1, "harq.comparison_repetitions",
         f"must be >= 1, got {h.comparison_repetitions}")

    c = sf.channel
    need(0 <= c.block_error_prob <= 1, "channel.block_error_prob", f"must lie in [0, 1], got {c.block_error_prob}")
    need(0 <= c.near_nack_fraction <= 1, "channel.near_nack_fraction",
         f"must lie in [0, 1], got {c.near_nack_fraction}")
    need(c.retx_error_multiplier >= 0, "channel.retx_error_multiplier",
         f"must be >= 0, got {c.retx_error_multiplier}")
    need(c.seed >= 0, "channel.seed", f"must be >= 0, got {c.seed}")

    ho = sf.handover
    if ho.pass_period_s is not None:
        need(ho.pass_period_s > 0, "handover.pass_period_s", f"must be > 0, got {ho.pass_period_s}")
    need(ho.horizon_s > 0, "handover.horizon_s", f"must be > 0, got {ho.horizon_s}")
    try:
        Mechanism.parse(ho.mechanism)
    except ValueError:
        p.append(f"handover.mechanism: must be PhyBased or TraditionalReattach, got {ho.mechanism!r}")
    need(ho.phy_retune_ms >= 0, "handover.phy_retune_ms", f"must be >= 0, got {ho.phy_retune_ms}")
    need(ho.n_ues >= 0, "handover.n_ues", f"must be >= 0, got {ho.n_ues}")
    need(0 <= ho.min_availability <= 1, "handover.min_availability",
         f"must lie in [0, 1], got {ho.min_availability}")

    if p:
        return p
    # cross-field rules enforced by the domain types
    try:
        sf.harq_config()
    except ValueError as exc:
        p.append(f"harq: {exc}")
    return p


def parse_scenario(text: str, fmt: str = "yaml") -> ScenarioFile:
    try:
        raw = json.loads(text) if fmt == "json" else yaml.safe_load(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"line {exc.lineno}, column {exc.colno}: {exc.msg}"]) from exc
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}: " if mark else ""
        raise ScenarioError([f"{where}{getattr(exc, 'problem', None) or exc}"]) from exc
    if raw is None:
        raw = {}
    problems: list[str] = []
    sf = _build(ScenarioFile, raw, "", problems)
    if not problems:
        problems = _check(sf)
    if problems:
        raise ScenarioError(problems)
    return sf


def load_scenario(path=None) -> ScenarioFile:
    """Read and validate a scenario file; ``None`` returns the defaults."""
    if path is None:
        return ScenarioFile()
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "yaml"
    return parse_scenario(path.read_text(), fmt)


def dump_scenario(sf: ScenarioFile) -> str:
    return yaml.safe_dump(sf.to_dict(), sort_keys=False)


# -- report --------------------------------------------------------------


def sig6(x):
    """Round floats to 6 significant digits, recursively."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            return x
        return float(f"{x:.6g}")
    if isinstance(x, dict):
        return {k: sig6(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [sig6(v) for v in x]
    return x


def _verdict_dict(v) -> dict:
    return {
        "mechanism": v.mechanism,
        "budget_ms": v.budget_ms,
        "demand_ms": v.demand_ms,
        "margin_ms": v.margin_ms,
        "verdict": v.verdict,
        "remedy": v.remedy,
    }


def _harq_result_dict(r) -> dict:
    return {
        "rank": r.rank,
        "strategy": r.config.strategy.value,
        "n_processes": r.config.n_processes,
        "harq_id_bits": r.config.harq_id_bits,
        "buffer_units_tb": r.config.buffer_units,
        "analytic_goodput_fraction": r.analytic_goodput,
        **{k: v for k, v in r.metrics.to_dict().items() if k != "duration_ms"},
    }


@dataclass(frozen=True)
class FeasibilityReport:
    data: dict

    @property
    def verdicts(self) -> dict:
        return {k: v["verdict"] for k, v in self.data["verdict_summary"].items()}

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2) + "\n"

    def to_text(self) -> str:
        d = self.data
        lines = [
            f"RTT                      {d['rtt_ms']:.4g} ms",
            f"worst-case Doppler       {d['worst_case_doppler_hz']:.6g} Hz",
            f"Doppler excess factor    {d['doppler_excess_factor']:.4g}",
            f"max position error       {d['max_position_error_km']:.4g} km",
            f"minimum HARQ processes   {d['harq']['min_processes']}",
            f"handover availability    {d['handover']['availability']:.6g}",
            "",
        ]
        for name, v in d["verdict_summary"].items():
            extra = f"  ({v['remedy']})" if v.get("remedy") else ""
            lines.append(f"{name:<16} {v['verdict']}{extra}")
        return "\n".join(lines) + "\n"


def run_full_report(sf: ScenarioFile, seed: int | None = None) -> FeasibilityReport:
    sc = sf.orbit_scenario()
    rtt = sf.rtt_ms()
    consts = sf.timing_constants()

    # waveform
    dtab = []
    el_deg = sf.orbit.min_elevation_deg
    while el_deg < 90.0 + 1e-9:
        el = math.radians(min(el_deg, 90.0))
        dtab.append({
            "elevation_deg": min(el_deg, 90.0),
            "slant_range_km": slant_range(sc, el),
            "doppler_hz": dop.doppler_at_elevation(sc, el).doppler_hz,
        })
        el_deg += 5.0
    if dtab[-1]["elevation_deg"] != 90.0:
        dtab.append({"elevation_deg": 90.0, "slant_range_km": sc.altitude_km, "doppler_hz": 0.0})
    worst = dop.worst_case_doppler(sc)
    max_err = dop.max_tolerable_position_error(sc, sf.doppler.limit_hz)
    grid = grid_for_bandwidth(sf.doppler.bandwidth_mhz, sf.doppler.cp_mode)
    if sf.doppler.gnss_compensation:
        offset = dop.max_residual_doppler(sc, sf.doppler.position_error_km)
        basis = "residual after GNSS-aided compensation"
    else:
        offset = worst
        basis = "uncompensated worst-case Doppler"
    margin = doppler_margin(grid, offset, sf.doppler.limit_hz, sf.doppler.marginal_fraction)
    waveform = {
        "verdict": margin.verdict,
        "frequency_offset_hz": offset,
        "offset_to_spacing_ratio": margin.ratio,
        "basis": basis,
        "remedy": "" if margin.verdict == "PASS"
        else f"GNSS-aided Doppler pre-compensation with position error below {max_err:.3g} km",
    }

    # timers
    ta = ta_applicability(sc, sf.cell_radius_km, consts)
    ra = ra_feasibility(rtt, consts, CONTENTION_BASED)
    plan = rn_attach_plan(
        rtt, consts, sf.timers.attach_guard_ms, sf.timers.phase_i_round_trips, sf.timers.phase_ii_round_trips
    )

    # harq
    h = sf.harq
    n_min = min_harq_processes(rtt, h.tti_ms)
    configs = strategy_configs(
        rtt, h.tti_ms, h.reduced_processes, h.comparison_repetitions, h.max_retx, h.ack_window_ms
    )
    comparison = compare_configs(configs, sf.channel_model(seed), h.duration_ms)
    harq_ok = n_min <= LTE_MAX_PROCESSES

    # handover
    track = sf.constellation_track()
    mech = Mechanism.parse(sf.handover.mechanism)
    outage = outage_model(mech, rtt, plan, sf.handover.phy_retune_ms, sf.handover.n_ues, sf.handover.ra_exchange_ms)
    events = handover_schedule(track, sf.handover.horizon_s, mech, outage.rn_ms)
    avail = availability(events, sf.handover.horizon_s)
    gaps = sum(1 for e in events if e.coverage_gap)
    ho_ok = gaps == 0 and avail >= sf.handover.min_availability

    summary = {
        "waveform": {"verdict": waveform["verdict"], "remedy": waveform["remedy"]},
        "timing_advance": {"verdict": ta.verdict, "remedy": ta.remedy},
        "random_access": {
            "verdict": "PASS" if all(v.passed for v in ra) else "FAIL",
            "remedy": "; ".join(v.remedy for v in ra if v.remedy),
        },
        "rn_attach": {"verdict": plan.rar_verdict.verdict, "remedy": plan.rar_verdict.remedy},
        "harq": {
            "verdict": "PASS" if harq_ok else "FAIL",
            "remedy": "" if harq_ok
            else f"size HARQ to {n_min} processes ({harq_id_bits(n_min)} ID bits) or adopt a compared mitigation",
        },
        "handover": {
            "verdict": "PASS" if ho_ok else "FAIL",
            "remedy": "" if ho_ok else "denser constellation phasing or PHY-based handover",
        },
    }

    data = {
        "altitude_in_leo_range": sc.is_leo,
        "rtt_ms": rtt,
        "doppler_table": dtab,
        "worst_case_doppler_hz": worst,
        "doppler_excess_factor": dop.doppler_excess_factor(sc, sf.doppler.limit_hz),
        "max_position_error_km": max_err,
        "waveform": waveform,
        "timers": {
            "max_timing_advance_ms": max_timing_advance(consts),
            "timing_advance": _verdict_dict(ta),
            "random_access": [_verdict_dict(v) for v in ra],
            "rn_attach": {
                **_verdict_dict(plan.rar_verdict),
                "configured_rar_deadline_ms": plan.configured_rar_deadline_ms,
                "phases": [
                    {"name": ph.name, "steps": list(ph.steps), "round_trips": ph.round_trips} for ph in plan.phases
                ],
            },
        },
        "harq": {
            "min_processes": n_min,
            "harq_id_bits": harq_id_bits(n_min),
            "buffer_units_tb": n_min,
            "lte_max_processes": LTE_MAX_PROCESSES,
            "strategies": [_harq_result_dict(r) for r in comparison],
        },
        "handover": {
            "mechanism": mech.value,
            "pass_period_s": track.pass_period_s,
            "visibility_window_s": track.window_s,
            "rn_outage_per_handover_ms": outage.rn_ms,
            "ue_reaccess_per_handover_ms": outage.ue_reaccess_ms,
            "n_handovers": sum(1 for e in events if not e.coverage_gap),
            "n_coverage_gaps": gaps,
            "availability": avail,
        },
        "verdict_summary": summary,
    }
    # the echo stays exact so it can be fed back as a scenario
    return FeasibilityReport({"scenario": sf.to_dict(), **sig6(data)})


# -- sweeps --------------------------------------------------------------

SWEEP_PARAMETERS = ("elevation", "ambiguity_km", "n_processes", "altitude_km", "carrier_hz")


def _replace_orbit(sf: ScenarioFile, **changes) -> OrbitScenario:
    return dataclasses.replace(sf, orbit=dataclasses.replace(sf.orbit, **changes)).orbit_scenario()


def sweep_rows(sf: ScenarioFile, parameter: str, values) -> tuple[list[str], list[list]]:
    """Evaluate one curve; returns the unit-bearing header and the rows in input order."""
    sc = sf.orbit_scenario()
    if parameter == "elevation":
        header = ["elevation_deg", "slant_range_km", "one_way_delay_ms", "doppler_hz"]
        rows = []
        for v in values:
            el = math.radians(float(v))
            d = slant_range(sc, el)
            rows.append([v, d, d / sc.constants.light_speed_km_s * 1e3, dop.doppler_at_elevation(sc, el).doppler_hz])
    elif parameter == "ambiguity_km":
        header = ["ambiguity_km", "max_residual_hz"]
        rows = [[v, dop.max_residual_doppler(sc, float(v))] for v in values]
    elif parameter == "n_processes":
        header = ["n_processes", "analytic_goodput_fraction", "simulated_goodput_fraction", "harq_id_bits"]
        rtt = sf.rtt_ms()
        n_min = min_harq_processes(rtt, sf.harq.tti_ms)
        rows = []
        for v in values:
            n = int(v)
            strat = Strategy.REDUCED_PROCESSES if n < n_min else Strategy.FULL_BUFFER
            cfg = HarqConfig(rtt, strat, n, tti_ms=sf.harq.tti_ms, max_retx=sf.harq.max_retx)
            m = run_simulation(cfg, ChannelModel(0.0, seed=sf.channel.seed), sf.harq.duration_ms)
            rows.append([n, analytic_goodput(cfg), m.goodput_fraction, harq_id_bits(n)])
    elif parameter == "altitude_km":
        header = ["altitude_km", "rtt_ms", "worst_case_doppler_hz", "doppler_excess_factor", "min_harq_processes",
                  "visibility_window_s"]
        rows = []
        for v in values:
            s = _replace_orbit(sf, altitude_km=float(v))
            el = s.min_elevation_rad
            rtt = round_trip_time(s, el, el) * 1e3
            rows.append([v, rtt, dop.worst_case_doppler(s), dop.doppler_excess_factor(s, sf.doppler.limit_hz),
                         min_harq_processes(rtt, sf.harq.tti_ms), visibility_window(s).duration_s])
    elif parameter == "carrier_hz":
        header = ["carrier_hz", "worst_case_doppler_hz", "doppler_excess_factor", "max_position_error_km"]
        rows = []
        for v in values:
            s = _replace_orbit(sf, carrier_hz=float(v))
            rows.append([v, dop.worst_case_doppler(s), dop.doppler_excess_factor(s, sf.doppler.limit_hz),
                         dop.max_tolerable_position_error(s, sf.doppler.limit_hz)])
    else:
        raise ValueError(f"unknown sweep parameter {parameter!r}; expected one of {SWEEP_PARAMETERS}")
    return header, [sig6(r) for r in rows]


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def sweep(sf: ScenarioFile, parameter: str, values) -> str:
    """One CSV curve with a header row naming units."""
    return to_csv(*sweep_rows(sf, parameter, values))
