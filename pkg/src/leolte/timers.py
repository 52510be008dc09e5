"""LTE Timing Advance, Random Access and RN attach timer budgets against the satellite RTT."""

from __future__ import annotations

from dataclasses import dataclass, field

from .orbit import OrbitScenario

CONTENTION_FREE = "contention_free"
CONTENTION_BASED = "contention_based"


@dataclass(frozen=True)
class LteTimingConstants:
    sample_time_s: float = 1.0 / (2048 * 15000)
    ta_index_max: int = 1282
    ta_multiplier: int = 16
    rar_window_ms: float = 10.0
    # preamble sub-frames plus the 3-sub-frame gap before the window opens
    rar_window_offset_ms: float = 5.0
    contention_timer_ms: float = 64.0
    max_ra_attempts: int = 200
    max_msg3_attempts: int = 8
    n_preambles: int = 64
    n_contention_free_preambles: int = 10

    def __post_init__(self):
        if not 0 <= self.rar_window_ms <= 10:
            raise ValueError(f"rar_window_ms must be within [0, 10], got {self.rar_window_ms!r}")
        if not 0 < self.contention_timer_ms <= 64:
            raise ValueError(f"contention_timer_ms must be within (0, 64], got {self.contention_timer_ms!r}")
        if not 1 <= self.max_ra_attempts <= 200:
            raise ValueError(f"max_ra_attempts must be within [1, 200], got {self.max_ra_attempts!r}")
        if not 1 <= self.max_msg3_attempts <= 8:
            raise ValueError(f"max_msg3_attempts must be within [1, 8], got {self.max_msg3_attempts!r}")
        if not 0 < self.n_contention_free_preambles < 60:
            raise ValueError("n_contention_free_preambles must be within (0, 60)")

    @property
    def rar_deadline_ms(self) -> float:
        return self.rar_window_ms + self.rar_window_offset_ms

    @property
    def n_contention_based_preambles(self) -> int:
        return self.n_preambles - self.n_contention_free_preambles


@dataclass(frozen=True)
class TimerVerdict:
    mechanism: str
    budget_ms: float
    demand_ms: float
    remedy: str = ""
    note: str = ""

    @property
    def margin_ms(self) -> float:
        return self.budget_ms - self.demand_ms

    @property
    def verdict(self) -> str:
        return "PASS" if self.margin_ms >= 0 else "FAIL"

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


def max_timing_advance(constants: LteTimingConstants | None = None, ta_index: int | None = None) -> float:
    """T_AD = multiplier * T_A * T_S, in ms.  Defaults to the largest T_A."""
    constants = constants or LteTimingConstants()
    idx = constants.ta_index_max if ta_index is None else ta_index
    if not 0 <= idx <= constants.ta_index_max:
        raise ValueError(f"ta_index must be within [0, {constants.ta_index_max}], got {idx!r}")
    return constants.ta_multiplier * idx * constants.sample_time_s * 1e3


def ta_applicability(
    scenario: OrbitScenario,
    cell_radius_km: float,
    constants: LteTimingConstants | None = None,
) -> TimerVerdict:
    """Does the access-link round trip across one RN cell fit the TA range?

    The satellite leg never enters TA: the RN aggregates its UEs' uplink and is a
    single transmitter on the backhaul, so only the cell's own differential delay
    needs alignment.
    """
    if not cell_radius_km > 0:
        raise ValueError(f"cell_radius_km must be positive, got {cell_radius_km!r}")
    demand = 2 * cell_radius_km / scenario.constants.light_speed_km_s * 1e3
    budget = max_timing_advance(constants)
    remedy = "" if demand <= budget else "deploy multiple RNs per beam so each RN cell stays within the TA range"
    return TimerVerdict(
        "timing_advance",
        budget,
        demand,
        remedy=remedy,
        note="satellite leg excluded: backhaul uplink comes from a single entity (the RN)",
    )


def ra_feasibility(
    rtt_ms: float,
    constants: LteTimingConstants | None = None,
    mode: str = CONTENTION_BASED,
    access_rtt_ms: float | None = None,
) -> list[TimerVerdict]:
    """Random Access timer budgets for UEs attaching to an RN.

    ``access_rtt_ms`` defaults to the worst in-cell round trip (the TA ceiling).
    Contention-free RA stays on the access link.  Contention-based RA adds one
    satellite round trip in Steps 3/4 (RN -> DeNB -> EPC and back) against the
    contention resolution timer.
    """
    if rtt_ms < 0:
        raise ValueError(f"rtt_ms must be non-negative, got {rtt_ms!r}")
    constants = constants or LteTimingConstants()
    if access_rtt_ms is None:
        access_rtt_ms = max_timing_advance(constants)
    rar = TimerVerdict(
        "ra_response_window",
        constants.rar_deadline_ms,
        access_rtt_ms,
        note="UE <-> RN only; the satellite link is not involved",
    )
    if mode == CONTENTION_FREE:
        return [rar]
    if mode != CONTENTION_BASED:
        raise ValueError(f"mode must be {CONTENTION_FREE!r} or {CONTENTION_BASED!r}, got {mode!r}")
    demand = access_rtt_ms + rtt_ms
    contention = TimerVerdict(
        "contention_resolution_timer",
        constants.contention_timer_ms,
        demand,
        remedy="" if demand <= constants.contention_timer_ms else "contention timer cannot cover the EPC round trip",
        note="Steps 3/4 reach the EPC through the satellite backhaul",
    )
    return [rar, contention]


PHASE_I_STEPS = (
    "RN sends no relay indication in RRC signalling",
    "serving eNB treats the RN as a UE",
    "MME performs no RN-specific operation",
)

PHASE_II_STEPS = (
    "RN reconfigures with parameters and DeNB list received in Phase I",
    "RN attaches to a listed DeNB with relay indication (MME must support RNs)",
    "RN finalises reconfiguration and starts accepting UEs",
)


@dataclass(frozen=True)
class AttachPhase:
    name: str
    steps: tuple[str, ...]
    round_trips: int


@dataclass(frozen=True)
class AttachPlan:
    """Ad hoc RN deployment: attach as a UE, then as a relay, with a preconfigured RAR deadline."""

    rar_verdict: TimerVerdict
    configured_rar_deadline_ms: float
    phases: tuple[AttachPhase, ...] = field(default_factory=tuple)

    @property
    def n_round_trips(self) -> int:
        return sum(p.round_trips for p in self.phases)


def rn_attach_plan(
    rtt_ms: float,
    constants: LteTimingConstants | None = None,
    guard_ms: float = 5.0,
    phase_i_round_trips: int = 3,
    phase_ii_round_trips: int = 3,
) -> AttachPlan:
    """RAR-window check for the RN start-up RA and the replacement deployment plan.

    The RN's preamble travels over the satellite, so its RAR arrives one RTT
    later.  Fixed RN positions and known orbits let the deadline be
    preconfigured to ``rtt_ms + guard_ms``.
    """
    if rtt_ms < 0:
        raise ValueError(f"rtt_ms must be non-negative, got {rtt_ms!r}")
    constants = constants or LteTimingConstants()
    verdict = TimerVerdict(
        "rn_attach_rar_window",
        constants.rar_deadline_ms,
        rtt_ms,
        remedy="" if rtt_ms <= constants.rar_deadline_ms
        else f"ad hoc deployment: preconfigure RAR deadline to {rtt_ms + guard_ms:g} ms",
    )
    phases = (
        AttachPhase("Phase I: attach as UE", PHASE_I_STEPS, phase_i_round_trips),
        AttachPhase("Phase II: attach to DeNB as relay", PHASE_II_STEPS, phase_ii_round_trips),
    )
    return AttachPlan(verdict, rtt_ms + guard_ms, phases)
