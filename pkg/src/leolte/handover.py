"""Satellite handover timeline for a fixed RN: PHY-level switch vs full re-attach."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .orbit import OrbitScenario, round_trip_time, visibility_window
from .timers import AttachPlan, rn_attach_plan


class Mechanism(str, Enum):
    PHY_BASED = "PhyBased"
    TRADITIONAL_REATTACH = "TraditionalReattach"

    @classmethod
    def parse(cls, value) -> "Mechanism":
        aliases = {"phy": cls.PHY_BASED, "traditional": cls.TRADITIONAL_REATTACH}
        if isinstance(value, str) and value.lower() in aliases:
            return aliases[value.lower()]
        return cls(value)


@dataclass(frozen=True)
class HandoverEvent:
    time_s: float
    from_sat: int
    to_sat: int
    mechanism: Mechanism
    outage_ms: float
    coverage_gap: bool = False

    @property
    def end_s(self) -> float:
        return self.time_s + self.outage_ms / 1e3


@dataclass(frozen=True)
class ConstellationTrack:
    """Successive satellites rise over the RN every ``pass_period_s`` seconds."""

    pass_period_s: float
    scenario: OrbitScenario

    def __post_init__(self):
        if not self.pass_period_s > 0:
            raise ValueError(f"pass_period_s must be positive, got {self.pass_period_s!r}")

    @property
    def window_s(self) -> float:
        return visibility_window(self.scenario).duration_s

    @property
    def rtt_ms(self) -> float:
        el = self.scenario.min_elevation_rad
        return round_trip_time(self.scenario, el, el) * 1e3


@dataclass(frozen=True)
class OutageEstimate:
    rn_ms: float
    ue_reaccess_ms: float = 0.0

    @property
    def total_ms(self) -> float:
        return self.rn_ms + self.ue_reaccess_ms


def outage_model(
    mechanism,
    rtt_ms: float,
    attach_plan: AttachPlan | None = None,
    phy_retune_ms: float = 0.0,
    n_ues: int = 0,
    ra_exchange_ms: float = 0.0,
) -> OutageEstimate:
    """Service interruption caused by one handover.

    A PHY-based switch costs only the retune time.  A traditional handover
    repeats both RN attach phases over the satellite, after which every UE in
    the cell has to run RA again; that UE cost is reported separately.
    """
    mechanism = Mechanism.parse(mechanism)
    if mechanism is Mechanism.PHY_BASED:
        return OutageEstimate(float(phy_retune_ms))
    plan = attach_plan or rn_attach_plan(rtt_ms)
    return OutageEstimate(plan.n_round_trips * rtt_ms, n_ues * ra_exchange_ms)


def handover_schedule(
    track: ConstellationTrack,
    horizon_s: float,
    mechanism=Mechanism.PHY_BASED,
    outage_ms: float | None = None,
) -> list[HandoverEvent]:
    """Handover events over ``[0, horizon_s]``, starting with satellite 0 rising at t = 0.

    Satellite k is visible on ``[k P, k P + W]``.  With P <= W the RN switches
    when the serving satellite hits the elevation mask.  With P > W a
    coverage-gap event of length P - W precedes the acquisition of the next one.
    """
    if not horizon_s > 0:
        raise ValueError(f"horizon_s must be positive, got {horizon_s!r}")
    mechanism = Mechanism.parse(mechanism)
    if outage_ms is None:
        outage_ms = outage_model(mechanism, track.rtt_ms).rn_ms
    period = track.pass_period_s
    window = track.window_s
    if outage_ms / 1e3 >= min(period, window):
        raise ValueError(f"per-handover outage {outage_ms} ms does not fit in one pass")

    events = []
    k = 0
    while True:
        t_set = k * period + window
        if t_set > horizon_s:
            break
        if period <= window:
            events.append(HandoverEvent(t_set, k, k + 1, mechanism, outage_ms))
        else:
            t_next = (k + 1) * period
            gap_ms = (t_next - t_set) * 1e3
            events.append(HandoverEvent(t_set, k, k + 1, mechanism, gap_ms, coverage_gap=True))
            if t_next > horizon_s:
                break
            events.append(HandoverEvent(t_next, k, k + 1, mechanism, outage_ms))
        k += 1
    return events


def availability(events, horizon_s: float) -> float:
    """Fraction of ``[0, horizon_s]`` not covered by any outage."""
    if not horizon_s > 0:
        raise ValueError(f"horizon_s must be positive, got {horizon_s!r}")
    down = sum(max(0.0, min(e.end_s, horizon_s) - e.time_s) for e in events)
    return min(1.0, max(0.0, 1.0 - down / horizon_s))


def continuous_coverage(track: ConstellationTrack) -> bool:
    return track.pass_period_s <= track.window_s or math.isclose(track.pass_period_s, track.window_s)
