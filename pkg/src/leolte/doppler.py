"""Doppler shift on the overhead pass and residual Doppler after GNSS-aided compensation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .orbit import (
    OrbitScenario,
    _check_elevation,
    angular_velocity,
    culmination_time,
    pass_profile,
    slant_range,
)

LTE_MAX_DOPPLER_HZ = 950.0

ELEVATION_GRID_STEP_DEG = 0.1
COARSE_AMBIGUITY_STEP_KM = 0.5
AMBIGUITY_TOL_KM = 0.01


@dataclass(frozen=True)
class DopplerResult:
    elevation_rad: float
    doppler_hz: float
    carrier_hz: float
    time_s: float | None = None


@dataclass(frozen=True)
class PositionErrorCase:
    """Worst-case compensation error for a node displaced by ``ambiguity_radius_km``.

    ``displacement_km`` is the signed in-plane offset that produced the worst
    residual (positive means towards the satellite's ground track ahead).
    """

    ambiguity_radius_km: float
    true_elevation_rad: float
    assumed_elevation_rad: float
    assumed_range_km: float
    residual_hz: float
    displacement_km: float
    true_range_km: float


def doppler_scale(scenario: OrbitScenario) -> float:
    """f0 * omega * R_E / c: the Doppler magnitude at zero elevation."""
    c = scenario.constants
    return scenario.carrier_hz * angular_velocity(scenario) * c.earth_radius_km / c.light_speed_km_s


def _doppler_of_cos(scenario, cos_el):
    return doppler_scale(scenario) * cos_el


def doppler_at_elevation(scenario: OrbitScenario, elevation_rad: float) -> DopplerResult:
    el = float(_check_elevation(elevation_rad))
    cos_el = 0.0 if el == math.pi / 2 else math.cos(el)
    return DopplerResult(el, _doppler_of_cos(scenario, cos_el), scenario.carrier_hz)


def doppler_profile(scenario: OrbitScenario, step_s: float) -> list[DopplerResult]:
    """Signed Doppler along the pass: positive while approaching, negative while receding."""
    t_c = culmination_time(scenario)
    out = []
    for s in pass_profile(scenario, step_s):
        mag = doppler_at_elevation(scenario, s.elevation_rad).doppler_hz
        sign = 1.0 if s.time_s < t_c else -1.0
        if math.isclose(s.time_s, t_c, rel_tol=0, abs_tol=1e-9):
            mag = 0.0
        out.append(DopplerResult(s.elevation_rad, sign * mag, scenario.carrier_hz, s.time_s))
    return out


def _assumed_geometry(d, cos_el, displacement):
    d_e = np.sqrt(d**2 + displacement**2 - 2 * displacement * d * cos_el)
    with np.errstate(invalid="ignore", divide="ignore"):
        cos_e = np.where(d_e > 0, (d * cos_el - displacement) / d_e, 1.0)
    return d_e, cos_e


def residual_doppler(scenario: OrbitScenario, elevation_rad: float, ambiguity_km: float) -> PositionErrorCase:
    """Doppler left over when compensating with a node position off by ``ambiguity_km``.

    Both in-plane displacement signs are evaluated and the larger residual kept.
    """
    el = float(_check_elevation(elevation_rad))
    if ambiguity_km < 0:
        raise ValueError(f"ambiguity_km must be non-negative, got {ambiguity_km!r}")
    d = slant_range(scenario, el)
    cos_el = 0.0 if el == math.pi / 2 else math.cos(el)
    best = None
    for disp in (ambiguity_km, -ambiguity_km):
        d_e, cos_e = _assumed_geometry(d, cos_el, disp)
        # zero ambiguity is exact, not a rounding residue
        res = abs(_doppler_of_cos(scenario, cos_el) - _doppler_of_cos(scenario, float(cos_e))) if disp else 0.0
        if best is None or res > best[0]:
            best = (res, disp, float(d_e), float(cos_e))
    res, disp, d_e, cos_e = best
    return PositionErrorCase(
        ambiguity_radius_km=float(ambiguity_km),
        true_elevation_rad=el,
        assumed_elevation_rad=math.acos(max(-1.0, min(1.0, cos_e))),
        assumed_range_km=d_e,
        residual_hz=res,
        displacement_km=disp,
        true_range_km=d,
    )


def _elevation_grid(scenario, step_deg=ELEVATION_GRID_STEP_DEG):
    lo = math.degrees(scenario.min_elevation_rad)
    n = int(math.ceil((90.0 - lo) / step_deg))
    grid = np.linspace(lo, 90.0, n + 1)
    return np.radians(grid)


def max_residual_doppler(scenario: OrbitScenario, ambiguity_km: float, elevations=None) -> float:
    """Worst residual over the visible elevation range (vectorised over the grid)."""
    if ambiguity_km == 0:
        return 0.0
    if elevations is None:
        elevations = _elevation_grid(scenario)
    el = np.asarray(elevations, dtype=float)
    d = np.asarray(slant_range(scenario, el), dtype=float)
    cos_el = np.where(el == math.pi / 2, 0.0, np.cos(el))
    worst = np.zeros_like(el)
    for disp in (ambiguity_km, -ambiguity_km):
        _, cos_e = _assumed_geometry(d, cos_el, disp)
        worst = np.maximum(worst, np.abs(cos_el - cos_e))
    return float(doppler_scale(scenario) * worst.max())


def max_tolerable_position_error(
    scenario: OrbitScenario,
    limit_hz: float = LTE_MAX_DOPPLER_HZ,
    max_search_km: float = 1000.0,
) -> float:
    """Largest ambiguity radius whose worst residual stays within ``limit_hz``.

    Coarse scan on a 0.5 km grid, then bisection down to 10 m.
    """
    if limit_hz < 0:
        raise ValueError(f"limit_hz must be non-negative, got {limit_hz!r}")
    if limit_hz == 0:
        return 0.0
    elevations = _elevation_grid(scenario)

    def ok(rb):
        return max_residual_doppler(scenario, rb, elevations) <= limit_hz

    lo = 0.0
    hi = None
    for rb in np.arange(COARSE_AMBIGUITY_STEP_KM, max_search_km + COARSE_AMBIGUITY_STEP_KM, COARSE_AMBIGUITY_STEP_KM):
        if ok(rb):
            lo = float(rb)
        else:
            hi = float(rb)
            break
    if hi is None:
        return lo
    while hi - lo > AMBIGUITY_TOL_KM:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def worst_case_doppler(scenario: OrbitScenario) -> float:
    """Largest Doppler magnitude on the pass, reached at the elevation mask."""
    return doppler_at_elevation(scenario, scenario.min_elevation_rad).doppler_hz


def doppler_excess_factor(scenario: OrbitScenario, lte_limit_hz: float = LTE_MAX_DOPPLER_HZ) -> float:
    if not lte_limit_hz > 0:
        raise ValueError(f"lte_limit_hz must be positive, got {lte_limit_hz!r}")
    return worst_case_doppler(scenario) / lte_limit_hz
