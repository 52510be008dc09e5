"""Circular-orbit kinematics for a fixed ground node under a direct overhead pass.

The pass is modelled in the orbital plane with the ground node on it, and Earth
rotation is neglected.  Time is referenced to the instant the satellite crosses
the geometric horizon (elevation 0) on its way up, so the culmination happens
at ``horizon_central_angle / omega``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

LEO_ALTITUDE_RANGE_KM = (300.0, 2000.0)


@dataclass(frozen=True)
class PhysicalConstants:
    earth_radius_km: float = 6371.0
    light_speed_km_s: float = 299792.458
    gravitational_constant: float = 6.67e-11  # N m^2 / kg^2
    earth_mass_kg: float = 5.98e24

    def __post_init__(self):
        for name in ("earth_radius_km", "light_speed_km_s", "gravitational_constant", "earth_mass_kg"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive, got {getattr(self, name)!r}")

    @property
    def mu_km3_s2(self) -> float:
        """Earth gravitational parameter G*M_E in km^3/s^2."""
        return self.gravitational_constant * self.earth_mass_kg * 1e-9


@dataclass(frozen=True)
class OrbitScenario:
    """Root input of every computation: orbit altitude, carrier and elevation mask."""

    altitude_km: float = 1200.0
    carrier_hz: float = 14e9
    min_elevation_rad: float = math.radians(45.0)
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        if not self.altitude_km > 0:
            raise ValueError(f"altitude_km must be positive, got {self.altitude_km!r}")
        if not self.carrier_hz > 0:
            raise ValueError(f"carrier_hz must be positive, got {self.carrier_hz!r}")
        if not 0 < self.min_elevation_rad < math.pi / 2:
            raise ValueError(f"min_elevation_rad must lie in (0, pi/2), got {self.min_elevation_rad!r}")
        if not self.is_leo:
            warnings.warn(
                f"altitude {self.altitude_km} km is outside the LEO range {LEO_ALTITUDE_RANGE_KM}",
                stacklevel=3,
            )

    @property
    def is_leo(self) -> bool:
        lo, hi = LEO_ALTITUDE_RANGE_KM
        return lo <= self.altitude_km <= hi

    @property
    def orbit_radius_km(self) -> float:
        return self.constants.earth_radius_km + self.altitude_km


@dataclass(frozen=True)
class LinkGeometrySample:
    time_s: float
    elevation_rad: float
    slant_range_km: float
    one_way_delay_s: float


@dataclass(frozen=True)
class VisibilityWindow:
    rise_time_s: float
    set_time_s: float
    max_elevation_rad: float

    @property
    def duration_s(self) -> float:
        return self.set_time_s - self.rise_time_s


class NeverVisibleError(ValueError):
    pass


def angular_velocity(scenario: OrbitScenario) -> float:
    """Orbital angular rate in rad/s for a circular orbit at ``scenario.altitude_km``."""
    return math.sqrt(scenario.constants.mu_km3_s2 / scenario.orbit_radius_km**3)


def orbital_speed(scenario: OrbitScenario) -> float:
    """Inertial orbital speed in km/s."""
    return angular_velocity(scenario) * scenario.orbit_radius_km


def orbital_period(scenario: OrbitScenario) -> float:
    return 2 * math.pi / angular_velocity(scenario)


def _check_elevation(elevation_rad):
    el = np.asarray(elevation_rad, dtype=float)
    if np.any(el < 0) or np.any(el > math.pi / 2) or np.any(np.isnan(el)):
        raise ValueError(f"elevation must lie in [0, pi/2] rad, got {elevation_rad!r}")
    return el


def slant_range(scenario: OrbitScenario, elevation_rad):
    """Ground-node to satellite distance in km at the given elevation.

    Accepts scalars or arrays.  At zenith the result equals the altitude exactly.
    """
    el = _check_elevation(elevation_rad)
    re = scenario.constants.earth_radius_km
    ratio = scenario.orbit_radius_km / re
    d = re * (np.sqrt(ratio**2 - np.cos(el) ** 2) - np.sin(el))
    # cos(pi/2) is 6e-17, not 0; pin the nadir identity exactly
    d = np.where(el == math.pi / 2, scenario.altitude_km, d)
    return float(d) if d.ndim == 0 else d


def elevation_from_range(scenario: OrbitScenario, slant_range_km):
    """Invert :func:`slant_range` with the Earth-centre / node / satellite law of cosines."""
    re = scenario.constants.earth_radius_km
    r = scenario.orbit_radius_km
    d = np.asarray(slant_range_km, dtype=float)
    sin_el = (r**2 - re**2 - d**2) / (2 * re * d)
    el = np.arcsin(np.clip(sin_el, -1.0, 1.0))
    return float(el) if el.ndim == 0 else el


def one_way_delay(scenario: OrbitScenario, elevation_rad):
    """Single-leg propagation delay in seconds."""
    return slant_range(scenario, elevation_rad) / scenario.constants.light_speed_km_s


def round_trip_time(scenario: OrbitScenario, elev_rn: float, elev_gw: float) -> float:
    """RN -> satellite -> gateway round trip in seconds; processing time is neglected."""
    for name, el in (("elev_rn", elev_rn), ("elev_gw", elev_gw)):
        if not scenario.min_elevation_rad - 1e-12 <= el <= math.pi / 2:
            raise ValueError(
                f"{name}={el!r} rad is outside [min_elevation, pi/2] = "
                f"[{scenario.min_elevation_rad!r}, {math.pi / 2!r}]"
            )
    legs = slant_range(scenario, elev_rn) + slant_range(scenario, elev_gw)
    return 2 * legs / scenario.constants.light_speed_km_s


def horizon_central_angle(scenario: OrbitScenario) -> float:
    """Earth-central angle between node and satellite when the satellite sits on the horizon."""
    return math.acos(scenario.constants.earth_radius_km / scenario.orbit_radius_km)


def culmination_time(scenario: OrbitScenario) -> float:
    return horizon_central_angle(scenario) / angular_velocity(scenario)


def central_angle_at(scenario: OrbitScenario, time_s):
    """Signed central angle from the node's zenith; negative before culmination."""
    return angular_velocity(scenario) * np.asarray(time_s, dtype=float) - horizon_central_angle(scenario)


def range_at_time(scenario: OrbitScenario, time_s):
    phi = central_angle_at(scenario, time_s)
    re = scenario.constants.earth_radius_km
    r = scenario.orbit_radius_km
    # sat at (r sin phi, r cos phi), node at (0, re)
    d = np.hypot(r * np.sin(phi), r * np.cos(phi) - re)
    return float(d) if d.ndim == 0 else d


def elevation_at_time(scenario: OrbitScenario, time_s):
    return elevation_from_range(scenario, range_at_time(scenario, time_s))


def visibility_window(scenario: OrbitScenario, xtol_s: float = 1e-3) -> VisibilityWindow:
    """Rise and set times above the elevation mask, found by bisection."""
    t_c = culmination_time(scenario)
    max_el = float(elevation_at_time(scenario, t_c))
    if max_el < scenario.min_elevation_rad:
        raise NeverVisibleError(
            f"maximum elevation {math.degrees(max_el):.3f} deg never reaches the mask "
            f"{math.degrees(scenario.min_elevation_rad):.3f} deg"
        )

    def above_mask(t):
        return elevation_at_time(scenario, t) - scenario.min_elevation_rad

    rise = optimize.bisect(above_mask, 0.0, t_c, xtol=xtol_s)
    set_ = optimize.bisect(above_mask, t_c, 2 * t_c, xtol=xtol_s)
    return VisibilityWindow(rise_time_s=rise, set_time_s=set_, max_elevation_rad=max_el)


def pass_profile(scenario: OrbitScenario, step_s: float) -> list[LinkGeometrySample]:
    """Sample the overhead pass from rise to set.

    The grid is symmetric about culmination (so the middle sample is exactly at
    zenith) and is bracketed by the exact rise and set instants.
    """
    if not step_s > 0:
        raise ValueError(f"step_s must be positive, got {step_s!r}")
    omega = angular_velocity(scenario)
    t_c = culmination_time(scenario)
    re = scenario.constants.earth_radius_km
    el_min = scenario.min_elevation_rad
    half = math.acos(re * math.cos(el_min) / scenario.orbit_radius_km) - el_min
    half_t = half / omega

    n = int(math.floor(half_t / step_s + 1e-9))
    offsets = np.arange(-n, n + 1) * step_s
    if not math.isclose(n * step_s, half_t, rel_tol=0, abs_tol=1e-9):
        offsets = np.concatenate(([-half_t], offsets, [half_t]))
    times = t_c + offsets

    c = scenario.constants.light_speed_km_s
    ranges = np.asarray(range_at_time(scenario, times))
    elevations = np.asarray(elevation_from_range(scenario, ranges))
    mid = len(times) // 2
    elevations[mid] = math.pi / 2
    ranges[mid] = scenario.altitude_km
    # endpoints are on the mask by construction
    elevations[0] = elevations[-1] = el_min
    ranges[0] = ranges[-1] = slant_range(scenario, el_min)
    return [
        LinkGeometrySample(float(t), float(el), float(d), float(d / c))
        for t, el, d in zip(times, elevations, ranges)
    ]
