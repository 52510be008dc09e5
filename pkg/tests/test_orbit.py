import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leolte.orbit import (
    NeverVisibleError,
    OrbitScenario,
    PhysicalConstants,
    angular_velocity,
    elevation_from_range,
    one_way_delay,
    orbital_period,
    orbital_speed,
    pass_profile,
    round_trip_time,
    slant_range,
    visibility_window,
)

C = 299792.458
RE = 6371.0


def law_of_cosines_range(h, el):
    """Spherical-triangle oracle: central angle first, then the third side."""
    r = RE + h
    nadir = math.asin(RE * math.cos(el) / r)
    gamma = math.pi / 2 - el - nadir
    return math.sqrt(RE**2 + r**2 - 2 * RE * r * math.cos(gamma))


def window_oracle(h, el_min, omega):
    psi = math.acos(RE * math.cos(el_min) / (RE + h)) - el_min
    return 2 * psi / omega


def quiet(**kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return OrbitScenario(**kw)


class TestConstants:
    def test_defaults(self):
        c = PhysicalConstants()
        assert (c.earth_radius_km, c.light_speed_km_s, c.gravitational_constant, c.earth_mass_kg) == (
            6371.0, 299792.458, 6.67e-11, 5.98e24)

    @pytest.mark.parametrize("field", ["earth_radius_km", "light_speed_km_s", "gravitational_constant", "earth_mass_kg"])
    def test_rejects_non_positive(self, field):
        with pytest.raises(ValueError, match=field):
            PhysicalConstants(**{field: 0.0})


class TestScenario:
    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            OrbitScenario(altitude_km=-5)
        with pytest.raises(ValueError):
            OrbitScenario(carrier_hz=0)
        with pytest.raises(ValueError):
            OrbitScenario(min_elevation_rad=math.pi / 2)

    def test_out_of_leo_flagged(self):
        with pytest.warns(UserWarning, match="LEO"):
            s = OrbitScenario(altitude_km=35786)
        assert not s.is_leo
        assert OrbitScenario().is_leo


class TestAngularVelocity:
    def test_orbital_speed_1200km(self, ref):
        assert orbital_speed(ref) == pytest.approx(7.255, abs=0.01)

    def test_geo_period_matches_kepler(self):
        geo = quiet(altitude_km=35786)
        a = RE + 35786
        mu = 6.67e-11 * 5.98e24 * 1e-9
        kepler = 2 * math.pi * math.sqrt(a**3 / mu)
        assert orbital_period(geo) == pytest.approx(kepler, rel=1e-12)
        assert orbital_period(geo) == pytest.approx(86164, abs=60)

    def test_power_law(self):
        a = quiet(altitude_km=1000)
        b = quiet(altitude_km=2 * (RE + 1000) - RE)
        assert angular_velocity(b) / angular_velocity(a) == pytest.approx(2**-1.5, rel=1e-12)


class TestSlantRange:
    def test_nadir_is_altitude(self, ref):
        assert slant_range(ref, math.pi / 2) == 1200.0

    def test_45deg(self, ref):
        assert slant_range(ref, math.radians(45)) == pytest.approx(1580, abs=2)

    def test_law_of_cosines_oracle(self):
        s = OrbitScenario(altitude_km=600)
        el = math.radians(10)
        assert slant_range(s, el) == pytest.approx(law_of_cosines_range(600, el), rel=1e-6)

    @pytest.mark.parametrize("el", [-0.01, math.pi / 2 + 1e-6, float("nan")])
    def test_rejects_out_of_range(self, ref, el):
        with pytest.raises(ValueError):
            slant_range(ref, el)

    def test_strictly_decreasing(self, ref):
        el = np.linspace(0, math.pi / 2, 200)
        assert np.all(np.diff(slant_range(ref, el)) < 0)

    def test_consistent_with_triangle_relation(self):
        rng = np.random.default_rng(7)
        hs = rng.uniform(300, 2000, 1000)
        els = rng.uniform(0, math.pi / 2, 1000)
        for h, el in zip(hs, els):
            s = OrbitScenario(altitude_km=h)
            d = slant_range(s, el)
            lhs = (RE + h) ** 2 - RE**2 - d**2
            rhs = 2 * RE * d * math.sin(el)
            assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_above_altitude_except_nadir(self, ref):
        el = np.linspace(0, math.pi / 2, 50, endpoint=False)
        assert np.all(slant_range(ref, el) > ref.altitude_km)

    def test_inverse(self, ref):
        el = np.linspace(0.1, 1.5, 30)
        assert np.allclose(elevation_from_range(ref, slant_range(ref, el)), el, atol=1e-12)

    def test_one_way_delay(self, ref):
        assert one_way_delay(ref, 0.5) == slant_range(ref, 0.5) / C


class TestRoundTrip:
    def test_reference(self, ref):
        e = math.radians(45)
        assert round_trip_time(ref, e, e) * 1e3 == pytest.approx(21.06, abs=0.15)

    def test_both_zenith(self, ref):
        assert round_trip_time(ref, math.pi / 2, math.pi / 2) == pytest.approx(4 * 1200 / C, rel=1e-15)
        assert round_trip_time(ref, math.pi / 2, math.pi / 2) * 1e3 == pytest.approx(16.01, abs=0.01)

    def test_mixed_is_mean_of_symmetric_cases(self, ref):
        e = math.radians(45)
        mixed = round_trip_time(ref, e, math.pi / 2) * 1e3
        legs = 2 * (law_of_cosines_range(1200, e) + 1200) / C * 1e3
        assert mixed == pytest.approx(legs, abs=1e-6)
        assert mixed == pytest.approx((21.06 + 16.01) / 2, abs=0.2)

    @given(st.floats(math.radians(45), math.pi / 2), st.floats(math.radians(45), math.pi / 2))
    def test_symmetric(self, a, b):
        s = OrbitScenario()
        assert round_trip_time(s, a, b) == round_trip_time(s, b, a)

    def test_below_mask_rejected(self, ref):
        with pytest.raises(ValueError, match="elev_rn"):
            round_trip_time(ref, math.radians(30), math.radians(60))


class TestPassProfile:
    def test_endpoints_on_mask_and_zenith_in_middle(self, ref):
        prof = pass_profile(ref, 1.0)
        step_angle = angular_velocity(ref) * 1.0
        assert abs(prof[0].elevation_rad - ref.min_elevation_rad) <= step_angle
        assert abs(prof[-1].elevation_rad - ref.min_elevation_rad) <= step_angle
        mid = prof[len(prof) // 2]
        assert mid.elevation_rad == math.pi / 2
        assert mid.slant_range_km == 1200.0

    def test_duration_matches_central_angle_oracle(self, ref):
        prof = pass_profile(ref, 0.5)
        dur = prof[-1].time_s - prof[0].time_s
        oracle = window_oracle(1200, math.radians(45), angular_velocity(ref))
        assert dur == pytest.approx(oracle, abs=1e-6)
        assert dur == pytest.approx(309, abs=1)

    def test_monotone_up_then_down(self, ref):
        el = np.array([s.elevation_rad for s in pass_profile(ref, 2.0)])
        k = int(np.argmax(el))
        assert np.all(np.diff(el[: k + 1]) > 0)
        assert np.all(np.diff(el[k:]) < 0)

    def test_elevation_round_trips_through_triangle(self, ref):
        for s in pass_profile(ref, 3.0):
            assert elevation_from_range(ref, s.slant_range_km) == pytest.approx(s.elevation_rad, abs=1e-6)
            assert s.one_way_delay_s == s.slant_range_km / C

    def test_rejects_bad_step(self, ref):
        with pytest.raises(ValueError):
            pass_profile(ref, 0)


class TestVisibilityWindow:
    def test_reference_duration(self, ref):
        w = visibility_window(ref)
        oracle = window_oracle(1200, math.radians(45), angular_velocity(ref))
        assert w.duration_s == pytest.approx(309.2, abs=0.5)
        assert w.duration_s == pytest.approx(oracle, abs=2e-3)
        assert w.set_time_s > w.rise_time_s
        assert w.max_elevation_rad == pytest.approx(math.pi / 2)

    def test_inside_window_above_mask(self, ref):
        from leolte.orbit import elevation_at_time

        w = visibility_window(ref)
        t = np.linspace(w.rise_time_s + 1e-3, w.set_time_s - 1e-3, 500)
        assert np.all(elevation_at_time(ref, t) >= ref.min_elevation_rad)

    def test_shrinks_towards_zenith_mask(self):
        w = visibility_window(OrbitScenario(min_elevation_rad=math.radians(89.99)))
        assert w.duration_s < 0.1

    def test_monotone_in_mask(self):
        w30 = visibility_window(OrbitScenario(min_elevation_rad=math.radians(30)))
        w45 = visibility_window(OrbitScenario(min_elevation_rad=math.radians(45)))
        assert w30.duration_s > w45.duration_s

    def test_never_visible_is_a_value_error(self):
        assert issubclass(NeverVisibleError, ValueError)
