import pytest
from hypothesis import given
from hypothesis import strategies as st

from leolte.handover import (
    ConstellationTrack,
    Mechanism,
    availability,
    handover_schedule,
    outage_model,
)
from leolte.orbit import OrbitScenario, visibility_window
from leolte.timers import rn_attach_plan

SC = OrbitScenario()
W = visibility_window(SC).duration_s


def test_continuous_coverage_period():
    ev = handover_schedule(ConstellationTrack(W, SC), 3600)
    times = [e.time_s for e in ev]
    assert len(ev) == int(3600 // W)
    assert times[0] == pytest.approx(309, abs=1)
    assert all(b - a == pytest.approx(W) for a, b in zip(times, times[1:]))
    assert all(e.from_sat + 1 == e.to_sat for e in ev)


def test_short_horizon_is_empty():
    assert handover_schedule(ConstellationTrack(W, SC), W / 2) == []


def test_coverage_gaps():
    period = W + 60
    ev = handover_schedule(ConstellationTrack(period, SC), 3600)
    gaps = [e for e in ev if e.coverage_gap]
    assert gaps
    assert all(g.outage_ms == pytest.approx((period - W) * 1e3, rel=1e-9) for g in gaps)


@pytest.mark.parametrize("period", [W / 2, W, W + 60])
@pytest.mark.parametrize("mech", list(Mechanism))
def test_events_ordered_and_disjoint(period, mech):
    ev = handover_schedule(ConstellationTrack(period, SC), 7200, mech)
    for a, b in zip(ev, ev[1:]):
        assert a.time_s < b.time_s
        assert a.end_s <= b.time_s + 1e-9


class TestOutage:
    def test_phy_default_is_seamless(self):
        assert outage_model(Mechanism.PHY_BASED, 21.06).rn_ms == 0.0

    def test_traditional_reattach(self):
        o = outage_model("traditional", 21.06, rn_attach_plan(21.06), n_ues=10, ra_exchange_ms=15)
        assert o.rn_ms == pytest.approx(6 * 21.06)
        assert o.rn_ms == pytest.approx(126.4, abs=0.05)
        assert o.ue_reaccess_ms == 150
        assert o.total_ms == pytest.approx(126.36 + 150)

    def test_phy_never_worse(self):
        for rtt in (0.0, 10.0, 21.06, 40.0):
            assert outage_model("phy", rtt).rn_ms <= outage_model("traditional", rtt).rn_ms


class TestAvailability:
    def test_day_phy_vs_traditional(self):
        track = ConstellationTrack(W, SC)
        phy = availability(handover_schedule(track, 86400, "phy"), 86400)
        trad = availability(handover_schedule(track, 86400, "traditional"), 86400)
        assert phy == 1.0
        assert 0 <= trad < phy
        n = len(handover_schedule(track, 86400, "traditional"))
        assert trad == pytest.approx(1 - n * 6 * track.rtt_ms / 1e3 / 86400)

    @given(st.floats(0, 5000), st.floats(0, 5000))
    def test_monotone_in_outage(self, a, b):
        lo, hi = sorted((a, b))
        track = ConstellationTrack(W, SC)
        av_lo = availability(handover_schedule(track, 20000, outage_ms=lo), 20000)
        av_hi = availability(handover_schedule(track, 20000, outage_ms=hi), 20000)
        assert 0 <= av_hi <= av_lo <= 1


def test_bad_inputs():
    with pytest.raises(ValueError):
        ConstellationTrack(0, SC)
    with pytest.raises(ValueError):
        handover_schedule(ConstellationTrack(W, SC), 0)
    with pytest.raises(ValueError):
        Mechanism.parse("teleport")
