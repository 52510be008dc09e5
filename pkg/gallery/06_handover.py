"""
Handover timeline
=================

Satellites rise one after another over a fixed RN.  A PHY-level switch costs
almost nothing; a full re-attach repeats the RN start-up over the satellite.
"""

from leolte import ConstellationTrack, Mechanism, OrbitScenario, availability, handover_schedule, outage_model

sc = OrbitScenario()
track = ConstellationTrack(300.0, sc)
rtt = track.rtt_ms
horizon = 3600.0
print(f"window {track.window_s:.1f} s, one satellite every {track.pass_period_s:.0f} s")

for mech in Mechanism:
    out = outage_model(mech, rtt, n_ues=50, ra_exchange_ms=15.0)
    events = handover_schedule(track, horizon, mech, out.rn_ms)
    print(f"{mech.value:<20} {len(events)} handovers, RN outage {out.rn_ms:.1f} ms each, "
          f"UE re-access {out.ue_reaccess_ms:.0f} ms, availability {availability(events, horizon):.6f}")

###############################################################################
# A sparser constellation leaves gaps between passes.
sparse = ConstellationTrack(400.0, sc)
events = handover_schedule(sparse, horizon)
gaps = [e for e in events if e.coverage_gap]
print(f"period 400 s: {len(gaps)} gaps of {gaps[0].outage_ms / 1e3:.1f} s, "
      f"availability {availability(events, horizon):.3f}")
