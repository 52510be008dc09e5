"""
Timing advance, random access and RN attach
===========================================

Which LTE timers survive a satellite backhaul?
"""

from leolte import OrbitScenario, max_timing_advance, ra_feasibility, rn_attach_plan, round_trip_time, ta_applicability

sc = OrbitScenario()
rtt_ms = round_trip_time(sc, sc.min_elevation_rad, sc.min_elevation_rad) * 1e3
print(f"RTT {rtt_ms:.2f} ms, TA ceiling {max_timing_advance():.4f} ms")

###############################################################################
# TA only has to cover the RN cell, not the satellite leg.
for r in (20, 100, 120):
    v = ta_applicability(sc, r)
    print(f"  cell radius {r:3d} km: demand {v.demand_ms:.3f} ms -> {v.verdict} {v.remedy}")

###############################################################################
# UEs attaching to the RN.
for v in ra_feasibility(rtt_ms):
    print(f"  {v.mechanism:<30} budget {v.budget_ms:5.1f} demand {v.demand_ms:6.2f} -> {v.verdict}")

###############################################################################
# The RN itself attaching through the satellite.
plan = rn_attach_plan(rtt_ms)
print(f"RN RAR window: {plan.rar_verdict.verdict}; {plan.rar_verdict.remedy}")
for phase in plan.phases:
    print(f"  {phase.name} ({phase.round_trips} round trips)")
    for step in phase.steps:
        print(f"    - {step}")
