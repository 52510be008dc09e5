"""
End-to-end feasibility report and sweeps
========================================

A scenario file drives every analysis.  Here we build one in memory, run the
report and export a couple of curves as CSV.
"""

from leolte.scenario import parse_scenario, run_full_report, sweep

ku = parse_scenario("""
orbit:
  altitude_km: 1200
  carrier_hz: 14.0e+9
harq:
  duration_ms: 5000
""")
report = run_full_report(ku, seed=1)
print(report.to_text())

###############################################################################
# The same link with GNSS-aided compensation and a 1 km position error.
compensated = parse_scenario("""
doppler:
  gnss_compensation: true
  position_error_km: 1.0
harq:
  duration_ms: 5000
""")
print(run_full_report(compensated, seed=1).verdicts)

###############################################################################
# Curves for external plotting.
print(sweep(ku, "ambiguity_km", [0.5 * i for i in range(0, 17)]))
print(sweep(ku, "altitude_km", [500, 800, 1200, 1600, 2000]))
