"""
Doppler along a pass and GNSS-aided compensation
================================================

The raw Doppler at Ku-band is two orders of magnitude above what an LTE
receiver tolerates.  If the RN knows its own position and the ephemeris it can
pre-compensate; what is left depends on how wrong the position is.
"""

import numpy as np

from leolte import (
    OrbitScenario,
    doppler_excess_factor,
    doppler_profile,
    max_residual_doppler,
    max_tolerable_position_error,
    worst_case_doppler,
)

for f0 in (11e9, 14e9):
    sc = OrbitScenario(carrier_hz=f0)
    print(f"{f0 / 1e9:.0f} GHz: worst Doppler {worst_case_doppler(sc) / 1e3:.1f} kHz, "
          f"{doppler_excess_factor(sc):.1f}x the 950 Hz limit")

###############################################################################
# Sign flips at culmination.
sc = OrbitScenario()
prof = doppler_profile(sc, 20.0)
print("Doppler every 20 s (kHz):", np.round([p.doppler_hz / 1e3 for p in prof], 1))

###############################################################################
# Residual after compensation, worst over the visible arc.
for rb in (0.5, 1, 2, 4, 8):
    print(f"  position error {rb:4.1f} km -> residual {max_residual_doppler(sc, rb):7.1f} Hz")

###############################################################################
# The largest error that keeps the residual below 950 Hz.
print(f"tolerable position error: {max_tolerable_position_error(sc):.3f} km")
