"""
Pass geometry and propagation delay
===================================

A 1200 km circular orbit seen from a relay node (RN) and a gateway, both
restricted to elevations above 45 degrees.  We compute the slant range, the
bent-pipe round-trip time and the length of one pass.
"""

import math

import numpy as np

from leolte import OrbitScenario, orbital_period, orbital_speed, pass_profile, round_trip_time, slant_range, visibility_window

sc = OrbitScenario()
mask = sc.min_elevation_rad

###############################################################################
# Orbit
print(f"orbital speed   {orbital_speed(sc):.4f} km/s")
print(f"orbital period  {orbital_period(sc) / 60:.1f} min")

###############################################################################
# Slant range falls from its value at the mask to the altitude at zenith.
for deg in (45, 60, 75, 90):
    print(f"  elevation {deg:2d} deg  range {slant_range(sc, math.radians(deg)):8.2f} km")

###############################################################################
# Worst-case round trip: both ends at the mask.
rtt = round_trip_time(sc, mask, mask)
print(f"worst-case RTT  {rtt * 1e3:.3f} ms")
print(f"zenith RTT      {round_trip_time(sc, math.pi / 2, math.pi / 2) * 1e3:.3f} ms")

###############################################################################
# One pass above the mask, sampled every 30 s.
w = visibility_window(sc)
print(f"visible for     {w.duration_s:.1f} s")
prof = pass_profile(sc, 30.0)
el = np.degrees([s.elevation_rad for s in prof])
print("elevation along the pass:", np.round(el, 1))
