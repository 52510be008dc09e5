"""
Downlink grid and Doppler margin
================================

Per-bandwidth OFDM numerology, and how a given frequency offset compares to
the 15 kHz subcarrier spacing.
"""

from leolte import all_grids, doppler_margin, grid_for_bandwidth

print(f"{'MHz':>5} {'RB':>4} {'subc':>5} {'FFT':>5} {'Msps':>6} {'samples/slot':>13}")
for g in all_grids():
    print(f"{g.bandwidth_mhz:>5} {g.n_rb_dl:>4} {g.active_subcarriers:>5} {g.fft_size:>5} "
          f"{g.sampling_rate_hz / 1e6:>6.2f} {g.samples_per_slot:>13}")

g = grid_for_bandwidth(20)
print("normal CP (us):  ", [round(x, 2) for x in g.cp_lengths_us])
print("extended CP (us):", [round(x, 2) for x in grid_for_bandwidth(20, "extended").cp_lengths_us])

###############################################################################
# Raw Ku-band Doppler against a residual after good compensation.
for offset in (201_700.0, 900.0):
    m = doppler_margin(g, offset)
    print(f"offset {offset:>9.1f} Hz -> {m.ratio:.3f} of spacing, {m.verdict}")
