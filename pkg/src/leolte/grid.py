"""LTE downlink resource-grid tables and Doppler-vs-subcarrier-spacing margins."""

from __future__ import annotations

from dataclasses import dataclass, field

from .doppler import LTE_MAX_DOPPLER_HZ

FRAME_MS = 10.0
SUBFRAME_MS = 1.0
SLOT_MS = 0.5
SUBCARRIERS_PER_RB = 12
REFERENCE_SAMPLE_RATE_HZ = 30.72e6  # 1 / T_s

# bandwidth MHz -> (N_RB^DL, FFT size)
BANDWIDTH_TABLE = {
    1.4: (6, 128),
    3.0: (15, 256),
    5.0: (25, 512),
    10.0: (50, 1024),
    15.0: (75, 1536),
    20.0: (100, 2048),
}

# CP lengths in units of T_s, per symbol index l within a slot
_CP_TS = {
    ("normal", 15000.0): (160, 144, 144, 144, 144, 144, 144),
    ("extended", 15000.0): (512,) * 6,
    ("extended", 7500.0): (1024,) * 3,
}


@dataclass(frozen=True)
class GridParams:
    bandwidth_mhz: float
    cp_mode: str
    n_rb_dl: int
    subcarrier_spacing_hz: float
    symbols_per_slot: int
    subcarriers_per_rb: int
    fft_size: int
    sampling_rate_hz: float
    samples_per_slot: int
    useful_symbol_us: float
    cp_lengths_samples: tuple[int, ...]  # in T_s = 1/30.72 MHz units
    frame_ms: float = FRAME_MS
    subframe_ms: float = SUBFRAME_MS
    slot_ms: float = SLOT_MS

    @property
    def active_subcarriers(self) -> int:
        return self.n_rb_dl * self.subcarriers_per_rb

    @property
    def occupied_bandwidth_hz(self) -> float:
        return self.active_subcarriers * self.subcarrier_spacing_hz

    @property
    def cp_lengths_us(self) -> tuple[float, ...]:
        return tuple(n / REFERENCE_SAMPLE_RATE_HZ * 1e6 for n in self.cp_lengths_samples)


def grid_for_bandwidth(bandwidth_mhz: float, cp_mode: str = "normal", subcarrier_spacing_hz: float = 15000.0) -> GridParams:
    """Downlink grid row for one of the six LTE channel bandwidths.

    The 7.5 kHz spacing exists only with extended CP; it doubles the FFT and the
    subcarriers per RB while keeping the sampling rate.
    """
    bw = float(bandwidth_mhz)
    if bw not in BANDWIDTH_TABLE:
        raise ValueError(f"unknown LTE bandwidth {bandwidth_mhz!r} MHz; expected one of {sorted(BANDWIDTH_TABLE)}")
    if cp_mode not in ("normal", "extended"):
        raise ValueError(f"cp_mode must be 'normal' or 'extended', got {cp_mode!r}")
    df = float(subcarrier_spacing_hz)
    if (cp_mode, df) not in _CP_TS:
        if df == 7500.0:
            raise ValueError("7.5 kHz subcarrier spacing requires extended CP; normal CP is 15 kHz only")
        raise ValueError(f"unsupported subcarrier spacing {subcarrier_spacing_hz!r} Hz")

    n_rb, fft15 = BANDWIDTH_TABLE[bw]
    scale = int(round(15000.0 / df))
    fft = fft15 * scale
    fs = fft * df
    cp = _CP_TS[(cp_mode, df)]
    return GridParams(
        bandwidth_mhz=bw,
        cp_mode=cp_mode,
        n_rb_dl=n_rb,
        subcarrier_spacing_hz=df,
        symbols_per_slot=len(cp),
        subcarriers_per_rb=SUBCARRIERS_PER_RB * scale,
        fft_size=fft,
        sampling_rate_hz=fs,
        samples_per_slot=int(round(fs * SLOT_MS * 1e-3)),
        useful_symbol_us=1e6 / df,
        cp_lengths_samples=cp,
    )


def all_grids(cp_mode: str = "normal") -> list[GridParams]:
    return [grid_for_bandwidth(bw, cp_mode) for bw in BANDWIDTH_TABLE]


@dataclass(frozen=True)
class DopplerMargin:
    doppler_hz: float
    subcarrier_spacing_hz: float
    ratio: float
    verdict: str
    limit_hz: float = LTE_MAX_DOPPLER_HZ
    marginal_hz: float = field(default=0.0)


def doppler_margin(
    grid: GridParams,
    doppler_hz: float,
    limit_hz: float = LTE_MAX_DOPPLER_HZ,
    marginal_fraction: float = 0.1,
) -> DopplerMargin:
    """Classify a frequency offset against the LTE design limit and the subcarrier spacing.

    PASS within ``limit_hz``; MARGINAL up to ``marginal_fraction`` of the spacing; FAIL beyond.
    """
    df = grid.subcarrier_spacing_hz
    mag = abs(doppler_hz)
    marginal_hz = marginal_fraction * df
    if mag <= limit_hz:
        verdict = "PASS"
    elif mag <= marginal_hz:
        verdict = "MARGINAL"
    else:
        verdict = "FAIL"
    return DopplerMargin(doppler_hz, df, mag / df, verdict, limit_hz, marginal_hz)
