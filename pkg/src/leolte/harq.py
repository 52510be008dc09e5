"""HARQ process sizing and a seeded discrete-event stop-and-wait HARQ simulator.

Timing model (integer microseconds):

* a transmission occupies the shared link for one TTI;
* its ACK/NACK is processed one RTT after the transmission started;
* the process may transmit again one TTI later (preparation of the next
  redundancy version), i.e. a process cycle lasts RTT + TTI;
* processes that are ready while the link is busy are served in the order they
  became ready, ties broken by process index (round robin).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

ALLOWED_MAX_TX = (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 16, 20, 24, 28)
LTE_MAX_PROCESSES = 8
RN_MAX_PROCESSES = 6


class Strategy(str, Enum):
    FULL_BUFFER = "FullBuffer"
    TWO_BIT_ACK = "TwoBitAck"
    REDUCED_PROCESSES = "ReducedProcesses"
    NO_HARQ_REPETITION = "NoHarqRepetition"


class ProcessState(Enum):
    IDLE = "idle"
    TRANSMITTED = "transmitted"
    AWAITING_FEEDBACK = "awaiting_feedback"
    RETRANSMIT = "retransmit"
    DONE = "done"


class SimulationInvariantError(RuntimeError):
    pass


def min_harq_processes(rtt_ms: float, tti_ms: float = 1.0) -> int:
    """Smallest process count that keeps the link busy: ceil((RTT + TTI) / TTI)."""
    if rtt_ms < 0 or not tti_ms > 0:
        raise ValueError(f"need rtt_ms >= 0 and tti_ms > 0, got rtt_ms={rtt_ms!r}, tti_ms={tti_ms!r}")
    # 1e-9 absorbs float noise such as (7 + 1) / 1 = 8.000000000000002
    return max(1, math.ceil((rtt_ms + tti_ms) / tti_ms - 1e-9))


def harq_id_bits(n_processes: int) -> int:
    return math.ceil(math.log2(n_processes)) if n_processes > 1 else 0


@dataclass(frozen=True)
class HarqConfig:
    """One HARQ entity on the satellite backhaul.

    ``max_retx`` counts transmissions per block (LTE maxHARQ-Tx), ``None`` means
    unlimited.  ``n_processes`` defaults to the minimum for the RTT, except for
    ReducedProcesses where it must be given.
    """

    rtt_ms: float
    strategy: Strategy = Strategy.FULL_BUFFER
    n_processes: int | None = None
    tti_ms: float = 1.0
    ack_window_ms: float = 8.0
    max_retx: int | None = 5
    repetitions: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.rtt_ms < 0:
            raise ValueError(f"rtt_ms must be non-negative, got {self.rtt_ms!r}")
        if not self.tti_ms > 0:
            raise ValueError(f"tti_ms must be positive, got {self.tti_ms!r}")
        if not self.ack_window_ms > 0:
            raise ValueError(f"ack_window_ms must be positive, got {self.ack_window_ms!r}")
        if self.max_retx is not None and self.max_retx not in ALLOWED_MAX_TX:
            raise ValueError(f"max_retx must be one of {ALLOWED_MAX_TX} or None, got {self.max_retx!r}")

        n_min = self.min_processes
        s = self.strategy
        if s is Strategy.NO_HARQ_REPETITION:
            reps = 2 if self.repetitions is None else self.repetitions
            if reps < 1:
                raise ValueError(f"repetitions must be >= 1, got {reps!r}")
            if self.n_processes not in (None, 1):
                raise ValueError("NoHarqRepetition runs without parallel processes; leave n_processes unset")
            object.__setattr__(self, "repetitions", reps)
            object.__setattr__(self, "n_processes", 1)
            return
        if self.repetitions is not None:
            raise ValueError(f"repetitions is only meaningful for NoHarqRepetition, not {s.value}")
        if s is Strategy.REDUCED_PROCESSES:
            if self.n_processes is None:
                raise ValueError("ReducedProcesses needs an explicit n_processes")
            if not 1 <= self.n_processes < n_min:
                raise ValueError(
                    f"ReducedProcesses needs 1 <= n_processes < {n_min} (the minimum for this RTT), "
                    f"got {self.n_processes!r}"
                )
        else:
            n = n_min if self.n_processes is None else self.n_processes
            if n < n_min:
                raise ValueError(
                    f"{s.value} needs n_processes >= {n_min}; use ReducedProcesses for fewer, got {n!r}"
                )
            object.__setattr__(self, "n_processes", n)

    @classmethod
    def rn_preset(cls, rtt_ms: float, **kwargs) -> "HarqConfig":
        """Terrestrial RN limit of six processes, as a ReducedProcesses config when the RTT needs more."""
        n_min = min_harq_processes(rtt_ms, kwargs.get("tti_ms", 1.0))
        strategy = Strategy.REDUCED_PROCESSES if RN_MAX_PROCESSES < n_min else Strategy.FULL_BUFFER
        return cls(rtt_ms=rtt_ms, strategy=strategy, n_processes=RN_MAX_PROCESSES, **kwargs)

    @property
    def min_processes(self) -> int:
        return min_harq_processes(self.rtt_ms, self.tti_ms)

    @property
    def harq_id_bits(self) -> int:
        return harq_id_bits(self.n_processes)

    @property
    def buffer_units(self) -> int:
        """Soft buffer size in transport blocks (one block per process, i.e. N_HARQ * TTI of data)."""
        return self.n_processes

    @property
    def fits_standard_ack_window(self) -> bool:
        """True when feedback returns within the terrestrial ACK window."""
        return self.rtt_ms + self.tti_ms <= self.ack_window_ms


@dataclass(frozen=True)
class ChannelModel:
    block_error_prob: float = 0.0
    retx_error_multiplier: float = 1.0
    near_nack_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self):
        for name in ("block_error_prob", "near_nack_fraction"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
        if self.retx_error_multiplier < 0:
            raise ValueError(f"retx_error_multiplier must be non-negative, got {self.retx_error_multiplier!r}")

    def error_prob(self, attempt: int) -> float:
        return min(1.0, self.block_error_prob * self.retx_error_multiplier**attempt)


@dataclass(frozen=True)
class HarqMetrics:
    offered_blocks: int
    delivered_blocks: int
    dropped_blocks: int
    residual_error_rate: float
    goodput_fraction: float
    mean_delivery_delay_ms: float
    p95_delivery_delay_ms: float
    peak_buffer_units_tb: int
    retx_histogram: tuple[int, ...]
    duration_ms: float

    @property
    def transmissions(self) -> int:
        return sum(self.retx_histogram)

    def to_dict(self) -> dict:
        return {
            "offered_blocks": self.offered_blocks,
            "delivered_blocks": self.delivered_blocks,
            "dropped_blocks": self.dropped_blocks,
            "residual_error_rate": self.residual_error_rate,
            "goodput_fraction": self.goodput_fraction,
            "mean_delivery_delay_ms": self.mean_delivery_delay_ms,
            "p95_delivery_delay_ms": self.p95_delivery_delay_ms,
            "peak_buffer_units_tb": self.peak_buffer_units_tb,
            "retx_histogram": list(self.retx_histogram),
            "duration_ms": self.duration_ms,
        }


def analytic_goodput(config: HarqConfig) -> float:
    """Error-free duty cycle of K parallel stop-and-wait processes."""
    if config.strategy is Strategy.NO_HARQ_REPETITION:
        return 1.0 / config.repetitions
    return min(1.0, config.n_processes * config.tti_ms / (config.rtt_ms + config.tti_ms))


class _Uniforms:
    """Batched uniform draws from a seeded generator; the sequence depends only on the seed."""

    def __init__(self, seed, batch=8192):
        self._rng = np.random.default_rng(seed)
        self._batch = batch
        self._buf = self._rng.random(batch)
        self._i = 0

    def __call__(self) -> float:
        if self._i == self._batch:
            self._buf = self._rng.random(self._batch)
            self._i = 0
        u = self._buf[self._i]
        self._i += 1
        return u


@dataclass
class _Process:
    pid: int
    state: ProcessState = ProcessState.IDLE
    block: int | None = None
    block_start_us: int = 0
    attempt: int = 0
    near_nack: bool = False
    last_tx_us: int = -1
    success: bool = False


# event kinds, ordered for same-instant processing
_FEEDBACK = 0
_READY = 1


@dataclass
class HarqSimulator:
    config: HarqConfig
    channel: ChannelModel
    duration_ms: float
    record_trace: bool = False
    trace: list = field(default_factory=list, init=False)

    def __post_init__(self):
        cfg = self.config
        if self.duration_ms < 10 * (cfg.rtt_ms + cfg.tti_ms):
            raise ValueError(
                f"duration_ms={self.duration_ms!r} must cover at least 10 HARQ cycles "
                f"({10 * (cfg.rtt_ms + cfg.tti_ms):g} ms)"
            )
        self.tti_us = int(round(cfg.tti_ms * 1000))
        self.rtt_us = int(round(cfg.rtt_ms * 1000))
        self.duration_us = int(round(self.duration_ms * 1000))

    def _log(self, *row):
        if self.record_trace:
            self.trace.append(row)

    def run(self) -> HarqMetrics:
        if self.config.strategy is Strategy.NO_HARQ_REPETITION:
            return self._run_repetition()
        return self._run_harq()

    def _metrics(self, offered, delivered, dropped, delays_us, peak, hist):
        completed = delivered + dropped
        delays = np.asarray(delays_us, dtype=float) / 1000.0
        return HarqMetrics(
            offered_blocks=offered,
            delivered_blocks=delivered,
            dropped_blocks=dropped,
            residual_error_rate=dropped / completed if completed else 0.0,
            goodput_fraction=delivered * self.tti_us / self.duration_us,
            mean_delivery_delay_ms=float(delays.mean()) if delays.size else 0.0,
            p95_delivery_delay_ms=float(np.percentile(delays, 95)) if delays.size else 0.0,
            peak_buffer_units_tb=peak,
            retx_histogram=tuple(int(h) for h in hist),
            duration_ms=self.duration_ms,
        )

    def _run_harq(self) -> HarqMetrics:
        cfg, ch = self.config, self.channel
        tti, rtt, end = self.tti_us, self.rtt_us, self.duration_us
        max_tx = cfg.max_retx
        two_bit = cfg.strategy is Strategy.TWO_BIT_ACK
        draw = _Uniforms(ch.seed)

        procs = [_Process(i) for i in range(cfg.n_processes)]
        # (time, kind, ready_since, pid)
        events = [(0, _READY, 0, p.pid) for p in procs]
        heapq.heapify(events)
        link_free = 0
        next_block = 0
        offered = delivered = dropped = 0
        busy = peak = 0
        delays = []
        hist = [0] * (max_tx if max_tx is not None else 1)

        while events:
            t, kind, since, pid = heapq.heappop(events)
            p = procs[pid]

            if kind == _FEEDBACK:
                if p.state is not ProcessState.AWAITING_FEEDBACK:
                    raise SimulationInvariantError(f"process {pid} got feedback in state {p.state}")
                if t < p.last_tx_us + rtt:
                    raise SimulationInvariantError(f"process {pid} feedback at {t} before tx+rtt")
                if p.success:
                    p.state = ProcessState.DONE
                    self._log(t, pid, "ack", p.attempt)
                elif max_tx is not None and p.attempt + 1 >= max_tx:
                    p.state = ProcessState.DONE
                    self._log(t, pid, "nack_drop", p.attempt)
                else:
                    p.near_nack = two_bit and draw() < ch.near_nack_fraction
                    p.state = ProcessState.RETRANSMIT
                    self._log(t, pid, "nack_near" if p.near_nack else "nack", p.attempt)
                heapq.heappush(events, (t + tti, _READY, t + tti, pid))
                continue

            # _READY
            start = max(t, link_free)
            if start >= end:
                continue
            if start > t:
                heapq.heappush(events, (start, _READY, since, pid))
                continue

            if p.state is ProcessState.DONE:
                p.state = ProcessState.IDLE
                p.block = None
                busy -= 1
            if p.state is ProcessState.IDLE:
                if p.block is not None:
                    raise SimulationInvariantError(f"idle process {pid} still holds block {p.block}")
                p.block = next_block
                next_block += 1
                p.block_start_us = start
                p.attempt = 0
                p.near_nack = False
                offered += 1
                busy += 1
                peak = max(peak, busy)
            elif p.state is ProcessState.RETRANSMIT:
                p.attempt += 1
                if start < p.last_tx_us + rtt + tti:
                    raise SimulationInvariantError(f"process {pid} retransmitted before its cycle ended")
            else:
                raise SimulationInvariantError(f"process {pid} asked to transmit in state {p.state}")

            pe = ch.error_prob(p.attempt)
            if p.near_nack:
                pe *= 0.5
            p.success = draw() >= pe
            p.state = ProcessState.TRANSMITTED
            p.last_tx_us = start
            link_free = start + tti
            if p.attempt >= len(hist):
                hist.extend([0] * (p.attempt + 1 - len(hist)))
            hist[p.attempt] += 1
            self._log(start, pid, "tx", p.attempt)

            if p.success:
                delivered += 1
                delays.append(start + tti + rtt // 2 - p.block_start_us)
            elif max_tx is not None and p.attempt + 1 >= max_tx:
                dropped += 1
            p.state = ProcessState.AWAITING_FEEDBACK
            heapq.heappush(events, (start + rtt, _FEEDBACK, start + rtt, pid))

        return self._metrics(offered, delivered, dropped, delays, peak, hist)

    def _run_repetition(self) -> HarqMetrics:
        cfg, ch = self.config, self.channel
        tti, rtt, end = self.tti_us, self.rtt_us, self.duration_us
        reps = cfg.repetitions
        draw = _Uniforms(ch.seed)
        hist = [0] * reps
        offered = delivered = dropped = 0
        delays = []
        t = 0
        while t < end:
            offered += 1
            first_ok = None
            for k in range(reps):
                start = t + k * tti
                if start >= end:
                    break
                hist[k] += 1
                self._log(start, 0, "tx", k)
                if draw() >= ch.error_prob(0) and first_ok is None:
                    first_ok = start
            else:
                if first_ok is not None:
                    delivered += 1
                    delays.append(first_ok + tti + rtt // 2 - t)
                else:
                    dropped += 1
            t += reps * tti
        return self._metrics(offered, delivered, dropped, delays, 1, hist)


def run_simulation(config: HarqConfig, channel: ChannelModel, duration_ms: float) -> HarqMetrics:
    return HarqSimulator(config, channel, duration_ms).run()


@dataclass(frozen=True)
class StrategyResult:
    rank: int
    config: HarqConfig
    metrics: HarqMetrics
    analytic_goodput: float

    @property
    def strategy(self) -> Strategy:
        return self.config.strategy


def strategy_configs(
    rtt_ms: float,
    tti_ms: float = 1.0,
    reduced_processes: int = LTE_MAX_PROCESSES,
    repetitions: int = 2,
    max_retx: int | None = 5,
    ack_window_ms: float = 8.0,
) -> list[HarqConfig]:
    common = dict(rtt_ms=rtt_ms, tti_ms=tti_ms, ack_window_ms=ack_window_ms)
    configs = [
        HarqConfig(strategy=Strategy.FULL_BUFFER, max_retx=max_retx, **common),
        HarqConfig(strategy=Strategy.TWO_BIT_ACK, max_retx=max_retx, **common),
    ]
    n_min = min_harq_processes(rtt_ms, tti_ms)
    if reduced_processes < n_min:
        configs.append(
            HarqConfig(strategy=Strategy.REDUCED_PROCESSES, n_processes=reduced_processes, max_retx=max_retx, **common)
        )
    configs.append(HarqConfig(strategy=Strategy.NO_HARQ_REPETITION, repetitions=repetitions, **common))
    return configs


def compare_configs(configs, channel: ChannelModel, duration_ms: float) -> list[StrategyResult]:
    """Simulate each config with the same seed; rank by goodput, then lower residual error."""
    runs = [(i, cfg, run_simulation(cfg, channel, duration_ms)) for i, cfg in enumerate(configs)]
    runs.sort(key=lambda r: (-r[2].goodput_fraction, r[2].residual_error_rate, r[0]))
    return [StrategyResult(k + 1, cfg, m, analytic_goodput(cfg)) for k, (_, cfg, m) in enumerate(runs)]


def compare_strategies(
    scenario,
    channel: ChannelModel,
    duration_ms: float = 10_000.0,
    **kwargs,
) -> list[StrategyResult]:
    """All four mitigation strategies at the worst-case RTT (both ends at the elevation mask)."""
    from .orbit import round_trip_time

    el = scenario.min_elevation_rad
    rtt_ms = round(round_trip_time(scenario, el, el) * 1e3, 3)
    return compare_configs(strategy_configs(rtt_ms, **kwargs), channel, duration_ms)
