"""
HARQ over a long round trip
===========================

Stop-and-wait HARQ needs enough parallel processes to fill the pipe.  We size
it for the satellite RTT and compare four ways of living with the result.
"""

import numpy as np

from leolte import ChannelModel, HarqConfig, OrbitScenario, Strategy, analytic_goodput, compare_strategies, min_harq_processes, run_simulation

rtt = 21.06
n = min_harq_processes(rtt)
print(f"RTT {rtt} ms needs {n} processes (LTE has 8)")

###############################################################################
# Error-free goodput as a function of the number of processes.
ks = np.arange(1, 31)
sim = []
for k in ks:
    strat = Strategy.REDUCED_PROCESSES if k < n else Strategy.FULL_BUFFER
    cfg = HarqConfig(rtt, strat, int(k))
    sim.append(run_simulation(cfg, ChannelModel(0.0), 5_000).goodput_fraction)
print("goodput:", np.round(sim, 3))

###############################################################################
# Strategy comparison on a 10% block error channel.
for r in compare_strategies(OrbitScenario(), ChannelModel(0.1, seed=3), 20_000):
    m = r.metrics
    print(f"{r.rank}. {r.config.strategy.value:<18} n={r.config.n_processes:<3} "
          f"goodput {m.goodput_fraction:.3f} residual {m.residual_error_rate:.4f} "
          f"delay {m.mean_delivery_delay_ms:.1f} ms (analytic {analytic_goodput(r.config):.3f})")
