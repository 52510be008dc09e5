"""Command-line entry point: ``leolte <command> ...``.

Exit status is 0 unless a command errors; a FAIL verdict is a result, not an error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

import numpy as np

from .grid import grid_for_bandwidth
from .handover import Mechanism, availability, handover_schedule, outage_model
from .harq import HarqSimulator, harq_id_bits, min_harq_processes
from .scenario import (
    SWEEP_PARAMETERS,
    ScenarioError,
    load_scenario,
    run_full_report,
    sig6,
    sweep,
    to_csv,
)
from .timers import CONTENTION_BASED, ra_feasibility, rn_attach_plan, ta_applicability


def _emit(text: str, out_dir, filename: str):
    if out_dir is None:
        sys.stdout.write(text)
    else:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text)


def _dump(obj) -> str:
    return json.dumps(sig6(obj), indent=2) + "\n"


def _parse_values(text: str) -> list:
    """``a,b,c`` or ``start:stop:step`` (stop inclusive)."""
    if ":" in text:
        start, stop, step = (float(x) for x in text.split(":"))
        n = int(round((stop - start) / step))
        return [float(f"{v:.10g}") for v in np.linspace(start, start + n * step, n + 1)]
    return [float(v) for v in text.split(",") if v.strip()]


def cmd_report(args):
    sf = load_scenario(args.scenario)
    report = run_full_report(sf, seed=args.seed)
    if args.format == "text":
        _emit(report.to_text(), args.out, "report.txt")
    else:
        _emit(report.to_json(), args.out, "report.json")


def cmd_sweep(args):
    sf = load_scenario(args.scenario)
    _emit(sweep(sf, args.param, _parse_values(args.values)), args.out, f"sweep_{args.param}.csv")


def cmd_grid(args):
    g = grid_for_bandwidth(args.bw, args.cp, args.spacing)
    row = dataclasses.asdict(g)
    row["active_subcarriers"] = g.active_subcarriers
    row["occupied_bandwidth_hz"] = g.occupied_bandwidth_hz
    width = max(len(k) for k in row)
    text = "".join(f"{k:<{width}}  {v}\n" for k, v in row.items())
    if args.format in ("text", "both"):
        sys.stdout.write(text)
    if args.format in ("json", "both"):
        sys.stdout.write(json.dumps(row, indent=2) + "\n")


def cmd_check_timers(args):
    sf = load_scenario(args.scenario)
    sc = sf.orbit_scenario()
    rtt = sf.rtt_ms()
    consts = sf.timing_constants()
    plan = rn_attach_plan(rtt, consts, sf.timers.attach_guard_ms,
                          sf.timers.phase_i_round_trips, sf.timers.phase_ii_round_trips)
    verdicts = [ta_applicability(sc, sf.cell_radius_km, consts), *ra_feasibility(rtt, consts, CONTENTION_BASED),
                plan.rar_verdict]
    rows = [
        {"mechanism": v.mechanism, "budget_ms": v.budget_ms, "demand_ms": v.demand_ms, "margin_ms": v.margin_ms,
         "verdict": v.verdict, "remedy": v.remedy}
        for v in verdicts
    ]
    if args.format == "json":
        payload = {"rtt_ms": rtt, "verdicts": rows, "configured_rar_deadline_ms": plan.configured_rar_deadline_ms}
        _emit(_dump(payload), args.out, "timers.json")
    elif args.format == "csv":
        _emit(to_csv(list(rows[0]), [sig6(list(r.values())) for r in rows]), args.out, "timers.csv")
    else:
        lines = [f"{'mechanism':<30}{'budget_ms':>12}{'demand_ms':>12}{'margin_ms':>12}  verdict"]
        for r in rows:
            lines.append(f"{r['mechanism']:<30}{r['budget_ms']:>12.4f}{r['demand_ms']:>12.4f}"
                         f"{r['margin_ms']:>12.4f}  {r['verdict']}" + (f"  ({r['remedy']})" if r["remedy"] else ""))
        _emit("\n".join(lines) + "\n", args.out, "timers.txt")


def cmd_harq_sim(args):
    sf = load_scenario(args.config)
    cfg = sf.harq_config()
    sim = HarqSimulator(cfg, sf.channel_model(args.seed), sf.harq.duration_ms)
    m = sim.run()
    payload = {
        "strategy": cfg.strategy.value,
        "rtt_ms": cfg.rtt_ms,
        "n_processes": cfg.n_processes,
        "harq_id_bits": cfg.harq_id_bits,
        "buffer_units_tb": cfg.buffer_units,
        "seed": sim.channel.seed,
        **m.to_dict(),
    }
    hist = to_csv(["transmission_index", "count"], [[i + 1, c] for i, c in enumerate(m.retx_histogram)])
    if args.out is None:
        if args.format == "csv":
            sys.stdout.write(hist)
        else:
            sys.stdout.write(_dump(payload))
    else:
        _emit(_dump(payload), args.out, "harq_metrics.json")
        _emit(hist, args.out, "harq_retx_histogram.csv")


def cmd_harq_size(args):
    n = min_harq_processes(args.rtt, args.tti)
    payload = {"rtt_ms": args.rtt, "tti_ms": args.tti, "n_processes": n, "harq_id_bits": harq_id_bits(n),
               "buffer_units_tb": n}
    if args.format == "text":
        sys.stdout.write(f"processes {n}\nid_bits   {harq_id_bits(n)}\nbuffer    {n} TB\n")
    else:
        sys.stdout.write(_dump(payload))


def cmd_handover(args):
    sf = load_scenario(args.scenario)
    track = sf.constellation_track()
    mech = Mechanism.parse(args.mechanism or sf.handover.mechanism)
    horizon = args.horizon if args.horizon is not None else sf.handover.horizon_s
    rtt = sf.rtt_ms()
    plan = rn_attach_plan(rtt, sf.timing_constants(), sf.timers.attach_guard_ms,
                          sf.timers.phase_i_round_trips, sf.timers.phase_ii_round_trips)
    outage = outage_model(mech, rtt, plan, sf.handover.phy_retune_ms, sf.handover.n_ues, sf.handover.ra_exchange_ms)
    events = handover_schedule(track, horizon, mech, outage.rn_ms)
    rows = [[e.time_s, e.from_sat, e.to_sat, e.mechanism.value, e.outage_ms, e.coverage_gap] for e in events]
    csv_text = to_csv(["time_s", "from_sat", "to_sat", "mechanism", "outage_ms", "coverage_gap"], sig6(rows))
    summary = {
        "mechanism": mech.value,
        "horizon_s": horizon,
        "pass_period_s": track.pass_period_s,
        "visibility_window_s": track.window_s,
        "n_events": len(events),
        "rn_outage_per_handover_ms": outage.rn_ms,
        "ue_reaccess_per_handover_ms": outage.ue_reaccess_ms,
        "availability": availability(events, horizon),
    }
    if args.out is None:
        sys.stdout.write(csv_text if args.format == "csv" else _dump(summary))
    else:
        _emit(csv_text, args.out, "handover_events.csv")
        _emit(_dump(summary), args.out, "handover_summary.json")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leolte", description="LTE-over-LEO feasibility toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "csv", "text"), default="json"):
        sp.add_argument("--scenario", help="scenario file (YAML or JSON); defaults to the reference case")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--out", default=None, help="output directory (default: stdout)")
        sp.add_argument("--format", choices=formats, default=default)

    sp = sub.add_parser("report", help="full feasibility report")
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("sweep", help="parameter sweep as CSV")
    common(sp, ("csv",), "csv")
    sp.add_argument("--param", required=True, choices=SWEEP_PARAMETERS)
    sp.add_argument("--values", required=True, help="comma list or start:stop:step")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("grid", help="LTE downlink grid row")
    sp.add_argument("--bw", type=float, required=True, help="bandwidth in MHz")
    sp.add_argument("--cp", choices=("normal", "extended"), default="normal")
    sp.add_argument("--spacing", type=float, default=15000.0, help="subcarrier spacing in Hz")
    sp.add_argument("--format", choices=("text", "json", "both"), default="both")
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("check", help="timer checks")
    check = sp.add_subparsers(dest="what", required=True)
    t = check.add_parser("timers", help="TA / RA / RN attach verdicts")
    common(t, default="text")
    t.set_defaults(func=cmd_check_timers)

    sp = sub.add_parser("harq", help="HARQ sizing and simulation")
    harq = sp.add_subparsers(dest="what", required=True)
    s = harq.add_parser("sim", help="run the HARQ simulator")
    s.add_argument("--config", "--scenario", dest="config", help="scenario file with harq/channel sections")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_harq_sim)
    s = harq.add_parser("size", help="minimum process count for an RTT")
    s.add_argument("--rtt", type=float, required=True, help="round-trip time in ms")
    s.add_argument("--tti", type=float, default=1.0, help="TTI in ms")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_harq_size)

    sp = sub.add_parser("handover", help="handover timeline and availability")
    common(sp, ("json", "csv"))
    sp.add_argument("--mechanism", choices=("phy", "traditional"), default=None)
    sp.add_argument("--horizon", type=float, default=None, help="horizon in s")
    sp.set_defaults(func=cmd_handover)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
