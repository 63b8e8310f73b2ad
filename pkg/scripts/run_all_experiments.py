"""Run every experiment with a config file and write one JSON-lines report.

    python3 scripts/run_all_experiments.py --config configs/default.json --out report.jsonl

Prints per-experiment wall time and the summary table. Exits 1 if any record is fatal.
"""

import argparse
import sys
import time

from isogeny_descent.experiment_harness import EXPERIMENTS, SweepConfig, emit_report, run_experiment


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--config")
    ap.add_argument("--out", default="report.jsonl")
    ap.add_argument("--only", nargs="*", choices=list(EXPERIMENTS), help="subset of experiments")
    args = ap.parse_args()

    cfg = SweepConfig.from_json(args.config)
    records = []
    for name in args.only or EXPERIMENTS:
        t0 = time.perf_counter()
        recs = run_experiment(name, cfg)
        print(f"{name:<16}{len(recs):>8} records {time.perf_counter() - t0:8.1f}s", file=sys.stderr)
        records += recs
    summary = emit_report(records, args.out, sys.stderr)
    return 1 if any(s["fatal"] for s in summary.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
