#!/usr/bin/env python3
"""Approximation-ratio table over edge-list files or a generated corpus.

For each instance, runs MFP under both deterministic strategies plus a
best-of-T random restart, reports the weak-edge percentage, the best
ratio, and the ratio after merge postprocessing.  With --stclp the same
table is produced for the LP-rounding pipeline.

Examples:
  python scripts/ratio_table.py data/football.txt
  python scripts/ratio_table.py --er 200 0.1 --er 400 0.05 --trials 50
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from clusterdel import (  # noqa: E402
    PivotStrategy,
    apply_merge,
    best_of_random,
    er_graph,
    match_flip_pivot,
    parse_edge_list,
    stc_lp_round,
)


def load_instances(args) -> list[tuple[str, object]]:
    instances = []
    for path in args.paths:
        with open(path, encoding="utf-8") as fh:
            instances.append((Path(path).stem, parse_edge_list(fh)))
    for n, p in args.er or []:
        g = er_graph(int(n), float(p), seed=args.seed)
        instances.append((f"er_{n}_{p}", g))
    return instances


def best_run(g, args):
    algorithm = "stclp" if args.stclp else "mfp"
    runs = []
    for strategy in (PivotStrategy.degree(), PivotStrategy.ratio()):
        if args.stclp:
            runs.append(stc_lp_round(g, strategy))
        else:
            runs.append(match_flip_pivot(g, strategy))
    if args.trials > 0:
        rand_best, _ = best_of_random(g, trials=args.trials,
                                      base_seed=args.seed,
                                      algorithm=algorithm)
        runs.append(rand_best)
    return min(runs, key=lambda r: r.deletions)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("paths", nargs="*", help="edge-list files")
    ap.add_argument("--er", nargs=2, action="append", metavar=("N", "P"),
                    help="add a generated G(n, p) instance")
    ap.add_argument("--trials", type=int, default=20,
                    help="random restarts per instance (0 disables)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--stclp", action="store_true",
                    help="table for the LP-rounding pipeline instead of MFP")
    args = ap.parse_args()
    instances = load_instances(args)
    if not instances:
        ap.error("no instances given; pass files or --er N P")

    header = f"{'graph':<20} {'n':>6} {'m':>8} {'%weak':>7} " \
             f"{'ratio':>7} {'merged':>7}"
    print(header)
    print("-" * len(header))
    for name, g in instances:
        res = best_run(g, args)
        merged = apply_merge(g, res)
        pct_weak = 100.0 * res.weak_edges / g.m if g.m else 0.0
        ratio = f"{float(res.ratio):.3f}" if res.ratio is not None else "n/a"
        mratio = (f"{float(merged.ratio):.3f}"
                  if merged.ratio is not None else "n/a")
        print(f"{name:<20} {g.n:>6} {g.m:>8} {pct_weak:>7.2f} "
              f"{ratio:>7} {mratio:>7}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
