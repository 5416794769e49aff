"""Command-line interface.

Subcommands:
  run   cluster an edge list and report deletions, bounds, and ratio
  lb    report lower-bound quantities only (wedge match and relaxation)
  gen   emit generator instances as edge lists

Examples:
  clusterdel run --in graph.txt --algo mfp --strategy degree --stats out.json
  clusterdel run --in graph.txt.gz --algo mfp --strategy random --trials 100
  clusterdel lb --in graph.txt
  clusterdel gen --tight 16 --out tight16.txt

Exit codes: 0 ok, 1 malformed input, 2 relaxation arc budget exceeded,
3 invalid flags or parameters.
"""

from __future__ import annotations

import argparse
import gzip
import json
import sys

from .generators import er_graph, tight_instance
from .graph import EdgeListParseError, parse_edge_list, serialize_edge_list
from .pipelines import (apply_merge, best_of_random, match_flip_pivot,
                        stc_lp_round)
from .pivoting import PivotStrategy, clustering_lines
from .stc import DEFAULT_ARC_BUDGET, ArcBudgetError, solve_stc_lp
from .wedges import maximal_wedge_set_fast, maximal_wedge_set_simple


class _Parser(argparse.ArgumentParser):
    # reserve exit code 2 for the arc budget; argparse misuse exits 3
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="clusterdel",
                     description="cluster deletion with certified bounds")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    run = sub.add_parser("run", help="cluster an edge list")
    run.add_argument("--in", dest="infile", required=True,
                     help="edge list path (.gz ok)")
    run.add_argument("--algo", choices=("mfp", "stclp"), default="mfp")
    run.add_argument("--strategy", choices=("degree", "ratio", "random"),
                     default="degree")
    run.add_argument("--matcher", choices=("simple", "fast"), default=None,
                     help="wedge matcher for mfp (default fast)")
    run.add_argument("--trials", type=int, default=1,
                     help="random-strategy restarts (seeds seed..seed+T-1)")
    run.add_argument("--seed", type=int, default=None,
                     help="base seed for the random strategy (default 0)")
    run.add_argument("--merge", action="store_true",
                     help="post-process with clique-preserving merges")
    run.add_argument("--merge-budget-ms", type=float, default=None)
    run.add_argument("--lp-arc-budget", type=int,
                     default=DEFAULT_ARC_BUDGET)
    run.add_argument("--out", default=None,
                     help="write 'label cluster_id' lines here")
    run.add_argument("--stats", default=None, help="write stats JSON here")

    lb = sub.add_parser("lb", help="report lower bounds only")
    lb.add_argument("--in", dest="infile", required=True)
    lb.add_argument("--matcher", choices=("simple", "fast"), default="fast")
    lb.add_argument("--lp-arc-budget", type=int, default=DEFAULT_ARC_BUDGET)

    gen = sub.add_parser("gen", help="generate instances")
    group = gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--tight", type=int, metavar="N",
                       help="tight clique-with-pendants instance")
    group.add_argument("--er", nargs=2, metavar=("N", "P"),
                       help="Erdos-Renyi G(n, p)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="default stdout")
    return parser


def _load_graph(path: str):
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8") as fh:
        return parse_edge_list(fh)


def _fail(message: str, code: int) -> int:
    print(f"clusterdel: error: {message}", file=sys.stderr)
    return code


def _cmd_run(args) -> int:
    if args.trials < 1:
        return _fail("--trials must be at least 1", 3)
    if args.trials > 1 and args.strategy != "random":
        return _fail("--trials needs --strategy random", 3)
    if args.seed is not None and args.strategy != "random":
        return _fail("--seed only applies to --strategy random", 3)
    if args.matcher is not None and args.algo == "stclp":
        return _fail("--matcher only applies to --algo mfp", 3)
    if args.merge_budget_ms is not None and not args.merge:
        return _fail("--merge-budget-ms needs --merge", 3)
    matcher = args.matcher or "fast"
    try:
        g = _load_graph(args.infile)
    except EdgeListParseError as exc:
        return _fail(str(exc), 1)
    except OSError as exc:
        return _fail(str(exc), 1)
    seed = args.seed if args.seed is not None else 0
    summary = None
    try:
        if args.trials > 1:
            result, summary = best_of_random(
                g, args.trials, base_seed=seed, algorithm=args.algo,
                matcher=matcher, arc_budget=args.lp_arc_budget)
        elif args.algo == "mfp":
            strategy = (PivotStrategy.random(seed)
                        if args.strategy == "random"
                        else PivotStrategy(args.strategy))
            result = match_flip_pivot(g, strategy, matcher=matcher)
        else:
            strategy = (PivotStrategy.random(seed)
                        if args.strategy == "random"
                        else PivotStrategy(args.strategy))
            result = stc_lp_round(g, strategy,
                                  arc_budget=args.lp_arc_budget)
    except ArcBudgetError as exc:
        return _fail(str(exc), 2)
    if args.merge:
        result = apply_merge(g, result, budget_ms=args.merge_budget_ms)
    ratio = "n/a" if result.ratio is None else f"{float(result.ratio):.4f}"
    print(f"deletions={result.deletions} "
          f"lower_bound_half_units={result.lower_bound_half_units} "
          f"ratio={ratio} clusters={result.clustering.num_clusters}")
    if summary is not None:
        mean_ratio = summary["mean_ratio"]
        mr = "n/a" if mean_ratio is None else f"{mean_ratio:.4f}"
        print(f"trials={summary['trials']} "
              f"mean_deletions={summary['mean_deletions']:.2f} "
              f"mean_ratio={mr}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(clustering_lines(result.clustering, g)))
            fh.write("\n")
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            json.dump(result.to_json_dict(), fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_lb(args) -> int:
    try:
        g = _load_graph(args.infile)
    except EdgeListParseError as exc:
        return _fail(str(exc), 1)
    except OSError as exc:
        return _fail(str(exc), 1)
    matcher = (maximal_wedge_set_fast if args.matcher == "fast"
               else maximal_wedge_set_simple)
    ws = matcher(g)
    print(f"wedges={len(ws.wedges)}")
    print(f"weak_edges={ws.weak_count}")
    try:
        sol = solve_stc_lp(g, arc_budget=args.lp_arc_budget)
    except ArcBudgetError as exc:
        print(f"clusterdel: warning: relaxation skipped: {exc}",
              file=sys.stderr)
        return 0
    print(f"lp_value_half_units={sol.objective_half_units}")
    return 0


def _cmd_gen(args) -> int:
    if args.tight is not None:
        try:
            g, _, _ = tight_instance(args.tight)
        except ValueError as exc:
            return _fail(str(exc), 3)
    else:
        try:
            n = int(args.er[0])
            p = float(args.er[1])
            g = er_graph(n, p, args.seed)
        except ValueError as exc:
            return _fail(str(exc), 3)
    text = serialize_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "lb":
        return _cmd_lb(args)
    return _cmd_gen(args)


if __name__ == "__main__":
    sys.exit(main())
