"""Command-line harness: replay, fuzz, and benchmark.

Exit codes: 0 success, 1 divergence found (run --both / fuzz), 2 bad
input (parse errors, bad flags).
"""

import argparse
import sys

from .bench import bench, records_to_csv
from .errors import WorkloadParseError
from .oracle import NaiveGraph
from .pseudoforest import Pseudoforest
from .workload import fuzz, parse_mix, parse_workload, run_diff, run_workload


def _cmd_run(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        workload = parse_workload(text)
    except WorkloadParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    if args.both:
        outcome = run_diff(workload)
        for line in outcome.lines:
            print(line)
        if not outcome.ok:
            print(outcome.describe())
            return 1
        print("OK")
        return 0
    graph = NaiveGraph(workload.n) if args.oracle else Pseudoforest(workload.n)
    for line in run_workload(workload, graph):
        print(line)
    return 0


def _cmd_fuzz(args) -> int:
    mix = None
    if args.mix is not None:
        try:
            mix = parse_mix(args.mix)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    result = fuzz(args.seed, args.n, args.ops, mix)
    if result.ok:
        print(result.describe())
        return 0
    print(result.diff.describe())
    if args.save:
        with open(args.save, "w", encoding="utf-8") as fh:
            fh.write(result.failing_prefix.to_text())
        print(f"failing workload ({len(result.failing_prefix.commands)} ops) written to {args.save}")
    else:
        print(f"minimized failing workload ({len(result.failing_prefix.commands)} ops):")
        sys.stdout.write(result.failing_prefix.to_text())
    return 1


def _cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        print(f"error: bad --sizes value '{args.sizes}'", file=sys.stderr)
        return 2
    if not sizes or any(s < 1 for s in sizes):
        print("error: --sizes needs positive integers", file=sys.stderr)
        return 2
    records = bench(sizes, args.ops, args.seed)
    text = records_to_csv(records)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(records)} records to {args.csv}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumpgraph",
        description="Dynamic successor-graph engine: replay, fuzz, and benchmark harness.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_run = sub.add_parser("run", help="replay a workload file")
    p_run.add_argument("file", help="workload file (see README for the format)")
    who = p_run.add_mutually_exclusive_group()
    who.add_argument("--engine", action="store_true", help="run the engine (default)")
    who.add_argument("--oracle", action="store_true", help="run the brute-force oracle")
    who.add_argument(
        "--both", action="store_true", help="run both and stop at the first divergence"
    )
    p_run.set_defaults(func=_cmd_run)

    p_fuzz = sub.add_parser("fuzz", help="random differential testing")
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument("--n", type=int, required=True, help="initial node count")
    p_fuzz.add_argument("--ops", type=int, required=True, help="ops to generate")
    p_fuzz.add_argument("--mix", help="op weights, e.g. 'update=30,query=20,delete=0'")
    p_fuzz.add_argument("--save", help="write the minimized failing workload here")
    p_fuzz.set_defaults(func=_cmd_fuzz)

    p_bench = sub.add_parser("bench", help="scaling benchmark, CSV output")
    p_bench.add_argument("--sizes", required=True, help="comma-separated node counts")
    p_bench.add_argument("--ops", type=int, required=True, help="ops per size")
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--csv", help="output file (default: stdout)")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
