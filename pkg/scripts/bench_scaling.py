#!/usr/bin/env python3
"""Scaling experiment: 10n random update/query ops at each size, CSV out,
plus a ratio summary against the smallest size.

Usage: python scripts/bench_scaling.py [--sizes 4096,65536,1048576]
       [--ops-factor 10] [--seed 7] [--csv bench_results.csv]
"""

import argparse
import sys
import time

from jumpgraph.bench import bench, combined_per_op, records_to_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="4096,65536,1048576")
    ap.add_argument("--ops-factor", type=int, default=10,
                    help="ops per size = factor * n")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--csv", default="bench_results.csv")
    args = ap.parse_args()

    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    records = []
    for n in sizes:
        t0 = time.perf_counter()
        records.extend(bench([n], args.ops_factor * n, seed=args.seed))
        print(f"n={n}: {args.ops_factor * n} ops in {time.perf_counter() - t0:.1f}s")

    with open(args.csv, "w", encoding="utf-8") as fh:
        fh.write(records_to_csv(records))
    print(f"wrote {args.csv}")

    base_ns, base_rot = combined_per_op(records, sizes[0])
    print(f"{'n':>9} {'ns/op':>9} {'rot/op':>7} {'ns ratio':>9} {'rot ratio':>9}")
    for n in sizes:
        ns, rot = combined_per_op(records, n)
        print(f"{n:>9} {ns:>9.0f} {rot:>7.2f} {ns / base_ns:>9.2f} {rot / base_rot:>9.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
