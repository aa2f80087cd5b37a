#!/usr/bin/env python3
"""Differential fuzz sweep: many seeds, report any divergence.

Usage: python scripts/fuzz_sweep.py [--seeds 100] [--n 64] [--ops 1000]
"""

import argparse
import sys
import time

from jumpgraph.workload import fuzz


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--ops", type=int, default=1000)
    args = ap.parse_args()

    failures = 0
    t0 = time.perf_counter()
    for seed in range(args.seeds):
        result = fuzz(seed=seed, n=args.n, ops=args.ops)
        if not result.ok:
            failures += 1
            print(f"seed {seed}: FAIL")
            print(result.describe())
        elif seed % 10 == 9:
            print(f"seed {seed}: OK ({seed + 1}/{args.seeds})")
    dt = time.perf_counter() - t0
    print(f"{args.seeds} seeds x {args.ops} ops on n={args.n}: "
          f"{failures} divergences in {dt:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
