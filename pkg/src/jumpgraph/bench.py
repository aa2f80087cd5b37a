"""Scaling benchmark: random update/query mixes at several universe sizes.

Per size, half the ops retarget a random edge and half jump a random
(possibly astronomically large) number of steps from a random node; each
op's wall time and splay rotations are accumulated per op kind. Rotation
counts are deterministic for a given seed and are the clock-independent
cost proxy; wall time is informational and excluded from determinism
checks.
"""

import csv
import io
import time
from dataclasses import dataclass

from .pseudoforest import Pseudoforest
from .rng import SplitMix64
from .workload import HUGE_K

CSV_COLUMNS = ("n", "op_kind", "ops_executed", "total_ns", "total_rotations")


@dataclass
class BenchRecord:
    n: int
    op_kind: str
    ops_executed: int
    total_ns: int
    total_rotations: int

    @property
    def ns_per_op(self) -> float:
        return self.total_ns / self.ops_executed

    @property
    def rotations_per_op(self) -> float:
        return self.total_rotations / self.ops_executed


def bench(sizes, ops_per_size: int, seed: int) -> list:
    """One update record and one query record per size, in size order."""
    if not sizes:
        raise ValueError("sizes must be nonempty")
    base = SplitMix64(seed)
    records = []
    for n in sizes:
        rng = base.split()
        g = Pseudoforest(n)
        forest = g.forest
        clock = time.perf_counter_ns
        upd_ns = upd_rot = upd_cnt = 0
        qry_ns = qry_rot = qry_cnt = 0
        for _ in range(ops_per_size):
            r = rng.next_u64()
            v = (r >> 1) % n
            if r & 1:
                w = (r >> 32) % n
                r0 = forest.rotations
                t0 = clock()
                g.update(v, w)
                upd_ns += clock() - t0
                upd_rot += forest.rotations - r0
                upd_cnt += 1
            else:
                k = rng.below(HUGE_K) if (r >> 32) & 1 else (r >> 33) % (4 * n)
                r0 = forest.rotations
                t0 = clock()
                g.query(v, k)
                qry_ns += clock() - t0
                qry_rot += forest.rotations - r0
                qry_cnt += 1
        if upd_cnt:
            records.append(BenchRecord(n, "update", upd_cnt, upd_ns, upd_rot))
        if qry_cnt:
            records.append(BenchRecord(n, "query", qry_cnt, qry_ns, qry_rot))
    return records


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(
            [rec.n, rec.op_kind, rec.ops_executed, rec.total_ns, rec.total_rotations]
        )
    return buf.getvalue()


def combined_per_op(records, n: int):
    """(avg_ns, avg_rotations) per op across all op kinds at size n."""
    picked = [r for r in records if r.n == n]
    ops = sum(r.ops_executed for r in picked)
    ns = sum(r.total_ns for r in picked)
    rot = sum(r.total_rotations for r in picked)
    return ns / ops, rot / ops
