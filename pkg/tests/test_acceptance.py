"""Acceptance suite: every shipping criterion, one test each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS lines and measured numbers. The scaling criterion builds a
million-node instance and runs ~11M operations; expect the full module to
take a few minutes.
"""

import pytest

from jumpgraph import NaiveGraph, PathConn, Pseudoforest, SplitMix64
from jumpgraph.bench import bench, combined_per_op
from jumpgraph.workload import PathOpGen, fuzz

from test_pathconn import bfs_connected
from test_pseudoforest import audit_components

HUGE = 1 << 62


def test_differential_correctness_100_seeds():
    """100 seeds x 1000 mixed ops on n=64 (k up to 2^62): zero divergences
    between engine and oracle."""
    for seed in range(100):
        result = fuzz(seed=seed, n=64, ops=1000)
        assert result.ok, f"seed {seed}: {result.diff.describe()}"
    print("PASS differential correctness: 100 seeds x 1000 ops, 0 divergences")


def test_unique_cycle_audit_10k_updates():
    """After each of 10^4 random updates on n=128 the oracle decomposition
    finds exactly one cycle per component and the engine's cycle_length /
    on_cycle / component_root agree with it exactly."""
    n = 128
    eng = Pseudoforest(n)
    orc = NaiveGraph(n)
    rng = SplitMix64(2024)
    for _ in range(10_000):
        v, w = rng.below(n), rng.below(n)
        eng.update(v, w)
        orc.update(v, w)
        audit_components(eng, orc)
    print("PASS unique-cycle audit: 10^4 updates on n=128, decomposition agrees")


def test_iteration_and_periodicity_laws():
    """20 random instances (n=32): query(v,k+1) = succ(query(v,k)) for all
    k < 4n, and query(v,k+L) = query(v,k) for k in [depth, depth+2L]."""
    n = 32
    for seed in range(20):
        eng = Pseudoforest(n)
        rng = SplitMix64(seed)
        for _ in range(3 * n):
            eng.update(rng.below(n), rng.below(n))
        for v in range(n):
            cur = v
            for k in range(4 * n):
                nxt = eng.query(v, k + 1)
                assert nxt == eng.succ(cur)
                cur = nxt
            L = eng.cycle_length(v)
            d = eng.forest.depth(v)
            for k in range(d, d + 2 * L + 1):
                assert eng.query(v, k + L) == eng.query(v, k)
    print("PASS iteration/periodicity laws: 20 instances, exact equality")


def test_path_connectivity_reduction():
    """50 random path workloads (n=256, 2000 ops): connectivity matches a
    BFS oracle on 100 random pairs after every 100 ops, and no facade op
    issues more than 2 engine ops."""
    n = 256
    for seed in range(50):
        gen = PathOpGen(seed, n)
        pc = PathConn(n)
        g = pc.graph
        pair_rng = SplitMix64(seed ^ 0xC0FFEE)
        for step in range(1, 2001):
            name, args = gen.next_op()
            before = g.op_count
            if name == "pc_add":
                pc.add_edge(*args)
            elif name == "pc_del":
                pc.remove_edge(*args)
            else:
                pc.connected(*args)
                assert g.op_count - before == 2
            assert g.op_count - before <= 2
            if step % 100 == 0:
                edges = gen.edges()
                for _ in range(100):
                    x, y = pair_rng.below(n), pair_rng.below(n)
                    assert pc.connected(x, y) == bfs_connected(n, edges, x, y)
    print("PASS path-connectivity reduction: 50 workloads, <= 2 engine ops per op")


def test_logarithmic_scaling_shadow():
    """Sizes {2^12, 2^16, 2^20} with 10n update/query ops each: per-op
    rotations and per-op wall time at 2^20 within 2.5x of 2^12."""
    sizes = [1 << 12, 1 << 16, 1 << 20]
    records = []
    for n in sizes:
        records.extend(bench([n], 10 * n, seed=7))
    ns_small, rot_small = combined_per_op(records, sizes[0])
    ns_big, rot_big = combined_per_op(records, sizes[-1])
    rot_ratio = rot_big / rot_small
    ns_ratio = ns_big / ns_small
    print(
        f"scaling: rot/op {rot_small:.2f} -> {rot_big:.2f} (ratio {rot_ratio:.2f}), "
        f"ns/op {ns_small:.0f} -> {ns_big:.0f} (ratio {ns_ratio:.2f})"
    )
    assert rot_ratio <= 2.5
    assert ns_ratio <= 2.5
    print("PASS logarithmic scaling shadow: both ratios within 2.5x")


def test_cycle_length_off_by_one_resolution():
    """Self-loops have cycle length exactly 1 (and huge jumps fix them);
    on random instances the engine's cycle length equals the oracle's
    detected cycle size for every node."""
    g = Pseudoforest(1)
    assert g.cycle_length(0) == 1
    assert g.query(0, HUGE) == 0

    for seed in range(30):
        n = 8 + (seed % 5) * 12
        eng = Pseudoforest(n)
        orc = NaiveGraph(n)
        rng = SplitMix64(seed)
        for _ in range(2 * n):
            v, w = rng.below(n), rng.below(n)
            eng.update(v, w)
            orc.update(v, w)
        for cycle, dist in orc.cycle_decompose():
            for u in dist:
                assert eng.cycle_length(u) == len(cycle)
    print("PASS off-by-one resolution: self-loop L=1, cycle lengths exact")
