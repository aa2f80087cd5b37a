"""Link-cut forest vs. the explicit parent-walk reference."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumpgraph import (
    DepthRangeError,
    DifferentTreesError,
    InvalidNodeError,
    LinkCutForest,
    NotRootError,
    RootCutError,
    SameTreeError,
    SplitMix64,
)
from naive_forest import NaiveForest


def chain(k):
    """parent(i) = i - 1 for i > 0: a path with node 0 as the root."""
    f = LinkCutForest(k)
    ref = NaiveForest(k)
    for i in range(1, k):
        f.link(i, i - 1)
        ref.link(i, i - 1)
    return f, ref


def test_empty_forest():
    f = LinkCutForest(0)
    assert f.size == 0
    assert f.live_nodes() == []


def test_singleton():
    f = LinkCutForest(1)
    assert f.depth(0) == 0
    assert f.find_root(0) == 0
    assert f.access(0) == 0
    assert f._splay_inorder(0) == [0]


def test_all_singletons_are_roots():
    f = LinkCutForest(5)
    for i in range(5):
        assert f.find_root(i) == i


def test_access_chain_inorder():
    f, _ = chain(3)
    f.access(2)
    assert f._splay_inorder(2) == [0, 1, 2]


def test_access_switch_point_is_lca():
    # From the reference forest: lca(1, 2) on the chain 2 -> 1 -> 0 is 1.
    f, ref = chain(3)
    assert ref.lca(1, 2) == 1
    f.access(1)
    assert f.access(2) == 1


def test_link_depths():
    f = LinkCutForest(2)
    f.link(1, 0)
    assert f.depth(1) == 1
    assert f.find_root(1) == 0

    g = LinkCutForest(3)
    g.link(1, 0)
    g.link(2, 1)
    assert g.depth(2) == 2


def test_link_rejects_same_tree():
    f = LinkCutForest(2)
    f.link(1, 0)
    with pytest.raises(SameTreeError):
        f.link(0, 1)


def test_link_rejects_non_root():
    f = LinkCutForest(3)
    f.link(1, 0)
    with pytest.raises(NotRootError):
        f.link(1, 2)


def test_cut_splits_chain():
    f, _ = chain(3)
    f.cut(1)
    assert f.find_root(2) == 1
    assert f.depth(2) == 1
    assert f.find_root(0) == 0


def test_cut_leaf_makes_two_components():
    f, _ = chain(3)
    f.cut(2)
    assert f.find_root(2) == 2
    assert f.depth(2) == 0
    assert f.find_root(1) == 0


def test_cut_root_rejected():
    f, _ = chain(3)
    with pytest.raises(RootCutError):
        f.cut(0)


def test_depth_root_is_zero():
    f = LinkCutForest(4)
    f.link(1, 0)
    assert f.depth(0) == 0


def test_level_ancestor_chain():
    f, ref = chain(4)
    assert f.level_ancestor(3, 1) == ref.level_ancestor(3, 1) == 1
    assert f.level_ancestor(3, 3) == 3  # d = depth(v) is v itself
    assert f.level_ancestor(3, 0) == 0
    with pytest.raises(DepthRangeError):
        f.level_ancestor(1, 2)


def test_lca_star():
    f = LinkCutForest(3)
    f.link(1, 0)
    f.link(2, 0)
    assert f.lca(1, 2) == 0
    assert f.lca(1, 1) == 1
    assert f.lca(0, 2) == 0


def test_lca_rejects_different_trees():
    f = LinkCutForest(2)
    with pytest.raises(DifferentTreesError):
        f.lca(0, 1)


def test_parent_export():
    f, _ = chain(3)
    assert f.represented_parents() == [None, 0, 1]
    assert f.parent(0) is None
    assert f.parent(2) == 1


def test_dead_node_rejected_everywhere():
    f = LinkCutForest(3)
    f.link(2, 0)
    f.cut(2)
    f.remove_singleton(2)
    for op in (f.access, f.find_root, f.depth, f.parent):
        with pytest.raises(InvalidNodeError):
            op(2)
    with pytest.raises(InvalidNodeError):
        f.link(2, 1)
    with pytest.raises(InvalidNodeError):
        f.lca(0, 2)
    with pytest.raises(InvalidNodeError):
        f.access(17)
    assert f.live_nodes() == [0, 1]


def test_add_node_grows_universe():
    f = LinkCutForest(1)
    v = f.add_node()
    assert v == 1
    f.link(v, 0)
    assert f.depth(v) == 1


# -- randomized mirror against the reference ---------------------------------


def apply_random_ops(forest, ref, rng, steps, check_every=0):
    """Drive both structures with valid random link/cut ops; interleave
    query comparisons. Returns number of ops applied."""
    n = len(ref.parent)
    applied = 0
    for step in range(steps):
        roll = rng.below(10)
        if roll < 4:  # link
            roots = [v for v in range(n) if ref.parent[v] is None]
            c = roots[rng.below(len(roots))]
            others = [u for u in range(n) if ref.root(u) != c]
            if not others:
                continue
            p = others[rng.below(len(others))]
            forest.link(c, p)
            ref.link(c, p)
        elif roll < 6:  # cut
            nonroots = [v for v in range(n) if ref.parent[v] is not None]
            if not nonroots:
                continue
            c = nonroots[rng.below(len(nonroots))]
            forest.cut(c)
            ref.cut(c)
        else:  # queries
            v = rng.below(n)
            assert forest.find_root(v) == ref.root(v)
            assert forest.depth(v) == ref.depth(v)
            d = rng.below(ref.depth(v) + 1)
            assert forest.level_ancestor(v, d) == ref.level_ancestor(v, d)
            u = rng.below(n)
            if ref.root(u) == ref.root(v):
                assert forest.lca(u, v) == ref.lca(u, v)
        applied += 1
        if check_every and step % check_every == 0:
            assert forest.represented_parents() == ref.parent
    return applied


@pytest.mark.parametrize("seed", range(6))
def test_oracle_equivalence_seeded(seed):
    """Forests of <= 64 nodes under ~1000 random ops: all query results
    match the parent-array reference exactly."""
    n = 64
    forest = LinkCutForest(n)
    ref = NaiveForest(n)
    rng = SplitMix64(seed)
    apply_random_ops(forest, ref, rng, 1000, check_every=100)
    assert forest.represented_parents() == ref.parent


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(1, 12),
    script=st.lists(st.tuples(st.integers(0, 9), st.integers(0, 2**32)), max_size=40),
)
def test_mirrors_reference_forest(n, script):
    forest = LinkCutForest(n)
    ref = NaiveForest(n)
    for roll, pick in script:
        if roll < 4:
            roots = [v for v in range(n) if ref.parent[v] is None]
            c = roots[pick % len(roots)]
            others = [u for u in range(n) if ref.root(u) != c]
            if not others:
                continue
            p = others[(pick >> 8) % len(others)]
            forest.link(c, p)
            ref.link(c, p)
        elif roll < 6:
            nonroots = [v for v in range(n) if ref.parent[v] is not None]
            if not nonroots:
                continue
            c = nonroots[pick % len(nonroots)]
            forest.cut(c)
            ref.cut(c)
        else:
            v = pick % n
            assert forest.depth(v) == ref.depth(v)
            assert forest.find_root(v) == ref.root(v)
    assert forest.represented_parents() == ref.parent


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_inorder_depth_and_order_statistic_laws(seed):
    """After access(v): the splay tree holds exactly the root-to-v path in
    depth order, so each member's in-order index equals its depth."""
    n = 14
    forest = LinkCutForest(n)
    ref = NaiveForest(n)
    rng = SplitMix64(seed)
    apply_random_ops(forest, ref, rng, 60)
    for v in range(n):
        forest.access(v)
        inorder = forest._splay_inorder(v)
        assert inorder == ref.root_path(v)
        for idx, u in enumerate(inorder):
            assert ref.depth(u) == idx


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_queries_preserve_represented_structure(seed):
    n = 12
    forest = LinkCutForest(n)
    ref = NaiveForest(n)
    rng = SplitMix64(seed)
    apply_random_ops(forest, ref, rng, 50)
    before = forest.represented_parents()
    for v in range(n):
        forest.find_root(v)
        forest.depth(v)
        forest.level_ancestor(v, rng.below(ref.depth(v) + 1))
        u = rng.below(n)
        if ref.root(u) == ref.root(v):
            forest.lca(u, v)
    assert forest.represented_parents() == before


def test_amortized_rotation_bound():
    """Total rotations over m >> n random ops stay within C * m * lg n.

    C = 2.5 is a measured constant with ~2x headroom over what this
    workload actually produces; a regression that breaks the amortized
    behavior (e.g. splaying the wrong node) blows well past it.
    """
    n = 1024
    m = 10 * n
    forest = LinkCutForest(n)
    ref = NaiveForest(n)
    rng = SplitMix64(99)
    applied = apply_random_ops(forest, ref, rng, m)
    assert applied > 0.9 * m
    assert forest.rotations <= 2.5 * m * math.log2(n)
