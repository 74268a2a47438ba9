import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from graphburn import generators as gen
from graphburn.exact import CapacityError, burning_number_exact, decide_burning_exact
from graphburn.graph import Graph, find_forbidden_subgraph, is_split, verify_schedule
from graphburn.split import (
    classify_and_reduce,
    min_split_deletion_set,
    shortcut_check,
    shortcut_threshold,
    solve_split,
    split_decomposition,
    split_deletion_set,
)


def test_deletion_examples():
    s = split_deletion_set(gen.cycle(4), 1)
    assert len(s) == 1
    assert split_deletion_set(gen.star(4), 0) == []
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    s = split_deletion_set(two_k2, 1)
    assert len(s) == 1
    assert find_forbidden_subgraph(two_k2.remove_vertices(s)[0]) is None
    assert split_deletion_set(gen.cycle(4), 0) is None
    with pytest.raises(ValueError):
        split_deletion_set(gen.cycle(4), -1)


@given(graphs(max_n=8))
def test_min_deletion_leaves_split_graph(g):
    s = min_split_deletion_set(g)
    assert is_split(g.remove_vertices(s)[0])
    if s:
        assert split_deletion_set(g, len(s) - 1) is None


@given(graphs(max_n=9))
def test_decomposition_invariants(g):
    s = min_split_deletion_set(g)
    dec = split_decomposition(g, s)
    dec.check(g)


def test_twin_reduction_keeps_three():
    # S = {0}; vertices 1..5 all adjacent to 0 only, plus a clique 6-7 hanging off 0
    edges = [(0, v) for v in range(1, 6)] + [(6, 7), (0, 6)]
    g = Graph(8, edges)
    red = classify_and_reduce(g, [0])
    assert len(red.kept_indep_s) == 3 and len(red.removed) == 2
    assert burning_number_exact(red.graph)[0] == burning_number_exact(g)[0]


def test_reduction_without_indep_s_is_identity():
    g = gen.random_split_graph(7, seed=2, clique_size=3)
    red = classify_and_reduce(g, [])
    assert red.removed == () and red.graph == g


@given(graphs(max_n=9))
def test_reduction_bound_and_equivalence(g):
    s = min_split_deletion_set(g)
    red = classify_and_reduce(g, s)
    assert len(red.kept_indep_s) < 3 * 2 ** len(s)
    assert burning_number_exact(red.graph)[0] == burning_number_exact(g)[0]


def test_shortcut_examples():
    clique = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    g = Graph(8, clique + [(4, 0), (5, 1), (6, 1), (6, 2), (7, 3)])
    red = classify_and_reduce(g, [])
    assert shortcut_threshold(red) == 3
    sched = shortcut_check(red, 6)
    assert sched is not None and len(sched) == 6 and verify_schedule(g, sched)[0]
    red = classify_and_reduce(gen.path(9), split_deletion_set(gen.path(9), 3))
    assert shortcut_check(red, shortcut_threshold(red) - 1) is None


def test_shortcut_without_clique_side():
    g = Graph(5, [(0, 1), (0, 2), (0, 3)])  # S = {0} leaves K empty
    red = classify_and_reduce(g, [0])
    assert red.decomposition.clique == () and red.decomposition.indep_k == ()
    sched = shortcut_check(red, shortcut_threshold(red))
    assert sched is not None and verify_schedule(g, sched)[0]


def test_solve_examples():
    s = solve_split(gen.star(4), 2)
    assert s is not None and s[1] == 0
    g = gen.disjoint_union([gen.cycle(4), gen.path(1)])
    for k in range(1, 5):
        assert (solve_split(g, k) is not None) == (decide_burning_exact(g, k) is not None)
    assert solve_split(gen.path(3), 1) is None


def test_solve_uses_given_deletion_set():
    g = gen.path(9)
    s = solve_split(g, 3, deletion_set=[0, 2, 4])
    assert s is not None and verify_schedule(g, s)[0]
    with pytest.raises(CapacityError):
        solve_split(gen.cycle(5), 3, max_deletion=0)


@given(graphs(max_n=9), st.integers(1, 6))
def test_solve_matches_exact(g, k):
    got = solve_split(g, k)
    want = decide_burning_exact(g, k) is not None
    assert (got is not None) == want
    if got is not None:
        assert len(got) == k and verify_schedule(g, got)[0]
        isolated = [v for v in range(g.n) if g.degree(v) == 0]
        assert got[: len(isolated)] == isolated


@pytest.mark.parametrize("seed", range(40))
def test_split_plus_extras_matches_exact(seed):
    rng = random.Random(seed)
    base = gen.random_split_graph(rng.randint(4, 9), seed=seed)
    g = gen.add_random_vertices(base, rng.randint(0, 3), 0.4, seed=seed)
    bn = burning_number_exact(g)[0]
    for k in range(max(1, bn - 1), bn + 2):
        assert (solve_split(g, k) is not None) == (k >= bn)
