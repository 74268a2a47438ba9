import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import brute_decide, brute_disjoint
from graphburn import generators as gen
from graphburn.components import (
    MAX_TRIALS,
    DisjointSetsInstance,
    build_disjoint_sets,
    default_trials,
    disjoint_sets_color_coding,
    disjoint_sets_exact,
    phi_check,
    solve_by_components,
)
from graphburn.exact import decide_burning_exact
from graphburn.graph import connected_components, verify_schedule


def _covers(g, centers):
    return all(any(g.distance_matrix[b, u] >= 0 and g.distance_matrix[b, u] <= i
                   for i, b in centers.items()) for u in range(g.n))


def test_phi_examples():
    assert phi_check(gen.path(5), {2}) == {2: 2}
    assert phi_check(gen.path(5), {1}) is None
    got = phi_check(gen.complete(3), {0, 1})
    assert got is not None and _covers(gen.complete(3), got)


def test_phi_rejects_bad_radii():
    with pytest.raises(ValueError):
        phi_check(gen.path(3), set())


@given(graphs(max_n=7), st.sets(st.integers(0, 3), min_size=1, max_size=3))
def test_phi_matches_brute_force(g, radii):
    from itertools import product

    order = sorted(radii)
    expected = any(
        _covers(g, dict(zip(order, choice))) for choice in product(range(g.n), repeat=len(order))
    )
    got = phi_check(g, radii)
    assert (got is not None) == expected
    if got is not None:
        assert _covers(g, got)


def test_build_examples():
    g = gen.disjoint_union([gen.path(3), gen.path(3), gen.path(3)])
    d = connected_components(g)
    inst = build_disjoint_sets(d, g, 4)
    assert (d.p, d.d_max, inst.t) == (3, 2, 1)
    inst = build_disjoint_sets(d, g, 3)
    assert inst.t == 2 == d.d_max
    g = gen.empty(3)
    d = connected_components(g)
    inst = build_disjoint_sets(d, g, 3)
    assert d.d_max == 0 and inst.t == 0 and inst.members == []
    with pytest.raises(ValueError):
        build_disjoint_sets(d, g, 2)


def test_family_members_well_formed():
    g = gen.disjoint_union([gen.path(4), gen.cycle(5), gen.complete(2)])
    d = connected_components(g)
    inst = build_disjoint_sets(d, g, 5)
    assert inst.t <= d.d_max
    for mask, (q, radii, centers) in zip(inst.members, inst.provenance):
        tokens = mask >> d.d_max
        assert tokens == 1 << q
        assert mask & ((1 << d.d_max) - 1) == sum(1 << i for i in radii)
        for i, v in centers.items():
            assert d.component_of[v] == q


def test_minimal_family_is_subset_closed_core():
    g = gen.disjoint_union([gen.path(4), gen.path(5)])
    d = connected_components(g)
    full = build_disjoint_sets(d, g, 5)
    small = build_disjoint_sets(d, g, 5, minimal=True)
    assert set(small.members) <= set(full.members)
    assert (disjoint_sets_exact(full) is None) == (disjoint_sets_exact(small) is None)


def test_threads_do_not_change_family():
    g = gen.disjoint_union([gen.path(4), gen.cycle(5), gen.path(3)])
    d = connected_components(g)
    assert build_disjoint_sets(d, g, 5).members == build_disjoint_sets(d, g, 5, threads=4).members


def test_disjoint_exact_examples():
    a, b, c = 1, 2, 4
    inst = DisjointSetsInstance(0, 0, [a, b, a | b], 2)
    assert disjoint_sets_exact(inst) == [0, 1]
    assert disjoint_sets_exact(DisjointSetsInstance(0, 0, [a], 0)) == []
    assert disjoint_sets_exact(DisjointSetsInstance(0, 0, [a | b, b | c], 2)) is None


@given(st.lists(st.integers(1, 63), max_size=7), st.integers(0, 3))
def test_disjoint_exact_matches_brute_force(members, t):
    inst = DisjointSetsInstance(6, 0, members, t)
    got = disjoint_sets_exact(inst)
    assert (got is not None) == brute_disjoint(members, t)
    if got is not None:
        assert inst.is_solution(got)


@given(st.lists(st.integers(1, 63), min_size=1, max_size=7), st.integers(1, 3), st.integers(0, 50))
def test_color_coding_is_one_sided(members, t, seed):
    inst = DisjointSetsInstance(6, 0, members, t)
    got = disjoint_sets_color_coding(inst, trials=20, seed=seed)
    if got is not None:
        assert inst.is_solution(got)
    if not brute_disjoint(members, t):
        assert got is None


def test_color_coding_examples():
    inst = DisjointSetsInstance(4, 0, [3, 12], 1)
    assert disjoint_sets_color_coding(inst, trials=1) == [0]
    assert disjoint_sets_color_coding(DisjointSetsInstance(2, 0, [1, 2], 2), seed=3) == [0, 1]
    assert disjoint_sets_color_coding(DisjointSetsInstance(3, 0, [3, 6], 2)) is None
    with pytest.raises(ValueError):
        disjoint_sets_color_coding(DisjointSetsInstance(2, 0, [1, 2], 2), trials=0)


def test_color_coding_is_seed_deterministic():
    inst = DisjointSetsInstance(6, 0, [3, 12, 48, 5, 10, 20, 40], 3)
    runs = {tuple(disjoint_sets_color_coding(inst, trials=50, seed=9) or ()) for _ in range(3)}
    assert len(runs) == 1


def test_default_trials():
    assert default_trials(DisjointSetsInstance(0, 0, [1], 1)) == 13  # ceil(e * ln 100)
    assert default_trials(DisjointSetsInstance(0, 0, [2**20 - 1], 3)) == MAX_TRIALS


def test_solve_examples():
    assert solve_by_components(gen.empty(4), 3) is None
    s = solve_by_components(gen.empty(4), 4)
    assert sorted(s) == [0, 1, 2, 3]
    g = gen.disjoint_union([gen.path(3), gen.path(3), gen.path(1)])
    s = solve_by_components(g, 3)
    assert s is not None and verify_schedule(g, s)[0]


@given(graphs(max_n=8), st.integers(1, 6), st.sampled_from(["exact", "colorcoding"]))
def test_solve_matches_exact(g, k, solver):
    got = solve_by_components(g, k, ds_solver=solver, seed=1)
    want = decide_burning_exact(g, k) is not None
    if got is not None:
        assert len(got) == k and verify_schedule(g, got)[0]
        assert want
    elif solver == "exact":
        assert not want


def test_solve_rejects_unknown_solver():
    g = gen.disjoint_union([gen.path(3), gen.path(3)])
    with pytest.raises(ValueError):
        solve_by_components(g, 3, ds_solver="nope")


def test_disjoint_union_of_paths_matches_brute_force():
    g = gen.disjoint_union([gen.path(2), gen.path(3), gen.path(1)])
    for k in range(1, 5):
        assert (solve_by_components(g, k) is not None) == brute_decide(g, k)


def test_color_coding_rejects_members_outside_universe():
    with pytest.raises(ValueError):
        disjoint_sets_color_coding(DisjointSetsInstance(1, 0, [1, 4], 2), trials=1)
