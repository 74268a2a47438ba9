"""Graph Burning parameterized by distance to split graphs.

Pipeline: find a minimum split-deletion set ``S``; split ``G - S`` into a
clique ``K`` and independent ``I = I_K + I_S + I_empty``; keep three
representatives of each twin class in ``I_S``; pin the isolated vertices to
the first indices; guess where ``S`` and the kept ``I_S`` vertices sit in the
remaining slots; then complete the vacant slots from ``K + I_K`` either by
brute force (at most three slots) or by guessing the highest one and solving
the rest as Set Cover.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .exact import SET_COVER_MAX_UNIVERSE, CapacityError, SetCoverInstance, set_cover_exact
from .graph import (
    Graph,
    bits,
    find_forbidden_subgraph,
    greedy_split_partition,
    popcount,
    to_mask,
    verify_schedule,
)


def split_deletion_set(g: Graph, budget: int) -> list[int] | None:
    """A set ``S`` with ``|S| <= budget`` and ``G - S`` split, via the 5-way search tree."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    failed: set[frozenset[int]] = set()

    def rec(deleted: frozenset[int], left: int) -> frozenset[int] | None:
        if deleted in failed:
            return None
        h, old = g.remove_vertices(deleted)
        occ = find_forbidden_subgraph(h)
        if occ is None:
            return deleted
        if left > 0:
            for v in occ.vertices:
                found = rec(deleted | {old[v]}, left - 1)
                if found is not None:
                    return found
        failed.add(deleted)
        return None

    found = rec(frozenset(), budget)
    return None if found is None else sorted(found)


def min_split_deletion_set(g: Graph, max_budget: int | None = None) -> list[int] | None:
    """Minimum split-deletion set by trying budgets 0, 1, 2, ...; ``None`` past ``max_budget``."""
    limit = g.n if max_budget is None else max_budget
    for d in range(limit + 1):
        found = split_deletion_set(g, d)
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class SplitDecomposition:
    deletion_set: tuple[int, ...]
    clique: tuple[int, ...]
    indep_k: tuple[int, ...]
    indep_s: tuple[int, ...]
    indep_empty: tuple[int, ...]

    def check(self, g: Graph) -> None:
        """Raise ``AssertionError`` if any partition invariant fails."""
        parts = [self.deletion_set, self.clique, self.indep_k, self.indep_s, self.indep_empty]
        everything = [v for part in parts for v in part]
        assert sorted(everything) == list(range(g.n)), "parts do not partition V"
        smask = to_mask(self.deletion_set)
        kmask = to_mask(self.clique)
        for a in self.clique:
            assert kmask & ~(1 << a) & ~g.neighbor_bitsets[a] == 0, "K is not a clique"
        indep = to_mask(self.indep_k + self.indep_s + self.indep_empty)
        for v in bits(indep):
            assert g.neighbor_bitsets[v] & indep == 0, "I is not independent"
        for v in self.indep_empty:
            assert g.degree(v) == 0
        for v in self.indep_s:
            nb = g.neighbor_bitsets[v]
            assert nb and nb & ~smask == 0
        for v in self.indep_k:
            assert g.neighbor_bitsets[v] & kmask


@dataclass(frozen=True)
class ReducedSplit:
    """Output of :func:`classify_and_reduce`.

    ``graph`` is ``G`` minus the surplus twins, with ``to_original`` mapping
    its vertex ids back; ``kept_indep_s`` lists the surviving ``I_S`` vertices
    (original ids) and ``decomposition`` describes the unreduced graph.
    """

    decomposition: SplitDecomposition
    graph: Graph
    to_original: tuple[int, ...]
    kept_indep_s: tuple[int, ...]
    removed: tuple[int, ...]


def split_decomposition(g: Graph, deletion_set) -> SplitDecomposition:
    s = sorted(set(deletion_set))
    h, old = g.remove_vertices(s)
    k_local, i_local = greedy_split_partition(h)
    clique = [old[v] for v in k_local]
    indep = [old[v] for v in i_local]
    if len(clique) == 1 and g.degree(clique[0]) == 0:
        # an isolated vertex belongs with the other isolated ones
        indep = sorted(indep + clique)
        clique = []
    smask = to_mask(s)
    kmask = to_mask(clique)
    indep_empty = [v for v in indep if g.degree(v) == 0]
    indep_s = [v for v in indep if g.degree(v) > 0 and g.neighbor_bitsets[v] & ~smask == 0]
    indep_k = [v for v in indep if g.neighbor_bitsets[v] & kmask]
    return SplitDecomposition(
        tuple(s), tuple(clique), tuple(indep_k), tuple(indep_s), tuple(indep_empty)
    )


def classify_and_reduce(g: Graph, deletion_set) -> ReducedSplit:
    """Decompose and keep at most three (smallest-id) vertices per twin class of ``I_S``."""
    dec = split_decomposition(g, deletion_set)
    classes: dict[int, list[int]] = {}
    for v in dec.indep_s:
        classes.setdefault(g.neighbor_bitsets[v], []).append(v)
    kept: list[int] = []
    removed: list[int] = []
    for members in classes.values():
        kept.extend(members[:3])
        removed.extend(members[3:])
    reduced, old = g.remove_vertices(removed)
    return ReducedSplit(dec, reduced, tuple(old), tuple(sorted(kept)), tuple(sorted(removed)))


def shortcut_threshold(red: ReducedSplit) -> int:
    dec = red.decomposition
    return 3 + len(dec.deletion_set) + len(red.kept_indep_s) + len(dec.indep_empty)


def shortcut_check(red: ReducedSplit, k: int) -> list[int] | None:
    """Direct schedule when ``k >= 3 + |S| + |I*_S| + |I_empty|``; ``None`` means continue.

    Isolated vertices take the lowest indices, then ``S`` and the kept
    ``I_S`` vertices, and ``K + I_K`` gets the top three indices with a
    clique vertex last: from a clique vertex every ``I_K`` vertex is at most
    two steps away, and the top index is at least 2.
    """
    if k < shortcut_threshold(red):
        return None
    dec = red.decomposition
    head = list(dec.indep_empty) + list(dec.deletion_set) + list(red.kept_indep_s)
    schedule = head + [head[0] if head else dec.clique[0]] * (k - len(head))
    if dec.clique:
        rest = [v for v in sorted(dec.clique[1:] + dec.indep_k)][:2]
        picks = rest[::-1] + [dec.clique[0]]
        schedule[k - len(picks):] = picks
    return schedule


def _complete_small(balls_by_slot, slots, candidates: int, uncovered: int):
    """Exhaustive completion of up to three vacant slots from ``candidates``."""
    order = sorted(slots, reverse=True)
    rows = [[b if candidates >> v & 1 else 0 for v, b in enumerate(balls_by_slot[i])] for i in order]
    chosen = _kernels.cover_search(rows, uncovered)
    if chosen is None:
        return None
    first = (candidates & -candidates).bit_length() - 1
    return {i: (v if v >= 0 else first) for i, v in zip(order, chosen)}


def _complete_by_set_cover(balls_by_slot, slots, candidates: int, full: int, covered: int):
    """Guess the top vacant slot's vertex, then cover the rest as Set Cover."""
    top = max(slots)
    rest = sorted(set(slots) - {top})
    first = (candidates & -candidates).bit_length() - 1
    for v in bits(candidates):
        top_ball = balls_by_slot[top][v]
        if candidates & ~top_ball:
            # cannot happen for top >= 3 on a connected split graph
            continue
        uncovered = full & ~(covered | top_ball)
        if uncovered == 0:
            assignment = {i: first for i in rest}
            assignment[top] = v
            return assignment
        elems = bits(uncovered)
        pos = {u: j for j, u in enumerate(elems)}
        size = len(elems) + len(rest)
        if size > SET_COVER_MAX_UNIVERSE:
            raise CapacityError(f"residual Set Cover universe {size} exceeds the cap")
        sets, labels = [], []
        for slot_pos, i in enumerate(rest):
            slot_bit = 1 << (len(elems) + slot_pos)
            for w in bits(candidates):
                part = balls_by_slot[i][w] & uncovered
                sets.append(sum(1 << pos[u] for u in bits(part)) | slot_bit)
                labels.append((w, i))
        inst = SetCoverInstance(size, sets, len(rest), labels)
        picked = set_cover_exact(inst)
        if picked is not None:
            assignment = {i: first for i in rest}
            for idx in picked:
                w, i = labels[idx]
                assignment[i] = w
            assignment[top] = v
            return assignment
    return None


def solve_split(
    g: Graph,
    k: int,
    deletion_set=None,
    max_deletion: int | None = None,
) -> list[int] | None:
    """Decide ``bn(g) <= k``; returns a verified schedule or ``None``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if deletion_set is None:
        deletion_set = min_split_deletion_set(g, max_deletion)
        if deletion_set is None:
            raise CapacityError(f"distance to split graphs exceeds {max_deletion}")
    red = classify_and_reduce(g, deletion_set)
    dec = red.decomposition
    isolated = list(dec.indep_empty)
    offset = len(isolated)
    if k < offset:
        return None
    shortcut = shortcut_check(red, k)
    if shortcut is not None:
        return _finish(g, shortcut)

    # G': reduced graph without the isolated vertices
    new_of = {old: new for new, old in enumerate(red.to_original)}
    core, core_old = red.graph.remove_vertices(new_of[v] for v in isolated)
    to_orig = [red.to_original[v] for v in core_old]
    if core.n == 0:
        return _finish(g, isolated + [isolated[0]] * (k - offset))
    local = {v: i for i, v in enumerate(to_orig)}
    guess_pool = sorted(local[v] for v in dec.deletion_set + red.kept_indep_s)
    candidates = to_mask(local[v] for v in dec.clique + dec.indep_k)
    slots = list(range(k - 1, offset - 1, -1))
    balls = {i: core.balls(i) for i in slots}
    best = {i: max(popcount(b) for b in balls[i]) for i in slots}
    reach = {}
    acc = 0
    for i in reversed(slots):
        acc += best[i]
        reach[i] = acc
    full = core.full_mask
    assignment: dict[int, int] = {}
    leaf_seen: set[tuple[tuple[int, ...], int]] = set()

    def leaf(covered: int, vacant: list[int]) -> dict[int, int] | None:
        key = (tuple(vacant), covered)
        if key in leaf_seen:
            return None
        leaf_seen.add(key)
        uncovered = full & ~covered
        if not vacant:
            return {} if uncovered == 0 else None
        if candidates == 0:
            return {i: guess_pool[0] for i in vacant} if uncovered == 0 else None
        if len(vacant) <= 3:
            return _complete_small(balls, vacant, candidates, uncovered)
        return _complete_by_set_cover(balls, vacant, candidates, full, covered)

    def rec(pos: int, covered: int, vacant: list[int], spare: int) -> dict[int, int] | None:
        # spare: best-case coverage still owed to the vacant slots above
        if pos == len(slots):
            return leaf(covered, vacant)
        i = slots[pos]
        if popcount(full & ~covered) > reach[i] + spare:
            return None
        for v in guess_pool:
            assignment[i] = v
            found = rec(pos + 1, covered | balls[i][v], vacant, spare)
            if found is not None:
                return found
        assignment.pop(i, None)
        vacant.append(i)
        found = rec(pos + 1, covered, vacant, spare + best[i])
        vacant.pop()
        return found

    fill = rec(0, 0, [], 0)
    if fill is None:
        return None
    schedule = list(isolated)
    for i in range(offset, k):
        v = assignment.get(i, fill.get(i))
        schedule.append(to_orig[v])
    return _finish(g, schedule)


def _finish(g: Graph, schedule: list[int]) -> list[int]:
    ok, uncovered = verify_schedule(g, schedule)
    if not ok:  # pragma: no cover - would contradict the reduction
        raise AssertionError(f"split pipeline produced a schedule missing {uncovered}")
    return schedule
