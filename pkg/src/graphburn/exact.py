"""Exact solvers: branch-and-bound over schedules and the Set Cover encoding route."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import _kernels
from .graph import Graph, component_lists, popcount

SET_COVER_MAX_UNIVERSE = 30


class CapacityError(RuntimeError):
    """Instance exceeds a hard size cap of an exponential-space routine."""


@dataclass
class SetCoverInstance:
    universe_size: int
    sets: list[int]
    budget: int
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        universe = (1 << self.universe_size) - 1
        for idx, s in enumerate(self.sets):
            if s & ~universe:
                raise ValueError(f"set {idx} has elements outside the universe")

    @property
    def universe(self) -> int:
        return (1 << self.universe_size) - 1

    def is_cover(self, chosen) -> bool:
        covered = 0
        for idx in chosen:
            covered |= self.sets[idx]
        return covered == self.universe


def set_cover_exact(inst: SetCoverInstance) -> list[int] | None:
    """Indices of a minimum-cardinality cover if it fits the budget, else ``None``."""
    if inst.universe_size > SET_COVER_MAX_UNIVERSE:
        raise CapacityError(
            f"Set Cover universe of {inst.universe_size} elements exceeds the cap of "
            f"{SET_COVER_MAX_UNIVERSE}"
        )
    return _kernels.set_cover(list(inst.sets), inst.universe, inst.budget)


def _require_k(g: Graph, k: int) -> None:
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        raise ValueError("graph has no vertices")


def decide_burning_exact(g: Graph, k: int) -> list[int] | None:
    """A burning schedule of length exactly ``k``, or ``None`` if none exists.

    Centers are fixed from the largest radius down. At each level only
    vertices covering something new are tried, most-covering first, and a
    candidate whose new coverage is contained in an earlier candidate's is
    skipped. Levels left over once the graph is burned get vertex 0.
    """
    _require_k(g, k)
    balls = [g.balls(r) for r in range(k - 1, -1, -1)]
    chosen = _kernels.cover_search(balls, g.full_mask)
    if chosen is None:
        return None
    schedule = [0] * k
    for level, v in enumerate(chosen):
        if v >= 0:
            schedule[k - 1 - level] = v
    return schedule


def ball_size_lower_bound(g: Graph) -> int:
    """Smallest k whose best-case ball sizes could add up to n."""
    far = int(g.distance_matrix.max())
    total = 0
    k = 0
    while total < g.n:
        size = max(popcount(b) for b in g.balls(min(k, far)))
        if k >= far:
            # balls stop growing past the largest finite distance
            return max(k + -(-(g.n - total) // size), 1)
        total += size
        k += 1
    return max(k, 1)


def burning_number_exact(g: Graph) -> tuple[int, list[int]]:
    from .approx import approx_burn

    if g.n == 0:
        raise ValueError("graph has no vertices")
    lower = max(len(component_lists(g)), ball_size_lower_bound(g))
    upper, fallback = approx_burn(g)
    for k in range(lower, upper):
        schedule = decide_burning_exact(g, k)
        if schedule is not None:
            return k, schedule
    return upper, fallback


def encode_burning_as_set_cover(g: Graph, k: int) -> SetCoverInstance:
    """Universe = vertices (bits 0..n-1) plus indices (bits n..n+k-1); one set per (v, i)."""
    _require_k(g, k)
    sets = []
    labels = []
    for i in range(k):
        row = g.balls(i)
        for v in range(g.n):
            sets.append(row[v] | 1 << (g.n + i))
            labels.append((v, i))
    return SetCoverInstance(universe_size=g.n + k, sets=sets, budget=k, labels=labels)


def decide_burning_via_set_cover(g: Graph, k: int) -> list[int] | None:
    inst = encode_burning_as_set_cover(g, k)
    chosen = set_cover_exact(inst)
    if chosen is None:
        return None
    schedule: list[int | None] = [None] * k
    for idx in chosen:
        v, i = inst.labels[idx]
        schedule[i] = v
    return [0 if v is None else v for v in schedule]


def all_burning_schedules(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Every length-``k`` burning schedule (exhaustive; desk-scale only)."""
    _require_k(g, k)
    balls = [g.balls(r) for r in range(k)]
    best = [max(popcount(b) for b in balls[r]) for r in range(k)]
    # reach[r]: coverage still attainable by radii 0..r-1
    reach = [0] * (k + 1)
    for r in range(k):
        reach[r + 1] = reach[r] + best[r]
    picks = [0] * k

    def rec(r: int, uncovered: int) -> Iterator[tuple[int, ...]]:
        if r < 0:
            if uncovered == 0:
                yield tuple(picks)
            return
        if popcount(uncovered) > reach[r + 1]:
            return
        for v in range(g.n):
            picks[r] = v
            yield from rec(r - 1, uncovered & ~balls[r][v])

    yield from rec(k - 1, g.full_mask)
