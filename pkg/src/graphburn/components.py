"""Burning disconnected graphs through a Disjoint Sets instance.

A component that receives a center at an index ``>= d_max`` is burned
entirely, so only indices ``0..d_max-1`` need real planning: a family member
``I + {c_q}`` says the radii in ``I`` alone can burn component ``q``. The
instance is YES iff ``t = p - k + d_max`` pairwise-disjoint members exist.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .exact import decide_burning_exact
from .graph import ComponentDecomposition, Graph, connected_components, popcount, verify_schedule

MAX_TRIALS = 10**6


def phi_check(component: Graph, radii) -> dict[int, int] | None:
    """Centers ``{i: b_i}`` whose balls ``N_i[b_i]`` (``i`` in ``radii``) cover ``component``."""
    order = sorted(set(radii), reverse=True)
    if not order:
        raise ValueError("radius set must be nonempty")
    if order[-1] < 0:
        raise ValueError("radii must be non-negative")
    balls = [component.balls(r) for r in order]
    chosen = _kernels.cover_search(balls, component.full_mask)
    if chosen is None:
        return None
    return {r: max(v, 0) for r, v in zip(order, chosen)}


@dataclass
class DisjointSetsInstance:
    """Universe bits ``0..d_max-1`` are radius indices, bit ``d_max + q`` is component token ``c_q``."""

    d_max: int
    p: int
    members: list[int]
    t: int
    provenance: list[tuple[int, tuple[int, ...], dict[int, int]]] = field(default_factory=list)

    @property
    def universe_size(self) -> int:
        return self.d_max + self.p

    def max_member_size(self) -> int:
        return max((popcount(m) for m in self.members), default=0)

    def is_solution(self, picked) -> bool:
        if len(picked) != max(self.t, 0) or len(set(picked)) != len(picked):
            return False
        used = 0
        for idx in picked:
            if self.members[idx] & used:
                return False
            used |= self.members[idx]
        return True


def _radius_subsets(d_max: int):
    for size in range(1, d_max + 1):
        yield from combinations(range(d_max), size)


def build_disjoint_sets(
    decomp: ComponentDecomposition,
    g: Graph,
    k: int,
    minimal: bool = False,
    threads: int = 1,
) -> DisjointSetsInstance:
    p, d_max = decomp.p, decomp.d_max
    if k < p:
        raise ValueError(f"k={k} is below the component count {p}")
    if d_max >= k:
        raise ValueError(f"d_max={d_max} must be below k={k}")
    subs = [g.induced_subgraph(c) for c in decomp.components]
    tasks = [(q, radii) for q in range(p) for radii in _radius_subsets(d_max)]

    inst = DisjointSetsInstance(d_max=d_max, p=p, members=[], t=p - k + d_max)

    def add(q, radii, centers):
        old = subs[q][1]
        inst.members.append(sum(1 << i for i in radii) | 1 << (d_max + q))
        inst.provenance.append((q, radii, {i: old[v] for i, v in centers.items()}))

    if minimal:
        feasible: list[list[int]] = [[] for _ in range(p)]
        for q, radii in tasks:
            rmask = sum(1 << i for i in radii)
            if any(f & rmask == f for f in feasible[q]):
                continue
            centers = phi_check(subs[q][0], radii)
            if centers is not None:
                feasible[q].append(rmask)
                add(q, radii, centers)
        return inst

    def run(task):
        q, radii = task
        return phi_check(subs[q][0], radii)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(task) for task in tasks]
    for (q, radii), centers in zip(tasks, results):
        if centers is not None:
            add(q, radii, centers)
    return inst


def disjoint_sets_exact(inst: DisjointSetsInstance) -> list[int] | None:
    """Exhaustive search for ``t`` pairwise-disjoint members (indices ascending)."""
    t = inst.t
    if t <= 0:
        return []
    members = inst.members
    failed: set[tuple[int, int, int]] = set()
    picked: list[int] = []

    def rec(start: int, used: int, need: int) -> bool:
        if need == 0:
            return True
        if len(members) - start < need or (start, used, need) in failed:
            return False
        for idx in range(start, len(members)):
            if members[idx] & used:
                continue
            picked.append(idx)
            if rec(idx + 1, used | members[idx], need - 1):
                return True
            picked.pop()
        failed.add((start, used, need))
        return False

    return list(picked) if rec(0, 0, t) else None


def default_trials(inst: DisjointSetsInstance) -> int:
    """``ceil(e^r ln 100)`` capped at 10^6, with ``r = t * max member size``."""
    r = max(inst.t, 0) * inst.max_member_size()
    if r > math.log(MAX_TRIALS):
        return MAX_TRIALS
    return min(MAX_TRIALS, math.ceil(math.exp(r) * math.log(100)))


def disjoint_sets_color_coding(
    inst: DisjointSetsInstance, trials: int | None = None, seed: int = 0
) -> list[int] | None:
    """One-sided color-coding search; any returned selection is checked disjoint."""
    t = inst.t
    if t <= 0:
        return []
    if not inst.members:
        return None
    if t == 1:
        return [0]
    if trials is None:
        trials = default_trials(inst)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    colors = t * inst.max_member_size()
    picked = _kernels.color_coding(inst.members, inst.universe_size, t, colors, trials, seed)
    if picked is None:
        return None
    if not inst.is_solution(picked):  # pragma: no cover - would be a kernel bug
        raise AssertionError(f"color coding returned overlapping members {picked}")
    return sorted(picked)


def solve_by_components(
    g: Graph,
    k: int,
    ds_solver: str = "exact",
    trials: int | None = None,
    seed: int = 0,
    minimal: bool = False,
    threads: int = 1,
) -> list[int] | None:
    """Decide ``bn(g) <= k`` via the Disjoint Sets reduction; returns a verified schedule.

    With ``ds_solver="colorcoding"`` a ``None`` answer may be a false negative.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        raise ValueError("graph has no vertices")
    decomp = connected_components(g)
    p, d_max = decomp.p, decomp.d_max
    if k < p:
        return None
    if d_max >= k:
        return decide_burning_exact(g, k)

    schedule: list[int | None] = [None] * k
    burned: set[int] = set()
    t = p - k + d_max
    if t > 0:
        inst = build_disjoint_sets(decomp, g, k, minimal=minimal, threads=threads)
        if ds_solver == "exact":
            picked = disjoint_sets_exact(inst)
        elif ds_solver == "colorcoding":
            picked = disjoint_sets_color_coding(inst, trials=trials, seed=seed)
        else:
            raise ValueError(f"unknown Disjoint Sets solver {ds_solver!r}")
        if picked is None:
            return None
        for idx in picked:
            q, _, centers = inst.provenance[idx]
            burned.add(q)
            for i, v in centers.items():
                schedule[i] = v
    rest = [q for q in range(p) if q not in burned]
    # indices d_max..k-1 are exactly enough for the unburned components
    for offset, q in enumerate(rest):
        schedule[d_max + offset] = decomp.components[q][0]
    out = [0 if v is None else v for v in schedule]
    ok, uncovered = verify_schedule(g, out)
    if not ok:  # pragma: no cover - would contradict the reduction
        raise AssertionError(f"assembled schedule leaves {uncovered} unburned")
    return out
