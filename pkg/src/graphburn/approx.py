"""Factor-3 approximation via greedy separated sets.

If ``t + 1`` vertices are pairwise more than ``2t`` apart, no two of them can
share a center among radii ``0..t-1``, so the burning number exceeds ``t``.
Otherwise the greedy scan leaves at most ``t`` centers whose radius-``2t``
balls cover the graph, and placing them at indices ``>= 2t`` of a length-``3t``
schedule burns everything.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graph import Graph, component_lists, verify_schedule


@dataclass(frozen=True)
class ProbeResult:
    accepted: bool
    t: int
    centers: tuple[int, ...]  # cover centers on accept, separated witness on reject


def separated_set_probe(g: Graph, t: int) -> ProbeResult:
    if t < 1:
        raise ValueError("t must be at least 1")
    indptr, indices = g.csr
    found = _kernels.separated_set(indptr, indices, g.n, 2 * t, t + 1)
    return ProbeResult(accepted=len(found) <= t, t=t, centers=tuple(found))


def schedule_from_probe(probe: ProbeResult) -> list[int]:
    """Length-``3t`` schedule with the accepted centers at indices ``3t-1, 3t-2, ...``."""
    if not probe.accepted:
        raise ValueError("rejected probe has no schedule")
    length = 3 * probe.t
    schedule = [0] * length
    for j, c in enumerate(probe.centers):
        schedule[length - 1 - j] = c
    return schedule


def approx_burn(g: Graph) -> tuple[int, list[int]]:
    """``(3t*, schedule)`` for the smallest accepted ``t*``; within 3x of optimal."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    t = max(1, len(component_lists(g)))
    while True:
        probe = separated_set_probe(g, t)
        if probe.accepted:
            schedule = schedule_from_probe(probe)
            ok, uncovered = verify_schedule(g, schedule)
            if not ok:  # pragma: no cover - would be a kernel bug
                raise AssertionError(f"approximate schedule leaves {uncovered} unburned")
            return len(schedule), schedule
        t += 1
