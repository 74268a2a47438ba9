"""Graph representation, distances, balls, components and split recognition."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

INF = math.inf
MAX_VERTICES = 16384


class GraphError(ValueError):
    """Malformed graph input (self-loop, duplicate edge, bad vertex id)."""


def bits(mask: int) -> list[int]:
    """Vertex ids set in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Immutable after construction. Keeps sorted adjacency lists and a CSR
    copy; neighbour bitsets (Python ints), the all-pairs distance matrix and
    per-radius ball bitsets are computed lazily and cached.
    """

    __slots__ = ("n", "adjacency", "_balls", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        u, v = arr[:, 0], arr[:, 1]
        bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n))
        if bad.size:
            a, b = arr[bad[0]]
            raise GraphError(f"edge ({a}, {b}) references a vertex outside 0..{n - 1}")
        loops = np.flatnonzero(u == v)
        if loops.size:
            raise GraphError(f"self-loop at vertex {u[loops[0]]}")
        keys = np.minimum(u, v) * n + np.maximum(u, v)
        uniq, first = np.unique(keys, return_index=True)
        if uniq.size != keys.size:
            dup = np.setdiff1d(np.arange(keys.size), first)[0]
            raise GraphError(f"duplicate edge ({u[dup]}, {v[dup]})")
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int32)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indices = dst[order].astype(np.int32)
        flat = indices.tolist()
        cut = indptr.tolist()
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(flat[cut[i] : cut[i + 1]]) for i in range(n)
        )
        self.__dict__["csr"] = (indptr, indices)
        self._balls: dict[int, tuple[int, ...]] = {}

    @cached_property
    def neighbor_bitsets(self) -> tuple[int, ...]:
        return tuple(to_mask(a) for a in self.adjacency)

    @classmethod
    def from_adjacency_sets(cls, nbrs: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, s in enumerate(nbrs) for v in s if u < v]
        return cls(len(nbrs), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_bitsets[u] >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` int32 arrays; neighbours of ``v`` are sorted."""
        return self.__dict__["csr"]

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances as int32, ``-1`` for unreachable pairs."""
        indptr, indices = self.csr
        return _kernels.all_pairs_bfs(indptr, indices, self.n)

    def balls(self, radius: int) -> tuple[int, ...]:
        """``N_radius[v]`` as a bitset, for every vertex ``v``."""
        if radius < 0:
            raise ValueError("radius must be non-negative")
        cached = self._balls.get(radius)
        if cached is None:
            if self.n == 0:
                cached = ()
            else:
                dist = self.distance_matrix
                inside = (dist >= 0) & (dist <= radius)
                packed = np.packbits(inside, axis=1, bitorder="little")
                cached = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)
            self._balls[radius] = cached
        return cached

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``vertices`` relabelled to ``0..len-1``, plus the new->old map."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [
            (new_of[u], new_of[w]) for u in old for w in self.adjacency[u] if w in new_of and u < w
        ]
        return Graph(len(old), edges), old

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get ``INF``."""
    _check_vertex(g, source)
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def ball(g: Graph, v: int, d: int) -> int:
    """Closed ball ``N_d[v]`` as a vertex bitset."""
    _check_vertex(g, v)
    if d < 0:
        raise ValueError("radius must be non-negative")
    seen = 1 << v
    frontier = [v]
    for _ in range(d):
        nxt = []
        for u in frontier:
            fresh = g.neighbor_bitsets[u] & ~seen
            if fresh:
                seen |= fresh
                nxt.extend(bits(fresh))
        if not nxt:
            break
        frontier = nxt
    return seen


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    diameters: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def d_max(self) -> int:
        return max(self.diameters, default=0)


def component_lists(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest member."""
    if g.n == 0:
        return []
    labels = _kernels.component_labels(*g.csr, g.n)
    order = np.argsort(labels, kind="stable")
    cuts = np.flatnonzero(np.diff(labels[order])) + 1
    return [part.tolist() for part in np.split(order, cuts)]


def connected_components(g: Graph) -> ComponentDecomposition:
    """Components with exact diameters (max eccentricity over all sources)."""
    comps = component_lists(g)
    component_of = [0] * g.n
    for q, members in enumerate(comps):
        for v in members:
            component_of[v] = q
    diameters = []
    for members in comps:
        if len(members) == 1:
            diameters.append(0)
            continue
        sub, _ = g.induced_subgraph(members)
        diameters.append(int(sub.distance_matrix.max()))
    return ComponentDecomposition(
        tuple(tuple(c) for c in comps), tuple(component_of), tuple(diameters)
    )


def _fire(g: Graph, centers: Sequence[int]) -> np.ndarray:
    for b in centers:
        _check_vertex(g, b)
    return _kernels.fire(*g.csr, g.n, [int(b) for b in centers])


def burned_mask(g: Graph, centers: Sequence[int]) -> int:
    """Vertices burned by the schedule: union of ``N_i[centers[i]]``.

    Runs the fire forward (multi-source BFS keyed by remaining radius), so it
    costs O(n + m + k) and never builds the distance matrix.
    """
    burned = _fire(g, centers) >= 0
    return int.from_bytes(np.packbits(burned, bitorder="little").tobytes(), "little")


def verify_schedule(g: Graph, centers: Sequence[int]) -> tuple[bool, list[int]]:
    """Check a burning schedule; returns ``(ok, uncovered vertices)``."""
    uncovered = np.flatnonzero(_fire(g, centers) < 0).tolist()
    return not uncovered, uncovered


# --- split graphs -----------------------------------------------------------


class NotSplitGraph(ValueError):
    """Raised by :func:`greedy_split_partition`; ``witness`` is an offending vertex pair."""

    def __init__(self, witness: tuple[int, int], reason: str):
        super().__init__(f"not a split graph: {reason} {witness}")
        self.witness = witness


def greedy_split_partition(g: Graph) -> tuple[list[int], list[int]]:
    """Split partition ``(K, I)`` by moving minimum-degree vertices into ``I``.

    Vertices are ordered by (degree, id); ``K`` is the largest prefix of the
    reverse order whose i-th member (1-based) has degree >= i-1. Ties go to
    the smaller id, so equal-degree vertices enter ``I`` in id order.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), -v))
    m = 0
    for i, v in enumerate(order, start=1):
        if g.degree(v) >= i - 1:
            m = i
        else:
            break
    clique = sorted(order[:m])
    indep = sorted(order[m:])
    for a, b in combinations(clique, 2):
        if not g.has_edge(a, b):
            raise NotSplitGraph((a, b), "clique side misses edge")
    for a, b in combinations(indep, 2):
        if g.has_edge(a, b):
            raise NotSplitGraph((a, b), "independent side has edge")
    return clique, indep


def is_split(g: Graph) -> bool:
    try:
        greedy_split_partition(g)
    except NotSplitGraph:
        return False
    return True


@dataclass(frozen=True)
class ForbiddenSubgraph:
    kind: str  # "2K2", "C4" or "C5"
    vertices: tuple[int, ...]


def _induced_kind(g: Graph, vs: tuple[int, ...]) -> str | None:
    degs = [popcount(g.neighbor_bitsets[v] & to_mask(vs)) for v in vs]
    if len(vs) == 4:
        if all(d == 1 for d in degs):
            return "2K2"
        if all(d == 2 for d in degs):
            return "C4"
    elif all(d == 2 for d in degs):
        # 2-regular on five vertices can only be C5
        return "C5"
    return None


def find_forbidden_subgraph(g: Graph) -> ForbiddenSubgraph | None:
    """Lexicographically first induced 2K2/C4 (4-subsets), else first C5."""
    if is_split(g):
        return None
    for size in (4, 5):
        for vs in combinations(range(g.n), size):
            kind = _induced_kind(g, vs)
            if kind is not None:
                return ForbiddenSubgraph(kind, vs)
    raise AssertionError("degree test rejected a (2K2, C4, C5)-free graph")


def longest_induced_path(g: Graph, cap: int | None = None) -> int:
    """Order of a longest induced path, exact but stopping early once ``cap`` is reached."""
    if g.n == 0:
        return 0
    limit = g.n if cap is None else min(cap, g.n)
    best = 1
    nb = g.neighbor_bitsets

    def extend(end: int, path_mask: int, blocked: int, length: int) -> bool:
        # blocked: path vertices plus neighbours of all path vertices except ``end``
        nonlocal best
        if length > best:
            best = length
            if best >= limit:
                return True
        for w in bits(nb[end] & ~blocked):
            if extend(w, path_mask | (1 << w), blocked | nb[end] | (1 << w), length + 1):
                return True
        return False

    for s in range(g.n):
        if extend(s, 1 << s, 1 << s, 1):
            break
    return best
