"""Seeded instance generators for tests, benchmarks and the CLI."""
from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from .exact import SetCoverInstance
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    ends = np.arange(n - 1)
    return Graph(n, np.column_stack([ends, ends + 1]))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty(n: int) -> Graph:
    return Graph(n, [])


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p); one coin per unordered pair, so no duplicates."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges())
        offset += part.n
    return Graph(offset, edges)


def random_split_graph(n: int, seed: int | None = None, clique_size: int | None = None) -> Graph:
    """Clique on a random prefix, remaining vertices joined to random clique subsets."""
    rng = random.Random(seed)
    c = rng.randint(0, n) if clique_size is None else clique_size
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for v in range(c, n):
        edges.extend((u, v) for u in range(c) if rng.random() < 0.5)
    return Graph(n, edges)


def add_random_vertices(g: Graph, extra: int, p: float = 0.5, seed: int | None = None) -> Graph:
    """Append ``extra`` vertices, each joined to every earlier vertex with probability ``p``."""
    rng = random.Random(seed)
    edges = list(g.edges())
    for v in range(g.n, g.n + extra):
        edges.extend((u, v) for u in range(v) if rng.random() < p)
    return Graph(g.n + extra, edges)


def random_set_cover(n: int, m: int, s: int, seed: int | None = None) -> SetCoverInstance:
    """``m`` uniformly random nonempty subsets of ``{1..n}`` with budget ``s``."""
    if n < 1 or m < 1 or s < 1:
        raise ValueError("n, m and s must be positive")
    rng = random.Random(seed)
    sets = [rng.randrange(1, 1 << n) for _ in range(m)]
    return SetCoverInstance(universe_size=n, sets=sets, budget=s)
