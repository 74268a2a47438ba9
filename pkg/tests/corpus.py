"""Seeded instance corpus shared by the acceptance criteria."""
from __future__ import annotations

import random
from dataclasses import dataclass

from graphburn import generators as gen
from graphburn.graph import Graph

GNP_PROBS = (0.1, 0.3, 0.6)
UNION_MAX_TOTAL = 15  # keeps n + k <= 30 for the Set Cover route


@dataclass(frozen=True)
class Item:
    name: str
    graph: Graph


def gnp_items(per_prob: int = 80, seed: int = 2024) -> list[Item]:
    rng = random.Random(seed)
    items = []
    for p in GNP_PROBS:
        for idx in range(per_prob):
            n = rng.randint(1, 12)
            s = rng.randrange(2**31)
            items.append(Item(f"gnp(n={n},p={p},seed={s})", gen.gnp(n, p, seed=s)))
    return items


def union_items(count: int = 60, seed: int = 77) -> list[Item]:
    rng = random.Random(seed)
    items = []
    while len(items) < count:
        parts = []
        total = 0
        for _ in range(rng.randint(2, 4)):
            size = rng.randint(1, 6)
            if total + size > UNION_MAX_TOTAL:
                break
            s = rng.randrange(2**31)
            kind = rng.choice(["path", "gnp"])
            part = gen.path(size) if kind == "path" else gen.gnp(size, rng.choice(GNP_PROBS), seed=s)
            parts.append((kind, size, s, part))
            total += size
        if len(parts) < 2:
            continue
        name = "union(" + ",".join(f"{k}{n}" if k == "path" else f"gnp{n}@{s}" for k, n, s, _ in parts) + ")"
        items.append(Item(name, gen.disjoint_union([p[3] for p in parts])))
    return items


def corpus() -> list[Item]:
    return gnp_items() + union_items()
