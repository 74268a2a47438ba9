"""Set Cover to Graph Burning gadget, with the checks that come with it.

Vertex layout of a gadget (roles are recorded, so nothing downstream needs
to rely on it): ``U`` first, then for each layer ``i = 2..k-1`` the clique
``U_i``, the independent ``V_i``, ``i + 2`` pendant paths of ``i`` vertices
and the inner vertices of the ``U_i``-to-``U`` connectors; ``w, x, y, z`` last.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .exact import SetCoverInstance, decide_burning_exact, set_cover_exact
from .graph import Graph, longest_induced_path, to_mask, verify_schedule


@dataclass
class Layer:
    i: int
    clique: list[int]  # u_1^(i) .. u_n^(i)
    sets: list[int]  # v_1^(i) .. v_m^(i)
    paths: list[list[int]]  # each starts at the end joined to all of V_i
    connectors: list[list[int]]  # inner vertices, from the u_j^(i) side


@dataclass
class GadgetInstance:
    graph: Graph
    k: int
    roles: list[str]
    source: SetCoverInstance
    universe: list[int]
    layers: dict[int, Layer] = field(default_factory=dict)
    w: int = -1
    x: int = -1
    y: int = -1
    z: int = -1

    def part(self, i: int) -> list[int]:
        """``V_i``: ``{w}`` for 0, ``{x, y, z}`` for 1, the set vertices otherwise."""
        if i == 0:
            return [self.w]
        if i == 1:
            return [self.x, self.y, self.z]
        return self.layers[i].sets


def predicted_vertex_count(n: int, m: int, k: int) -> int:
    return 4 + n + sum(n + m + i * (i + 2) + n * (i - 2) for i in range(2, k))


def setcover_to_burning(inst: SetCoverInstance) -> GadgetInstance:
    """Build ``(G, k = s + 2)`` from a Set Cover instance with nonempty sets."""
    n, m, s = inst.universe_size, len(inst.sets), inst.budget
    if s < 1:
        raise ValueError("Set Cover budget must be at least 1")
    if n < 1 or m < 1:
        raise ValueError("Set Cover instance needs a nonempty universe and family")
    empties = [q + 1 for q, mask in enumerate(inst.sets) if mask == 0]
    if empties:
        raise ValueError(f"sets {empties} are empty; the reduction needs nonempty sets")
    k = s + 2
    roles: list[str] = []
    edges: list[tuple[int, int]] = []

    def new(role: str) -> int:
        roles.append(role)
        return len(roles) - 1

    def clique(vs):
        edges.extend((a, b) for idx, a in enumerate(vs) for b in vs[idx + 1 :])

    universe = [new(f"u{j}") for j in range(1, n + 1)]
    clique(universe)
    layers = {}
    for i in range(2, k):
        ui = [new(f"u{j}@{i}") for j in range(1, n + 1)]
        vi = [new(f"v{q}@{i}") for q in range(1, m + 1)]
        clique(ui)
        for q, mask in enumerate(inst.sets):
            edges.extend((ui[p], vi[q]) for p in range(n) if mask >> p & 1)
        paths = []
        for c in range(1, i + 3):
            pv = [new(f"path{c}.{pos}@{i}") for pos in range(i)]
            edges.extend(zip(pv, pv[1:]))
            edges.extend((v, pv[0]) for v in vi)
            paths.append(pv)
        connectors = []
        for j in range(n):
            inner = [new(f"conn{j + 1}.{pos}@{i}") for pos in range(i - 2)]
            chain = [ui[j]] + inner + [universe[j]]
            edges.extend(zip(chain, chain[1:]))
            connectors.append(inner)
        layers[i] = Layer(i, ui, vi, paths, connectors)
    anchor = universe[0]
    w, x, y, z = (new(r) for r in "wxyz")
    edges.extend([(anchor, w), (anchor, x), (x, y), (y, z)])
    g = Graph(len(roles), edges)
    return GadgetInstance(g, k, roles, inst, universe, layers, w, x, y, z)


def validate_gadget(gad: GadgetInstance) -> None:
    """Raise ``AssertionError`` when a structural invariant of the gadget fails."""
    g = gad.graph
    inst = gad.source
    n, m = inst.universe_size, len(inst.sets)
    assert g.n == predicted_vertex_count(n, m, gad.k), "vertex count"

    def is_clique(vs):
        mask = to_mask(vs)
        return all(mask & ~(1 << v) & ~g.neighbor_bitsets[v] == 0 for v in vs)

    assert is_clique(gad.universe), "U is not a clique"
    anchor = gad.universe[0]
    assert set(g.adjacency[gad.w]) == {anchor}
    assert set(g.adjacency[gad.x]) == {anchor, gad.y}
    assert set(g.adjacency[gad.y]) == {gad.x, gad.z}
    assert set(g.adjacency[gad.z]) == {gad.y}
    for i, layer in gad.layers.items():
        assert is_clique(layer.clique), f"U_{i} is not a clique"
        vmask = to_mask(layer.sets)
        assert all(g.neighbor_bitsets[v] & vmask == 0 for v in layer.sets), f"V_{i} has an edge"
        for p, u in enumerate(layer.clique):
            for q, v in enumerate(layer.sets):
                assert g.has_edge(u, v) == bool(inst.sets[q] >> p & 1), "membership edge"
        assert len(layer.paths) == i + 2, f"layer {i} pendant path count"
        for pv in layer.paths:
            assert len(pv) == i
            assert all(g.has_edge(a, b) for a, b in zip(pv, pv[1:]))
            assert all(g.has_edge(v, pv[0]) for v in layer.sets)
            assert set(g.adjacency[pv[-1]]) == {pv[-2]}
        assert len(layer.connectors) == n
        for j, inner in enumerate(layer.connectors):
            assert len(inner) == i - 2, f"connector {j + 1} of layer {i}"
            chain = [layer.clique[j]] + inner + [gad.universe[j]]
            assert all(g.has_edge(a, b) for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class EquivalenceReport:
    sc_answer: bool
    gb_answer: bool
    cover: list[int] | None
    schedule: list[int] | None

    @property
    def agree(self) -> bool:
        return self.sc_answer == self.gb_answer


def check_gadget_equivalence(inst: SetCoverInstance, gadget: GadgetInstance | None = None) -> EquivalenceReport:
    """Solve both sides exactly; disagreement raises ``AssertionError``."""
    gad = gadget or setcover_to_burning(inst)
    cover = set_cover_exact(inst)
    schedule = decide_burning_exact(gad.graph, gad.k)
    report = EquivalenceReport(cover is not None, schedule is not None, cover, schedule)
    if not report.agree:
        raise AssertionError(
            f"Set Cover says {report.sc_answer} but the gadget says {report.gb_answer}"
        )
    return report


def schedule_from_cover(gad: GadgetInstance, cover) -> list[int]:
    """``b_0 = w``, ``b_1 = y``, ``b_i`` = vertex of the (i-1)-th chosen set in layer ``i``.

    The cover is padded to exactly ``s`` sets by repeating its first member.
    Coverage is not checked here: a non-cover yields a schedule that fails
    verification.
    """
    s = gad.k - 2
    cover = list(cover)
    if not cover or len(cover) > s:
        raise ValueError(f"cover must name between 1 and {s} sets")
    if any(not 0 <= q < len(gad.source.sets) for q in cover):
        raise ValueError("cover names a set outside the family")
    padded = cover + [cover[0]] * (s - len(cover))
    schedule = [gad.w, gad.y]
    for i in range(2, gad.k):
        schedule.append(gad.layers[i].sets[padded[i - 2]])
    return schedule


@dataclass(frozen=True)
class VertexCoverAccounting:
    independent_set_size: int
    independent: bool
    vc_size: int
    predicted: int  # closed form stated with the reduction
    construction_count: int  # count of the non-V_i vertices actually built

    @property
    def matches_prediction(self) -> bool:
        return self.vc_size == self.predicted


def vertex_cover_accounting(gad: GadgetInstance) -> VertexCoverAccounting:
    g = gad.graph
    n = gad.source.universe_size
    k = gad.k
    indep = [v for i in range(2, k) for v in gad.layers[i].sets]
    mask = to_mask(indep)
    independent = all(g.neighbor_bitsets[v] & mask == 0 for v in indep)
    predicted = 4 + (k - 1) * n + sum((i + 2) * (2 * i - 2) for i in range(2, k))
    built = 4 + (k - 1) * n + sum(i * (i + 2) + n * (i - 2) for i in range(2, k))
    return VertexCoverAccounting(len(indep), independent, g.n - len(indep), predicted, built)


@dataclass(frozen=True)
class InducedPathCheck:
    longest: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.longest <= self.bound


def induced_path_bound_check(
    gad: GadgetInstance, cap: int | None = None, max_vertices: int = 25
) -> InducedPathCheck | None:
    """Longest induced path versus ``4k - 4``; ``None`` (with a warning) above ``max_vertices``."""
    if gad.graph.n > max_vertices:
        warnings.warn(
            f"gadget has {gad.graph.n} vertices (> {max_vertices}); induced-path check skipped"
        )
        return None
    bound = 4 * gad.k - 4
    limit = bound + 1 if cap is None else cap
    return InducedPathCheck(longest_induced_path(gad.graph, limit), bound)


def verify_cover_schedule(gad: GadgetInstance, cover) -> bool:
    return verify_schedule(gad.graph, schedule_from_cover(gad, cover))[0]
