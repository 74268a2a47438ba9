"""Text formats: edge lists, schedules, Set Cover instances and role sidecars.

Edge list: first non-comment line ``n m``, then ``m`` lines ``u v`` (0-indexed).
Set Cover: first line ``n m s``, then ``m`` lines of 1-indexed element ids.
Lines starting with ``#`` are comments in every format.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .graph import Graph, GraphError


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _ints(lineno: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise GraphError("empty edge list: missing 'n m' header")
    lineno, parts = lines[0]
    header = _ints(lineno, parts)
    if len(header) != 2:
        raise GraphError(f"line {lineno}: header must be 'n m'")
    n, m = header
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    seen = set()
    for lineno, parts in lines[1:]:
        uv = _ints(lineno, parts)
        if len(uv) != 2:
            raise GraphError(f"line {lineno}: edge must be 'u v'")
        u, v = uv
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"invalid edge list: {exc}") from None


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, out: str | Path | TextIO, comments: Iterable[str] = ()) -> None:
    text = format_edge_list(g, comments)
    if isinstance(out, (str, Path)):
        Path(out).write_text(text)
    else:
        out.write(text)


def parse_schedule(text: str) -> list[int]:
    parts = [p for lineno, ps in _data_lines(text) for p in ps]
    return _ints(0, parts) if parts else []


def read_schedule(path: str | Path) -> list[int]:
    return parse_schedule(Path(path).read_text())


def parse_vertex_set(text: str) -> list[int]:
    return sorted(set(parse_schedule(text)))


def parse_set_cover(text: str):
    """Parse the Set Cover format into a :class:`~graphburn.exact.SetCoverInstance`."""
    from .exact import SetCoverInstance

    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty Set Cover file: missing 'n m s' header")
    lineno, parts = lines[0]
    header = _ints(lineno, parts)
    if len(header) != 3:
        raise ValueError(f"line {lineno}: header must be 'n m s'")
    n, m, s = header
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} sets but {len(lines) - 1} set lines follow")
    sets = []
    for lineno, parts in lines[1:]:
        elems = _ints(lineno, parts)
        bad = [e for e in elems if not 1 <= e <= n]
        if bad:
            raise ValueError(f"line {lineno}: element ids {bad} outside 1..{n}")
        mask = 0
        for e in elems:
            mask |= 1 << (e - 1)
        sets.append(mask)
    return SetCoverInstance(universe_size=n, sets=sets, budget=s)


def read_set_cover(path: str | Path):
    return parse_set_cover(Path(path).read_text())


def format_set_cover(inst) -> str:
    lines = [f"{inst.universe_size} {len(inst.sets)} {inst.budget}"]
    for mask in inst.sets:
        lines.append(" ".join(str(e + 1) for e in range(inst.universe_size) if mask >> e & 1))
    return "\n".join(lines) + "\n"


def format_roles(roles: Sequence[str]) -> str:
    return "".join(f"{v}\t{role}\n" for v, role in enumerate(roles))


def parse_roles(text: str) -> list[str]:
    roles = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        vid, role = line.split("\t", 1)
        if int(vid) != len(roles):
            raise ValueError(f"role file out of order at vertex {vid}")
        roles.append(role.strip())
    return roles
