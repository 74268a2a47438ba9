"""Kernel dispatch: compiled core when importable, pure Python otherwise.

Set ``GRAPHBURN_PURE_PYTHON=1`` to force the fallback. Bitset kernels only
take the compiled path when every mask fits in 64 bits.
"""
import os

from . import _pykernels

BACKEND = "python"
_c = None
if os.environ.get("GRAPHBURN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build
        _c = None

WORD_BITS = 64


def _impl(fits=True):
    return _c if (_c is not None and fits) else _pykernels


def all_pairs_bfs(indptr, indices, n):
    return _impl().all_pairs_bfs(indptr, indices, n)


def component_labels(indptr, indices, n):
    return _impl().component_labels(indptr, indices, n)


def fire(indptr, indices, n, centers):
    return _impl().fire(indptr, indices, n, centers)


def separated_set(indptr, indices, n, radius, limit):
    return _impl().separated_set(indptr, indices, n, radius, limit)


def cover_search(balls, full):
    n = len(balls[0]) if balls else 0
    return _impl(n <= WORD_BITS and full.bit_length() <= WORD_BITS).cover_search(balls, full)


def set_cover(sets, universe, budget):
    return _impl(universe.bit_length() <= WORD_BITS).set_cover(sets, universe, budget)


def color_coding(members, universe_size, t, colors, trials, seed):
    if any(m >> universe_size for m in members):
        raise ValueError(f"member outside a universe of {universe_size} elements")
    if colors < 1:
        raise ValueError("need at least one color")
    fits = universe_size <= WORD_BITS and colors <= WORD_BITS
    return _impl(fits).color_coding(members, universe_size, t, colors, trials, seed)
