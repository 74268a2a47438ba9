"""Time the compiled kernels against the pure-Python fallback on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel: best-of-N seconds for each backend and the speedup.
Both backends are also checked to return the same answer.
"""
import argparse
import time

import numpy as np

from graphburn import generators as gen
from graphburn._kernels import _pykernels as py
from graphburn.components import build_disjoint_sets
from graphburn.exact import encode_burning_as_set_cover
from graphburn.graph import connected_components

try:
    from graphburn._kernels import _ckernels as cc
except ImportError:  # pragma: no cover
    cc = None


def _batch(fn_name):
    """Run one kernel over many calls; returns a callable taking the module."""

    graphs = [gen.gnp(12, p, seed=s) for p in (0.1, 0.3, 0.6) for s in range(40)]
    if fn_name == "cover_search":
        calls = [
            ([g.balls(r) for r in range(k - 1, -1, -1)], g.full_mask)
            for g in graphs
            for k in range(1, 7)
        ]
    else:
        calls = []
        for g in graphs:
            for k in range(1, 6):
                inst = encode_burning_as_set_cover(g, k)
                calls.append((inst.sets, inst.universe, inst.budget))

    def run(module):
        fn = getattr(module, fn_name)
        return [fn(*call) for call in calls]

    return len(calls), run


def workloads():
    dense = gen.gnp(300, 0.02, seed=1)
    long_path = gen.path(10000)
    p36 = gen.path(36)
    union = gen.disjoint_union([gen.path(4), gen.cycle(6), gen.path(4), gen.path(3), gen.path(4)])
    decomp = connected_components(union)
    ds = build_disjoint_sets(decomp, union, decomp.p)
    colors = ds.t * ds.max_member_size()
    yield "all_pairs_bfs gnp(300)", "all_pairs_bfs", (*dense.csr, dense.n)
    yield "separated_set P_10000", "separated_set", (*long_path.csr, long_path.n, 200, 101)
    yield "cover_search P_36 k=6", "cover_search", ([p36.balls(r) for r in range(5, -1, -1)], p36.full_mask)
    for name in ("cover_search", "set_cover"):
        count, run = _batch(name)
        yield f"{name} x{count} G(12,p)", run, ()
    yield "color_coding 4 components", "color_coding", (ds.members, ds.universe_size, ds.t, colors, 2000, 7)
    yield "fire P_10000", "fire", (*long_path.csr, long_path.n, list(range(0, 10000, 50)))


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return (None if a is None else list(a)) == (None if b is None else list(b))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if cc is None:
        raise SystemExit("compiled kernels are not built; run `python3 setup.py build_ext --inplace`")
    print(f"{'workload':32s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}  agree")
    for label, name, call in workloads():
        if callable(name):
            tp, a = best_of(name, (py,), args.repeat)
            tc, b = best_of(name, (cc,), args.repeat)
            agree = all(same(x, y) for x, y in zip(a, b))
        else:
            tp, a = best_of(getattr(py, name), call, args.repeat)
            tc, b = best_of(getattr(cc, name), call, args.repeat)
            agree = same(a, b)
        print(f"{label:32s} {tp:10.4f} {tc:11.5f} {tp / tc:7.1f}x  {agree}")


if __name__ == "__main__":
    main()
