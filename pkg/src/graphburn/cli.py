"""``graphburn`` command line: solve, verify, generate, reduce, params.

Exit codes: 0 yes/success, 1 no or failed verification, 2 usage or input
error, 3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import generators as gen
from . import io
from .approx import approx_burn, separated_set_probe
from .components import solve_by_components
from .exact import (
    CapacityError,
    burning_number_exact,
    decide_burning_exact,
    decide_burning_via_set_cover,
)
from .graph import GraphError, connected_components, is_split, verify_schedule
from .reductions import setcover_to_burning
from .split import min_split_deletion_set, solve_split

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
ALGORITHMS = ("brute", "setcover", "approx", "components", "split")


class UsageError(Exception):
    pass


def _emit(payload: dict) -> None:
    print(json.dumps(payload))


def _decider(args):
    threads = 1 if args.deterministic else args.threads
    if args.algo == "brute":
        return decide_burning_exact
    if args.algo == "setcover":
        return decide_burning_via_set_cover
    if args.algo == "components":
        return lambda g, k: solve_by_components(
            g, k, ds_solver=args.ds_solver, trials=args.trials, seed=args.seed, threads=threads
        )
    if args.algo == "split":
        deletion = None
        if args.deletion_set:
            deletion = io.parse_vertex_set(Path(args.deletion_set).read_text())
        return lambda g, k: solve_split(
            g, k, deletion_set=deletion, max_deletion=args.max_deletion
        )
    raise UsageError(f"unknown algorithm {args.algo!r}")


def _approx(g, k):
    """``(answer, schedule, upper)``; a rejected probe at ``t >= k`` certifies NO."""
    upper, schedule = approx_burn(g)
    if k is None:
        return "upper_bound", schedule, upper
    if upper <= k:
        return "yes", schedule + [schedule[0]] * (k - upper), upper
    if not separated_set_probe(g, k).accepted:
        return "no", None, upper
    return "upper_bound", schedule, upper


def cmd_solve(args) -> int:
    g = io.read_edge_list(args.graph)
    if args.k is not None and args.k < 1:
        raise UsageError("-k must be at least 1")
    for v in _deletion_ids(args, g):
        if not 0 <= v < g.n:
            raise UsageError(f"deletion set names vertex {v} outside 0..{g.n - 1}")
    start = time.perf_counter()
    out = {"algorithm": args.algo, "n": g.n, "m": g.m, "k_query": args.k}
    if args.algo == "approx":
        answer, schedule, upper = _approx(g, args.k)
        out.update(answer=answer, burning_number=None, upper_bound=upper)
    elif args.k is not None:
        schedule = _decider(args)(g, args.k)
        out.update(answer="yes" if schedule is not None else "no", burning_number=None)
    elif args.algo == "brute":
        bn, schedule = burning_number_exact(g)
        out.update(answer="yes", burning_number=bn)
    else:
        decide = _decider(args)
        k, schedule = 0, None
        while schedule is None:
            k += 1
            schedule = decide(g, k)
        out.update(answer="yes", burning_number=k)
    elapsed = (time.perf_counter() - start) * 1000.0
    verified = schedule is not None and verify_schedule(g, schedule)[0]
    out.update(schedule=schedule, verified=verified, elapsed_ms=round(elapsed, 3))
    if args.algo == "components" and args.ds_solver == "colorcoding":
        out["seed"] = args.seed
    _emit(out)
    if out["answer"] == "no" or (schedule is not None and not verified):
        return EXIT_NO
    return EXIT_YES


def _deletion_ids(args, g):
    if getattr(args, "deletion_set", None):
        return io.parse_vertex_set(Path(args.deletion_set).read_text())
    return []


def cmd_verify(args) -> int:
    g = io.read_edge_list(args.graph)
    schedule = io.read_schedule(args.schedule)
    if not schedule:
        raise UsageError("schedule file is empty")
    bad = [v for v in schedule if not 0 <= v < g.n]
    if bad:
        raise UsageError(f"schedule names vertices {bad} outside 0..{g.n - 1}")
    ok, uncovered = verify_schedule(g, schedule)
    _emit({"verified": ok, "k": len(schedule), "uncovered": uncovered})
    return EXIT_YES if ok else EXIT_NO


def _generate(kind: str, params: list[str], seed):
    def need(count):
        if len(params) != count:
            raise UsageError(f"'{kind}' takes {count} parameter(s), got {len(params)}")

    try:
        if kind in ("path", "cycle", "complete", "empty", "star"):
            need(1)
            return {"path": gen.path, "cycle": gen.cycle, "complete": gen.complete,
                    "empty": gen.empty, "star": gen.star}[kind](int(params[0]))
        if kind == "gnp":
            need(2)
            return gen.gnp(int(params[0]), float(params[1]), seed=seed)
        if kind == "split":
            need(1)
            return gen.random_split_graph(int(params[0]), seed=seed)
        if kind == "setcover":
            need(3)
            n, m, s = (int(p) for p in params)
            return gen.random_set_cover(n, m, s, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown generator {kind!r}")


def cmd_generate(args) -> int:
    obj = _generate(args.kind, args.params, args.seed)
    if args.kind == "setcover":
        text = io.format_set_cover(obj)
    else:
        text = io.format_edge_list(obj)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_reduce(args) -> int:
    inst = io.read_set_cover(args.setcover)
    try:
        gad = setcover_to_burning(inst)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    comments = [f"k = {gad.k}"]
    if args.out:
        edges_path = Path(f"{args.out}.edges")
        roles_path = Path(f"{args.out}.roles")
        io.write_edge_list(gad.graph, edges_path, comments)
        roles_path.write_text(io.format_roles(gad.roles))
        _emit({"n": gad.graph.n, "m": gad.graph.m, "k": gad.k,
               "edges": str(edges_path), "roles": str(roles_path)})
    else:
        sys.stdout.write(io.format_edge_list(gad.graph, comments))
    return EXIT_YES


def cmd_params(args) -> int:
    g = io.read_edge_list(args.graph)
    decomp = connected_components(g)
    out = {
        "n": g.n,
        "m": g.m,
        "p": decomp.p,
        "d_max": decomp.d_max,
        "component_diameters": list(decomp.diameters),
        "is_split": is_split(g),
    }
    if args.max_deletion is not None:
        found = min_split_deletion_set(g, args.max_deletion)
        out["split_distance"] = None if found is None else len(found)
        out["split_deletion_set"] = found
    _emit(out)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphburn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide bn <= k, or compute the burning number")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=None, help="query bound; omit to minimize")
    p.add_argument("--algo", choices=ALGORITHMS, default="brute")
    p.add_argument("--ds-solver", choices=("exact", "colorcoding"), default="exact")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deletion-set", default=None, help="file with a known split-deletion set")
    p.add_argument("--max-deletion", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--deterministic", action="store_true", help="force single-threaded runs")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a schedule against a graph")
    p.add_argument("graph")
    p.add_argument("schedule")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded instance")
    p.add_argument("kind", help="path|cycle|complete|empty|star|gnp|split|setcover")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="Set Cover file to a burning instance")
    p.add_argument("setcover")
    p.add_argument("--out", default=None, help="prefix for <out>.edges and <out>.roles")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("params", help="component and split parameters")
    p.add_argument("graph")
    p.add_argument("--max-deletion", type=int, default=None)
    p.set_defaults(func=cmd_params)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"graphburn: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"graphburn: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
