"""Command-line drivers: a random graph generator, per-problem testers that
read a graph on standard input, and a timer.

    idxgraph randgraph wgraph 6 8 1 9 1 0 | idxgraph testmst kruskal show verify

Exit status is 0 only when parsing, the algorithm and any requested
verification all succeed.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import ecolor, matching, maxflow, mincost, mst, paths
from .gen import KINDS, rand_graph
from .graph import (FloorFlowGraph, FlowGraph, Graph, GraphFormatError, WDigraph,
                    WFlowGraph, WGraph)

# positional arguments after the kind, per graph kind
RANDGRAPH_ARGS = {
    "ugraph": ("n", "m", "seed", "scramble"),
    "bigraph": ("n", "m", "seed", "scramble"),
    "tree": ("n", "m", "seed", "scramble"),
    "digraph": ("n", "m", "seed", "scramble"),
    "dag": ("n", "m", "seed", "scramble"),
    "wgraph": ("n", "m", "lo", "hi", "seed", "scramble"),
    "wbigraph": ("n", "m", "lo", "hi", "seed", "scramble"),
    "wdigraph": ("n", "m", "lo", "hi", "seed", "scramble"),
    "flograph": ("n", "m", "lo", "hi", "extra", "seed", "scramble"),
    "wflograph": ("n", "m", "lo", "hi", "clo", "chi", "extra", "seed", "scramble"),
}


class CliError(Exception):
    pass


def _ints(names, values) -> dict:
    if len(values) != len(names):
        raise CliError(f"expected {len(names)} arguments ({' '.join(names)}), got {len(values)}")
    out = {}
    for k, v in zip(names, values):
        try:
            out[k] = int(v)
        except ValueError:
            raise CliError(f"argument {k} must be an integer, not {v!r}") from None
    return out


def cmd_randgraph(args, out) -> int:
    if args.kind not in RANDGRAPH_ARGS:
        raise CliError(f"unknown kind {args.kind!r}; choose from {', '.join(KINDS)}")
    kw = _ints(RANDGRAPH_ARGS[args.kind], args.params)
    try:
        g = rand_graph(args.kind, **kw)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    out.write(g.to_text())
    return 0


# -- testers ---------------------------------------------------------------

def _read(classes, text: str):
    """Parse with the first class that accepts the text."""
    first = None
    for cls in classes:
        try:
            return cls.from_text(text)
        except GraphFormatError as exc:
            first = first or exc
    raise CliError(f"bad graph on input: {first}")


def _flags(extra: list[str]) -> tuple[bool, bool]:
    bad = [x for x in extra if x not in ("show", "verify")]
    if bad:
        raise CliError(f"unexpected argument {bad[0]!r}")
    return "show" in extra, "verify" in extra


@dataclass
class Report:
    summary: str
    body: list[str]  # lines printed after the graph when showing
    error: Optional[str] = None
    blank: bool = True  # blank line between graph and body


def _test_mst(args, g: WGraph, verify: bool) -> Report:
    r = mst.mst(g, args.algo)
    return Report(f"mst weight: {r.weight}", [r.to_text(g)],
                  mst.verify(g, r) if verify else None)


def _test_spt(args, g: WDigraph, verify: bool) -> Report:
    g._check_vertex(args.source)
    t = paths.spt(g, args.source, args.algo)
    dists = " ".join("-" if d is paths.UNREACHABLE else str(d) for d in t.dist[1:]) + " "
    edges = " ".join(g.edge_text(e) for e in sorted(t.edges(), key=g.head))
    return Report(f"distance sum is {t.dist_sum()}", [dists, edges],
                  paths.verify(g, args.source, t) if verify else None)


def _test_apsp(args, g: WDigraph, verify: bool) -> Report:
    r = paths.apsp(g, args.algo)
    rows, total, err = [], 0, None
    for u in range(1, g.n + 1):
        row = r.dist[u]
        total += sum(d for d in row[1:] if d is not paths.UNREACHABLE)
        rows.append(" ".join("-" if d is paths.UNREACHABLE else str(d) for d in row[1:]) + " ")
        if verify and err is None:
            err = paths.verify(g, u, paths.PathTree(u, r.parent[u], row))
    return Report(f"distance sum is {total}", rows, err)


def _test_maxflo(args, g: FlowGraph, verify: bool) -> Report:
    if isinstance(g, FloorFlowGraph):
        total = maxflow.max_flow_with_floors(g, args.algo)
    else:
        g.clear_flow()
        total = maxflow.max_flow(g, args.algo)
    return Report(f"total flow of {total}", [], maxflow.verify(g, total) if verify else None,
                  blank=False)


def _test_mcflo(args, g: WFlowGraph, verify: bool) -> Report:
    g.clear_flow()
    r = mincost.min_cost_max_flow(g, args.algo)
    return Report(f"total flow {r.flow}, total cost {r.cost}", [],
                  mincost.verify(g, r) if verify else None, blank=False)


def _test_match(args, g: Graph, verify: bool) -> Report:
    r = matching.max_size_matching(g, args.algo)
    return Report(f"matching size {r.size}", [r.to_text(g)],
                  matching.verify(g, r, "size") if verify else None)


def _test_wmatch(args, g: WGraph, verify: bool) -> Report:
    r = matching.max_weight_matching(g, args.algo)
    return Report(f"matching weight {r.weight}", [r.to_text(g)],
                  matching.verify(g, r, "weight") if verify else None)


def _test_ecolor(args, g: Graph, verify: bool) -> Report:
    c = ecolor.ecolor(g, args.algo)
    body = []
    for k, edges in enumerate(c.classes(g)):
        if k:
            body.append(f"{k}: " + " ".join(g.edge_text(e) for e in edges))
    err = None
    if verify:
        err = ecolor.verify(g, c)
        if err is None and ecolor.gap(g, c):
            err = f"used {c.num_colors} colours, {ecolor.gap(g, c)} more than the maximum degree"
    return Report(f"colors: {c.num_colors}", body, err)


@dataclass
class Tester:
    graph_classes: tuple  # tried in order when parsing
    run: Callable
    algorithms: tuple


TESTERS = {
    "testmst": Tester((WGraph,), _test_mst, tuple(mst.ALGORITHMS)),
    "testspt": Tester((WDigraph,), _test_spt, tuple(paths.SPT_ALGORITHMS)),
    "testapsp": Tester((WDigraph,), _test_apsp, tuple(paths.APSP_ALGORITHMS)),
    "testmaxflo": Tester((FlowGraph,), _test_maxflo, tuple(maxflow.ALGORITHMS)),
    "testmcflo": Tester((WFlowGraph,), _test_mcflo, tuple(mincost.ALGORITHMS)),
    "testmatch": Tester((Graph, WGraph), _test_match, tuple(matching.SIZE_ALGORITHMS)),
    "testwmatch": Tester((WGraph,), _test_wmatch, tuple(matching.WEIGHT_ALGORITHMS)),
    "testecolor": Tester((Graph, WGraph), _test_ecolor, tuple(ecolor.ALGORITHMS)),
}


def cmd_test(args, out, stdin) -> int:
    tester = TESTERS[args.command]
    if args.algo not in tester.algorithms:
        raise CliError(f"unknown algorithm {args.algo!r}; choose from {', '.join(tester.algorithms)}")
    show, verify = _flags(args.flags)
    classes = tester.graph_classes
    if args.command == "testmaxflo" and args.floors:
        classes = (FloorFlowGraph,)
    g = _read(classes, stdin.read())
    try:
        rep = tester.run(args, g, verify)
    except (ValueError, IndexError) as exc:
        raise CliError(str(exc)) from None
    out.write(rep.summary + "\n")
    if show:
        out.write(g.to_text())
        if rep.blank:
            out.write("\n")
        for line in rep.body:
            out.write(line + "\n")
    if rep.error:
        sys.stderr.write(f"verification failed: {rep.error}\n")
        return 1
    return 0


# -- timing ----------------------------------------------------------------

# problem -> (graph kind, function timed)
TIMED = {
    "mst": ("wgraph", lambda g, a: mst.mst(g, a)),
    "spt": ("wdigraph", lambda g, a: paths.spt(g, 1, a)),
    "apsp": ("wdigraph", lambda g, a: paths.apsp(g, a)),
    "maxflo": ("flograph", lambda g, a: maxflow.max_flow(g, a)),
    "mcflo": ("wflograph", lambda g, a: mincost.min_cost_max_flow(g, a)),
    "match": ("bigraph", lambda g, a: matching.max_size_matching(g, a)),
    "wmatch": ("wbigraph", lambda g, a: matching.max_weight_matching(g, a)),
    "ecolor": ("bigraph", lambda g, a: ecolor.ecolor(g, a)),
}


def cmd_time(args, out) -> int:
    if args.reps < 1:
        raise CliError("reps must be at least 1")
    kind, fn = TIMED[args.problem]
    out.write("rep,seed,millis\n")
    total = 0.0
    for rep in range(args.reps):
        seed = args.seed + rep
        try:
            g = rand_graph(kind, args.n, args.m, args.lo, args.hi, seed, args.scramble,
                           extra=args.extra, clo=args.clo, chi=args.chi)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        t0 = time.perf_counter()
        try:
            fn(g, args.algo)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        ms = (time.perf_counter() - t0) * 1000
        total += ms
        out.write(f"{rep + 1},{seed},{ms:.3f}\n")
    out.write(f"mean,,{total / args.reps:.3f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idxgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("randgraph", help="print a random graph",
                       description="Arguments after the kind: " + "; ".join(
                           f"{k}: {' '.join(v)}" for k, v in RANDGRAPH_ARGS.items()))
    r.add_argument("kind")
    r.add_argument("params", nargs="*")

    for name, tester in TESTERS.items():
        t = sub.add_parser(name, help=f"read a graph, run an algorithm ({', '.join(tester.algorithms)})")
        t.add_argument("algo")
        t.add_argument("flags", nargs="*", help="show and/or verify")
        if name == "testspt":
            t.add_argument("--source", type=int, default=1)
        if name == "testmaxflo":
            t.add_argument("--floors", action="store_true",
                           help="edges carry (floor,cap,flow)")

    tm = sub.add_parser("time", help="time an algorithm on random graphs")
    tm.add_argument("problem", choices=sorted(TIMED))
    tm.add_argument("algo")
    tm.add_argument("--n", type=int, default=100)
    tm.add_argument("--m", type=int, default=400)
    tm.add_argument("--lo", type=int, default=1)
    tm.add_argument("--hi", type=int, default=99)
    tm.add_argument("--extra", type=int, default=10)
    tm.add_argument("--clo", type=int, default=1)
    tm.add_argument("--chi", type=int, default=99)
    tm.add_argument("--scramble", type=int, default=1)
    tm.add_argument("--reps", type=int, default=5)
    tm.add_argument("--seed", type=int, default=1)
    return p


def main(argv=None, stdin=None, out=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "randgraph":
            return cmd_randgraph(args, out)
        if args.command == "time":
            if args.algo not in _algorithms(args.problem):
                raise CliError(f"unknown algorithm {args.algo!r} for {args.problem}")
            return cmd_time(args, out)
        return cmd_test(args, out, stdin)
    except CliError as exc:
        sys.stderr.write(f"idxgraph {args.command}: {exc}\n")
        return 2


def _algorithms(problem: str) -> tuple:
    return TESTERS["test" + problem].algorithms


if __name__ == "__main__":
    raise SystemExit(main())
