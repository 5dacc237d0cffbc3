"""Acceptance criteria.  Every test here carries a ``criterion`` mark; the
terminal summary prints one PASS/FAIL line per criterion.  All comparisons
are exact (integer objectives, tolerance 0); time limits are wall clock."""

import math
import random
import time

import pytest

from idxgraph import ecolor, matching, maxflow, mincost, mst, paths
from idxgraph.ds import DHeap, DisjointSets, DynamicTrees, FibHeap, LeftistHeaps
from idxgraph.gen import rand_graph
from idxgraph.graph import (Digraph, FlowGraph, Graph, WDigraph, WFlowGraph, WGraph)

import oracles
from fixtures import (FIVE_VERTEX, FLOW_GRAPH, FLOW_VALUE, MST_EDGES, MST_GRAPH, MST_WEIGHT,
                      SPT_DIST, SPT_DIST_SUM, SPT_GRAPH)

criterion = pytest.mark.criterion

AC_MST = ("AC1", "MST regression: weight 33, listed edge set, unique optimum, < 1 s")
AC_SPT = ("AC2", "SSSP regression: distances 0 5 2 4 3 11, sum 25, tree verifies")
AC_FLOW = ("AC3", "max flow regression: value 17 for all seven, listed flow verifies")
AC_ORACLE = ("AC4", "oracle equivalence on >= 500 connected instances per problem, < 5 min")
AC_AGREE = ("AC5", "cross-algorithm agreement, 100 seeds x n in {10,50,200} per family")
AC_COLOR = ("AC6", "edge colouring uses exactly max-degree colours on 100 multigraphs")
AC_FUZZ = ("AC7", "data structures match naive oracles over >= 10^4 operations each")
AC_FORMAT = ("AC8", "five-vertex listing byte-exact; 200 random round trips")
AC_TIMING = ("AC9", "complexity claims not gated; timing driver emits a well-formed table")

MST_ALGOS = list(mst.ALGORITHMS)
FLOW_ALGOS = list(maxflow.ALGORITHMS)


def _names(g, e):
    return tuple(sorted((g.vstr(g.left(e)), g.vstr(g.right(e)))))


# -- regressions -------------------------------------------------------------

@criterion(*AC_MST)
@pytest.mark.parametrize("algo", MST_ALGOS)
def test_mst_regression_weight(algo):
    g = WGraph.from_text(MST_GRAPH)
    t0 = time.perf_counter()
    r = mst.mst(g, algo)
    assert time.perf_counter() - t0 < 1.0
    assert r.weight == MST_WEIGHT
    assert mst.verify(g, r) is None


@criterion(*AC_MST)
@pytest.mark.parametrize("algo", MST_ALGOS)
def test_mst_regression_edge_set(algo):
    g = WGraph.from_text(MST_GRAPH)
    r = mst.mst(g, algo)
    assert {_names(g, e) for e in r.edges} == {tuple(sorted(p)) for p in MST_EDGES}


@criterion(*AC_MST)
def test_mst_regression_optimum_is_unique():
    g = WGraph.from_text(MST_GRAPH)
    edges = [(g.left(e), g.right(e), g.weight[e]) for e in g.edges()]
    best, trees = oracles.all_minimum_spanning_trees(g.n, edges)
    assert best == MST_WEIGHT
    assert len(trees) == 1, f"{len(trees)} spanning trees reach weight {best}"


@criterion(*AC_SPT)
@pytest.mark.parametrize("algo", list(paths.SPT_ALGORITHMS))
def test_spt_regression(algo):
    g = WDigraph.from_text(SPT_GRAPH)
    t = paths.spt(g, 1, algo)
    assert t.dist[1:] == SPT_DIST
    assert t.dist_sum() == SPT_DIST_SUM
    assert paths.verify(g, 1, t) is None


@criterion(*AC_FLOW)
@pytest.mark.parametrize("algo", FLOW_ALGOS)
def test_flow_regression(algo):
    g = FlowGraph.from_text(FLOW_GRAPH)
    g.clear_flow()
    assert maxflow.max_flow(g, algo) == FLOW_VALUE
    assert maxflow.verify(g, FLOW_VALUE) is None


@criterion(*AC_FLOW)
def test_flow_regression_listed_flow():
    g = FlowGraph.from_text(FLOW_GRAPH)
    assert g.total_flow() == FLOW_VALUE
    assert maxflow.verify(g, FLOW_VALUE) is None


# -- oracle equivalence ------------------------------------------------------

ORACLE_INSTANCES = 500
_oracle_clock = {"spent": 0.0}


def _connected(rng, directed=False):
    n = rng.randint(2, 7)
    return n, oracles.random_connected_pairs(rng, n, rng.randint(0, n), directed)


def _oracle_mst(rng):
    n, pairs = _connected(rng)
    edges = [(u, v, rng.randint(1, 9)) for u, v in pairs]
    g = WGraph(n)
    for u, v, w in edges:
        g.join(u, v, w)
    best, _ = oracles.all_minimum_spanning_trees(n, edges)
    for algo in MST_ALGOS:
        assert mst.mst(g, algo).weight == best, algo


def _oracle_paths(rng):
    n, pairs = _connected(rng, directed=True)
    arcs = [(u, v, rng.randint(0, 9)) for u, v in pairs]
    g = WDigraph(n)
    for u, v, w in arcs:
        g.join(u, v, w)
    s = rng.randint(1, n)
    want = oracles.simple_path_distances(n, arcs, s)
    for algo in paths.SPT_ALGORITHMS:
        assert paths.spt(g, s, algo).dist[1:] == want[1:], algo
    for algo in paths.APSP_ALGORITHMS:
        assert paths.apsp(g, algo).dist[s][1:] == want[1:], algo


def _oracle_maxflow(rng):
    n, pairs = _connected(rng, directed=True)
    arcs = [(u, v, rng.randint(0, 9)) for u, v in pairs]
    s, t = rng.sample(range(1, n + 1), 2)
    want = oracles.min_cut_value(n, arcs, s, t)
    for algo in FLOW_ALGOS:
        g = FlowGraph(n, s, t)
        for u, v, c in arcs:
            g.join(u, v, c)
        assert maxflow.max_flow(g, algo) == want, algo


def _oracle_mincost(rng):
    n, pairs = _connected(rng, directed=True)
    pairs = pairs[:8]
    arcs = [(u, v, rng.randint(0, 3), rng.randint(0, 9)) for u, v in pairs]
    s, t = rng.sample(range(1, n + 1), 2)
    want = oracles.min_cost_max_flow(n, arcs, s, t)
    for algo in mincost.ALGORITHMS:
        g = WFlowGraph(n, s, t)
        for u, v, c, k in arcs:
            g.join(u, v, c, k)
        r = mincost.min_cost_max_flow(g, algo)
        assert (r.flow, r.cost) == want, algo


def _bipartite_connected(rng, weighted):
    # random spanning tree with each vertex joined to an earlier vertex of
    # the other parity class, plus extra cross edges
    n = rng.randint(2, 7)
    pairs = []
    for v in range(2, n + 1):
        cands = [u for u in range(1, v) if u % 2 != v % 2]
        pairs.append((rng.choice(cands), v))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(1, n + 1), 2)
        if u % 2 != v % 2:
            pairs.append((u, v))
    g = WGraph(n) if weighted else Graph(n)
    ws = []
    for u, v in pairs:
        if weighted:
            ws.append(rng.randint(1, 9))
            g.join(u, v, ws[-1])
        else:
            g.join(u, v)
    return g, pairs, ws


def _oracle_matching(rng):
    g, pairs, _ = _bipartite_connected(rng, False)
    want = oracles.best_matching(pairs)
    for algo in matching.SIZE_ALGORITHMS:
        assert matching.max_size_matching(g, algo).size == want, algo
    # general graphs for the blossom algorithm
    n, gp = _connected(rng)
    h = Graph(n)
    for u, v in gp:
        h.join(u, v)
    assert matching.edmonds_gabow(h).size == oracles.best_matching(gp)


def _oracle_wmatching(rng):
    g, pairs, ws = _bipartite_connected(rng, True)
    want = oracles.best_matching(pairs, ws)
    for algo in matching.WEIGHT_ALGORITHMS:
        assert matching.max_weight_matching(g, algo).weight == want, algo


ORACLE_PROBLEMS = {
    "mst": _oracle_mst,
    "shortest paths": _oracle_paths,
    "max flow": _oracle_maxflow,
    "min-cost max flow": _oracle_mincost,
    "matching size": _oracle_matching,
    "matching weight": _oracle_wmatching,
}


@criterion(*AC_ORACLE)
@pytest.mark.parametrize("problem", list(ORACLE_PROBLEMS))
def test_oracle_equivalence(problem):
    rng = random.Random(f"oracle-{problem}")
    t0 = time.perf_counter()
    for _ in range(ORACLE_INSTANCES):
        ORACLE_PROBLEMS[problem](rng)
    _oracle_clock["spent"] += time.perf_counter() - t0


@criterion(*AC_ORACLE)
def test_oracle_suite_time():
    assert 0 < _oracle_clock["spent"] < 300


# -- cross-algorithm agreement -------------------------------------------------

SEEDS = range(100)
SIZES = (10, 50, 200)


def _bip_edges(n):
    return min(4 * n, n * n // 5)


def _extra(n):
    return max(1, n // 10)


def _agree_mst(n, seed):
    g = rand_graph("wgraph", n, 4 * n, 1, 1000, seed, 1)
    return [mst.mst(g, a).weight for a in MST_ALGOS]


def _agree_spt(n, seed):
    g = rand_graph("wdigraph", n, 4 * n, 0, 1000, seed, 1)
    return [paths.spt(g, 1, a).dist for a in paths.SPT_ALGORITHMS]


def _agree_apsp(n, seed):
    g = rand_graph("wdigraph", n, 4 * n, 0, 1000, seed, 1)
    return [paths.apsp(g, a).dist for a in paths.APSP_ALGORITHMS]


def _agree_maxflow(n, seed):
    out = []
    for a in FLOW_ALGOS:
        g = rand_graph("flograph", n, 4 * n, 1, 100, seed, 1, extra=_extra(n))
        out.append(maxflow.max_flow(g, a))
    return out


def _agree_mincost(n, seed):
    out = []
    for a in mincost.ALGORITHMS:
        g = rand_graph("wflograph", n, 4 * n, 1, 50, seed, 1, extra=_extra(n), clo=0, chi=100)
        r = mincost.min_cost_max_flow(g, a)
        out.append((r.flow, r.cost))
    return out


def _agree_matching(n, seed):
    g = rand_graph("bigraph", n, _bip_edges(n), seed=seed, scramble=1)
    return [matching.max_size_matching(g, a).size for a in matching.SIZE_ALGORITHMS]


def _agree_wmatching(n, seed):
    g = rand_graph("wbigraph", n, _bip_edges(n), 1, 1000, seed, 1)
    return [matching.max_weight_matching(g, a).weight for a in matching.WEIGHT_ALGORITHMS]


def _agree_ecolor(n, seed):
    g = rand_graph("bigraph", n, _bip_edges(n), seed=seed, scramble=1)
    return [ecolor.ecolor(g, a).num_colors for a in ecolor.ALGORITHMS] + [g.max_degree()]


FAMILIES = {
    "mst": _agree_mst,
    "spt": _agree_spt,
    "apsp": _agree_apsp,
    "maxflow": _agree_maxflow,
    "mincost": _agree_mincost,
    "matching": _agree_matching,
    "wmatching": _agree_wmatching,
    "ecolor": _agree_ecolor,
}


@criterion(*AC_AGREE)
@pytest.mark.parametrize("n", SIZES)
@pytest.mark.parametrize("family", list(FAMILIES))
def test_cross_algorithm_agreement(family, n):
    for seed in SEEDS:
        vals = FAMILIES[family](n, seed)
        assert all(v == vals[0] for v in vals), (family, n, seed, vals)


# -- edge colouring -------------------------------------------------------------

@criterion(*AC_COLOR)
@pytest.mark.parametrize("algo", list(ecolor.ALGORITHMS))
def test_edge_coloring_optimal(algo):
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(2, 50)
        n1 = (n + 1) // 2
        g = Graph(n)
        for _ in range(rng.randint(0, 4 * n)):
            g.join(rng.randint(1, n1), rng.randint(n1 + 1, n))  # parallel edges allowed
        c = ecolor.ecolor(g, algo)
        assert ecolor.verify(g, c) is None
        assert ecolor.gap(g, c) == 0
        assert c.num_colors == g.max_degree()


# -- data structure fuzzing ---------------------------------------------------------

FUZZ_OPS = 10_000


@criterion(*AC_FUZZ)
def test_fuzz_disjoint_sets():
    rng = random.Random(1)
    n = 200
    ds = DisjointSets(n)
    label = list(range(n + 1))
    for _ in range(FUZZ_OPS):
        x, y = rng.randint(1, n), rng.randint(1, n)
        if rng.random() < 0.3:
            if label[x] != label[y]:
                ds.union_of(x, y)
                old = label[y]
                label = [label[x] if v == old else v for v in label]
        else:
            assert (ds.find(x) == ds.find(y)) == (label[x] == label[y])


def _fuzz_heap(heap, n, rng, decrease_only):
    ref: dict = {}
    for _ in range(FUZZ_OPS):
        r = rng.random()
        if r < 0.4 and len(ref) < n:
            x = rng.choice([v for v in range(1, n + 1) if v not in ref])
            ref[x] = rng.randint(0, 100)
            heap.insert(x, ref[x])
        elif r < 0.7 and ref:
            x = rng.choice(list(ref))
            ref[x] = rng.randint(0, ref[x]) if decrease_only else rng.randint(0, 100)
            heap.change_key(x, ref[x])
        elif ref:
            want = min(ref, key=lambda v: (ref[v], v))
            assert heap.delete_min() == want
            del ref[want]
        assert len(heap) == len(ref)


@criterion(*AC_FUZZ)
def test_fuzz_dheap():
    _fuzz_heap(DHeap(64, 3), 64, random.Random(2), False)


@criterion(*AC_FUZZ)
def test_fuzz_fibheap():
    _fuzz_heap(FibHeap(64), 64, random.Random(3), True)


@criterion(*AC_FUZZ)
def test_fuzz_leftist_heaps():
    rng = random.Random(4)
    n = 64
    lh = LeftistHeaps(n)
    heaps: dict = {}
    free = list(range(1, n + 1))
    for _ in range(FUZZ_OPS):
        r = rng.random()
        if r < 0.4 and free:
            x = free.pop(rng.randrange(len(free)))
            heaps[lh.make(x, rng.randint(0, 100))] = {x}
        elif r < 0.7 and len(heaps) > 1:
            a, b = rng.sample(list(heaps), 2)
            items = heaps.pop(a) | heaps.pop(b)
            heaps[lh.meld(a, b)] = items
        elif heaps:
            h = rng.choice(list(heaps))
            items = heaps.pop(h)
            want = min(items, key=lambda v: (lh.key[v], v))
            x, nh = lh.delete_min(h)
            assert x == want
            items.discard(x)
            free.append(x)
            if items:
                heaps[nh] = items


@criterion(*AC_FUZZ)
def test_fuzz_dynamic_trees():
    rng = random.Random(5)
    n = 60
    dt = DynamicTrees(n)
    parent = [0] * (n + 1)
    cost = [math.inf] * (n + 1)

    def path(x):
        out = [x]
        while parent[out[-1]]:
            out.append(parent[out[-1]])
        return out

    for _ in range(FUZZ_OPS):
        r = rng.random()
        x = rng.randint(1, n)
        if r < 0.25:
            v = rng.randint(1, n)
            if not parent[x] and path(v)[-1] != x:
                c = rng.randint(0, 50)
                dt.link(x, v, c)
                parent[x], cost[x] = v, c
        elif r < 0.4:
            if parent[x]:
                assert dt.cut(x) == cost[x]
                parent[x], cost[x] = 0, math.inf
        elif r < 0.55:
            d = rng.randint(-5, 5)
            dt.addcost(x, d)
            for y in path(x):
                cost[y] += d
        elif r < 0.7:
            assert dt.findroot(x) == path(x)[-1]
        else:
            best = None
            for y in path(x):
                if best is None or cost[y] <= cost[best]:
                    best = y
            assert dt.findcost(x) == (best, cost[best])


# -- format fidelity ------------------------------------------------------------------

@criterion(*AC_FORMAT)
def test_five_vertex_listing_bytes():
    g = Graph(5)
    for u, v in [(1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5)]:
        g.join(u, v)
    assert g.to_text() == FIVE_VERTEX


@criterion(*AC_FORMAT)
def test_round_trip_all_dialects():
    kinds = [("ugraph", Graph), ("bigraph", Graph), ("tree", Graph), ("wgraph", WGraph),
             ("wbigraph", WGraph), ("digraph", Digraph), ("dag", Digraph),
             ("wdigraph", WDigraph), ("flograph", FlowGraph), ("wflograph", WFlowGraph)]
    rng = random.Random(8)
    for i in range(200):
        kind, cls = kinds[i % len(kinds)]
        n = rng.choice([8, 20, 26, 27, 60])
        m = n - 1 if kind == "tree" else rng.randint(n, 2 * n)
        lo = 0 if "flo" in kind else -20  # capacities are non-negative
        g = rand_graph(kind, n, m, lo, 40, seed=i, scramble=i % 2, extra=2, clo=-5, chi=5)
        if isinstance(g, FlowGraph):
            for e in g.edges():
                g.flow[e] = rng.randint(0, g.cap[e])
        text = g.to_text()
        h = cls.from_text(text)
        assert h.to_text() == text
        assert sorted(h.attrs(e) + (h.left(e), h.right(e)) for e in h.edges()) == \
            sorted(g.attrs(e) + (g.left(e), g.right(e)) for e in g.edges())


# -- timing driver ------------------------------------------------------------------------

@criterion(*AC_TIMING)
def test_timing_driver_table():
    import io

    from idxgraph.cli import main
    for n in (20, 40, 80):
        out = io.StringIO()
        assert main(["time", "mst", "prim", "--n", str(n), "--m", str(3 * n), "--reps", "2"],
                    out=out) == 0
        lines = out.getvalue().strip().split("\n")
        assert lines[0] == "rep,seed,millis" and len(lines) == 4
        for ln in lines[1:3]:
            rep, seed, ms = ln.split(",")
            assert float(ms) >= 0
        assert lines[3].startswith("mean,,")
