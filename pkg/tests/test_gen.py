import pytest

from idxgraph.gen import KINDS, SplitMix64, rand_graph
from idxgraph.matching import bipartition


def test_splitmix_reference_values():
    # first outputs for seed 0 of the published SplitMix64 reference
    r = SplitMix64(0)
    assert r.next_u64() == 0xE220A8397B1DCDAF
    assert r.next_u64() == 0x6E789E6AA1B965F4


def test_deterministic():
    a = rand_graph("wgraph", 6, 8, 1, 9, seed=1).to_text()
    assert rand_graph("wgraph", 6, 8, 1, 9, seed=1).to_text() == a
    assert rand_graph("wgraph", 6, 8, 1, 9, seed=2).to_text() != a


@pytest.mark.parametrize("kind", KINDS)
def test_counts_and_ranges(kind):
    n = 12
    m = n - 1 if kind == "tree" else 20
    g = rand_graph(kind, n, m, 3, 7, seed=5, scramble=1, extra=3, clo=-2, chi=2)
    assert g.n == n and g.m == m
    pairs = set()
    for e in g.edges():
        key = (g.left(e), g.right(e)) if g.directed else frozenset((g.left(e), g.right(e)))
        assert key not in pairs
        pairs.add(key)
    for attr in ("weight", "length", "cap"):
        vals = getattr(g, attr, None)
        if vals is not None and kind not in ("ugraph", "bigraph", "tree", "digraph", "dag"):
            assert all(3 <= vals[e] <= 7 for e in g.edges())
    if kind == "wflograph":
        assert all(-2 <= g.cost[e] <= 2 for e in g.edges())


def test_bigraph_is_bipartite():
    g = rand_graph("bigraph", 15, 30, seed=2, scramble=1)
    bipartition(g)


def test_dag_is_acyclic():
    g = rand_graph("dag", 15, 40, seed=3, scramble=1)
    indeg = [0] * 16
    for e in g.edges():
        indeg[g.head(e)] += 1
    order = [v for v in range(1, 16) if indeg[v] == 0]
    for u in order:
        for e in g.out_edges(u):
            indeg[g.head(e)] -= 1
            if indeg[g.head(e)] == 0:
                order.append(g.head(e))
    assert len(order) == 15


def test_tree_connected():
    g = rand_graph("tree", 20, 19, seed=4, scramble=1)
    seen, stack = {1}, [1]
    while stack:
        u = stack.pop()
        for e in g.edges_at(u):
            v = g.mate(u, e)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    assert len(seen) == 20


def test_flograph_layout():
    g = rand_graph("flograph", 10, 20, 2, 30, seed=1, extra=4)
    assert (g.source, g.sink) == (9, 10)
    assert sum(1 for _ in g.out_edges(9)) == 4
    assert sum(1 for _ in g.in_edges(10)) == 4


@pytest.mark.parametrize("args", [
    ("tree", 5, 5), ("ugraph", 4, 7), ("flograph", 10, 20, 2, 30, 1, 0, 10), ("nosuch", 3, 1),
])
def test_bad_arguments(args):
    kind, n, m, *rest = args
    kw = {}
    if rest:
        kw = dict(lo=rest[0], hi=rest[1], seed=rest[2], scramble=rest[3], extra=rest[4])
    with pytest.raises(ValueError):
        rand_graph(kind, n, m, **kw)
