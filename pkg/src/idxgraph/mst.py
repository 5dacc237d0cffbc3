"""Minimum spanning forests: Prim (d-heap and Fibonacci heap), Kruskal and
Cheriton-Tarjan, plus a verifier."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .ds import DHeap, DisjointSets, FibHeap, LeftistHeaps
from .graph import WGraph


@dataclass
class MstResult:
    edges: list[int] = field(default_factory=list)
    weight: int = 0

    def to_text(self, g: WGraph) -> str:
        return " ".join(g.edge_text(e) for e in self.edges)


def _result(g: WGraph, edges: list[int]) -> MstResult:
    return MstResult(edges, sum(g.weight[e] for e in edges))


def _prim(g: WGraph, heap) -> list[int]:
    n = g.n
    adj = g.adj_lists()
    w = g.weight
    done = [False] * (n + 1)
    cheap = [0] * (n + 1)  # edge currently connecting v to the tree
    tree = []
    for start in range(1, n + 1):
        if done[start]:
            continue
        heap.insert(start, 0)
        while heap:
            u = heap.delete_min()
            done[u] = True
            if cheap[u]:
                tree.append(cheap[u])
            for e in adj[u]:
                v = g.mate(u, e)
                if done[v]:
                    continue
                if v not in heap:
                    cheap[v] = e
                    heap.insert(v, w[e])
                elif w[e] < heap.key[v]:
                    cheap[v] = e
                    heap.change_key(v, w[e])
    return tree


def prim(g: WGraph) -> MstResult:
    """Prim's algorithm on a d-heap with d = 2 + m/n."""
    d = 2 + g.m // max(g.n, 1)
    return _result(g, _prim(g, DHeap(g.n, d)))


def prim_fib(g: WGraph) -> MstResult:
    """Prim's algorithm on a Fibonacci heap."""
    return _result(g, _prim(g, FibHeap(g.n)))


def kruskal(g: WGraph) -> MstResult:
    w = g.weight
    order = sorted(g.edges(), key=lambda e: (w[e], e))
    ds = DisjointSets(g.n)
    tree = []
    for e in order:
        ru, rv = ds.find(g.left(e)), ds.find(g.right(e))
        if ru != rv:
            ds.link(ru, rv)
            tree.append(e)
            if len(tree) == g.n - 1:
                break
    return _result(g, tree)


def cheriton_tarjan(g: WGraph) -> MstResult:
    """Cheriton-Tarjan: grow subtrees round-robin, each holding a leftist heap
    of the endpoints incident to it; internal edges are dropped lazily."""
    n = g.n
    w = g.weight
    ds = DisjointSets(n)
    heaps = LeftistHeaps(2 * g.max_edge + 1)
    h = [0] * (n + 1)
    for u in range(1, n + 1):
        for ep in g.endpoints_at(u):
            h[u] = heaps.meld(h[u], heaps.make(ep, w[ep >> 1]))

    left, right = g.left, g.right

    def internal(ep: int) -> bool:
        e = ep >> 1
        return ds.find(left(e)) == ds.find(right(e))

    stamp = [0] * (n + 1)
    queue = deque((u, 0) for u in range(1, n + 1))
    tree = []
    while queue:
        t, st = queue.popleft()
        if stamp[t] != st or ds.find(t) != t:
            continue
        h[t] = heaps.find_min(h[t], internal)
        if h[t] == 0:
            continue  # subtree spans its component
        e = h[t] >> 1
        tree.append(e)
        rt, ru = ds.find(left(e)), ds.find(right(e))
        other = ru if rt == t else rt
        merged = heaps.meld(h[t], h[other])
        r = ds.link(t, other)
        h[r] = merged
        stamp[t] += 1
        stamp[other] += 1
        queue.append((r, stamp[r]))
    return _result(g, tree)


ALGORITHMS = {
    "prim": prim,
    "primf": prim_fib,
    "kruskal": kruskal,
    "cheritontarjan": cheriton_tarjan,
}


def mst(g: WGraph, algo: str = "prim") -> MstResult:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown mst algorithm {algo!r}") from None
    return fn(g)


def verify(g: WGraph, result: MstResult) -> Optional[str]:
    """Check that ``result`` is a minimum spanning forest of ``g``.

    Returns None when it is, otherwise a description of the first problem.
    """
    n = g.n
    ds = DisjointSets(n)
    tree_adj: list[list[int]] = [[] for _ in range(n + 1)]
    seen = set()
    for e in result.edges:
        if not g.valid_edge(e):
            return f"{e} is not an edge"
        if e in seen:
            return f"edge {g.edge_text(e)} listed twice"
        seen.add(e)
        ru, rv = ds.find(g.left(e)), ds.find(g.right(e))
        if ru == rv:
            return f"edge {g.edge_text(e)} closes a cycle"
        ds.link(ru, rv)
        tree_adj[g.left(e)].append(e)
        tree_adj[g.right(e)].append(e)
    if sum(g.weight[e] for e in result.edges) != result.weight:
        return "reported weight does not match the edges"
    for e in g.edges():
        if ds.find(g.left(e)) != ds.find(g.right(e)):
            return f"not spanning: edge {g.edge_text(e)} joins two trees"

    # root each tree, then compare every non-tree edge with its tree path
    parent_edge = [0] * (n + 1)
    depth = [-1] * (n + 1)
    for r in range(1, n + 1):
        if depth[r] >= 0:
            continue
        depth[r] = 0
        stack = [r]
        while stack:
            u = stack.pop()
            for e in tree_adj[u]:
                v = g.mate(u, e)
                if depth[v] < 0:
                    depth[v] = depth[u] + 1
                    parent_edge[v] = e
                    stack.append(v)
    for e in g.edges():
        if e in seen:
            continue
        u, v = g.left(e), g.right(e)
        heaviest = None
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            pe = parent_edge[u]
            if heaviest is None or g.weight[pe] > g.weight[heaviest]:
                heaviest = pe
            u = g.mate(u, pe)
        if heaviest is not None and g.weight[heaviest] > g.weight[e]:
            return (f"not minimum: non-tree edge {g.edge_text(e)} is lighter than "
                    f"tree edge {g.edge_text(heaviest)} on its cycle")
    return None
