"""Shortest paths on weighted digraphs.

Distances are Python ints; ``UNREACHABLE`` (None) marks vertices with no
path, so accidental arithmetic on it raises instead of producing a bogus
number.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .ds import DHeap
from .graph import WDigraph

UNREACHABLE = None


class NegativeCycleError(ValueError):
    pass


@dataclass
class PathTree:
    source: int
    parent: list[int]  # parent edge per vertex, 0 at the source / unreachable
    dist: list[Optional[int]]

    def dist_sum(self) -> int:
        return sum(d for d in self.dist[1:] if d is not UNREACHABLE)

    def edges(self) -> list[int]:
        return [e for e in self.parent[1:] if e]


@dataclass
class ApspResult:
    dist: list[list[Optional[int]]]
    parent: list[list[int]]  # parent[u][v]: last edge of a shortest u-v path

    def path(self, g: WDigraph, u: int, v: int) -> Optional[list[int]]:
        if self.dist[u][v] is UNREACHABLE:
            return None
        out = []
        while v != u:
            e = self.parent[u][v]
            out.append(e)
            v = g.tail(e)
        out.reverse()
        return out


def _dijkstra(g: WDigraph, s: int, lengths, out=None):
    n = g.n
    out = out if out is not None else g.out_lists()
    d = max(2, 2 + g.m // max(n, 1))
    heap = DHeap(n, d)
    dist = [UNREACHABLE] * (n + 1)
    parent = [0] * (n + 1)
    done = [False] * (n + 1)
    dist[s] = 0
    heap.insert(s, 0)
    head = g._right
    while heap:
        u = heap.delete_min()
        done[u] = True
        du = dist[u]
        for e in out[u]:
            v = head[e]
            if done[v]:
                continue
            nd = du + lengths[e]
            if dist[v] is UNREACHABLE:
                dist[v] = nd
                parent[v] = e
                heap.insert(v, nd)
            elif nd < dist[v]:
                dist[v] = nd
                parent[v] = e
                heap.change_key(v, nd)
    return parent, dist


def dijkstra(g: WDigraph, s: int) -> PathTree:
    if any(g.length[e] < 0 for e in g.edges()):
        raise ValueError("Dijkstra's algorithm needs non-negative lengths")
    g._check_vertex(s)
    parent, dist = _dijkstra(g, s, g.length)
    return PathTree(s, parent, dist)


def _bellman_moore(g: WDigraph, sources, lengths, init=None):
    """Queue-based Bellman-Moore from one or more sources.

    Raises NegativeCycleError when some vertex is dequeued more than n+1
    times, which cannot happen without a negative cycle.
    """
    n = g.n
    out = g.out_lists()
    head = g._right
    dist = [UNREACHABLE] * (n + 1)
    parent = [0] * (n + 1)
    inq = [False] * (n + 1)
    count = [0] * (n + 1)
    q = deque()
    for s in sources:
        dist[s] = 0 if init is None else init[s]
        inq[s] = True
        q.append(s)
    while q:
        u = q.popleft()
        inq[u] = False
        count[u] += 1
        if count[u] > n + 1:
            raise NegativeCycleError(f"negative cycle through vertex {u}")
        du = dist[u]
        for e in out[u]:
            v = head[e]
            nd = du + lengths[e]
            if dist[v] is UNREACHABLE or nd < dist[v]:
                dist[v] = nd
                parent[v] = e
                if not inq[v]:
                    inq[v] = True
                    q.append(v)
    return parent, dist


def bellman_moore(g: WDigraph, s: int) -> PathTree:
    g._check_vertex(s)
    parent, dist = _bellman_moore(g, [s], g.length)
    return PathTree(s, parent, dist)


SPT_ALGORITHMS = {"dijkstra": dijkstra, "bellmanmoore": bellman_moore}


def spt(g: WDigraph, s: int = 1, algo: str = "dijkstra") -> PathTree:
    try:
        fn = SPT_ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown shortest path algorithm {algo!r}") from None
    return fn(g, s)


def floyd(g: WDigraph) -> ApspResult:
    """Floyd-Warshall, vectorised over rows with numpy."""
    n = g.n
    big = np.iinfo(np.int64).max // 4
    dist = np.full((n + 1, n + 1), big, dtype=np.int64)
    par = np.zeros((n + 1, n + 1), dtype=np.int64)
    for u in range(1, n + 1):
        dist[u, u] = 0
    for e in g.edges():
        u, v, w = g.tail(e), g.head(e), g.length[e]
        if w < dist[u, v]:
            dist[u, v] = w
            par[u, v] = e
    for k in range(1, n + 1):
        col = dist[:, k]
        row = dist[k, :]
        ok = (col[:, None] < big) & (row[None, :] < big)
        cand = np.where(ok, col[:, None] + row[None, :], big)
        better = cand < dist
        if better.any():
            dist = np.where(better, cand, dist)
            par = np.where(better, par[k, :][None, :], par)
        if dist[k, k] < 0:
            raise NegativeCycleError(f"negative cycle through vertex {k}")
    if (np.diagonal(dist)[1:] < 0).any():
        raise NegativeCycleError("negative cycle")
    d = [[UNREACHABLE if x >= big else int(x) for x in row] for row in dist.tolist()]
    for row in d:
        row[0] = UNREACHABLE
    return ApspResult(d, par.tolist())


def edmonds_karp(g: WDigraph) -> ApspResult:
    """All pairs by reweighting: Bellman-Moore potentials from a virtual
    source, then Dijkstra from every vertex on non-negative reduced lengths."""
    n = g.n
    _, pot = _bellman_moore(g, range(1, n + 1), g.length, init=[0] * (n + 1))
    reduced = [0] * (g.max_edge + 1)
    for e in g.edges():
        reduced[e] = g.length[e] + pot[g.tail(e)] - pot[g.head(e)]
    out = g.out_lists()
    dist: list[list[Optional[int]]] = [[UNREACHABLE] * (n + 1)]
    parent: list[list[int]] = [[0] * (n + 1)]
    for u in range(1, n + 1):
        par, rd = _dijkstra(g, u, reduced, out)
        row = [UNREACHABLE] * (n + 1)
        for v in range(1, n + 1):
            if rd[v] is not UNREACHABLE:
                row[v] = rd[v] - pot[u] + pot[v]
        dist.append(row)
        parent.append(par)
    return ApspResult(dist, parent)


APSP_ALGORITHMS = {"floyd": floyd, "edmondskarp": edmonds_karp}


def apsp(g: WDigraph, algo: str = "floyd") -> ApspResult:
    try:
        fn = APSP_ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown all-pairs algorithm {algo!r}") from None
    return fn(g)


def verify(g: WDigraph, s: int, t: PathTree) -> Optional[str]:
    """Check that ``t`` is a shortest path tree from ``s``; None if it is."""
    n = g.n
    dist, parent = t.dist, t.parent
    if dist[s] != 0:
        return f"distance of source {g.vstr(s)} is {dist[s]}, not 0"
    if parent[s] != 0:
        return "source has a parent edge"
    for e in g.edges():
        u, v = g.tail(e), g.head(e)
        if dist[u] is UNREACHABLE:
            continue
        if dist[v] is UNREACHABLE or dist[v] > dist[u] + g.length[e]:
            return f"edge {g.edge_text(e)} violates dist[{g.vstr(v)}] <= dist[{g.vstr(u)}] + length"
    for v in range(1, n + 1):
        e = parent[v]
        if v == s:
            continue
        if dist[v] is UNREACHABLE:
            if e:
                return f"unreachable vertex {g.vstr(v)} has a parent edge"
            continue
        if not e or not g.valid_edge(e) or g.head(e) != v:
            return f"vertex {g.vstr(v)} has no valid parent edge"
        u = g.tail(e)
        if dist[u] is UNREACHABLE or dist[v] != dist[u] + g.length[e]:
            return f"tree edge {g.edge_text(e)} is not tight"
    # parent pointers must lead back to s
    for v in range(1, n + 1):
        if dist[v] is UNREACHABLE:
            continue
        x, steps = v, 0
        while x != s:
            x = g.tail(parent[x])
            steps += 1
            if steps > n:
                return f"parent edges from {g.vstr(v)} form a cycle"
    return None
