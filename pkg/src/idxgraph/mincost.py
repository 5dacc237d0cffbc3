"""Minimum-cost maximum flow: cycle cancelling, least-cost augmenting paths
and capacity scaling."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .ds import DHeap
from .graph import WFlowGraph
from .maxflow import _Net, dinic, verify as flow_verify

INF = float("inf")


@dataclass
class McfResult:
    flow: int
    cost: int


class _CostNet(_Net):
    def __init__(self, g: WFlowGraph):
        super().__init__(g)
        self.costs = g.cost

    def cost(self, e: int, u: int) -> int:
        return self.costs[e] if u == self.tail[e] else -self.costs[e]


def _check(g: WFlowGraph) -> None:
    if g.source == g.sink:
        raise ValueError("source and sink must differ")


def _parent_cycle(n: int, pedge: list[int], net: _CostNet) -> Optional[int]:
    """A vertex on a cycle of parent pointers, or None."""
    state = [0] * (n + 1)  # 0 unvisited, 1 on current walk, 2 finished
    for v in range(1, n + 1):
        walk = []
        x = v
        while x and state[x] == 0 and pedge[x]:
            state[x] = 1
            walk.append(x)
            x = net.other(pedge[x], x)
        hit = x if x and state[x] == 1 else None
        for y in walk:
            state[y] = 2
        if hit is not None:
            return hit
    return None


def find_negative_cycle(net: _CostNet) -> Optional[list[tuple[int, int]]]:
    """A negative-cost cycle in the residual graph as ``(edge, from)`` pairs,
    or None.

    Queue-based Bellman-Ford from a virtual source at distance 0 to every
    vertex; every n relaxations the parent pointers are checked for a cycle,
    and any such cycle has negative cost.
    """
    n = net.n
    dist = [0] * (n + 1)
    pedge = [0] * (n + 1)
    inq = [True] * (n + 1)
    q = deque(range(1, n + 1))
    relaxed = 0
    v = None
    while q:
        u = q.popleft()
        inq[u] = False
        du = dist[u]
        for e in net.adj[u]:
            if net.res(e, u) > 0:
                w = net.other(e, u)
                nd = du + net.cost(e, u)
                if nd < dist[w]:
                    dist[w] = nd
                    pedge[w] = e
                    relaxed += 1
                    if not inq[w]:
                        inq[w] = True
                        q.append(w)
        if relaxed >= n:
            relaxed = 0
            v = _parent_cycle(n, pedge, net)
            if v is not None:
                break
    if v is None:
        v = _parent_cycle(n, pedge, net)
        if v is None:
            return None
    cycle = []
    x = v
    while True:
        e = pedge[x]
        u = net.other(e, x)
        cycle.append((e, u))
        x = u
        if x == v:
            break
    cycle.reverse()
    return cycle


def cycle_reduction(g: WFlowGraph) -> McfResult:
    """Maximum flow by Dinic, then cancel negative residual cycles."""
    _check(g)
    dinic(g)
    net = _CostNet(g)
    while (cycle := find_negative_cycle(net)) is not None:
        x = min(net.res(e, u) for e, u in cycle)
        for e, u in cycle:
            net.push(e, u, x)
    return McfResult(g.total_flow(), g.total_cost())


def _reject_negative_cycles(net: _CostNet) -> None:
    if find_negative_cycle(net) is not None:
        raise ValueError("input has a negative-cost cycle with spare capacity")


def _initial_potentials(net: _CostNet) -> list:
    """Bellman-Moore distances from the source over residual edges."""
    n, s = net.n, net.s
    pot = [INF] * (n + 1)
    pot[s] = 0
    inq = [False] * (n + 1)
    q = deque([s])
    inq[s] = True
    while q:
        u = q.popleft()
        inq[u] = False
        for e in net.adj[u]:
            if net.res(e, u) > 0:
                v = net.other(e, u)
                nd = pot[u] + net.cost(e, u)
                if nd < pot[v]:
                    pot[v] = nd
                    if not inq[v]:
                        inq[v] = True
                        q.append(v)
    return [0 if p == INF else p for p in pot]


def _dijkstra(net: _CostNet, sources, pot, delta: int = 1):
    """Reduced-cost Dijkstra over residual edges with residual >= delta.

    Returns (dist, pedge); unreached vertices have dist INF.
    """
    n = net.n
    d = 2 + net.g.m // max(n, 1)
    heap = DHeap(n, d)
    dist = [INF] * (n + 1)
    pedge = [0] * (n + 1)
    done = [False] * (n + 1)
    for s in sources:
        dist[s] = 0
        heap.insert(s, 0)
    while heap:
        u = heap.delete_min()
        done[u] = True
        du = dist[u]
        pu = pot[u]
        for e in net.adj[u]:
            if net.res(e, u) < delta:
                continue
            v = net.other(e, u)
            if done[v]:
                continue
            nd = du + net.cost(e, u) + pu - pot[v]
            if nd < dist[v]:
                dist[v] = nd
                pedge[v] = e
                if v in heap:
                    heap.change_key(v, nd)
                else:
                    heap.insert(v, nd)
    return dist, pedge


def _update_potentials(pot: list, dist: list, cap_at) -> None:
    for v in range(1, len(pot)):
        pot[v] += min(dist[v], cap_at)


def least_cost(g: WFlowGraph) -> McfResult:
    """Successive least-cost augmenting paths with Dijkstra on reduced costs."""
    _check(g)
    net = _CostNet(g)
    _reject_negative_cycles(net)
    pot = _initial_potentials(net)
    s, t = net.s, net.t
    while True:
        dist, pedge = _dijkstra(net, [s], pot)
        if dist[t] == INF:
            break
        _update_potentials(pot, dist, dist[t])
        net.augment_path(pedge, net.path_bottleneck(pedge))
    return McfResult(g.total_flow(), g.total_cost())


def capacity_scaling(g: WFlowGraph) -> McfResult:
    """Capacity scaling with excesses: fix the flow value with Dinic, then
    route it at minimum cost phase by phase, only using residual edges of at
    least delta and saturating any such edge of negative reduced cost at the
    start of a phase."""
    _check(g)
    net = _CostNet(g)
    _reject_negative_cycles(net)
    target = dinic(g)
    for e in g.edges():
        g.flow[e] = 0
    n, s, t = net.n, net.s, net.t
    excess = [0] * (n + 1)
    excess[s], excess[t] = target, -target
    pot = [0] * (n + 1)
    top = max([target] + [g.cap[e] for e in g.edges()])
    delta = 1
    while 2 * delta <= top:
        delta *= 2
    while delta >= 1:
        for u in range(1, n + 1):
            for e in net.adj[u]:
                r = net.res(e, u)
                if r >= delta:
                    v = net.other(e, u)
                    if net.cost(e, u) + pot[u] - pot[v] < 0:
                        net.push(e, u, r)
                        excess[u] -= r
                        excess[v] += r
        while True:
            srcs = [v for v in range(1, n + 1) if excess[v] >= delta]
            if not srcs:
                break
            dist, pedge = _dijkstra(net, srcs, pot, delta)
            sinks = [v for v in range(1, n + 1) if excess[v] <= -delta and dist[v] < INF]
            if not sinks:
                break
            k = min(sinks, key=lambda v: (dist[v], v))
            _update_potentials(pot, dist, dist[k])
            # sources keep pedge 0, so the walk back stops at one of them
            v = k
            while pedge[v]:
                e = pedge[v]
                u = net.other(e, v)
                net.push(e, u, delta)
                v = u
            excess[v] -= delta
            excess[k] += delta
        delta //= 2
    if any(excess[v] for v in range(1, n + 1)):
        raise RuntimeError("capacity scaling left unbalanced excess")
    return McfResult(g.total_flow(), g.total_cost())


ALGORITHMS = {"cr": cycle_reduction, "lc": least_cost, "scale": capacity_scaling}


def min_cost_max_flow(g: WFlowGraph, algo: str = "lc") -> McfResult:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown min-cost flow algorithm {algo!r}") from None
    return fn(g)


def verify(g: WFlowGraph, result: Optional[McfResult] = None) -> Optional[str]:
    """Flow checks plus absence of a negative-cost residual cycle."""
    msg = flow_verify(g, result.flow if result else None)
    if msg:
        return msg
    if result is not None and result.cost != g.total_cost():
        return f"reported cost {result.cost} but the flow costs {g.total_cost()}"
    cycle = find_negative_cycle(_CostNet(g))
    if cycle is not None:
        verts = " ".join(g.vstr(u) for _, u in cycle)
        return f"not minimum cost: negative residual cycle through {verts}"
    return None
