"""Maximum flow: augmenting-path, Dinic and preflow-push families.

Every algorithm works on the residual graph defined by ``FlowGraph.res`` and
starts from whatever flow is already on the graph, so the same code also
maximises a feasible flow with floors.  Each returns the final total flow.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .ds import DHeap, DynamicTrees
from .graph import FloorFlowGraph, FlowGraph


class InfeasibleFlowError(ValueError):
    """No flow meets the floors; ``cut`` is the source side of a saturated
    cut in the auxiliary network that certifies this."""

    def __init__(self, msg: str, cut: set[int]):
        super().__init__(msg)
        self.cut = cut


class _Net:
    """Flat-array view of a flow graph for the inner loops."""

    def __init__(self, g: FlowGraph):
        self.g = g
        self.n = g.n
        self.s = g.source
        self.t = g.sink
        self.tail = g._left
        self.head = g._right
        self.cap = g.cap
        self.flow = g.flow
        self.floor = g.floor if isinstance(g, FloorFlowGraph) else None
        self.adj = g.adj_lists()

    def res(self, e: int, u: int) -> int:
        if u == self.tail[e]:
            return self.cap[e] - self.flow[e]
        return self.flow[e] - (self.floor[e] if self.floor else 0)

    def other(self, e: int, u: int) -> int:
        return self.head[e] if u == self.tail[e] else self.tail[e]

    def push(self, e: int, u: int, x: int) -> None:
        if u == self.tail[e]:
            self.flow[e] += x
        else:
            self.flow[e] -= x

    def augment_path(self, pedge: list[int], x: int) -> None:
        """Push ``x`` along the path to the sink recorded in ``pedge``."""
        v = self.t
        while v != self.s:
            e = pedge[v]
            u = self.other(e, v)
            self.push(e, u, x)
            v = u

    def path_bottleneck(self, pedge: list[int]) -> int:
        v, b = self.t, None
        while v != self.s:
            e = pedge[v]
            u = self.other(e, v)
            r = self.res(e, u)
            b = r if b is None or r < b else b
            v = u
        return b

    def bfs_path(self, delta: int = 1) -> Optional[list[int]]:
        """Shortest residual s-t path using edges with residual >= delta."""
        pedge = [0] * (self.n + 1)
        seen = [False] * (self.n + 1)
        seen[self.s] = True
        q = deque([self.s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                if self.res(e, u) < delta:
                    continue
                v = self.other(e, u)
                if not seen[v]:
                    seen[v] = True
                    pedge[v] = e
                    if v == self.t:
                        return pedge
                    q.append(v)
        return None


def _check(g: FlowGraph) -> None:
    if g.source == g.sink:
        raise ValueError("source and sink must differ")


def ff_shortest_path(g: FlowGraph) -> int:
    """Ford-Fulkerson with shortest (fewest-edge) augmenting paths."""
    _check(g)
    net = _Net(g)
    while (pedge := net.bfs_path()) is not None:
        net.augment_path(pedge, net.path_bottleneck(pedge))
    return g.total_flow()


def ff_max_capacity(g: FlowGraph) -> int:
    """Ford-Fulkerson with maximum-bottleneck paths (Dijkstra variant on a
    d-heap keyed by negated bottleneck)."""
    _check(g)
    net = _Net(g)
    n, s, t = net.n, net.s, net.t
    d = 2 + g.m // max(n, 1)
    while True:
        heap = DHeap(n, d)
        best = [0] * (n + 1)
        pedge = [0] * (n + 1)
        done = [False] * (n + 1)
        best[s] = None
        heap.insert(s, 0)
        while heap:
            u = heap.delete_min()
            done[u] = True
            if u == t:
                break
            bu = best[u]
            for e in net.adj[u]:
                r = net.res(e, u)
                if r == 0:
                    continue
                v = net.other(e, u)
                if done[v]:
                    continue
                b = r if bu is None or r < bu else bu
                if b > best[v]:
                    best[v] = b
                    pedge[v] = e
                    if v in heap:
                        heap.change_key(v, -b)
                    else:
                        heap.insert(v, -b)
        if not done[t]:
            break
        net.augment_path(pedge, best[t])
    return g.total_flow()


def ff_scaling(g: FlowGraph) -> int:
    """Ford-Fulkerson with capacity scaling."""
    _check(g)
    net = _Net(g)
    top = max((g.cap[e] for e in g.edges()), default=0)
    delta = 1
    while 2 * delta <= top:
        delta *= 2
    while delta >= 1:
        while (pedge := net.bfs_path(delta)) is not None:
            net.augment_path(pedge, net.path_bottleneck(pedge))
        delta //= 2
    return g.total_flow()


def _levels(net: _Net) -> Optional[list[int]]:
    level = [-1] * (net.n + 1)
    level[net.s] = 0
    q = deque([net.s])
    while q:
        u = q.popleft()
        for e in net.adj[u]:
            if net.res(e, u) > 0:
                v = net.other(e, u)
                if level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
    return level if level[net.t] >= 0 else None


def dinic(g: FlowGraph) -> int:
    """Dinic's algorithm: level graph plus blocking flow by DFS with
    per-vertex current-edge pointers."""
    _check(g)
    net = _Net(g)
    s, t = net.s, net.t
    adj = net.adj
    while (level := _levels(net)) is not None:
        cur = [0] * (net.n + 1)
        while True:
            # one augmenting path in the level graph, iteratively
            stack_v = [s]
            stack_e: list[int] = []
            while stack_v and stack_v[-1] != t:
                u = stack_v[-1]
                lst = adj[u]
                advanced = False
                while cur[u] < len(lst):
                    e = lst[cur[u]]
                    v = net.other(e, u)
                    if level[v] == level[u] + 1 and net.res(e, u) > 0:
                        stack_v.append(v)
                        stack_e.append(e)
                        advanced = True
                        break
                    cur[u] += 1
                if not advanced:
                    level[u] = -1  # dead end for this phase
                    stack_v.pop()
                    if stack_e:
                        prev = stack_v[-1]
                        stack_e.pop()
                        cur[prev] += 1
            if not stack_v:
                break
            b = min(net.res(e, u) for e, u in zip(stack_e, stack_v))
            for e, u in zip(stack_e, stack_v):
                net.push(e, u, b)
    return g.total_flow()


def dinic_dtrees(g: FlowGraph) -> int:
    """Dinic's algorithm with blocking flows found on dynamic trees.

    Level-graph edges become tree links from a vertex to its successor, with
    the residual capacity stored as the vertex cost; ``findcost`` yields the
    bottleneck and saturated links are cut.
    """
    _check(g)
    net = _Net(g)
    n, s, t = net.n, net.s, net.t
    adj = net.adj
    dt = DynamicTrees(n)
    up = [0] * (n + 1)  # edge linking v to its tree parent
    linked_res = [0] * (n + 1)  # residual of up[v] when linked

    def unlink(v: int) -> None:
        c = dt.cut(v)
        e = up[v]
        net.push(e, v, linked_res[v] - c)
        up[v] = 0

    while (level := _levels(net)) is not None:
        cur = [0] * (n + 1)
        while True:
            u = dt.findroot(s)
            if u == t:
                v, c = dt.findcost(s)
                dt.addcost(s, -c)
                while True:
                    v, c = dt.findcost(s)
                    if c != 0:
                        break
                    unlink(v)
                continue
            lst = adj[u]
            advanced = False
            while cur[u] < len(lst):
                e = lst[cur[u]]
                v = net.other(e, u)
                r = net.res(e, u)
                if level[v] == level[u] + 1 and r > 0:
                    dt.link(u, v, r)
                    up[u] = e
                    linked_res[u] = r
                    advanced = True
                    break
                cur[u] += 1
            if advanced:
                continue
            # retreat: u is a dead end, cut every child hanging off it
            if u == s:
                break
            level[u] = -1
            for e in lst:
                w = net.other(e, u)
                if up[w] == e:
                    unlink(w)
        for v in range(1, n + 1):
            if up[v]:
                unlink(v)
    return g.total_flow()


def _preflow_init(net: _Net) -> tuple[list[int], list[int]]:
    """Exact distance-to-sink labels, label(s) = n, and every source edge
    saturated.  Returns (labels, excess)."""
    n, s, t = net.n, net.s, net.t
    d = [n] * (n + 1)
    d[t] = 0
    q = deque([t])
    while q:
        v = q.popleft()
        for e in net.adj[v]:
            u = net.other(e, v)
            if u != s and d[u] == n and u != t and net.res(e, u) > 0:
                d[u] = d[v] + 1
                q.append(u)
    d[s] = n
    excess = [0] * (n + 1)
    for e in net.adj[s]:
        r = net.res(e, s)
        if r > 0:
            v = net.other(e, s)
            net.push(e, s, r)
            excess[v] += r
            excess[s] -= r
    return d, excess


def _discharge(net: _Net, u: int, d: list[int], excess: list[int], cur: list[int], on_active) -> None:
    """Push excess out of ``u`` along admissible edges, relabelling when the
    current-edge pointer runs off the end of the list."""
    lst = net.adj[u]
    while excess[u] > 0:
        if cur[u] == len(lst):
            low = None
            for e in lst:
                if net.res(e, u) > 0:
                    dv = d[net.other(e, u)]
                    if low is None or dv < low:
                        low = dv
            d[u] = low + 1
            cur[u] = 0
            continue
        e = lst[cur[u]]
        v = net.other(e, u)
        r = net.res(e, u)
        if r > 0 and d[u] == d[v] + 1:
            x = min(r, excess[u])
            net.push(e, u, x)
            excess[u] -= x
            if excess[v] == 0 and v != net.s and v != net.t:
                on_active(v)
            excess[v] += x
        else:
            cur[u] += 1


def preflow_push_fifo(g: FlowGraph) -> int:
    _check(g)
    net = _Net(g)
    d, excess = _preflow_init(net)
    cur = [0] * (net.n + 1)
    q = deque(v for v in range(1, net.n + 1)
              if excess[v] > 0 and v != net.s and v != net.t)
    while q:
        u = q.popleft()
        _discharge(net, u, d, excess, cur, q.append)
    return g.total_flow()


def preflow_push_highest(g: FlowGraph) -> int:
    _check(g)
    net = _Net(g)
    n = net.n
    d, excess = _preflow_init(net)
    cur = [0] * (n + 1)
    buckets: list[list[int]] = [[] for _ in range(2 * n + 1)]
    top = 0

    def activate(v: int) -> None:
        nonlocal top
        buckets[d[v]].append(v)
        if d[v] > top:
            top = d[v]

    for v in range(1, n + 1):
        if excess[v] > 0 and v != net.s and v != net.t:
            activate(v)
    while top >= 0:
        if not buckets[top]:
            top -= 1
            continue
        u = buckets[top].pop()
        _discharge(net, u, d, excess, cur, activate)
    return g.total_flow()


ALGORITHMS = {
    "ffsp": ff_shortest_path,
    "ffmc": ff_max_capacity,
    "ffs": ff_scaling,
    "dinic": dinic,
    "dinicdt": dinic_dtrees,
    "ppf": preflow_push_fifo,
    "pphl": preflow_push_highest,
}


def max_flow(g: FlowGraph, algo: str = "dinic") -> int:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown max flow algorithm {algo!r}") from None
    return fn(g)


def feasible_flow(g: FloorFlowGraph) -> int:
    """Replace the flow on ``g`` by one that meets every floor.

    Uses the usual auxiliary network: each floor becomes a demand at the head
    and a supply at the tail, a super-source feeds the supplies, a super-sink
    drains the demands, and uncapacitated edges between sink and source in
    both directions close the loop (floors can force a negative value).  Raises InfeasibleFlowError if the auxiliary flow cannot saturate
    the super-source edges.
    """
    n = g.n
    ss, tt = n + 1, n + 2
    edges = list(g.edges())
    aux = FlowGraph(n + 2, ss, tt, len(edges) + 2 * n + 2)
    balance = [0] * (n + 1)
    amap = {}
    for e in edges:
        u, v, lo = g.tail(e), g.head(e), g.floor[e]
        amap[e] = aux.join(u, v, g.cap[e] - lo)
        balance[v] += lo
        balance[u] -= lo
    big = sum(g.cap[e] for e in edges) + 1
    aux.join(g.sink, g.source, big)
    aux.join(g.source, g.sink, big)
    need = 0
    for v in range(1, n + 1):
        if balance[v] > 0:
            aux.join(ss, v, balance[v])
            need += balance[v]
        elif balance[v] < 0:
            aux.join(v, tt, -balance[v])
    got = dinic(aux)
    if got < need:
        net = _Net(aux)
        seen = {ss}
        q = deque([ss])
        while q:
            u = q.popleft()
            for e in net.adj[u]:
                v = net.other(e, u)
                if v not in seen and net.res(e, u) > 0:
                    seen.add(v)
                    q.append(v)
        raise InfeasibleFlowError(
            f"floors cannot be met: auxiliary flow {got} < demand {need}",
            {v for v in seen if v <= n})
    for e in edges:
        g.flow[e] = g.floor[e] + aux.flow[amap[e]]
    return g.total_flow()


def max_flow_with_floors(g: FloorFlowGraph, algo: str = "dinic") -> int:
    feasible_flow(g)
    return max_flow(g, algo)


def min_cut(g: FlowGraph) -> set[int]:
    """Vertices reachable from the source in the residual graph."""
    net = _Net(g)
    seen = {net.s}
    q = deque([net.s])
    while q:
        u = q.popleft()
        for e in net.adj[u]:
            v = net.other(e, u)
            if v not in seen and net.res(e, u) > 0:
                seen.add(v)
                q.append(v)
    return seen


def cut_capacity(g: FlowGraph, side: set[int]) -> int:
    """Capacity of the cut (side, rest); floors on backward edges count
    negatively, as they bound the flow that can return."""
    total = 0
    for e in g.edges():
        u, v = g.tail(e), g.head(e)
        if u in side and v not in side:
            total += g.cap[e]
        elif v in side and u not in side:
            total -= g.floor_of(e)
    return total


def verify(g: FlowGraph, total: Optional[int] = None) -> Optional[str]:
    """Check bounds, conservation, the reported total and maximality.

    Returns None if the flow on ``g`` is a maximum flow.
    """
    n = g.n
    bal = [0] * (n + 1)
    for e in g.edges():
        f = g.flow[e]
        if f > g.cap[e]:
            return f"flow {f} exceeds capacity {g.cap[e]} on {g.edge_text(e)}"
        if f < g.floor_of(e):
            return f"flow {f} below floor {g.floor_of(e)} on {g.edge_text(e)}"
        if f < 0:
            return f"negative flow on {g.edge_text(e)}"
        bal[g.tail(e)] -= f
        bal[g.head(e)] += f
    for v in range(1, n + 1):
        if v not in (g.source, g.sink) and bal[v] != 0:
            return f"flow not conserved at {g.vstr(v)} (imbalance {bal[v]})"
    value = -bal[g.source]
    if bal[g.sink] != value:
        return "flow out of the source differs from flow into the sink"
    if total is not None and total != value:
        return f"reported total {total} but the flow carries {value}"
    side = min_cut(g)
    if g.sink in side:
        return "flow is not maximum: the sink is reachable in the residual graph"
    if cut_capacity(g, side) != value:
        return "residual cut capacity differs from the flow value"
    return None
