"""Maximum size and maximum weight matchings, plus a verifier.

The bipartite algorithms compute a 2-colouring first and refuse graphs that
have an odd cycle.  Weighted matchings maximise total weight over all
matchings, so an optimal matching need not have maximum size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .ds import DHeap, DisjointSets
from .graph import FlowGraph, Graph
from .maxflow import dinic

INF = float("inf")


class NotBipartiteError(ValueError):
    """``cycle`` lists the vertices of an odd cycle, in order."""

    def __init__(self, msg: str, cycle: list[int]):
        super().__init__(msg)
        self.cycle = cycle


@dataclass
class Matching:
    edges: list[int] = field(default_factory=list)
    mate: list[int] = field(default_factory=list)  # vertex -> vertex, 0 if free
    size: int = 0
    weight: int = 0

    def to_text(self, g: Graph) -> str:
        return " ".join(g.edge_text(e) for e in self.edges)


def _weight_of(g: Graph, e: int) -> int:
    w = getattr(g, "weight", None)
    return w[e] if w is not None else 1


def make_matching(g: Graph, edges) -> Matching:
    """Build a Matching from an edge collection (no checks)."""
    edges = sorted(edges)
    mate = [0] * (g.n + 1)
    for e in edges:
        u, v = g.left(e), g.right(e)
        mate[u], mate[v] = v, u
    weight = sum(_weight_of(g, e) for e in edges) if hasattr(g, "weight") else 0
    return Matching(edges, mate, len(edges), weight)


def _from_medge(g: Graph, me: list[int]) -> Matching:
    return make_matching(g, {e for e in me[1:] if e})


def bipartition(g: Graph) -> list[bool]:
    """``side[v]`` is True for the side holding the lowest vertex of each
    component.  Raises NotBipartiteError with an odd cycle otherwise."""
    n = g.n
    side: list[Optional[bool]] = [None] * (n + 1)
    parent = [0] * (n + 1)
    depth = [0] * (n + 1)
    for r in range(1, n + 1):
        if side[r] is not None:
            continue
        side[r] = True
        q = deque([r])
        while q:
            u = q.popleft()
            for e in g.edges_at(u):
                v = g.mate(u, e)
                if side[v] is None:
                    side[v] = not side[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    q.append(v)
                elif side[v] == side[u]:
                    # climb both ends to their common ancestor
                    a, b = [u], [v]
                    x, y = u, v
                    while x != y:
                        if depth[x] >= depth[y]:
                            x = parent[x]
                            a.append(x)
                        else:
                            y = parent[y]
                            b.append(y)
                    cycle = a + b[-2::-1]
                    names = " ".join(g.vstr(x) for x in cycle)
                    raise NotBipartiteError(f"graph is not bipartite: odd cycle {names}", cycle)
    return [False] + [bool(s) for s in side[1:]]


# -- maximum size ----------------------------------------------------------

def hopcroft_karp(g: Graph) -> Matching:
    """Phases of vertex-disjoint shortest augmenting paths."""
    n = g.n
    side = bipartition(g)
    left = [u for u in range(1, n + 1) if side[u]]
    adj = g.adj_lists()
    me = [0] * (n + 1)  # matched edge at each vertex
    other = g.mate
    while True:
        dist = [-1] * (n + 1)
        q = deque()
        for u in left:
            if not me[u]:
                dist[u] = 0
                q.append(u)
        found = False
        while q:
            u = q.popleft()
            for e in adj[u]:
                v = other(u, e)
                if not me[v]:
                    found = True
                    continue
                w = other(v, me[v])
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if not found:
            break
        cur = [0] * (n + 1)
        for r in left:
            if me[r] or dist[r] != 0:
                continue
            stack, path = [r], []
            while stack:
                u = stack[-1]
                nxt = 0
                while cur[u] < len(adj[u]):
                    e = adj[u][cur[u]]
                    cur[u] += 1
                    v = other(u, e)
                    if e == me[u]:
                        continue
                    if not me[v]:
                        path.append(e)
                        nxt = -1
                        break
                    w = other(v, me[v])
                    if dist[w] == dist[u] + 1:
                        path.append(e)
                        nxt = w
                        break
                if nxt == -1:
                    for x, e in zip(stack, path):
                        me[x] = e
                        me[other(x, e)] = e
                    break
                if nxt:
                    stack.append(nxt)
                else:
                    dist[u] = -1
                    stack.pop()
                    if path:
                        path.pop()
    return _from_medge(g, me)


def flow_reduction(g: Graph) -> Matching:
    """Unit-capacity flow network source -> left -> right -> sink, solved
    with Dinic's algorithm."""
    n = g.n
    side = bipartition(g)
    s, t = n + 1, n + 2
    fg = FlowGraph(n + 2, s, t, g.m + n)
    emap = {}
    for u in range(1, n + 1):
        if side[u]:
            fg.join(s, u, 1)
        else:
            fg.join(u, t, 1)
    for e in g.edges():
        u, v = g.left(e), g.right(e)
        if not side[u]:
            u, v = v, u
        emap[fg.join(u, v, 1)] = e
    dinic(fg)
    return make_matching(g, [emap[f] for f in emap if fg.flow[f]])


def _expand_path(g: Graph, tasks, me, pedge, bridge, odd_orig) -> list[int]:
    """Expand path tasks into an edge list.

    A task ``(v, w, rev)`` stands for the even-length alternating path from
    ``v`` up to its ancestor ``w``, starting with the matched edge at ``v``
    (reversed when ``rev``); a bare int is an edge.
    """
    out = []
    stack = list(reversed(tasks))
    while stack:
        t = stack.pop()
        if isinstance(t, int):
            out.append(t)
            continue
        v, w, rev = t
        if v == w:
            continue
        x = g.mate(v, me[v])
        if not odd_orig[v]:
            p = g.mate(x, pedge[x])
            seq = [me[v], pedge[x], (p, w, False)]
        else:
            a, b, e = bridge[v]
            seq = [me[v], (a, x, True), e, (b, w, False)]
        if rev:
            seq = [s if isinstance(s, int) else (s[0], s[1], not s[2]) for s in reversed(seq)]
        stack.extend(reversed(seq))
    return out


def _augmenting_path(g: Graph, me: list[int], adj=None) -> Optional[list[int]]:
    """Edges of an augmenting path for the matching ``me``, or None.

    A single alternating-forest search from all free vertices at once;
    blossoms are shrunk with DisjointSets and ``bridge`` records the edge
    that closed the blossom for each odd vertex absorbed into one.
    """
    n = g.n
    adj = adj if adj is not None else g.adj_lists()
    other = g.mate
    EVEN, ODD = 1, 2
    label = [0] * (n + 1)
    odd_orig = [False] * (n + 1)
    pedge = [0] * (n + 1)
    bridge: list = [None] * (n + 1)
    ds = DisjointSets(n)
    base = list(range(n + 1))  # base vertex of each set root
    q = deque()
    for v in range(1, n + 1):
        if not me[v]:
            label[v] = EVEN
            q.append(v)

    def b(x: int) -> int:
        return base[ds.find(x)]

    def up(x: int) -> int:
        # next base above base x, or 0 at a root
        if not me[x]:
            return 0
        y = other(x, me[x])
        return b(other(y, pedge[y]))

    def root(x: int) -> int:
        x = b(x)
        while me[x]:
            x = up(x)
        return x

    def shrink(x: int, top: int, v: int, w: int, e: int) -> None:
        # absorb the bases from x up to top; odd vertices get bridge (v, w)
        while x != top:
            y = other(x, me[x])
            bridge[y] = (v, w, e)
            label[y] = EVEN
            q.append(y)
            nxt = up(x)
            r = ds.link(ds.find(x), ds.find(y)) if ds.find(x) != ds.find(y) else ds.find(x)
            r2 = ds.find(nxt)
            if r != r2:
                r = ds.link(r, r2)
            base[r] = top
            x = nxt

    while q:
        v = q.popleft()
        for e in adj[v]:
            w = other(v, e)
            if label[w] == 0:
                label[w] = ODD
                odd_orig[w] = True
                pedge[w] = e
                z = other(w, me[w])
                label[z] = EVEN
                q.append(z)
            elif label[w] == EVEN and b(v) != b(w):
                # nearest common base ancestor, walking both chains in turn
                mark = set()
                x, y = b(v), b(w)
                top = 0
                while x or y:
                    if x:
                        if x in mark:
                            top = x
                            break
                        mark.add(x)
                        x = up(x)
                    if y:
                        if y in mark:
                            top = y
                            break
                        mark.add(y)
                        y = up(y)
                if not top:
                    rv, rw = root(v), root(w)
                    tasks = [(v, rv, True), e, (w, rw, False)]
                    return _expand_path(g, tasks, me, pedge, bridge, odd_orig)
                shrink(b(v), top, v, w, e)
                shrink(b(w), top, w, v, e)
    return None


def _augment(g: Graph, me: list[int], path: list[int]) -> None:
    for e in path[0::2]:
        me[g.left(e)] = e
        me[g.right(e)] = e


def edmonds_gabow(g: Graph) -> Matching:
    """Edmonds' blossom algorithm for general graphs, one search per
    augmentation."""
    me = [0] * (g.n + 1)
    # a greedy start saves most of the searches
    for e in g.edges():
        u, v = g.left(e), g.right(e)
        if not me[u] and not me[v]:
            me[u] = me[v] = e
    adj = g.adj_lists()
    while (path := _augmenting_path(g, me, adj)) is not None:
        _augment(g, me, path)
    return _from_medge(g, me)


SIZE_ALGORITHMS = {
    "hopcroftkarp": hopcroft_karp,
    "flowreduction": flow_reduction,
    "edmondsgabow": edmonds_gabow,
}


def max_size_matching(g: Graph, algo: str = "hopcroftkarp") -> Matching:
    try:
        fn = SIZE_ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown matching algorithm {algo!r}") from None
    return fn(g)


# -- maximum weight --------------------------------------------------------

def hungarian(g: Graph) -> Matching:
    """Successive maximum-gain augmenting paths found by Dijkstra on reduced
    costs, stopping once the best path no longer gains weight.

    Costs are negated weights, so a gain is a negative path cost.  Vertex
    ``n+1`` is a virtual source joined to free left vertices and ``n+2`` a
    virtual sink joined from free right vertices.
    """
    n = g.n
    side = bipartition(g)
    w = g.weight
    S, T = n + 1, n + 2
    adj = g.adj_lists()
    me = [0] * (n + 1)
    other = g.mate
    p = [0] * (n + 3)
    for v in range(1, n + 1):
        if not side[v]:
            p[v] = min([0] + [-w[e] for e in adj[v]])
    p[T] = min(p[:n + 1])
    d = 2 + g.m // max(n, 1)
    while True:
        dist = [INF] * (n + 3)
        pred = [0] * (n + 3)  # predecessor vertex
        pedge = [0] * (n + 3)
        done = [False] * (n + 3)
        heap = DHeap(n + 2, d)
        dist[S] = 0
        heap.insert(S, 0)

        def relax(x: int, y: int, c: int, e: int) -> None:
            nd = dist[x] + c + p[x] - p[y]
            if nd < dist[y]:
                dist[y] = nd
                pred[y], pedge[y] = x, e
                if y in heap:
                    heap.change_key(y, nd)
                else:
                    heap.insert(y, nd)

        while heap:
            x = heap.delete_min()
            done[x] = True
            if x == T:
                break
            if x == S:
                for u in range(1, n + 1):
                    if side[u] and not me[u]:
                        relax(S, u, 0, 0)
            elif side[x]:
                for e in adj[x]:
                    y = other(x, e)
                    if e != me[x] and not done[y]:
                        relax(x, y, -w[e], e)
            elif me[x]:
                y = other(x, me[x])
                if not done[y]:
                    relax(x, y, w[me[x]], me[x])
            else:
                relax(x, T, 0, 0)
        if dist[T] == INF or dist[T] - p[S] + p[T] >= 0:
            break
        dT = dist[T]
        for x in range(1, n + 3):
            p[x] += min(dist[x], dT)
        path = []
        y = pred[T]
        while y != S:
            path.append(pedge[y])
            y = pred[y]
        _flip(g, me, path)
    return _from_medge(g, me)


def egmg(g: Graph) -> Matching:
    """Primal-dual weighted matching in the style of Edmonds, Galil, Micali
    and Gabow, specialised to bipartite graphs (no blossoms).

    Weights are doubled so all dual values stay integral.  Within a stage
    the duals move with a global clock: even vertices lose one unit per
    tick, odd ones gain one.  Two heaps hold the clock times at which
    edges become tight, one for edges to unlabelled vertices and one for
    edges between even vertices; the stage ends at the first augmentation,
    and the whole search stops when free vertices reach dual zero.
    """
    n = g.n
    bipartition(g)
    w2 = [2 * x for x in g.weight]
    adj = g.adj_lists()
    other = g.mate
    me = [0] * (n + 1)
    top = max([0] + [g.weight[e] for e in g.edges()])
    y = [top] * (n + 1)
    EVEN, ODD = 1, 2
    while True:
        free_y = next((y[v] for v in range(1, n + 1) if not me[v]), 0)
        if free_y == 0:
            break
        label = [0] * (n + 1)
        since = [0] * (n + 1)  # clock when labelled
        pedge = [0] * (n + 1)
        tree = [0] * (n + 1)
        best = [0] * (n + 1)  # tightest edge from an even vertex, per unlabelled vertex
        h2 = DHeap(n)
        h3 = DHeap(g.max_edge)
        clock = 0

        def dual(v: int) -> int:
            if label[v] == EVEN:
                return y[v] - (clock - since[v])
            if label[v] == ODD:
                return y[v] + (clock - since[v])
            return y[v]

        def make_even(v: int, r: int) -> None:
            label[v], since[v], tree[v] = EVEN, clock, r
            if v in h2:
                h2.remove(v)
            dv = y[v]
            for e in adj[v]:
                x = other(v, e)
                if label[x] == EVEN:
                    slack = dv + dual(x) - w2[e]
                    h3.insert(e, clock + slack // 2)
                elif label[x] == 0:
                    t = clock + dv + y[x] - w2[e]
                    if x not in h2:
                        h2.insert(x, t)
                        best[x] = e
                    elif t < h2.key[x]:
                        h2.change_key(x, t)
                        best[x] = e

        for v in range(1, n + 1):
            if not me[v]:
                make_even(v, v)
        augmenting = 0
        while True:
            t2 = h2.key[h2.find_min()] if h2 else INF
            t3 = h3.key[h3.find_min()] if h3 else INF
            if free_y <= min(t2, t3):
                clock = free_y
                break
            if t3 <= t2:
                clock = t3
                augmenting = h3.delete_min()
                break
            clock = t2
            x = h2.delete_min()
            e = best[x]
            u = other(x, e)
            label[x], since[x], pedge[x], tree[x] = ODD, clock, e, tree[u]
            z = other(x, me[x])
            y[z] = dual(z)
            make_even(z, tree[u])
        # freeze the duals at the current clock
        for v in range(1, n + 1):
            y[v] = dual(v)
        if not augmenting:
            break
        e = augmenting
        path = [e]
        for v in (g.left(e), g.right(e)):
            while me[v]:
                x = other(v, me[v])
                path += [me[v], pedge[x]]
                v = other(x, pedge[x])
        _flip(g, me, path)
    return _from_medge(g, me)


def _flip(g: Graph, me: list[int], path: list[int]) -> None:
    """Swap matched and unmatched edges along an augmenting path."""
    unmatched = [f for f in path if me[g.left(f)] != f]
    for f in unmatched:
        me[g.left(f)] = f
        me[g.right(f)] = f


WEIGHT_ALGORITHMS = {"hungarian": hungarian, "egmg": egmg}


def max_weight_matching(g: Graph, algo: str = "hungarian") -> Matching:
    try:
        fn = WEIGHT_ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown weighted matching algorithm {algo!r}") from None
    return fn(g)


# -- certificates ----------------------------------------------------------

def vertex_cover(g: Graph, m: Matching) -> list[int]:
    """Minimum vertex cover of a bipartite graph from a maximum matching:
    with Z the vertices reachable from free left vertices by alternating
    paths, the cover is (left - Z) + (right & Z)."""
    n = g.n
    side = bipartition(g)
    medge = [0] * (n + 1)
    for e in m.edges:
        medge[g.left(e)] = medge[g.right(e)] = e
    seen = [False] * (n + 1)
    q = deque()
    for u in range(1, n + 1):
        if side[u] and not medge[u]:
            seen[u] = True
            q.append(u)
    while q:
        u = q.popleft()
        for e in g.edges_at(u):
            if e == medge[u]:
                continue
            v = g.mate(u, e)
            if seen[v]:
                continue
            seen[v] = True
            if medge[v]:
                x = g.mate(v, medge[v])
                if not seen[x]:
                    seen[x] = True
                    q.append(x)
    return [v for v in range(1, n + 1) if side[v] != seen[v]]


def check_disjoint(g: Graph, m: Matching) -> Optional[str]:
    """None when no two edges of ``m`` share a vertex and ``mate`` agrees."""
    owner = [0] * (g.n + 1)
    for e in m.edges:
        if not g.valid_edge(e):
            return f"{e} is not an edge"
        for v in (g.left(e), g.right(e)):
            if owner[v]:
                return (f"edges {g.edge_text(owner[v])} and {g.edge_text(e)} "
                        f"share vertex {g.vstr(v)}")
            owner[v] = e
    if m.mate:
        for v in range(1, g.n + 1):
            want = g.mate(v, owner[v]) if owner[v] else 0
            if m.mate[v] != want:
                return f"mate of {g.vstr(v)} is inconsistent with the edges"
    if m.size != len(m.edges):
        return f"reported size {m.size} but {len(m.edges)} edges"
    return None


def _improving_cycle(g: Graph, m: Matching) -> Optional[str]:
    """Bellman-Ford on the residual graph of the circulation form of the
    weighted bipartite problem; a negative cycle is an improvement."""
    n = g.n
    side = bipartition(g)
    S, T = n + 1, n + 2
    matched = set(m.edges)
    covered = [False] * (n + 1)
    arcs = []
    for e in g.edges():
        u, v = g.left(e), g.right(e)
        if not side[u]:
            u, v = v, u
        if e in matched:
            arcs.append((v, u, g.weight[e]))
            covered[u] = covered[v] = True
        else:
            arcs.append((u, v, -g.weight[e]))
    for v in range(1, n + 1):
        if side[v]:
            arcs.append((v, S, 0) if covered[v] else (S, v, 0))
        else:
            arcs.append((T, v, 0) if covered[v] else (v, T, 0))
    arcs.append((T, S, 0))
    if m.edges:
        arcs.append((S, T, 0))
    dist = [0] * (n + 3)
    for _ in range(n + 2):
        changed = False
        for a, b, c in arcs:
            if dist[a] + c < dist[b]:
                dist[b] = dist[a] + c
                changed = True
        if not changed:
            return None
    return "not maximum weight: an alternating path or cycle of positive gain exists"


BRUTE_FORCE_EDGES = 20


def verify(g: Graph, m: Matching, mode: str = "size") -> Optional[str]:
    """Check ``m`` is a matching of maximum size (``mode="size"``) or
    maximum weight (``mode="weight"``).  None means it is."""
    msg = check_disjoint(g, m)
    if msg:
        return msg
    if mode == "size":
        me = [0] * (g.n + 1)
        for e in m.edges:
            me[g.left(e)] = me[g.right(e)] = e
        path = _augmenting_path(g, me)
        if path is not None:
            ends = {g.left(path[0]), g.right(path[0])} - {g.left(path[1]), g.right(path[1])} \
                if len(path) > 1 else {g.left(path[0])}
            start = ends.pop()
            return f"not maximum: augmenting path from {g.vstr(start)} with {len(path)} edges"
        return None
    if mode != "weight":
        raise ValueError(f"unknown verification mode {mode!r}")
    if m.weight != sum(g.weight[e] for e in m.edges):
        return f"reported weight {m.weight} does not match the edges"
    try:
        return _improving_cycle(g, m)
    except NotBipartiteError:
        pass
    edges = list(g.edges())
    if len(edges) > BRUTE_FORCE_EDGES:
        raise ValueError("weight verification of non-bipartite graphs is limited to small inputs")
    best = 0
    for k in range(1, len(edges) + 1):
        for combo in combinations(edges, k):
            ends = [x for e in combo for x in (g.left(e), g.right(e))]
            if len(set(ends)) == len(ends):
                best = max(best, sum(g.weight[e] for e in combo))
    if best > m.weight:
        return f"not maximum weight: {best} is possible"
    return None
