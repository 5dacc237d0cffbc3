"""Edge colouring of bipartite multigraphs with the minimum number of
colours, which for bipartite graphs equals the maximum degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph
from .matching import bipartition, hopcroft_karp


@dataclass
class Coloring:
    color: list[int] = field(default_factory=list)  # edge -> colour 1..num_colors
    num_colors: int = 0

    def classes(self, g: Graph) -> list[list[int]]:
        """Edges of each colour; index 0 is unused."""
        out: list[list[int]] = [[] for _ in range(self.num_colors + 1)]
        for e in g.edges():
            out[self.color[e]].append(e)
        return out


def _finish(g: Graph, color: list[int]) -> Coloring:
    return Coloring(color, max((color[e] for e in g.edges()), default=0))


def _degrees(g: Graph, edges) -> list[int]:
    deg = [0] * (g.n + 1)
    for e in edges:
        deg[g.left(e)] += 1
        deg[g.right(e)] += 1
    return deg


def alt_path(g: Graph) -> Coloring:
    """Colour edges one at a time; when the lowest colour ``a`` free at u is
    busy at v, flip the a/b alternating path from v, where ``b`` is free at
    v.  In a bipartite graph that path cannot end at u."""
    bipartition(g)
    n = g.n
    delta = g.max_degree()
    at = [[0] * (delta + 1) for _ in range(n + 1)]  # at[v][c]: edge of colour c at v
    color = [0] * (g.max_edge + 1)
    other = g.mate

    def lowest_free(v: int) -> int:
        row = at[v]
        c = 1
        while row[c]:
            c += 1
        return c

    for e in g.edges():
        u, v = g.left(e), g.right(e)
        a = lowest_free(u)
        if at[v][a]:
            b = lowest_free(v)
            # collect the path from v whose colours alternate a, b, a, ...
            path, x, c = [], v, a
            while at[x][c]:
                f = at[x][c]
                path.append(f)
                x = other(x, f)
                c = b if c == a else a
            for f in path:
                at[g.left(f)][color[f]] = at[g.right(f)][color[f]] = 0
            for f in path:
                color[f] = b if color[f] == a else a
                at[g.left(f)][color[f]] = at[g.right(f)][color[f]] = f
        color[e] = a
        at[u][a] = at[v][a] = e
    return _finish(g, color)


def cover_matching(g: Graph, edges: list[int]) -> list[int]:
    """A matching within ``edges`` that covers every vertex of maximum degree
    in that edge set.

    The subgraph is made regular: take it and a mirror copy, then join each
    vertex to its copy by enough parallel edges to lift its degree to the
    maximum.  A perfect matching of the result, restricted to the original
    edges, covers each maximum-degree vertex, since those have no padding.
    """
    n = g.n
    deg = _degrees(g, edges)
    delta = max(deg)
    h = Graph(2 * n, 2 * len(edges) + 1)
    back = {}
    for e in edges:
        u, v = g.left(e), g.right(e)
        back[h.join(u, v)] = e
        h.join(n + u, n + v)
    for v in range(1, n + 1):
        if deg[v]:
            for _ in range(delta - deg[v]):
                h.join(v, n + v)
    m = hopcroft_karp(h)
    return [back[f] for f in m.edges if f in back]


def by_matching(g: Graph) -> Coloring:
    """Peel off one matching covering all maximum-degree vertices per colour."""
    bipartition(g)
    color = [0] * (g.max_edge + 1)
    rest = list(g.edges())
    c = 0
    while rest:
        c += 1
        chosen = set(cover_matching(g, rest))
        for e in chosen:
            color[e] = c
        rest = [e for e in rest if e not in chosen]
    return _finish(g, color)


def euler_partition(g: Graph, edges: list[int]) -> tuple[list[int], list[int]]:
    """Split ``edges`` into two halves by walking paths and cycles and
    alternating between the halves.  Each vertex's degree splits evenly, up
    to one for odd degrees (cycles are even in a bipartite graph)."""
    n = g.n
    inc: list[list[int]] = [[] for _ in range(n + 1)]
    for e in edges:
        inc[g.left(e)].append(e)
        inc[g.right(e)].append(e)
    used = set()
    ptr = [0] * (n + 1)
    left = [0] * (n + 1)
    for v in range(1, n + 1):
        left[v] = len(inc[v])
    halves: tuple[list[int], list[int]] = ([], [])

    def walk(v: int) -> None:
        side = 0
        while True:
            row = inc[v]
            while ptr[v] < len(row) and row[ptr[v]] in used:
                ptr[v] += 1
            if ptr[v] == len(row):
                return
            e = row[ptr[v]]
            used.add(e)
            halves[side].append(e)
            side ^= 1
            left[v] -= 1
            v = g.mate(v, e)
            left[v] -= 1

    # paths start at odd-degree vertices, then the remaining cycles
    for v in range(1, n + 1):
        if left[v] % 2:
            walk(v)
    for v in range(1, n + 1):
        if left[v]:
            walk(v)
    return halves


def gabow(g: Graph) -> Coloring:
    """Divide and conquer: Euler-partition even-degree edge sets into two
    halves of half the degree; for odd degree first remove a matching that
    covers the maximum-degree vertices and give it its own colour."""
    bipartition(g)
    color = [0] * (g.max_edge + 1)
    todo = [(list(g.edges()), 1)]  # edge set, first colour it may use
    while todo:
        edges, base = todo.pop()
        if not edges:
            continue
        delta = max(_degrees(g, edges))
        if delta == 1:
            for e in edges:
                color[e] = base
            continue
        if delta % 2:
            chosen = set(cover_matching(g, edges))
            for e in chosen:
                color[e] = base
            edges = [e for e in edges if e not in chosen]
            base += 1
            delta -= 1
        a, b = euler_partition(g, edges)
        todo.append((a, base))
        todo.append((b, base + delta // 2))
    return _finish(g, color)


ALGORITHMS = {"altpath": alt_path, "matching": by_matching, "gabow": gabow}


def ecolor(g: Graph, algo: str = "gabow") -> Coloring:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown edge colouring algorithm {algo!r}") from None
    return fn(g)


def gap(g: Graph, c: Coloring) -> int:
    """Colours used beyond the maximum-degree lower bound."""
    return c.num_colors - g.max_degree()


def verify(g: Graph, c: Coloring) -> Optional[str]:
    """Check every edge has a colour in range and no two edges at a vertex
    share one.  Returns None for a proper colouring."""
    for e in g.edges():
        if not 1 <= c.color[e] <= c.num_colors:
            return f"edge {g.edge_text(e)} has colour {c.color[e]} outside 1..{c.num_colors}"
    for v in range(1, g.n + 1):
        seen: dict[int, int] = {}
        for e in g.edges_at(v):
            k = c.color[e]
            if k in seen:
                return (f"edges {g.edge_text(seen[k])} and {g.edge_text(e)} at "
                        f"{g.vstr(v)} both have colour {k}")
            seen[k] = e
    if c.num_colors < g.max_degree():
        return f"only {c.num_colors} colours but a vertex has degree {g.max_degree()}"
    return None
