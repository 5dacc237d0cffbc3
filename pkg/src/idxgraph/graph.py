"""Graph classes built on endpoint numbering.

Edge ``e`` owns endpoint numbers ``2e`` (left / tail) and ``2e+1`` (right /
head).  Each vertex's adjacency list is one list in a :class:`DisjointLists`
partition of the endpoint numbers, so adding or removing an edge is O(1)
and the edge of an endpoint is ``ep >> 1``.

Every class has ``to_text``/``from_text`` for the bracketed adjacency format::

    {
    [a: b(7) d(2)]
    [b: a(7)]
    ...
    }
"""

from __future__ import annotations

import copy
import re
from collections import deque
from typing import Iterator

from .ds.lists import DisjointLists, IndexList
from .fmt import index_str, parse_index


class GraphFormatError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + msg)


def edge_of(ep: int) -> int:
    return ep >> 1


def mate_ep(ep: int) -> int:
    return ep ^ 1


class Graph:
    """Undirected multigraph on vertices ``1..n``; self-loops are rejected."""

    directed = False
    n_attrs = 0

    def __init__(self, n: int, max_edge: int = 0):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        max_edge = max(max_edge, 1)
        self.n = n
        self.max_edge = max_edge
        self._left = [0] * (max_edge + 1)
        self._right = [0] * (max_edge + 1)
        self._adj = DisjointLists(2 * max_edge + 1)
        self._fe = [0] * (n + 1)
        self._free = IndexList(max_edge)
        for e in range(1, max_edge + 1):
            self._free.append(e)
        self._m = 0

    # -- structure -----------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def _check_vertex(self, u: int) -> None:
        if not 1 <= u <= self.n:
            raise IndexError(f"vertex {u} out of range 1..{self.n}")

    def valid_edge(self, e: int) -> bool:
        return 1 <= e <= self.max_edge and self._left[e] != 0

    def _expand(self, max_edge: int) -> None:
        old = self.max_edge
        grow = max_edge - old
        self._left.extend([0] * grow)
        self._right.extend([0] * grow)
        self._adj.expand(2 * max_edge + 1)
        self._free.expand(max_edge)
        for e in range(old + 1, max_edge + 1):
            self._free.append(e)
        self.max_edge = max_edge
        self._expand_attrs(grow)

    def _expand_attrs(self, grow: int) -> None:
        pass

    def _head_list(self, ep: int) -> list[int]:
        return self._fe

    def _attach(self, ep: int, u: int) -> None:
        heads = self._head_list(ep)
        heads[u] = self._adj.join(heads[u], ep)

    def _detach(self, ep: int, u: int) -> None:
        heads = self._head_list(ep)
        heads[u] = self._adj.delete(ep, heads[u])

    def join(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed")
        if not self._free:
            self._expand(2 * self.max_edge)
        e = self._free.pop()
        self._left[e] = u
        self._right[e] = v
        self._attach(2 * e, u)
        self._attach(2 * e + 1, v)
        self._m += 1
        return e

    add_edge = join

    def remove(self, e: int) -> None:
        if not self.valid_edge(e):
            raise ValueError(f"{e} is not an edge")
        self._detach(2 * e, self._left[e])
        self._detach(2 * e + 1, self._right[e])
        self._left[e] = self._right[e] = 0
        self._free.push(e)
        self._m -= 1

    remove_edge = remove

    def left(self, e: int) -> int:
        return self._left[e]

    def right(self, e: int) -> int:
        return self._right[e]

    def mate(self, u: int, e: int) -> int:
        """The endpoint of ``e`` other than ``u``."""
        return self._right[e] if self._left[e] == u else self._left[e]

    def _endpoints(self, lid: int) -> Iterator[int]:
        nxt = self._adj._next
        ep = lid
        while ep:
            yield ep
            ep = nxt[ep]

    def endpoints_at(self, u: int) -> Iterator[int]:
        return self._endpoints(self._fe[u])

    def edges_at(self, u: int) -> Iterator[int]:
        """All edges incident to ``u``, in adjacency order."""
        for ep in self._endpoints(self._fe[u]):
            yield ep >> 1

    def adjacency(self, u: int) -> Iterator[int]:
        self._check_vertex(u)
        return self.edges_at(u)

    def edges(self) -> Iterator[int]:
        left = self._left
        for e in range(1, self.max_edge + 1):
            if left[e]:
                yield e

    def degree(self, u: int) -> int:
        return sum(1 for _ in self.edges_at(u))

    def max_degree(self) -> int:
        return max((self.degree(u) for u in range(1, self.n + 1)), default=0)

    def adj_lists(self) -> list[list[int]]:
        """Snapshot of ``edges_at`` for every vertex (index 0 unused)."""
        return [[]] + [list(self.edges_at(u)) for u in range(1, self.n + 1)]

    def copy(self):
        return copy.deepcopy(self)

    # -- text ----------------------------------------------------------

    def attrs(self, e: int) -> tuple:
        return ()

    def _add_parsed(self, u: int, v: int, attrs: tuple) -> int:
        return self.join(u, v)

    def vstr(self, u: int) -> str:
        return index_str(u, self.n)

    def _nbr_text(self, u: int, e: int) -> str:
        a = self.attrs(e)
        s = self.vstr(self.mate(u, e))
        return s + "(" + ",".join(str(x) for x in a) + ")" if a else s

    def _line_edges(self, u: int) -> Iterator[int]:
        return self.edges_at(u)

    def _vertex_mark(self, u: int) -> str:
        return self.vstr(u)

    def _show_line(self, u: int) -> bool:
        return True

    def to_text(self) -> str:
        out = ["{\n"]
        for u in range(1, self.n + 1):
            if not self._show_line(u):
                continue
            nbrs = "".join(" " + self._nbr_text(u, e) for e in self._line_edges(u))
            out.append(f"[{self._vertex_mark(u)}:{nbrs}]\n")
        out.append("}\n")
        return "".join(out)

    def __str__(self) -> str:
        return self.to_text()

    def edge_text(self, e: int) -> str:
        """``(u,v)`` or ``(u,v,attrs...)`` as used in result listings."""
        parts = [self.vstr(self._left[e]), self.vstr(self._right[e])]
        parts += [str(x) for x in self.attrs(e)]
        return "(" + ",".join(parts) + ")"

    @classmethod
    def from_text(cls, text: str):
        lines = _parse_lines(text, cls.n_attrs)
        n = max((max([pl.u] + [v for v, _, _ in pl.nbrs]) for pl in lines), default=0)
        nedges = sum(len(pl.nbrs) for pl in lines)
        if not cls.directed:
            nedges //= 2
        g = cls._from_parsed(n, nedges, lines)
        return g

    @classmethod
    def _from_parsed(cls, n: int, nedges: int, lines: list["_Line"]):
        g = cls(n, nedges)
        created: dict = {}  # key -> edges made from the lower endpoint's line
        order: list[list] = []  # per line, the edge or key of each mention
        first_pos: dict = {}
        for pl in lines:
            if pl.mark != "":
                raise GraphFormatError("source/sink marks only allowed in flow graphs", pl.lineno, 2)
            row = []
            for v, attrs, col in pl.nbrs:
                if v == pl.u:
                    raise GraphFormatError("self-loop", pl.lineno, col)
                key = (min(pl.u, v), max(pl.u, v), attrs)
                first_pos.setdefault(key, (pl.lineno, col))
                if pl.u < v:
                    e = g._add_parsed(pl.u, v, attrs)
                    created.setdefault(key, deque()).append(e)
                    row.append(e)
                else:
                    row.append(key)
            order.append(row)
        # match mirrored mentions to edges, then restore each listed order
        for pl, row in zip(lines, order):
            eps = []
            for item in row:
                if isinstance(item, tuple):
                    pending = created.get(item)
                    if not pending:
                        line, col = first_pos[item]
                        raise GraphFormatError(
                            f"edge ({index_str(item[0], n)},{index_str(item[1], n)}) not listed "
                            "consistently at both endpoints", line, col)
                    e = pending.popleft()
                    eps.append(2 * e + 1)
                else:
                    eps.append(2 * item)
            for ep in eps:
                g._detach(ep, pl.u)
            for ep in eps:
                g._attach(ep, pl.u)
        leftover = [k for k, q in created.items() if q]
        if leftover:
            line, col = first_pos[leftover[0]]
            k = leftover[0]
            raise GraphFormatError(
                f"edge ({index_str(k[0], n)},{index_str(k[1], n)}) not listed "
                "consistently at both endpoints", line, col)
        return g


class WGraph(Graph):
    """Undirected graph with integer edge weights."""

    n_attrs = 1

    def __init__(self, n: int, max_edge: int = 0):
        super().__init__(n, max_edge)
        self.weight = [0] * (self.max_edge + 1)

    def _expand_attrs(self, grow: int) -> None:
        self.weight.extend([0] * grow)

    def join(self, u: int, v: int, w: int = 0) -> int:
        e = super().join(u, v)
        self.weight[e] = w
        return e

    add_edge = join

    def attrs(self, e: int) -> tuple:
        return (self.weight[e],)

    def _add_parsed(self, u, v, attrs):
        return self.join(u, v, attrs[0])


class Digraph(Graph):
    """Directed graph: edge ``e`` runs from ``tail(e) = left(e)`` to ``head(e)``.

    Out-endpoints (``2e``) and in-endpoints (``2e+1``) live in separate lists
    per vertex.
    """

    directed = True

    def __init__(self, n: int, max_edge: int = 0):
        super().__init__(n, max_edge)
        self._fi = [0] * (n + 1)

    def _head_list(self, ep: int) -> list[int]:
        return self._fi if ep & 1 else self._fe

    def tail(self, e: int) -> int:
        return self._left[e]

    def head(self, e: int) -> int:
        return self._right[e]

    def out_edges(self, u: int) -> Iterator[int]:
        for ep in self._endpoints(self._fe[u]):
            yield ep >> 1

    def in_edges(self, u: int) -> Iterator[int]:
        for ep in self._endpoints(self._fi[u]):
            yield ep >> 1

    def edges_at(self, u: int) -> Iterator[int]:
        yield from self.out_edges(u)
        yield from self.in_edges(u)

    def endpoints_at(self, u: int) -> Iterator[int]:
        yield from self._endpoints(self._fe[u])
        yield from self._endpoints(self._fi[u])

    def adjacency(self, u: int) -> Iterator[int]:
        self._check_vertex(u)
        return self.out_edges(u)

    def out_lists(self) -> list[list[int]]:
        return [[]] + [list(self.out_edges(u)) for u in range(1, self.n + 1)]

    def out_degree(self, u: int) -> int:
        return sum(1 for _ in self.out_edges(u))

    def _line_edges(self, u: int) -> Iterator[int]:
        return self.out_edges(u)

    @classmethod
    def _from_parsed(cls, n, nedges, lines):
        g = cls(n, nedges)
        for pl in lines:
            if pl.mark != "":
                raise GraphFormatError("source/sink marks only allowed in flow graphs", pl.lineno, 2)
            for v, attrs, col in pl.nbrs:
                if v == pl.u:
                    raise GraphFormatError("self-loop", pl.lineno, col)
                g._add_parsed(pl.u, v, attrs)
        return g


class WDigraph(Digraph):
    """Directed graph with integer edge lengths (possibly negative)."""

    n_attrs = 1

    def __init__(self, n: int, max_edge: int = 0):
        super().__init__(n, max_edge)
        self.length = [0] * (self.max_edge + 1)

    @property
    def weight(self) -> list[int]:
        return self.length

    def _expand_attrs(self, grow: int) -> None:
        self.length.extend([0] * grow)

    def join(self, u: int, v: int, length: int = 0) -> int:
        e = super().join(u, v)
        self.length[e] = length
        return e

    add_edge = join

    def attrs(self, e: int) -> tuple:
        return (self.length[e],)

    def _add_parsed(self, u, v, attrs):
        return self.join(u, v, attrs[0])


class FlowGraph(Digraph):
    """Flow network with integer capacities and flows, source and sink.

    Text form per edge is ``v(cap,flow)``; the source line is marked ``u->``
    and the sink line ``->u``.  Lines for vertices with no out-edges are
    omitted unless the vertex is the source, the sink, or vertex ``n``.
    """

    n_attrs = 2

    def __init__(self, n: int, source: int, sink: int, max_edge: int = 0):
        super().__init__(n, max_edge)
        if not (1 <= source <= n and 1 <= sink <= n):
            raise ValueError("source and sink must be vertices")
        if source == sink:
            raise ValueError("source and sink must differ")
        self.source = source
        self.sink = sink
        self.cap = [0] * (self.max_edge + 1)
        self.flow = [0] * (self.max_edge + 1)

    def _expand_attrs(self, grow: int) -> None:
        self.cap.extend([0] * grow)
        self.flow.extend([0] * grow)

    def join(self, u: int, v: int, cap: int = 0, flow: int = 0) -> int:
        if cap < 0:
            raise ValueError("capacity must be non-negative")
        if not 0 <= flow <= cap:
            raise ValueError("flow must lie in [0, cap]")
        e = Digraph.join(self, u, v)
        self.cap[e] = cap
        self.flow[e] = flow
        return e

    add_edge = join

    def floor_of(self, e: int) -> int:
        return 0

    def res(self, e: int, v: int) -> int:
        """Residual capacity of ``e`` leaving endpoint ``v``."""
        if v == self._left[e]:
            return self.cap[e] - self.flow[e]
        return self.flow[e] - self.floor_of(e)

    residual = res

    def add_flow(self, e: int, v: int, x: int) -> None:
        """Push ``x`` units along ``e`` away from endpoint ``v``."""
        if x < 0 or x > self.res(e, v):
            raise ValueError(f"cannot push {x} on edge {e} from {v}")
        if v == self._left[e]:
            self.flow[e] += x
        else:
            self.flow[e] -= x

    def total_flow(self) -> int:
        s = self.source
        return (sum(self.flow[e] for e in self.out_edges(s))
                - sum(self.flow[e] for e in self.in_edges(s)))

    def clear_flow(self) -> None:
        for e in self.edges():
            self.flow[e] = 0

    def attrs(self, e: int) -> tuple:
        return (self.cap[e], self.flow[e])

    def _add_parsed(self, u, v, attrs):
        return self.join(u, v, *attrs)

    def _vertex_mark(self, u: int) -> str:
        s = self.vstr(u)
        if u == self.source:
            return s + "->"
        if u == self.sink:
            return "->" + s
        return s

    def _show_line(self, u: int) -> bool:
        if u in (self.source, self.sink) or u == self.n:
            return True
        return self._fe[u] != 0

    @classmethod
    def _from_parsed(cls, n, nedges, lines):
        src = [pl for pl in lines if pl.mark == "src"]
        snk = [pl for pl in lines if pl.mark == "snk"]
        if len(src) != 1 or len(snk) != 1:
            raise GraphFormatError("flow graph needs exactly one source and one sink line")
        g = cls(n, src[0].u, snk[0].u, nedges)
        for pl in lines:
            for v, attrs, col in pl.nbrs:
                if v == pl.u:
                    raise GraphFormatError("self-loop", pl.lineno, col)
                try:
                    g._add_parsed(pl.u, v, attrs)
                except ValueError as exc:
                    raise GraphFormatError(str(exc), pl.lineno, col) from None
        return g


class WFlowGraph(FlowGraph):
    """Flow network with per-edge costs; text form ``v(cap,cost,flow)``."""

    n_attrs = 3

    def __init__(self, n: int, source: int, sink: int, max_edge: int = 0):
        super().__init__(n, source, sink, max_edge)
        self.cost = [0] * (self.max_edge + 1)

    def _expand_attrs(self, grow: int) -> None:
        super()._expand_attrs(grow)
        self.cost.extend([0] * grow)

    def join(self, u: int, v: int, cap: int = 0, cost: int = 0, flow: int = 0) -> int:
        e = super().join(u, v, cap, flow)
        self.cost[e] = cost
        return e

    add_edge = join

    def cost_from(self, e: int, v: int) -> int:
        """Cost per unit of pushing flow along ``e`` away from ``v``."""
        return self.cost[e] if v == self._left[e] else -self.cost[e]

    def total_cost(self) -> int:
        return sum(self.flow[e] * self.cost[e] for e in self.edges())

    def attrs(self, e: int) -> tuple:
        return (self.cap[e], self.cost[e], self.flow[e])


class FloorFlowGraph(FlowGraph):
    """Flow network with flow floors; text form ``v(floor,cap,flow)``.

    The residual capacity against an edge is ``flow - floor``, so algorithms
    started from a feasible flow never push an edge below its floor.
    """

    n_attrs = 3

    def __init__(self, n: int, source: int, sink: int, max_edge: int = 0):
        super().__init__(n, source, sink, max_edge)
        self.floor = [0] * (self.max_edge + 1)

    def _expand_attrs(self, grow: int) -> None:
        super()._expand_attrs(grow)
        self.floor.extend([0] * grow)

    def join(self, u: int, v: int, cap: int = 0, floor: int = 0, flow: int = 0) -> int:
        if not 0 <= floor <= cap:
            raise ValueError("floor must lie in [0, cap]")
        if not 0 <= flow <= cap:
            raise ValueError("flow must lie in [0, cap]")
        e = Digraph.join(self, u, v)
        self.cap[e] = cap
        self.floor[e] = floor
        self.flow[e] = flow
        return e

    add_edge = join

    def floor_of(self, e: int) -> int:
        return self.floor[e]

    def attrs(self, e: int) -> tuple:
        return (self.floor[e], self.cap[e], self.flow[e])

    def _add_parsed(self, u, v, attrs):
        floor, cap, flow = attrs
        return self.join(u, v, cap, floor, flow)


# -- parsing ---------------------------------------------------------------

class _Line:
    __slots__ = ("u", "mark", "nbrs", "lineno")

    def __init__(self, u, mark, nbrs, lineno):
        self.u = u
        self.mark = mark
        self.nbrs = nbrs
        self.lineno = lineno


_VERTEX = r"(?:[a-z]|\d+)"
_NBR = re.compile(r"(" + _VERTEX + r")(?:\((-?\d+(?:,-?\d+)*)\))?")
_HEAD = re.compile(r"\[(" + _VERTEX + r")?(->)?(" + _VERTEX + r")?:")


def _parse_lines(text: str, n_attrs: int) -> list[_Line]:
    raw = text.split("\n")
    rows = [(i + 1, r) for i, r in enumerate(raw) if r.strip()]
    if not rows or rows[0][1].strip() != "{":
        raise GraphFormatError("expected '{'", rows[0][0] if rows else 1, 1)
    if rows[-1][1].strip() != "}":
        raise GraphFormatError("expected '}'", rows[-1][0], 1)
    out = []
    for lineno, row in rows[1:-1]:
        body = row.strip()
        col0 = row.index(body[0]) + 1
        m = _HEAD.match(body)
        if not m or not body.endswith("]"):
            raise GraphFormatError("malformed adjacency line", lineno, col0)
        a, arrow, b = m.groups()
        if arrow is None:
            if a is None or b is not None:
                raise GraphFormatError("malformed vertex mark", lineno, col0 + 1)
            u, mark = a, ""
        elif a is not None and b is None:
            u, mark = a, "src"
        elif a is None and b is not None:
            u, mark = b, "snk"
        else:
            raise GraphFormatError("malformed vertex mark", lineno, col0 + 1)
        nbrs = []
        pos = m.end()
        inner_end = len(body) - 1
        while pos < inner_end:
            if body[pos] != " ":
                raise GraphFormatError("expected space", lineno, col0 + pos)
            while pos < inner_end and body[pos] == " ":
                pos += 1
            if pos >= inner_end:
                break
            nm = _NBR.match(body, pos)
            if not nm or nm.end() > inner_end:
                raise GraphFormatError("malformed neighbour", lineno, col0 + pos)
            ints = tuple(int(x) for x in nm.group(2).split(",")) if nm.group(2) else ()
            if len(ints) != n_attrs:
                raise GraphFormatError(
                    f"expected {n_attrs} numbers per neighbour, got {len(ints)}",
                    lineno, col0 + pos)
            nbrs.append((parse_index(nm.group(1)), ints, col0 + pos))
            pos = nm.end()
        try:
            uu = parse_index(u)
        except ValueError:
            raise GraphFormatError("bad vertex", lineno, col0 + 1) from None
        if uu == 0 or any(v == 0 for v, _, _ in nbrs):
            raise GraphFormatError("vertex numbers start at 1", lineno, col0)
        out.append(_Line(uu, mark, nbrs, lineno))
    return out
