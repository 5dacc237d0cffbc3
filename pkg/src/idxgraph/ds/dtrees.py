"""Dynamic trees (link-cut trees) with path-min and path-add on vertex costs.

Each represented tree is split into preferred paths held in splay trees
ordered by depth.  Costs are stored explicitly with a pending-add tag on
every splay node, plus the subtree minimum, so ``findcost`` and
``addcost`` on the whole root path cost one ``access`` each.
"""

from __future__ import annotations

import math

INF = math.inf


class DynamicTrees:
    def __init__(self, n: int):
        self.n = n
        self._l = [0] * (n + 1)
        self._r = [0] * (n + 1)
        self._p = [0] * (n + 1)  # splay parent or path-parent
        self._val = [INF] * (n + 1)
        self._mn = [INF] * (n + 1)
        self._add = [0] * (n + 1)

    def _check(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"vertex {x} out of range 1..{self.n}")

    def _is_splay_root(self, x: int) -> bool:
        p = self._p[x]
        return p == 0 or (self._l[p] != x and self._r[p] != x)

    def _apply(self, x: int, d) -> None:
        if x:
            self._val[x] += d
            self._mn[x] += d
            self._add[x] += d

    def _push(self, x: int) -> None:
        d = self._add[x]
        if d:
            self._apply(self._l[x], d)
            self._apply(self._r[x], d)
            self._add[x] = 0

    def _pull(self, x: int) -> None:
        m = self._val[x]
        l, r = self._l[x], self._r[x]
        if l and self._mn[l] < m:
            m = self._mn[l]
        if r and self._mn[r] < m:
            m = self._mn[r]
        self._mn[x] = m

    def _rotate(self, x: int) -> None:
        L, R, P = self._l, self._r, self._p
        p = P[x]
        g = P[p]
        if not self._is_splay_root(p):
            if L[g] == p:
                L[g] = x
            else:
                R[g] = x
        P[x] = g
        if L[p] == x:
            c = R[x]
            L[p] = c
            R[x] = p
        else:
            c = L[x]
            R[p] = c
            L[x] = p
        if c:
            P[c] = p
        P[p] = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x: int) -> None:
        path = [x]
        y = x
        while not self._is_splay_root(y):
            y = self._p[y]
            path.append(y)
        for y in reversed(path):
            self._push(y)
        P = self._p
        while not self._is_splay_root(x):
            p = P[x]
            if not self._is_splay_root(p):
                g = P[p]
                if (self._l[g] == p) == (self._l[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        last = 0
        y = x
        while y:
            self._splay(y)
            self._r[y] = last
            self._pull(y)
            last = y
            y = self._p[y]
        self._splay(x)

    def findroot(self, x: int) -> int:
        self._check(x)
        self._access(x)
        y = x
        while True:
            self._push(y)
            if not self._l[y]:
                break
            y = self._l[y]
        self._splay(y)
        return y

    def findcost(self, x: int):
        """Return ``(vertex, cost)`` minimising cost on the path from ``x`` to
        its root; among ties the vertex nearest the root wins."""
        self._check(x)
        self._access(x)
        target = self._mn[x]
        y = x
        while True:
            self._push(y)
            l = self._l[y]
            if l and self._mn[l] == target:
                y = l
            elif self._val[y] == target:
                break
            else:
                y = self._r[y]
        self._splay(y)
        return y, target

    def addcost(self, x: int, delta) -> None:
        self._check(x)
        self._access(x)
        self._apply(x, delta)

    def cost(self, x: int):
        self._check(x)
        self._access(x)
        return self._val[x]

    def parent(self, x: int) -> int:
        """Tree parent of ``x`` (0 for a root)."""
        self._check(x)
        self._access(x)
        y = self._l[x]
        if not y:
            return 0
        while True:
            self._push(y)
            if not self._r[y]:
                break
            y = self._r[y]
        self._splay(y)
        return y

    def link(self, u: int, v: int, c) -> None:
        """Make root ``u`` a child of ``v`` with cost ``c`` on ``u``."""
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("cannot link a vertex to itself")
        self._access(u)
        if self._l[u]:
            raise ValueError(f"{u} is not a tree root")
        if self.findroot(v) == u:
            raise ValueError(f"{v} is already in the tree of {u}")
        self._access(u)
        self._val[u] = c
        self._pull(u)
        self._p[u] = v

    def cut(self, u: int):
        """Detach ``u`` from its parent; returns the cost ``u`` carried."""
        self._check(u)
        self._access(u)
        l = self._l[u]
        if not l:
            raise ValueError(f"{u} is a tree root")
        self._p[l] = 0
        self._l[u] = 0
        c = self._val[u]
        self._val[u] = INF
        self._pull(u)
        return c
