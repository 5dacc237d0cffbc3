"""Union-find over ``1..n`` with union by rank and path compression."""

from __future__ import annotations

from ..fmt import index_str


class DisjointSets:
    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)

    def _check(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"index {x} out of range 1..{self.n}")

    def find(self, x: int) -> int:
        self._check(x)
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def link(self, rx: int, ry: int) -> int:
        """Combine the sets with canonical roots ``rx`` and ``ry``."""
        self._check(rx)
        self._check(ry)
        if rx == ry:
            raise ValueError("link arguments must be distinct")
        if self.parent[rx] != rx or self.parent[ry] != ry:
            raise ValueError("link arguments must be canonical roots")
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        elif self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.parent[ry] = rx
        return rx

    union = link

    def union_of(self, x: int, y: int) -> int:
        """Union the sets containing ``x`` and ``y`` (no-op if already joined)."""
        rx, ry = self.find(x), self.find(y)
        return rx if rx == ry else self.link(rx, ry)

    def height(self, x: int) -> int:
        h = 0
        while self.parent[x] != x:
            x = self.parent[x]
            h += 1
        return h

    def to_text(self) -> str:
        groups: dict[int, list[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault(self.find(x), []).append(x)
        return "{" + " ".join(
            "[" + " ".join(index_str(x, self.n) for x in g) + "]"
            for g in groups.values() if len(g) > 1) + "}"

    __str__ = to_text
