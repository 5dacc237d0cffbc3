"""Priority structures over index sets.

All three heaps order items by ``(key, index)`` so that equal keys are broken
in favour of the lower index and every run is reproducible.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator, Optional


class DHeap:
    """d-ary min-heap of indexes in ``1..n`` with O(log_d n) ``change_key``."""

    def __init__(self, n: int, d: int = 4):
        if d < 2:
            raise ValueError("arity must be at least 2")
        self.n = n
        self.d = d
        self._h = [0]  # slot 0 unused; slots 1.. hold items
        self._pos = [0] * (n + 1)
        self.key = [0] * (n + 1)

    def __len__(self) -> int:
        return len(self._h) - 1

    def __bool__(self) -> bool:
        return len(self._h) > 1

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and self._pos[x] != 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._h[1:])

    def _less(self, x: int, y: int) -> bool:
        kx, ky = self.key[x], self.key[y]
        return kx < ky or (kx == ky and x < y)

    def _parent(self, i: int) -> int:
        return (i - 2) // self.d + 1

    def _sift_up(self, x: int, i: int) -> None:
        h, pos = self._h, self._pos
        while i > 1:
            pi = (i - 2) // self.d + 1
            p = h[pi]
            if not self._less(x, p):
                break
            h[i] = p
            pos[p] = i
            i = pi
        h[i] = x
        pos[x] = i

    def _min_child(self, i: int) -> int:
        h = self._h
        lo = self.d * (i - 1) + 2
        if lo >= len(h):
            return 0
        hi = min(lo + self.d, len(h))
        best = lo
        for c in range(lo + 1, hi):
            if self._less(h[c], h[best]):
                best = c
        return best

    def _sift_down(self, x: int, i: int) -> None:
        h, pos = self._h, self._pos
        c = self._min_child(i)
        while c and self._less(h[c], x):
            h[i] = h[c]
            pos[h[i]] = i
            i = c
            c = self._min_child(i)
        h[i] = x
        pos[x] = i

    def insert(self, x: int, k) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"index {x} out of range 1..{self.n}")
        if self._pos[x]:
            raise ValueError(f"item {x} already in heap")
        self.key[x] = k
        self._h.append(x)
        self._sift_up(x, len(self._h) - 1)

    def find_min(self) -> int:
        if len(self._h) == 1:
            raise IndexError("heap is empty")
        return self._h[1]

    def remove(self, x: int) -> None:
        i = self._pos[x] if 1 <= x <= self.n else 0
        if not i:
            raise KeyError(f"item {x} not in heap")
        self._pos[x] = 0
        last = self._h.pop()
        if last == x:
            return
        if self._less(last, x):
            self._sift_up(last, i)
        else:
            self._sift_down(last, i)

    def delete_min(self) -> int:
        x = self.find_min()
        self.remove(x)
        return x

    def change_key(self, x: int, k) -> None:
        i = self._pos[x] if 1 <= x <= self.n else 0
        if not i:
            raise KeyError(f"item {x} not in heap")
        old = self.key[x]
        self.key[x] = k
        if k < old:
            self._sift_up(x, i)
        elif k > old:
            self._sift_down(x, i)

    def clear(self) -> None:
        for x in self._h[1:]:
            self._pos[x] = 0
        del self._h[1:]

    def check(self) -> None:
        """Assert heap order and position consistency (for tests)."""
        h = self._h
        for i in range(2, len(h)):
            assert not self._less(h[i], h[self._parent(i)]), f"heap order at slot {i}"
        for i in range(1, len(h)):
            assert self._pos[h[i]] == i


class LeftistHeaps:
    """A forest of meldable leftist heaps on items ``1..n``.

    A heap is named by its root item; 0 is the empty heap.  Items can be
    retired in O(1) and are discarded lazily when they surface at a root, or
    whenever a caller-supplied predicate reports them as dead.
    """

    def __init__(self, n: int):
        self.n = n
        self.key = [0] * (n + 1)
        self.rank = [0] * (n + 1)
        self.left = [0] * (n + 1)
        self.right = [0] * (n + 1)
        self.retired = [False] * (n + 1)
        self.rank[0] = 0

    def _less(self, x: int, y: int) -> bool:
        kx, ky = self.key[x], self.key[y]
        return kx < ky or (kx == ky and x < y)

    def make(self, x: int, k) -> int:
        """Turn ``x`` into a singleton heap with key ``k``."""
        self.key[x] = k
        self.rank[x] = 1
        self.left[x] = self.right[x] = 0
        self.retired[x] = False
        return x

    def meld(self, h1: int, h2: int) -> int:
        if h1 == 0:
            return h2
        if h2 == 0:
            return h1
        left, right, rank = self.left, self.right, self.rank
        # walk down the right spines, then fix ranks bottom-up
        path = []
        while h1 and h2:
            if self._less(h2, h1):
                h1, h2 = h2, h1
            path.append(h1)
            nxt = right[h1]
            h1 = nxt
        tail = h1 or h2
        for x in reversed(path):
            right[x] = tail
            if rank[left[x]] < rank[right[x]]:
                left[x], right[x] = right[x], left[x]
            rank[x] = rank[right[x]] + 1
            tail = x
        return tail

    def insert(self, x: int, k, h: int) -> int:
        return self.meld(self.make(x, k), h)

    def retire(self, x: int) -> None:
        self.retired[x] = True

    def purge(self, h: int, dead: Optional[Callable[[int], bool]] = None) -> int:
        """Drop dead items sitting at the root of ``h``; return the new root."""
        retired = self.retired
        while h and (retired[h] or (dead is not None and dead(h))):
            nh = self.meld(self.left[h], self.right[h])
            self.left[h] = self.right[h] = 0
            self.rank[h] = 1
            retired[h] = True
            h = nh
        return h

    def find_min(self, h: int, dead: Optional[Callable[[int], bool]] = None) -> int:
        """Purge ``h`` and return its root, which is also its min live item."""
        return self.purge(h, dead)

    def delete_min(self, h: int, dead: Optional[Callable[[int], bool]] = None) -> tuple[int, int]:
        """Remove the min live item of ``h``; returns ``(item, new root)``."""
        h = self.purge(h, dead)
        if h == 0:
            raise IndexError("heap is empty")
        nh = self.meld(self.left[h], self.right[h])
        self.left[h] = self.right[h] = 0
        self.rank[h] = 1
        nh = self.purge(nh, dead)
        return h, nh

    def items(self, h: int) -> list[int]:
        out: list[int] = []
        stack = [h] if h else []
        while stack:
            x = stack.pop()
            out.append(x)
            for c in (self.left[x], self.right[x]):
                if c:
                    stack.append(c)
        return out

    def check(self, h: int) -> None:
        """Assert heap order and the leftist rank rule throughout ``h``."""
        for x in self.items(h):
            lx, rx = self.left[x], self.right[x]
            assert self.rank[lx] >= self.rank[rx], f"leftist rule at {x}"
            assert self.rank[x] == self.rank[rx] + 1, f"rank at {x}"
            for c in (lx, rx):
                if c:
                    assert not self._less(c, x), f"heap order at {x}"


class FibHeap:
    """Fibonacci heap over items ``1..n`` (a single heap)."""

    def __init__(self, n: int):
        self.n = n
        self.key = [0] * (n + 1)
        self._parent = [0] * (n + 1)
        self._child = [0] * (n + 1)
        self._left = list(range(n + 1))
        self._right = list(range(n + 1))
        self._degree = [0] * (n + 1)
        self._mark = [False] * (n + 1)
        self._in = [False] * (n + 1)
        self._min = 0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and self._in[x]

    def _less(self, x: int, y: int) -> bool:
        kx, ky = self.key[x], self.key[y]
        return kx < ky or (kx == ky and x < y)

    def _splice(self, a: int, b: int) -> None:
        """Concatenate the circular sibling lists containing ``a`` and ``b``."""
        ra, rb = self._right[a], self._right[b]
        self._right[a], self._left[rb] = rb, a
        self._right[b], self._left[ra] = ra, b

    def _unlink(self, x: int) -> None:
        l, r = self._left[x], self._right[x]
        self._right[l], self._left[r] = r, l
        self._left[x] = self._right[x] = x

    def insert(self, x: int, k) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"index {x} out of range 1..{self.n}")
        if self._in[x]:
            raise ValueError(f"item {x} already in heap")
        self.key[x] = k
        self._parent[x] = self._child[x] = 0
        self._degree[x] = 0
        self._mark[x] = False
        self._left[x] = self._right[x] = x
        self._in[x] = True
        self._size += 1
        if self._min == 0:
            self._min = x
        else:
            self._splice(self._min, x)
            if self._less(x, self._min):
                self._min = x

    def find_min(self) -> int:
        if self._min == 0:
            raise IndexError("heap is empty")
        return self._min

    def delete_min(self) -> int:
        z = self.find_min()
        c = self._child[z]
        if c:
            x = c
            while True:
                self._parent[x] = 0
                self._mark[x] = False
                x = self._right[x]
                if x == c:
                    break
            self._splice(z, c)
            self._child[z] = 0
        nxt = self._right[z]
        self._unlink(z)
        self._in[z] = False
        self._size -= 1
        self._degree[z] = 0
        if nxt == z:
            self._min = 0
        else:
            self._consolidate(nxt)
        return z

    def _consolidate(self, start: int) -> None:
        roots = []
        x = start
        while True:
            roots.append(x)
            x = self._right[x]
            if x == start:
                break
        # degrees stay below log_phi(size) + 1
        by_degree = [0] * (int(math.log2(self._size + 1) * 1.5) + 3)
        for x in roots:
            d = self._degree[x]
            while True:
                y = by_degree[d]
                if y == 0:
                    break
                if self._less(y, x):
                    x, y = y, x
                self._link(y, x)
                by_degree[d] = 0
                d += 1
            by_degree[d] = x
        self._min = 0
        for x in by_degree:
            if x and (self._min == 0 or self._less(x, self._min)):
                self._min = x

    def _link(self, y: int, x: int) -> None:
        """Make root ``y`` a child of root ``x``."""
        self._unlink(y)
        c = self._child[x]
        if c:
            self._splice(c, y)
        else:
            self._child[x] = y
        self._parent[y] = x
        self._degree[x] += 1
        self._mark[y] = False

    def decrease_key(self, x: int, k) -> None:
        if not (1 <= x <= self.n and self._in[x]):
            raise KeyError(f"item {x} not in heap")
        if k > self.key[x]:
            raise ValueError("new key exceeds current key")
        if k == self.key[x]:
            return
        self.key[x] = k
        p = self._parent[x]
        if p and self._less(x, p):
            self._cut(x, p)
            while p:
                pp = self._parent[p]
                if pp == 0:
                    break
                if not self._mark[p]:
                    self._mark[p] = True
                    break
                self._cut(p, pp)
                p = pp
        if self._less(x, self._min):
            self._min = x

    change_key = decrease_key

    def _cut(self, x: int, p: int) -> None:
        if self._child[p] == x:
            self._child[p] = 0 if self._right[x] == x else self._right[x]
        self._unlink(x)
        self._degree[p] -= 1
        self._parent[x] = 0
        self._mark[x] = False
        self._splice(self._min, x)

    def roots(self) -> list[int]:
        if self._min == 0:
            return []
        out, x = [], self._min
        while True:
            out.append(x)
            x = self._right[x]
            if x == self._min:
                return out

    def check(self) -> None:
        """Assert heap order within every tree and min-pointer correctness."""
        count = 0
        stack = list(self.roots())
        for r in stack:
            assert self._parent[r] == 0
            assert not self._less(r, self._min)
        while stack:
            x = stack.pop()
            count += 1
            c = self._child[x]
            if c:
                y, deg = c, 0
                while True:
                    assert self._parent[y] == x
                    assert not self._less(y, x), f"heap order at {x}"
                    stack.append(y)
                    deg += 1
                    y = self._right[y]
                    if y == c:
                        break
                assert deg == self._degree[x]
        assert count == self._size
