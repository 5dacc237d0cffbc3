"""Singly linked index list and the disjoint-lists partition."""

from __future__ import annotations

from typing import Iterator

from ..fmt import index_str

ABSENT = -1


class IndexList:
    """An ordered subset of ``1..n`` stored in a single ``next`` array.

    ``next[x]`` is the successor of ``x``, 0 if ``x`` is last, and -1 if ``x``
    is not in the list, which makes membership a single lookup.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("capacity must be non-negative")
        self.n = n
        self._next = [ABSENT] * (n + 1)
        self._first = 0
        self._last = 0
        self._size = 0

    def _check(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"index {x} out of range 1..{self.n}")

    def __contains__(self, x: int) -> bool:
        self._check(x)
        return self._next[x] != ABSENT

    contains = __contains__

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._first != 0

    def expand(self, n: int) -> None:
        """Grow the index range to ``1..n`` (never shrinks)."""
        if n > self.n:
            self._next.extend([ABSENT] * (n - self.n))
            self.n = n

    def first(self) -> int:
        return self._first

    def last(self) -> int:
        return self._last

    def next(self, x: int) -> int:
        return self._next[x]

    def append(self, x: int) -> None:
        self._check(x)
        if self._next[x] != ABSENT:
            raise ValueError(f"index {x} already in list")
        self._next[x] = 0
        if self._first == 0:
            self._first = x
        else:
            self._next[self._last] = x
        self._last = x
        self._size += 1

    def push(self, x: int) -> None:
        """Insert ``x`` at the front."""
        self._check(x)
        if self._next[x] != ABSENT:
            raise ValueError(f"index {x} already in list")
        self._next[x] = self._first
        if self._first == 0:
            self._last = x
        self._first = x
        self._size += 1

    def pop(self) -> int:
        """Remove and return the first index."""
        x = self._first
        if x == 0:
            raise IndexError("pop from empty list")
        self._first = self._next[x]
        if self._first == 0:
            self._last = 0
        self._next[x] = ABSENT
        self._size -= 1
        return x

    def clear(self) -> None:
        while self._first:
            self.pop()

    def __iter__(self) -> Iterator[int]:
        x = self._first
        while x != 0:
            yield x
            x = self._next[x]

    def to_text(self) -> str:
        return "[" + " ".join(index_str(x, self.n) for x in self) + "]"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"IndexList({self.n}, {list(self)})"


class DisjointLists:
    """A partition of ``1..n`` into ordered lists.

    ``next[x]`` is 0 for the last element of a list; ``prev`` of the first
    element points at the last one, so appending and splicing are O(1).  The
    identifier of a list is its first element.
    """

    def __init__(self, n: int):
        self.n = n
        self._next = [0] * (n + 1)
        self._prev = list(range(n + 1))

    def _check(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise IndexError(f"index {x} out of range 1..{self.n}")

    def expand(self, n: int) -> None:
        """Grow the index range to ``1..n``; new indexes are singletons."""
        if n > self.n:
            self._next.extend([0] * (n - self.n))
            self._prev.extend(range(self.n + 1, n + 1))
            self.n = n

    def is_id(self, x: int) -> bool:
        self._check(x)
        return self._next[self._prev[x]] == 0

    def first(self, lid: int) -> int:
        return lid

    def last(self, lid: int) -> int:
        return self._prev[lid]

    def next(self, x: int) -> int:
        return self._next[x]

    def prev(self, x: int) -> int:
        """Predecessor of ``x``, or 0 if ``x`` heads its list."""
        p = self._prev[x]
        return 0 if self._next[p] == 0 else p

    def is_singleton(self, x: int) -> bool:
        return self._prev[x] == x

    def members(self, lid: int) -> Iterator[int]:
        if not self.is_id(lid):
            raise ValueError(f"{lid} is not a list identifier")
        x = lid
        while x != 0:
            yield x
            x = self._next[x]

    def find_id(self, x: int) -> int:
        """Identifier of the list containing ``x`` (linear in list length)."""
        self._check(x)
        while not self.is_id(x):
            x = self._prev[x]
        return x

    def join(self, id1: int, id2: int) -> int:
        """Append list ``id2`` to list ``id1``; returns ``id1``."""
        if id1 == 0:
            return id2
        if id2 == 0:
            return id1
        if id1 == id2:
            raise ValueError("cannot merge a list with itself")
        if not (self.is_id(id1) and self.is_id(id2)):
            raise ValueError("merge arguments must be list identifiers")
        last1, last2 = self._prev[id1], self._prev[id2]
        self._next[last1] = id2
        self._prev[id2] = last1
        self._prev[id1] = last2
        return id1

    merge = join

    def delete(self, x: int, lid: int) -> int:
        """Remove ``x`` from list ``lid``, making it a singleton.

        Returns the identifier of what remains of the list (0 if empty).
        """
        self._check(x)
        if self._prev[x] == x:
            return 0
        nxt, prv = self._next[x], self._prev[x]
        if x == lid:
            # x heads the list: nxt becomes the identifier
            self._prev[nxt] = prv
            lid = nxt
        elif nxt == 0:
            self._next[prv] = 0
            self._prev[lid] = prv
        else:
            self._next[prv] = nxt
            self._prev[nxt] = prv
        self._next[x] = 0
        self._prev[x] = x
        return lid

    def lists(self) -> list[list[int]]:
        return [list(self.members(x)) for x in range(1, self.n + 1) if self.is_id(x)]

    def to_text(self) -> str:
        parts = []
        for lst in self.lists():
            parts.append("[" + " ".join(index_str(x, self.n) for x in lst) + "]")
        return "{" + " ".join(parts) + "}"

    __str__ = to_text
