import math
import random

import pytest

from idxgraph.ds import DynamicTrees


class NaiveTrees:
    def __init__(self, n):
        self.parent = [0] * (n + 1)
        self.cost = [math.inf] * (n + 1)

    def path(self, x):
        out = [x]
        while self.parent[out[-1]]:
            out.append(self.parent[out[-1]])
        return out

    def findroot(self, x):
        return self.path(x)[-1]

    def findcost(self, x):
        best = None
        for y in self.path(x):
            if best is None or self.cost[y] <= self.cost[best]:
                best = y
        return best, self.cost[best]

    def addcost(self, x, d):
        for y in self.path(x):
            self.cost[y] += d

    def link(self, u, v, c):
        self.parent[u] = v
        self.cost[u] = c

    def cut(self, u):
        c = self.cost[u]
        self.parent[u] = 0
        self.cost[u] = math.inf
        return c


def test_fuzz_against_naive():
    rng = random.Random(21)
    n = 50
    dt, ref = DynamicTrees(n), NaiveTrees(n)
    for _ in range(15000):
        r = rng.random()
        x = rng.randint(1, n)
        if r < 0.25:
            roots = [u for u in range(1, n + 1) if not ref.parent[u]]
            u = rng.choice(roots)
            v = rng.randint(1, n)
            if ref.findroot(v) != u:
                c = rng.randint(0, 40)
                dt.link(u, v, c)
                ref.link(u, v, c)
        elif r < 0.4:
            if ref.parent[x]:
                assert dt.cut(x) == ref.cut(x)
        elif r < 0.55:
            d = rng.randint(-5, 5)
            dt.addcost(x, d)
            ref.addcost(x, d)
        elif r < 0.7:
            assert dt.findroot(x) == ref.findroot(x)
        elif r < 0.85:
            assert dt.findcost(x) == ref.findcost(x)
        else:
            assert dt.parent(x) == ref.parent[x]
            assert dt.cost(x) == ref.cost[x]


def test_link_errors():
    dt = DynamicTrees(4)
    dt.link(1, 2, 5)
    with pytest.raises(ValueError):
        dt.link(1, 3, 1)  # 1 is no longer a root
    with pytest.raises(ValueError):
        dt.link(2, 1, 1)  # same tree
    with pytest.raises(ValueError):
        dt.cut(2)
