import random

import pytest

from idxgraph.ds import DisjointSets


def test_link_requires_roots():
    ds = DisjointSets(5)
    r = ds.link(1, 2)
    other = 2 if r == 1 else 1
    with pytest.raises(ValueError):
        ds.link(other, 3)
    with pytest.raises(ValueError):
        ds.link(r, r)


def test_fuzz_against_labels():
    """Random unions and finds against a naive label array (10^4+ ops)."""
    rng = random.Random(11)
    n = 300
    ds = DisjointSets(n)
    label = list(range(n + 1))
    for _ in range(12000):
        x, y = rng.randint(1, n), rng.randint(1, n)
        if rng.random() < 0.3:
            if label[x] != label[y]:
                ds.union_of(x, y)
                old, new = label[y], label[x]
                label = [new if v == old else v for v in label]
        else:
            assert (ds.find(x) == ds.find(y)) == (label[x] == label[y])
    # rank bound: every tree has height at most log2(size)
    sizes: dict = {}
    for v in range(1, n + 1):
        sizes[ds.find(v)] = sizes.get(ds.find(v), 0) + 1
    for v in range(1, n + 1):
        assert 2 ** ds.height(v) <= sizes[ds.find(v)]
