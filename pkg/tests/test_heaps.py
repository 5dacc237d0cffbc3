import random

import pytest
from hypothesis import given, settings, strategies as st

from idxgraph.ds import DHeap, FibHeap, LeftistHeaps


def _ref_min(ref: dict) -> int:
    return min(ref, key=lambda x: (ref[x], x))


def _fuzz_single(heap, n, ops, rng, decrease_only=False):
    ref: dict = {}
    for _ in range(ops):
        r = rng.random()
        absent = [x for x in range(1, n + 1) if x not in ref]
        if r < 0.4 and absent:
            x, k = rng.choice(absent), rng.randint(0, 50)
            heap.insert(x, k)
            ref[x] = k
        elif r < 0.65 and ref:
            x = rng.choice(list(ref))
            k = rng.randint(0, ref[x]) if decrease_only else rng.randint(0, 50)
            heap.change_key(x, k)
            ref[x] = k
        elif r < 0.75 and ref and hasattr(heap, "remove"):
            x = rng.choice(list(ref))
            heap.remove(x)
            del ref[x]
        elif ref:
            want = _ref_min(ref)
            assert heap.find_min() == want
            assert heap.delete_min() == want
            del ref[want]
        assert len(heap) == len(ref)
        for x in range(1, n + 1):
            assert (x in heap) == (x in ref)
    heap.check()


def test_dheap_fuzz():
    for d in (2, 3, 4, 7):
        _fuzz_single(DHeap(40, d), 40, 4000, random.Random(d))


def test_fibheap_fuzz():
    _fuzz_single(FibHeap(40), 40, 12000, random.Random(3), decrease_only=True)


def test_fibheap_rejects_increase():
    h = FibHeap(3)
    h.insert(1, 5)
    with pytest.raises(ValueError):
        h.decrease_key(1, 6)


def test_dheap_errors():
    h = DHeap(3)
    with pytest.raises(IndexError):
        h.delete_min()
    h.insert(1, 2)
    with pytest.raises(ValueError):
        h.insert(1, 3)
    with pytest.raises(KeyError):
        h.change_key(2, 1)


def test_ties_break_on_index():
    for h in (DHeap(5), FibHeap(5)):
        for x in (4, 2, 5):
            h.insert(x, 7)
        assert [h.delete_min() for _ in range(3)] == [2, 4, 5]


@settings(max_examples=60)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=30))
def test_heapsort(keys):
    n = len(keys)
    want = sorted(range(1, n + 1), key=lambda x: (keys[x - 1], x))
    for h in (DHeap(n, 3), FibHeap(n)):
        for x, k in enumerate(keys, 1):
            h.insert(x, k)
        assert [h.delete_min() for _ in range(n)] == want


def test_leftist_fuzz():
    """Many heaps with melds, inserts, lazy retirement and delete-mins."""
    rng = random.Random(9)
    n = 60
    lh = LeftistHeaps(n)
    heaps: dict = {}  # root -> set of live items
    free = list(range(1, n + 1))
    for step in range(12000):
        r = rng.random()
        if r < 0.35 and free:
            x = free.pop(rng.randrange(len(free)))
            k = rng.randint(0, 30)
            if heaps and rng.random() < 0.5:
                h = rng.choice(list(heaps))
                items = heaps.pop(h)
                h = lh.insert(x, k, h)
                heaps[h] = items | {x}
            else:
                heaps[lh.make(x, k)] = {x}
        elif r < 0.55 and len(heaps) > 1:
            a, b = rng.sample(list(heaps), 2)
            items = heaps.pop(a) | heaps.pop(b)
            heaps[lh.meld(a, b)] = items
        elif r < 0.65 and heaps:
            h = rng.choice(list(heaps))
            if heaps[h]:
                x = rng.choice(sorted(heaps[h]))
                lh.retire(x)
                heaps[h].discard(x)
        elif heaps:
            h = rng.choice(list(heaps))
            items = heaps.pop(h)
            if not items:
                assert lh.find_min(h) == 0
                continue
            want = min(items, key=lambda x: (lh.key[x], x))
            x, nh = lh.delete_min(h)
            assert x == want
            items.discard(x)
            if items:
                heaps[nh] = items
            # retired items are reusable only once physically gone; keep them out
        for h in list(heaps)[:3]:
            lh.check(h)
    assert step == 11999
