import random

import pytest

from idxgraph import mincost
from idxgraph.gen import rand_graph
from idxgraph.graph import WFlowGraph

from oracles import min_cost_max_flow, random_connected_pairs

ALGOS = list(mincost.ALGORITHMS)


def _build(n, s, t, arcs):
    g = WFlowGraph(n, s, t)
    for u, v, cap, cost in arcs:
        g.join(u, v, cap, cost)
    return g


def test_two_routes():
    # two parallel routes; the cheap one saturates first
    arcs = [(1, 2, 3, 1), (2, 4, 3, 1), (1, 3, 3, 5), (3, 4, 2, 5)]
    for algo in ALGOS:
        r = mincost.min_cost_max_flow(_build(4, 1, 4, arcs), algo)
        assert (r.flow, r.cost) == (5, 26)


def test_negative_costs_without_cycles():
    arcs = [(1, 2, 2, -4), (2, 3, 2, 1), (1, 3, 1, 0)]
    for algo in ALGOS:
        r = mincost.min_cost_max_flow(_build(3, 1, 3, arcs), algo)
        assert (r.flow, r.cost) == (3, -6)


def test_negative_cycle_input():
    arcs = [(1, 2, 1, 0), (2, 3, 1, -5), (3, 2, 1, 1), (2, 4, 1, 0)]
    r = mincost.cycle_reduction(_build(4, 1, 4, arcs))
    assert (r.flow, r.cost) == (1, -4)
    for algo in ("lc", "scale"):
        with pytest.raises(ValueError):
            mincost.min_cost_max_flow(_build(4, 1, 4, arcs), algo)


def test_verify_catches_costly_flow():
    arcs = [(1, 2, 1, 1), (1, 2, 1, 9), (2, 3, 1, 0)]
    g = _build(3, 1, 3, arcs)
    g.flow[2] = g.flow[3] = 1  # the expensive parallel edge
    assert "negative residual cycle" in mincost.verify(g)


def test_matches_enumeration():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 6)
        pairs = random_connected_pairs(rng, n, rng.randint(0, 3), directed=True)[:8]
        arcs = [(u, v, rng.randint(0, 3), rng.randint(0, 9)) for u, v in pairs]
        s, t = rng.sample(range(1, n + 1), 2)
        want = min_cost_max_flow(n, arcs, s, t)
        for algo in ALGOS:
            g = _build(n, s, t, arcs)
            r = mincost.min_cost_max_flow(g, algo)
            assert (r.flow, r.cost) == want, algo
            assert mincost.verify(g, r) is None


def test_algorithms_agree_on_larger_graphs():
    for seed in range(3):
        out = set()
        for algo in ALGOS:
            g = rand_graph("wflograph", 80, 320, 1, 20, seed=seed, scramble=1, extra=8, clo=0, chi=30)
            r = mincost.min_cost_max_flow(g, algo)
            out.add((r.flow, r.cost))
        assert len(out) == 1
