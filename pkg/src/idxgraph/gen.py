"""Seeded random graph generation.

The generator uses SplitMix64 so that a given argument list produces the same
graph on every platform and Python version.  Edges are sampled uniformly
without replacement from the allowed vertex pairs, so generated graphs never
contain parallel edges.
"""

from __future__ import annotations

from .graph import Digraph, FlowGraph, Graph, WDigraph, WFlowGraph, WGraph

MASK64 = (1 << 64) - 1

KINDS = ("ugraph", "bigraph", "tree", "wgraph", "wbigraph", "digraph",
         "wdigraph", "dag", "flograph", "wflograph")
WEIGHTED = {"wgraph", "wbigraph", "wdigraph", "wflograph", "flograph"}


class SplitMix64:
    """Steele, Lea and Flood's 64-bit SplitMix generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` (rejection sampling, no modulo bias)."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def permutation(self, n: int) -> list[int]:
        """Random permutation of ``1..n`` as a list indexed from 1."""
        p = list(range(1, n + 1))
        self.shuffle(p)
        return [0] + p


def _sample_pairs(rng: SplitMix64, total: int, m: int, decode) -> list[tuple[int, int]]:
    """Sample ``m`` distinct pair codes from ``range(total)`` and decode them."""
    if m > total:
        raise ValueError(f"requested {m} edges but only {total} vertex pairs allowed")
    if 2 * m <= total:
        seen: set[int] = set()
        out = []
        while len(out) < m:
            c = rng.below(total)
            if c not in seen:
                seen.add(c)
                out.append(c)
    else:
        codes = list(range(total))
        for i in range(m):
            j = i + rng.below(total - i)
            codes[i], codes[j] = codes[j], codes[i]
        out = codes[:m]
    return [decode(c) for c in out]


def _random_pairs_undirected(rng, n, m):
    total = n * (n - 1) // 2

    def decode(c: int) -> tuple[int, int]:
        u = 1
        while c >= n - u:
            c -= n - u
            u += 1
        return (u, u + 1 + c)
    return _sample_pairs(rng, total, m, decode)


def _random_pairs_directed(rng, n, m):
    total = n * (n - 1)

    def decode(c: int) -> tuple[int, int]:
        u, r = divmod(c, n - 1)
        v = r + 1 if r + 1 < u + 1 else r + 2
        return (u + 1, v)
    return _sample_pairs(rng, total, m, decode)


def _random_pairs_bipartite(rng, n1, n2, m):
    def decode(c: int) -> tuple[int, int]:
        u, v = divmod(c, n2)
        return (u + 1, n1 + v + 1)
    return _sample_pairs(rng, n1 * n2, m, decode)


def _random_tree(rng, n):
    return [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]


def rand_graph(kind: str, n: int, m: int, lo: int = 1, hi: int = 1, seed: int = 1,
               scramble: int = 0, extra: int = 0, clo: int = 0, chi: int = 0):
    """Generate a random graph of the given kind.

    ``lo..hi`` bounds weights, lengths or capacities.  For ``flograph`` and
    ``wflograph``, ``extra`` is the number of source edges and of sink edges;
    vertex ``n-1`` is the source and ``n`` the sink before scrambling, and the
    remaining ``m - 2*extra`` edges join the other vertices.  ``clo..chi``
    bounds the costs of ``wflograph``.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if lo > hi or clo > chi:
        raise ValueError("empty weight range")
    rng = SplitMix64(seed)

    src = snk = 0
    if kind == "tree":
        if m != n - 1:
            raise ValueError(f"a tree on {n} vertices has {n - 1} edges, not {m}")
        pairs = _random_tree(rng, n)
    elif kind in ("ugraph", "wgraph"):
        pairs = _random_pairs_undirected(rng, n, m)
    elif kind in ("bigraph", "wbigraph"):
        n1 = (n + 1) // 2
        pairs = _random_pairs_bipartite(rng, n1, n - n1, m)
    elif kind in ("digraph", "wdigraph"):
        pairs = _random_pairs_directed(rng, n, m)
    elif kind == "dag":
        pairs = _random_pairs_undirected(rng, n, m)  # u < v is acyclic
    else:
        core = n - 2
        if core < 1 or extra < 0 or extra > core:
            raise ValueError(f"flow graph needs n >= 3 and 0 <= extra <= {max(core, 0)}")
        if m < 2 * extra:
            raise ValueError("m must cover the source and sink edges")
        src, snk = n - 1, n
        outs = list(range(1, core + 1))
        ins = list(range(1, core + 1))
        rng.shuffle(outs)
        rng.shuffle(ins)
        pairs = [(src, v) for v in sorted(outs[:extra])]
        pairs += [(v, snk) for v in sorted(ins[:extra])]
        if core >= 2:
            pairs += _random_pairs_directed(rng, core, m - 2 * extra)
        elif m > 2 * extra:
            raise ValueError("no room for core edges")

    attrs = []
    for _ in pairs:
        if kind == "wflograph":
            attrs.append((rng.randint(lo, hi), rng.randint(clo, chi)))
        elif kind in WEIGHTED:
            attrs.append((rng.randint(lo, hi),))
        else:
            attrs.append(())

    order = list(range(len(pairs)))
    perm = list(range(n + 1))
    if scramble:
        perm = rng.permutation(n)
        rng.shuffle(order)

    if kind in ("ugraph", "bigraph", "tree"):
        g = Graph(n, len(pairs))
    elif kind in ("wgraph", "wbigraph"):
        g = WGraph(n, len(pairs))
    elif kind in ("digraph", "dag"):
        g = Digraph(n, len(pairs))
    elif kind == "wdigraph":
        g = WDigraph(n, len(pairs))
    elif kind == "flograph":
        g = FlowGraph(n, perm[src], perm[snk], len(pairs))
    else:
        g = WFlowGraph(n, perm[src], perm[snk], len(pairs))

    # unscrambled graphs get edge numbers in vertex-pair order
    triples = [(perm[pairs[i][0]], perm[pairs[i][1]], attrs[i]) for i in order]
    if not scramble:
        triples.sort(key=lambda t: (t[0], t[1]) if g.directed else (min(t[0], t[1]), max(t[0], t[1])))
    for u, v, a in triples:
        if not g.directed and u > v:
            u, v = v, u
        g.join(u, v, *a)
    return g
