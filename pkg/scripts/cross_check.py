"""Run every algorithm of each problem on the same random graphs and report
any disagreement, plus verifier failures.

    python3 scripts/cross_check.py --n 60 --seeds 50
"""

import argparse
from collections import Counter

from idxgraph import ecolor, matching, maxflow, mincost, mst, paths
from idxgraph.gen import rand_graph


def check_mst(n, seed):
    g = rand_graph("wgraph", n, 4 * n, 1, 1000, seed, 1)
    res = {a: mst.mst(g, a) for a in mst.ALGORITHMS}
    errs = [f"{a}: {e}" for a, r in res.items() if (e := mst.verify(g, r))]
    return {a: r.weight for a, r in res.items()}, errs


def check_spt(n, seed):
    g = rand_graph("wdigraph", n, 4 * n, 0, 1000, seed, 1)
    res = {a: paths.spt(g, 1, a) for a in paths.SPT_ALGORITHMS}
    errs = [f"{a}: {e}" for a, t in res.items() if (e := paths.verify(g, 1, t))]
    return {a: t.dist_sum() for a, t in res.items()}, errs


def check_maxflo(n, seed):
    vals, errs = {}, []
    for a in maxflow.ALGORITHMS:
        g = rand_graph("flograph", n, 4 * n, 1, 100, seed, 1, extra=max(1, n // 10))
        vals[a] = maxflow.max_flow(g, a)
        if e := maxflow.verify(g, vals[a]):
            errs.append(f"{a}: {e}")
    return vals, errs


def check_mcflo(n, seed):
    vals, errs = {}, []
    for a in mincost.ALGORITHMS:
        g = rand_graph("wflograph", n, 4 * n, 1, 50, seed, 1, extra=max(1, n // 10), clo=0, chi=100)
        r = mincost.min_cost_max_flow(g, a)
        vals[a] = (r.flow, r.cost)
        if e := mincost.verify(g, r):
            errs.append(f"{a}: {e}")
    return vals, errs


def check_match(n, seed):
    g = rand_graph("bigraph", n, min(4 * n, n * n // 5), seed=seed, scramble=1)
    vals, errs = {}, []
    for a in matching.SIZE_ALGORITHMS:
        r = matching.max_size_matching(g, a)
        vals[a] = r.size
        if e := matching.verify(g, r, "size"):
            errs.append(f"{a}: {e}")
    return vals, errs


def check_wmatch(n, seed):
    g = rand_graph("wbigraph", n, min(4 * n, n * n // 5), 1, 1000, seed, 1)
    vals, errs = {}, []
    for a in matching.WEIGHT_ALGORITHMS:
        r = matching.max_weight_matching(g, a)
        vals[a] = r.weight
        if e := matching.verify(g, r, "weight"):
            errs.append(f"{a}: {e}")
    return vals, errs


def check_ecolor(n, seed):
    g = rand_graph("bigraph", n, min(4 * n, n * n // 5), seed=seed, scramble=1)
    vals, errs = {}, []
    for a in ecolor.ALGORITHMS:
        c = ecolor.ecolor(g, a)
        vals[a] = c.num_colors
        if e := ecolor.verify(g, c):
            errs.append(f"{a}: {e}")
    vals["max degree"] = g.max_degree()
    return vals, errs


CHECKS = {
    "mst": check_mst, "spt": check_spt, "maxflo": check_maxflo, "mcflo": check_mcflo,
    "match": check_match, "wmatch": check_wmatch, "ecolor": check_ecolor,
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--problems", nargs="+", choices=sorted(CHECKS), default=list(CHECKS))
    args = p.parse_args()

    bad = 0
    for name in args.problems:
        tally = Counter()
        for seed in range(1, args.seeds + 1):
            vals, errs = CHECKS[name](args.n, seed)
            agree = len(set(vals.values())) == 1
            tally["agree" if agree else "disagree"] += 1
            tally["verifier errors"] += len(errs)
            if not agree:
                print(f"{name} seed {seed}: {vals}")
            for e in errs:
                print(f"{name} seed {seed}: {e}")
        bad += tally["disagree"] + tally["verifier errors"]
        print(f"{name:7s} {tally['agree']}/{args.seeds} agree, "
              f"{tally['verifier errors']} verifier errors")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
