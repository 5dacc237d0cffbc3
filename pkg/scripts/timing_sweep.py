"""Time every algorithm for a problem over a range of graph sizes.

    python3 scripts/timing_sweep.py maxflo --sizes 100 200 400 --reps 3

Prints CSV rows ``problem,algo,n,m,mean_ms`` and, per algorithm, the slope
of log(time) against log(n) as a rough empirical growth exponent.
"""

import argparse
import math
import time
from dataclasses import dataclass

from idxgraph.cli import TESTERS, TIMED
from idxgraph.gen import rand_graph


@dataclass
class SweepConfig:
    problem: str
    sizes: tuple = (50, 100, 200, 400)
    density: int = 4  # m = density * n, capped for bipartite kinds
    reps: int = 3
    seed: int = 1
    lo: int = 1
    hi: int = 99


def edge_count(kind: str, n: int, density: int) -> int:
    m = density * n
    if kind in ("bigraph", "wbigraph"):
        m = min(m, n * n // 5)
    return m


def run_one(cfg: SweepConfig, algo: str, n: int) -> float:
    kind, fn = TIMED[cfg.problem]
    m = edge_count(kind, n, cfg.density)
    total = 0.0
    for rep in range(cfg.reps):
        g = rand_graph(kind, n, m, cfg.lo, cfg.hi, cfg.seed + rep, 1,
                       extra=max(1, n // 10), clo=0, chi=cfg.hi)
        t0 = time.perf_counter()
        fn(g, algo)
        total += time.perf_counter() - t0
    return 1000 * total / cfg.reps


def slope(xs, ys) -> float:
    lx = [math.log(x) for x in xs]
    ly = [math.log(max(y, 1e-6)) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den if den else float("nan")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("problem", choices=sorted(TIMED))
    p.add_argument("--sizes", type=int, nargs="+", default=list(SweepConfig.sizes))
    p.add_argument("--density", type=int, default=4)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()
    cfg = SweepConfig(args.problem, tuple(args.sizes), args.density, args.reps, args.seed)

    kind = TIMED[cfg.problem][0]
    print("problem,algo,n,m,mean_ms")
    growth = {}
    for algo in TESTERS["test" + cfg.problem].algorithms:
        times = []
        for n in cfg.sizes:
            ms = run_one(cfg, algo, n)
            times.append(ms)
            print(f"{cfg.problem},{algo},{n},{edge_count(kind, n, cfg.density)},{ms:.3f}", flush=True)
        growth[algo] = slope(cfg.sizes, times)
    print()
    for algo, s in growth.items():
        print(f"# {algo}: time ~ n^{s:.2f}")


if __name__ == "__main__":
    main()
