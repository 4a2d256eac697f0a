"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/compare_core.py [--repeat 5]

Both backends are fed identical inputs and must return identical results;
the script prints a table of best-of-N wall times and speedups.
"""

import argparse
import random
import time

from cclique import _accel, _pycore
from cclique.generators import gnp, moon_moser, planted_cclosed
from cclique.kernels import local_masks


def best(fn, repeat):
    top = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        top = min(top, time.perf_counter() - t0)
    return top, out


def pivot_cases():
    rng = random.Random(1)
    yield "moon_moser k=6", local_masks(moon_moser(6), range(18))
    for n, p in ((40, 0.5), (60, 0.3), (64, 0.7)):
        g = gnp(n, p, rng.randrange(10**6))
        yield f"gnp n={n} p={p}", local_masks(g, range(n))


def wedge_cases():
    yield "planted n=2000 c=8", planted_cclosed(2000, 8, 1)
    yield "gnp n=600 p=0.05", gnp(600, 0.05, 2)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    core = _accel._core
    if core is None:
        raise SystemExit("compiled extension not available; build with `pip install -e .`")
    print(f"{'kernel':<12} {'case':<22} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, masks in pivot_cases():
        tp, a = best(lambda: _pycore.bk_pivot(masks), args.repeat)
        tc, b = best(lambda: core.bk_pivot(masks), args.repeat)
        assert sorted(a[0]) == sorted(b[0]) and a[1:] == b[1:]
        print(f"{'bk_pivot':<12} {name:<22} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
    for name, g in wedge_cases():
        tp, a = best(lambda: _pycore.wedge_mids(g.adj, g.adj_sets), args.repeat)
        tc, b = best(lambda: _accel.wedge_mids(g.adj, g.adj_sets), args.repeat)
        assert a == b
        print(f"{'wedge_mids':<12} {name:<22} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
