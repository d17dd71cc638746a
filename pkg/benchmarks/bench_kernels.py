"""Compare the compiled and pure-Python counting kernels.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--quick]
"""
import argparse
import time
from math import comb

import numpy as np

from rainbowmult import BlowupColoring, EdgeColoring, materialize, parallel_coloring
from rainbowmult import _pykernels

try:
    from rainbowmult import _ckernels
except ImportError:
    _ckernels = None


def full_count(impl, coloring, t):
    n, r = coloring.n, coloring.r
    m = coloring.matrix()
    total = 0
    for v0 in range(n - t + 1):
        c, _ = impl.count_extensions(m, r, [v0], np.arange(v0 + 1, n), t - 1, 10**12)
        total += c
    return total


def workloads(quick):
    rng = np.random.default_rng(0)
    big = not quick
    yield "parallel K_%d, t=4" % (60 if big else 30), parallel_coloring(60 if big else 30), 4
    yield "blow-up K_36 of parallel K_6, t=4", materialize(BlowupColoring(parallel_coloring(6), 2)), 4
    n, r = (60, 30) if big else (30, 15)
    yield f"random K_{n}, r={r}, t=5", EdgeColoring(n, r, rng.integers(1, r + 1, size=comb(n, 2))), 5
    if big:
        yield "parallel K_40, t=6", parallel_coloring(40), 6


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'workload':<36} {'subsets':>10} {'rainbow':>9} " + " ".join(f"{n + ' s':>10}" for n, _ in impls) + "  speedup")
    for name, coloring, t in workloads(args.quick):
        row, counts = [], set()
        for _, impl in impls:
            secs, count = best_of(lambda: full_count(impl, coloring, t), args.repeat)
            row.append(secs)
            counts.add(count)
        assert len(counts) == 1, f"backends disagree on {name}: {counts}"
        speed = f"{row[0] / row[-1]:7.1f}x" if len(row) > 1 else "    n/a"
        print(f"{name:<36} {comb(coloring.n, t):>10} {counts.pop():>9} " + " ".join(f"{s:>10.4f}" for s in row) + "  " + speed)


if __name__ == "__main__":
    main()
