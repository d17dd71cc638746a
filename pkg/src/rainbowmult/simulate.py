"""Monte Carlo baseline for uniform colorings and first-improvement hill climbing.

Each sample ``i`` of a run seeded with ``seed`` draws from its own PCG64 stream,
``SeedSequence(seed, spawn_key=(i,))``, so results do not depend on batching or
on how samples are distributed over workers.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, sqrt

import numpy as np

from .coloring import EdgeColoring
from .counting import count_rainbow_complete, count_rainbow_through_edge
from .errors import DomainError, ResourceError
from .exact import baseline_proportion

DEFAULT_MAX_SUBSETS = 10**6
_BATCH_CELLS = 4_000_000


def _stream(seed, index=None):
    key = () if index is None else (index,)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def _draw(n, r, seed, index=None):
    return _stream(seed, index).integers(1, r + 1, size=n * (n - 1) // 2, dtype=np.intc)


def sample_uniform_coloring(n: int, r: int, seed: int) -> EdgeColoring:
    """Each edge colored independently and uniformly from ``1..r``; not forced surjective."""
    if n < 2 or r < 1:
        raise DomainError(f"need n >= 2 and r >= 1, got n={n} r={r}")
    return EdgeColoring(n, r, _draw(n, r, seed))


@dataclass(frozen=True)
class SimulationReport:
    n: int
    t: int
    r: int
    samples: int
    seed: int
    rainbow_total: int
    rainbow_sq_total: int
    nonsurjective_samples: int

    @property
    def copies(self) -> int:
        return comb(self.n, self.t)

    @property
    def mean(self) -> Fraction:
        """Exact mean rainbow proportion over the samples."""
        return Fraction(self.rainbow_total, self.samples * self.copies)

    @property
    def mean_proportion(self) -> float:
        return float(self.mean)

    @property
    def std_error(self) -> float:
        s = self.samples
        if s < 2:
            return 0.0
        var = Fraction(self.rainbow_sq_total * s - self.rainbow_total**2, s * (s - 1)) / self.copies**2
        return sqrt(var / s)

    @property
    def baseline(self) -> Fraction:
        return baseline_proportion(self.r, comb(self.t, 2))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "r": self.r,
            "samples": self.samples,
            "seed": self.seed,
            "mean": self.mean_proportion,
            "std_error": self.std_error,
            "baseline": {"num": str(self.baseline.numerator), "den": str(self.baseline.denominator)},
            "nonsurjective_samples": self.nonsurjective_samples,
        }


def _subset_edge_table(n, t):
    subsets = np.array(list(combinations(range(n), t)), dtype=np.intp)
    pairs = list(combinations(range(t), 2))
    table = np.empty((subsets.shape[0], len(pairs)), dtype=np.intp)
    for j, (a, b) in enumerate(pairs):
        u, v = subsets[:, a], subsets[:, b]
        table[:, j] = u * (2 * n - u - 1) // 2 + (v - u - 1)
    return table


def _run_indices(n, r, seed, indices, table):
    """Integer totals (sum of counts, sum of squared counts, non-surjective) over samples."""
    total = sq = missing = 0
    if table.shape[1] > r:
        for i in indices:
            if np.unique(_draw(n, r, seed, i)).size < r:
                missing += 1
        return 0, 0, missing
    batch = max(1, _BATCH_CELLS // table.size)
    for lo in range(0, len(indices), batch):
        chunk = indices[lo:lo + batch]
        colors = np.stack([_draw(n, r, seed, i) for i in chunk])
        for row in colors:
            if np.unique(row).size < r:
                missing += 1
        g = np.sort(colors[:, table], axis=2)
        rainbow = np.all(g[:, :, 1:] != g[:, :, :-1], axis=2).sum(axis=1)
        total += int(rainbow.sum())
        sq += sum(int(c) * int(c) for c in rainbow)
    return total, sq, missing


def estimate_rainbow_proportion(n: int, t: int, r: int, samples: int, seed: int,
                                workers: int = 1,
                                max_subsets: int = DEFAULT_MAX_SUBSETS) -> SimulationReport:
    if samples < 1:
        raise DomainError("need samples >= 1")
    if not 2 <= t <= n or r < 1:
        raise DomainError(f"need 2 <= t <= n and r >= 1, got n={n} t={t} r={r}")
    if comb(n, t) > max_subsets:
        raise ResourceError(f"C({n},{t}) = {comb(n, t)} subsets per sample exceeds {max_subsets}")
    table = _subset_edge_table(n, t)
    indices = list(range(samples))
    if workers <= 1:
        parts = [_run_indices(n, r, seed, indices, table)]
    else:
        shards = [indices[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _run_indices(n, r, seed, s, table), shards))
    return SimulationReport(
        n=n, t=t, r=r, samples=samples, seed=seed,
        rainbow_total=sum(p[0] for p in parts),
        rainbow_sq_total=sum(p[1] for p in parts),
        nonsurjective_samples=sum(p[2] for p in parts),
    )


def hill_climb(start: EdgeColoring, t: int, max_steps: int):
    """First-improvement local search on single-edge recolorings.

    Each step scans edges in triangular order and colors ``1..r`` in order and
    applies the first recoloring that strictly raises the rainbow ``K_t`` count.
    Returns ``(coloring, count)``.
    """
    if max_steps < 0:
        raise DomainError("max_steps must be >= 0")
    n, r = start.n, start.r
    m = np.array(start.matrix())
    count = count_rainbow_complete(start, t).rainbow
    steps = 0
    while steps < max_steps:
        move = None
        for u in range(n):
            for v in range(u + 1, n):
                old = m[u, v]
                here = count_rainbow_through_edge(m, r, t, u, v)
                for k in range(1, r + 1):
                    if k == old:
                        continue
                    m[u, v] = m[v, u] = k
                    gain = count_rainbow_through_edge(m, r, t, u, v) - here
                    m[u, v] = m[v, u] = old
                    if gain > 0:
                        move = (u, v, k, gain)
                        break
                if move:
                    break
            if move:
                break
        if move is None:
            break
        u, v, k, gain = move
        m[u, v] = m[v, u] = k
        count += gain
        steps += 1
    return EdgeColoring.from_matrix(m, r), count


__all__ = [
    "SimulationReport",
    "sample_uniform_coloring",
    "estimate_rainbow_proportion",
    "hill_climb",
]
