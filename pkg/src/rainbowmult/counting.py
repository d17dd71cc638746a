"""Exact counts of rainbow copies of ``K_t`` in an edge-colored ``K_n``."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import kernels
from .errors import DomainError, ResourceError

DEFAULT_MAX_VISITS = 10**8


@dataclass(frozen=True)
class CountResult:
    t: int
    total: int
    rainbow: int
    visits: int = 0

    @property
    def non_rainbow(self) -> int:
        return self.total - self.rainbow

    @property
    def proportion(self) -> Fraction:
        return Fraction(self.rainbow, self.total)


def _check_t(coloring, t):
    if not 2 <= t <= coloring.n:
        raise DomainError(f"clique order t={t} outside 2..{coloring.n}")


def is_rainbow(coloring, vertices) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise DomainError(f"repeated vertex in {vs}")
    if len(vs) < 2:
        raise DomainError("need at least 2 vertices")
    seen = set()
    for u, v in combinations(vs, 2):
        c = coloring.color(u, v)
        if c in seen:
            return False
        seen.add(c)
    return True


def _count_first_vertices(matrix, r, n, t, firsts, budget):
    count = visits = 0
    for v0 in firsts:
        c, vis = kernels.count_extensions(matrix, r, [v0], np.arange(v0 + 1, n), t - 1, budget - visits)
        count += c
        visits += vis + 1
        if visits > budget:
            break
    return count, visits


def count_rainbow_complete(coloring, t: int, workers: int = 1,
                           max_visits: int = DEFAULT_MAX_VISITS) -> CountResult:
    """Count rainbow ``t``-subsets, pruning partial subsets that already repeat a color.

    With ``workers > 1`` the first-vertex range is dealt round-robin to threads;
    the compiled kernel releases the GIL, so this runs in parallel.
    """
    _check_t(coloring, t)
    n, r = coloring.n, coloring.r
    total = comb(n, t)
    if comb(t, 2) > r:
        return CountResult(t, total, 0, 0)
    matrix = coloring.matrix()
    firsts = range(n - t + 1)
    if workers <= 1:
        count, visits = _count_first_vertices(matrix, r, n, t, firsts, max_visits)
    else:
        shards = [list(firsts)[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _count_first_vertices(matrix, r, n, t, s, max_visits), shards))
        count = sum(p[0] for p in parts)
        visits = sum(p[1] for p in parts)
    if visits > max_visits:
        raise ResourceError(
            f"counting K_{t} in K_{n} exceeded {max_visits} partial-subset visits; "
            "raise the enumeration cap or use the bound-based path"
        )
    return CountResult(t, total, int(count), int(visits))


def count_rainbow_bruteforce(coloring, t: int) -> CountResult:
    """Unpruned reference count: checks every ``t``-subset independently."""
    _check_t(coloring, t)
    m = coloring.matrix()
    e = comb(t, 2)
    rainbow = 0
    for S in combinations(range(coloring.n), t):
        if len({int(m[u, v]) for u, v in combinations(S, 2)}) == e:
            rainbow += 1
    return CountResult(t, comb(coloring.n, t), rainbow)


def count_rainbow_through_edge(coloring_or_matrix, r: int, t: int, u: int, v: int) -> int:
    """Rainbow ``t``-subsets containing both ``u`` and ``v``."""
    m = coloring_or_matrix.matrix() if hasattr(coloring_or_matrix, "matrix") else coloring_or_matrix
    n = m.shape[0]
    others = np.array([w for w in range(n) if w != u and w != v], dtype=np.intc)
    count, _ = kernels.count_extensions(m, r, [u, v], others, t - 2, DEFAULT_MAX_VISITS)
    return int(count)


def rainbow_proportion(coloring, t: int) -> Fraction:
    return count_rainbow_complete(coloring, t).proportion
