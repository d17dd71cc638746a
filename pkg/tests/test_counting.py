from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowmult import (
    DomainError,
    EdgeColoring,
    ResourceError,
    count_rainbow_complete,
    is_rainbow,
    parallel_coloring,
    rainbow_proportion,
)
from rainbowmult import _pykernels
from rainbowmult.coloring import monochromatic
from rainbowmult.counting import count_rainbow_bruteforce, count_rainbow_through_edge

from oracles import naive_rainbow_count

try:
    from rainbowmult import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


def test_is_rainbow_examples():
    c = parallel_coloring(7)
    assert all(is_rainbow(c, S) for S in [(0, 1, 2), (3, 5, 6), (1, 4, 6)])
    assert not is_rainbow(monochromatic(4), (0, 1, 2))
    assert is_rainbow(monochromatic(4), (1, 3))


def test_is_rainbow_repeated_vertex():
    with pytest.raises(DomainError):
        is_rainbow(parallel_coloring(5), (1, 1, 2))


def test_all_triangles_rainbow_r7():
    res = count_rainbow_complete(parallel_coloring(7), 3)
    assert res.rainbow == 35 == res.total
    assert res.non_rainbow == 0


def test_parallel6_k4_against_oracle():
    c = parallel_coloring(6)
    a4 = naive_rainbow_count(c.color, 6, 4)
    assert a4 == 6  # frozen from the unpruned oracle
    res = count_rainbow_complete(c, 4)
    assert res.rainbow == a4 and res.non_rainbow == 9 <= 18


def test_parallel10_k5_against_oracle():
    c = parallel_coloring(10)
    a5 = naive_rainbow_count(c.color, 10, 5)
    assert a5 == 0  # frozen; pair sums of a 5-set cannot cover all residues mod 10
    assert rainbow_proportion(c, 5) == Fraction(a5, 252)


def test_small_non_rainbow_triangle():
    res = count_rainbow_complete(EdgeColoring(3, 2, [1, 1, 2]), 3)
    assert (res.rainbow, res.non_rainbow) == (0, 1)


def test_proportion_monochromatic():
    assert rainbow_proportion(monochromatic(5), 3) == 0
    assert rainbow_proportion(parallel_coloring(7), 3) == 1


@pytest.mark.parametrize("t", [1, 8])
def test_t_out_of_range(t):
    with pytest.raises(DomainError):
        count_rainbow_complete(parallel_coloring(7), t)


def test_palette_too_small_gives_zero():
    res = count_rainbow_complete(parallel_coloring(5), 4)
    assert res.rainbow == 0 and res.total == 5


@pytest.mark.parametrize("r", range(3, 41))
def test_parallel_triangles_all_rainbow(r):
    assert rainbow_proportion(parallel_coloring(r), 3) == 1


def test_visit_budget():
    with pytest.raises(ResourceError):
        count_rainbow_complete(parallel_coloring(20), 4, max_visits=100)


@st.composite
def colorings(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    r = draw(st.integers(1, 12))
    colors = draw(st.lists(st.integers(1, r), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    t = draw(st.integers(2, min(5, n)))
    return EdgeColoring(n, r, colors), t


@settings(max_examples=60, deadline=None)
@given(colorings())
def test_pruned_equals_unpruned(data):
    c, t = data
    expect = naive_rainbow_count(c.color, c.n, t)
    assert count_rainbow_complete(c, t).rainbow == expect
    assert count_rainbow_bruteforce(c, t).rainbow == expect


@settings(max_examples=30, deadline=None)
@given(colorings(), st.integers(2, 5))
def test_partition_invariance(data, workers):
    c, t = data
    assert count_rainbow_complete(c, t, workers=workers).rainbow == count_rainbow_complete(c, t).rainbow


@settings(max_examples=40, deadline=None)
@given(colorings(max_n=9), st.data())
def test_fresh_color_never_decreases(data, draw):
    c, t = data
    u, v = sorted(draw.draw(st.sets(st.integers(0, c.n - 1), min_size=2, max_size=2)))
    fresh = EdgeColoring(c.n, c.r + 1, c.edge_colors).recolored(u, v, c.r + 1)
    assert count_rainbow_complete(fresh, t).rainbow >= count_rainbow_complete(c, t).rainbow


@settings(max_examples=40, deadline=None)
@given(colorings(max_n=9))
def test_through_edge_count(data):
    c, t = data
    for u, v in [(0, 1), (0, c.n - 1)]:
        if u == v:
            continue
        expect = sum(1 for S in combinations(range(c.n), t)
                     if u in S and v in S and is_rainbow(c, S))
        assert count_rainbow_through_edge(c, c.r, t, u, v) == expect


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_backends_agree(impl):
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(4, 11))
        r = int(rng.integers(3, 11))
        c = EdgeColoring(n, r, rng.integers(1, r + 1, size=n * (n - 1) // 2))
        m = c.matrix()
        for t in range(2, min(n, 5) + 1):
            total = 0
            for v0 in range(n):
                cnt, _ = impl.count_extensions(m, r, [v0], np.arange(v0 + 1, n), t - 1, 10**9)
                total += cnt
            assert total == naive_rainbow_count(c.color, n, t)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_backend_prefix_with_repeat(impl):
    m = monochromatic(5).matrix()
    assert impl.count_extensions(m, 1, [0, 1, 2], np.arange(3, 5), 1, 100) == (0, 0)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_backend_budget_cutoff(impl):
    m = parallel_coloring(15).matrix()
    cnt, visits = impl.count_extensions(m, 15, [], np.arange(15), 4, 50)
    assert visits > 50 and cnt < comb(15, 4)
