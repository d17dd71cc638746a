from fractions import Fraction
from math import comb

import numpy as np
import pytest

from rainbowmult import DomainError, ResourceError, count_rainbow_complete, parallel_coloring, rainbow_proportion
from rainbowmult.coloring import EdgeColoring, monochromatic
from rainbowmult.simulate import estimate_rainbow_proportion, hill_climb, sample_uniform_coloring


def test_single_color_sample_is_monochromatic():
    assert sample_uniform_coloring(6, 1, 123) == monochromatic(6)


def test_sampling_is_deterministic():
    assert sample_uniform_coloring(20, 5, 99) == sample_uniform_coloring(20, 5, 99)
    assert sample_uniform_coloring(20, 5, 99) != sample_uniform_coloring(20, 5, 100)


def test_single_sample_near_baseline():
    c = sample_uniform_coloring(30, 6, 42)
    assert abs(rainbow_proportion(c, 3) - Fraction(5, 9)) < Fraction(1, 20)


def test_sample_rejects_bad_args():
    with pytest.raises(DomainError):
        sample_uniform_coloring(1, 3, 0)


def test_report_mean_matches_kernel_counts():
    # the vectorised estimator and the exact counter must agree sample by sample
    from rainbowmult.simulate import _draw
    rep = estimate_rainbow_proportion(9, 3, 4, 25, 5)
    counts = [count_rainbow_complete(EdgeColoring(9, 4, _draw(9, 4, 5, i)), 3).rainbow for i in range(25)]
    assert rep.rainbow_total == sum(counts)
    assert rep.rainbow_sq_total == sum(c * c for c in counts)
    assert rep.mean == Fraction(sum(counts), 25 * comb(9, 3))


def test_too_few_colors_gives_zero_mean():
    rep = estimate_rainbow_proportion(20, 4, 3, 50, 1)
    assert rep.mean == 0 and rep.std_error == 0
    assert rep.nonsurjective_samples == 0


def test_workers_do_not_change_report():
    a = estimate_rainbow_proportion(12, 3, 5, 200, 77)
    b = estimate_rainbow_proportion(12, 3, 5, 200, 77, workers=3)
    assert a == b


def test_nonsurjective_samples_counted():
    rep = estimate_rainbow_proportion(3, 2, 20, 30, 3)
    assert rep.nonsurjective_samples == 30


def test_report_json():
    js = estimate_rainbow_proportion(8, 3, 6, 20, 9).to_json()
    assert js["baseline"] == {"num": "5", "den": "9"}
    assert set(js) >= {"n", "t", "r", "samples", "seed", "mean", "std_error", "baseline"}
    assert 0 <= js["mean"] <= 1 and js["std_error"] >= 0


def test_subset_budget():
    with pytest.raises(ResourceError):
        estimate_rainbow_proportion(60, 5, 10, 1, 0)


def test_hill_climb_parallel7_is_local_optimum():
    c, count = hill_climb(parallel_coloring(7), 3, 100)
    assert c == parallel_coloring(7) and count == 35


def test_hill_climb_monochromatic_triangle_is_a_plateau():
    # one recolor still leaves two equal edges, so no strictly improving move exists
    start = EdgeColoring(3, 3, [1, 1, 1])
    c, count = hill_climb(start, 3, 10)
    assert count == 0 and c == start


def test_hill_climb_two_colored_triangle():
    c, count = hill_climb(EdgeColoring(3, 3, [1, 1, 2]), 3, 10)
    assert count == 1
    assert sorted(c.edge_colors.tolist()) == [1, 2, 3]


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_hill_climb_monotone(seed):
    start = sample_uniform_coloring(6, 6, seed)
    before = count_rainbow_complete(start, 4).rainbow
    c, count = hill_climb(start, 4, 50)
    assert count >= before
    assert count == count_rainbow_complete(c, 4).rainbow


def test_hill_climb_zero_steps():
    start = sample_uniform_coloring(6, 6, 5)
    c, count = hill_climb(start, 4, 0)
    assert c == start and count == count_rainbow_complete(start, 4).rainbow


def test_hill_climb_deterministic():
    start = sample_uniform_coloring(7, 6, 8)
    assert hill_climb(start, 4, 30) == hill_climb(start, 4, 30)


def test_hill_climb_first_improvement_order():
    # edge (0,1) is scanned first; color 2 is the first color that makes the triangle rainbow
    c, count = hill_climb(EdgeColoring(3, 3, [1, 1, 3]), 3, 1)
    assert np.array_equal(c.edge_colors, [2, 1, 3]) and count == 1
