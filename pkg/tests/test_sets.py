"""
Tests for interval unions, thickness and Cantor calibration sets.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from amspec.errors import BadInterval, EmptyInput
from amspec.sets import (
    Interval, affine, bounded_gaps, diameter, expected_thickness, hausdorff_distance,
    is_interval, iterated_sum, largest_gap, make_union, measure, merge_small_gaps,
    middle_cantor, middle_halves, middle_thirds, minkowski_sum, reflect, thickness,
)

unions = st.lists(
    st.tuples(st.integers(-60, 60), st.integers(0, 12)), min_size=1, max_size=8,
).map(lambda xs: make_union([(a, a + l) for a, l in xs]))


def test_make_union_merges_overlapping_and_touching():
    K = make_union([(3, 4), (0, 1), (1, 2), (3.5, 5)])
    assert K.pairs() == [(0, 2), (3, 5)]


def test_make_union_rejects_empty_and_reversed():
    with pytest.raises(EmptyInput):
        make_union([])
    with pytest.raises(BadInterval):
        make_union([(2, 1)])


def test_basic_measurements():
    K = make_union([(0, 1), (2, 3), (6, 10)])
    assert diameter(K) == 10
    assert measure(K) == 6
    assert largest_gap(K) == 3
    assert [g.as_pair() for g in bounded_gaps(K)] == [(1, 2), (3, 6)]
    assert K.contains(2.5) and not K.contains(4)


def test_reflect_and_affine():
    K = make_union([(0, 1), (3, 4)])
    assert reflect(K).pairs() == [(-4, -3), (-1, 0)]
    assert affine(K, 2, 1).pairs() == [(1, 3), (7, 9)]
    with pytest.raises(BadInterval):
        affine(K, 0, 1)


def test_merge_small_gaps_counts_closures():
    K = make_union([(0, 1), (1.5, 2), (5, 6)])
    merged, closed = merge_small_gaps(K, 1)
    assert merged.pairs() == [(0, 2), (5, 6)]
    assert closed == 1


@pytest.mark.parametrize("level", range(1, 11))
def test_middle_thirds_thickness_is_one(level):
    report = thickness(middle_thirds(level))
    assert report.tau == 1
    assert isinstance(report.tau, Fraction)
    assert report.gamma == Fraction(1, 3)


@pytest.mark.parametrize("level", [1, 3, 6])
def test_middle_halves_thickness(level):
    assert thickness(middle_halves(level)).tau == Fraction(1, 2)
    assert expected_thickness(Fraction(1, 4)) == Fraction(1, 2)


def test_thickness_of_interval_is_infinite():
    report = thickness(make_union([(0, 1)]))
    assert math.isinf(report.tau)
    assert report.is_infinite
    assert report.gamma == 0


def test_isolated_point_gives_zero_thickness():
    report = thickness(make_union([(0, 1), (2, 2), (3, 4)]))
    assert report.tau == 0


def test_planks_stop_at_longer_gaps():
    # gaps of length 1, 3, 1: the short gaps' planks end at the long gap
    K = make_union([(0, 2), (3, 5), (8, 9), (10, 14)])
    report = thickness(K)
    left = [g.left_plank_len for g in report.gaps]
    right = [g.right_plank_len for g in report.gaps]
    assert left == [2, 5, 1]
    assert right == [2, 6, 4]
    assert report.tau == Fraction(1, 1)


def test_hausdorff_distance_examples():
    assert hausdorff_distance(make_union([(0, 1)]), make_union([(0, 2)])) == 1
    assert hausdorff_distance(make_union([(0, 1), (3, 4)]), make_union([(0, 4)])) == 1
    assert hausdorff_distance(make_union([(0, 4)]), make_union([(0, 4)])) == 0


def test_minkowski_sum_of_cantor_sets_is_interval():
    C = middle_thirds(5)
    assert minkowski_sum(C, C).pairs() == [(0, 2)]
    assert is_interval(iterated_sum([C, C, C]))


def test_middle_cantor_rejects_bad_keep():
    with pytest.raises(ValueError):
        middle_cantor(2, Fraction(1, 2))


@given(unions, unions)
def test_sum_hull_is_sum_of_hulls(K1, K2):
    S = minkowski_sum(K1, K2)
    assert S.lo == K1.lo + K2.lo
    assert S.hi == K1.hi + K2.hi
    assert minkowski_sum(K2, K1) == S


@given(unions)
def test_canonical_form_is_idempotent(K):
    assert make_union(K.parts) == K
    assert all(a.hi < b.lo for a, b in zip(K.parts, K.parts[1:]))


@given(unions, st.integers(1, 5), st.integers(-10, 10))
def test_thickness_is_affine_invariant(K, a, b):
    assert thickness(affine(K, a, b)).tau == thickness(K).tau


@given(unions)
def test_thickness_is_reflection_invariant(K):
    assert thickness(reflect(K)).tau == thickness(K).tau


@given(unions, unions)
def test_hausdorff_is_symmetric_and_bounded(K1, K2):
    d = hausdorff_distance(K1, K2)
    assert d == hausdorff_distance(K2, K1)
    assert abs(diameter(K1) - diameter(K2)) <= 2 * d


def test_union_json_codec():
    K = make_union([(0, 1), (2, 3)])
    assert K.to_dict() == {"parts": [[0.0, 1.0], [2.0, 3.0]]}
    assert type(K).from_dict(K.to_dict()).pairs() == [(0.0, 1.0), (2.0, 3.0)]


def test_interval_rejects_reversed_endpoints():
    with pytest.raises(BadInterval):
        Interval(1, 0)


@given(unions, unions, unions)
def test_hausdorff_triangle_inequality(A, B, C):
    assert hausdorff_distance(A, C) <= hausdorff_distance(A, B) + hausdorff_distance(B, C)


@given(unions, unions)
def test_hausdorff_vanishes_only_on_equal_sets(A, B):
    assert hausdorff_distance(A, A) == 0
    assert (hausdorff_distance(A, B) == 0) == (A == B)


@given(unions, unions, unions)
def test_minkowski_sum_is_associative(A, B, C):
    assert minkowski_sum(minkowski_sum(A, B), C) == minkowski_sum(A, minkowski_sum(B, C))


@given(unions)
def test_minkowski_sum_identity(K):
    zero = make_union([(0, 0)])
    assert minkowski_sum(K, zero) == K
    assert minkowski_sum(zero, K) == K


@given(unions)
def test_planks_are_bounded_by_diameter_and_adjacent_parts(K):
    report = thickness(K)
    parts = K.parts
    assert len(report.gaps) == len(parts) - 1
    for i, g in enumerate(report.gaps):
        assert parts[i].length <= g.left_plank_len <= report.diam
        assert parts[i + 1].length <= g.right_plank_len <= report.diam
