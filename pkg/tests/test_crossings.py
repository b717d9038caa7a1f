import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from crosslab.crossings import (
    DegenerateInputError,
    EdgeProfile,
    count_crossings_brute,
    count_k_edges,
    cr_from_k,
    cr_from_le_k,
    triple_orient_signs,
    triple_rank,
)
from crosslab.geometry import PlanePoint, PointSet

from conftest import random_point_set


def _ps(*coords):
    return PointSet(tuple(PlanePoint.from_ints(x, y) for x, y in coords))


def test_square_has_one_crossing():
    assert count_crossings_brute(_ps((0, 0), (1, 0), (0, 1), (1, 1))).value == 1


def test_triangle_with_interior_point_has_none():
    assert count_crossings_brute(_ps((0, 0), (4, 0), (0, 4), (1, 1))).value == 0


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_convex_polygon_counts(n):
    # Points on the parabola y = x^2 are in convex position.
    ps = _ps(*((x, x * x) for x in range(n)))
    assert count_crossings_brute(ps).value == comb(n, 4)


def test_collinear_triple_rejected():
    ps = _ps((0, 0), (1, 0), (2, 0), (0, 1))
    with pytest.raises(DegenerateInputError):
        count_crossings_brute(ps)
    with pytest.raises(DegenerateInputError):
        count_k_edges(ps)


def test_triple_rank_is_colex_enumeration():
    n = 7
    rank = 0
    for k in range(n):
        for j in range(k):
            for i in range(j):
                assert triple_rank(i, j, k) == rank
                rank += 1
    assert rank == comb(n, 3)


def test_triple_orient_signs_length(paper_points):
    assert len(triple_orient_signs(paper_points)) == comb(33, 3)


def test_edge_profile_invariants():
    with pytest.raises(ValueError):
        EdgeProfile(5, (1,))
    with pytest.raises(ValueError):
        EdgeProfile(4, (1, -1))
    p = EdgeProfile(6, (3, 6, 6))
    assert p.e_le_k == (3, 9, 15)
    assert p.total == 15


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=4, max_value=9))
def test_three_methods_agree_on_random_sets(seed, n):
    ps = random_point_set(random.Random(seed), n)
    profile = count_k_edges(ps)
    brute = count_crossings_brute(ps).value
    assert profile.total == comb(n, 2)
    assert cr_from_le_k(profile).value == brute
    assert cr_from_k(profile).value == brute


def test_paper_values(paper_points):
    assert count_crossings_brute(paper_points).value == 14634
    profile = count_k_edges(paper_points)
    assert profile.e_k == (3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 39, 45, 51, 69, 126)
    assert profile.e_le_k == (
        3, 9, 18, 30, 45, 63, 84, 108, 135, 165, 198, 237, 282, 333, 402, 528,
    )
    assert cr_from_le_k(profile).value == 14634
    assert cr_from_k(profile).value == 14634
