import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from crosslab.crossings import count_crossings_brute, count_k_edges
from crosslab.geometry import PlanePoint, PointSet
from crosslab.sequences import (
    Halfperiod,
    Transposition,
    build_circular_sequence,
    full_period,
    gate_of,
    halfperiod_from_json,
    halfperiod_to_json,
    pcr_from_profile,
    rotate_halfperiod,
    transposition_profile,
    validate_halfperiod,
)

from conftest import random_point_set


def _ps(*coords):
    return PointSet(tuple(PlanePoint.from_ints(x, y) for x, y in coords))


def test_two_points():
    h = build_circular_sequence(_ps((0, 0), (1, 1)))
    assert h.pi0 == (0, 1)
    assert h.transpositions == (Transposition(0, 1, 1),)
    assert validate_halfperiod(h).ok


def test_vertical_pair_swaps_first():
    # A vertical pair is the angle-zero event: it must be the first swap.
    h = build_circular_sequence(_ps((0, 0), (0, 1), (5, 3)))
    assert h.transpositions[0].pair == frozenset((0, 1))
    assert validate_halfperiod(h).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=3, max_value=9))
def test_construction_is_valid_and_matches_kedges(seed, n):
    ps = random_point_set(random.Random(seed), n)
    h = build_circular_sequence(ps)
    assert validate_halfperiod(h).ok
    profile = transposition_profile(h)
    eprofile = count_k_edges(ps)
    # The k-edge / k-critical-transposition identity, as direct equality.
    assert eprofile.e_le_k == profile.n_le_k
    assert profile.total == comb(n, 2)
    assert pcr_from_profile(profile) == count_crossings_brute(ps).value


def test_degenerate_input_rejected():
    from crosslab.crossings import DegenerateInputError

    with pytest.raises(DegenerateInputError):
        build_circular_sequence(_ps((0, 0), (1, 0), (2, 0)))


def test_parallel_pairs_handled():
    # Unit square: two pairs of parallel edges plus parallel diagonals are
    # processed via the lexicographic tie-break and still validate.
    h = build_circular_sequence(_ps((0, 0), (1, 0), (0, 1), (1, 1)))
    assert validate_halfperiod(h).ok
    assert pcr_from_profile(transposition_profile(h)) == 1


def test_validation_reports_sc2_with_index():
    ps = _ps((0, 0), (3, 1), (1, 4), (5, 5))
    h = build_circular_sequence(ps)
    bad = list(h.transpositions)
    bad[3] = bad[0]
    report = validate_halfperiod(Halfperiod(h.n, h.pi0, tuple(bad)))
    assert not report.ok
    index, message = report.violations[0]
    assert index == 3
    assert "SC2" in message


def test_validation_reports_sc1():
    h = Halfperiod(3, (0, 1, 2), (
        Transposition(0, 2, 1),  # 0 and 2 are not adjacent in pi0
        Transposition(0, 1, 2),
        Transposition(1, 2, 1),
    ))
    report = validate_halfperiod(h)
    assert not report.ok
    assert report.violations[0][0] == 0
    assert "SC1" in report.violations[0][1]


def test_validation_reports_bad_reversal():
    # Valid SC1/SC2 swaps of the wrong multiset end off-reversal; here the
    # wrong count is caught first.
    h = Halfperiod(3, (0, 1, 2), (Transposition(0, 1, 1),))
    report = validate_halfperiod(h)
    assert any("expected 3 transpositions" in m for _, m in report.violations)


def test_gate_of(paper_halfperiod):
    t = paper_halfperiod.transpositions[17]
    assert gate_of(paper_halfperiod, t.left, t.right) == t.gate
    assert gate_of(paper_halfperiod, t.right, t.left) == t.gate
    with pytest.raises(KeyError):
        gate_of(paper_halfperiod, "nope", "also-nope")


def test_full_period_and_rotations():
    rng = random.Random(7)
    ps = random_point_set(rng, 6)
    h = build_circular_sequence(ps)
    half = comb(6, 2)
    perms, pairs = full_period(h)
    assert len(perms) == len(pairs) == 2 * half
    assert perms[half] == tuple(reversed(h.pi0))
    for offset in range(2 * half):
        assert validate_halfperiod(rotate_halfperiod(h, offset)).ok
    with pytest.raises(ValueError):
        rotate_halfperiod(h, 2 * half)


def test_reversed_halfperiod(paper_halfperiod):
    r = paper_halfperiod.reversed_halfperiod()
    assert r.pi0 == tuple(reversed(paper_halfperiod.pi0))
    assert transposition_profile(r).n_k == transposition_profile(paper_halfperiod).n_k


def test_json_round_trip(paper_halfperiod):
    text = halfperiod_to_json(paper_halfperiod)
    back = halfperiod_from_json(text)
    assert back.n == 33
    assert back.pi0 == tuple(str(x) for x in paper_halfperiod.pi0)
    assert validate_halfperiod(back).ok
    assert transposition_profile(back).n_k == transposition_profile(paper_halfperiod).n_k


def test_json_gate_mismatch_rejected():
    h = build_circular_sequence(_ps((0, 0), (3, 1), (1, 4)))
    import json

    data = json.loads(halfperiod_to_json(h))
    data["transpositions"][0][2] = 99
    with pytest.raises(ValueError, match="recorded gate"):
        halfperiod_from_json(json.dumps(data))


def test_pcr_from_bare_vector():
    v16 = (3, 9, 18, 30, 45, 63, 84, 108, 135, 165, 198, 237, 282, 333, 399, 528)
    assert pcr_from_profile(v16) == Fraction(14628)
    assert pcr_from_profile(v16, n=33) == Fraction(14628)
    with pytest.raises(ValueError):
        pcr_from_profile((1, 2, 3), n=33)


def test_paper_profile(paper_halfperiod):
    profile = transposition_profile(paper_halfperiod)
    assert profile.n_le_k == (
        3, 9, 18, 30, 45, 63, 84, 108, 135, 165, 198, 237, 282, 333, 402, 528,
    )
    assert profile.v_le_k == profile.n_le_k
    assert pcr_from_profile(profile) == 14634
