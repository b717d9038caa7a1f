import math

import pytest

from crosslab import halvings as hv
from crosslab.geometry import PlanePoint, SeedSet, expand_seed
from crosslab.sequences import Halfperiod, Transposition, build_circular_sequence
from crosslab.symmetry import ColorLabeling

GOLDEN_PLUS = {
    "A": {1: 2, 2: 0, 3: 1, 4: 4, 5: 2, 6: 4, 7: 5, 8: 5, 9: 3, 10: 3, 11: 2},
    "B": {1: 5, 2: 5, 3: 3, 4: 4, 5: 3, 6: 3, 7: 3, 8: 3, 9: 1, 10: 1, 11: 0},
    "C": {1: 0, 2: 1, 3: 2, 4: 3, 5: 3, 6: 4, 7: 5, 8: 5, 9: 3, 10: 3, 11: 2},
}


@pytest.fixture(scope="module")
def convex_halfperiod():
    """A 3-symmetric 33-point set in convex position (near-regular 33-gon)."""
    r = 10**7
    seeds = tuple(
        PlanePoint.from_ints(
            round(r * math.cos(2 * math.pi * k / 33 + 0.1)),
            round(r * math.sin(2 * math.pi * k / 33 + 0.1)),
        )
        for k in range(11)
    )
    h = build_circular_sequence(expand_seed(SeedSet(seeds)))
    labeling = ColorLabeling(
        color={i: "ABC"[i // 11] for i in range(33)},
        index={i: i % 11 + 1 for i in range(33)},
    )
    return h, labeling


def test_wrong_size_rejected():
    h = Halfperiod(2, (0, 1), (Transposition(0, 1, 1),))
    with pytest.raises(hv.WrongSizeError):
        hv.certify(h)
    with pytest.raises(hv.WrongSizeError):
        hv.halving_counts(h, ColorLabeling(color={}), "A")


def test_halving_counts_golden(paper_halfperiod, paper_canonical):
    for color, expected in GOLDEN_PLUS.items():
        profile = hv.halving_counts(paper_halfperiod, paper_canonical, color)
        assert profile.plus == expected
        assert profile.h == profile.h_minus == 31


def test_halving_counts_convex(convex_halfperiod):
    h, labeling = convex_halfperiod
    for color in "ABC":
        profile = hv.halving_counts(h, labeling, color)
        assert profile.h == profile.h_minus == 0


def _spot_permutation(spots: dict) -> tuple:
    """33-permutation with a_j at middle position 11 + spots[j]."""
    middle = [None] * 11
    for j, s in spots.items():
        middle[s - 1] = f"a{j}"
    left = [f"z{i}" for i in range(11)]
    right = [f"z{i}" for i in range(11, 22)]
    return tuple(left + middle + right)


_LABELING = ColorLabeling(
    color={f"a{j}": "A" for j in range(1, 12)},
    index={f"a{j}": j for j in range(1, 12)},
)


def test_spot_view_identity_arrangement():
    # a_j at spot j: everything with a larger index sits to the right.
    view = hv.spot_view_of_permutation(
        _spot_permutation({j: j for j in range(1, 12)}), _LABELING, "A"
    )
    for j in range(1, 12):
        assert (view.lgt[j], view.rgt[j], view.llt[j], view.rlt[j]) == (
            0, 11 - j, j - 1, 0,
        )
        assert view.e_out[j] == (2 if j <= 5 else 7 - j)
        assert view.be_out[j] == 0
        assert view.e_in[j] == (6 if j <= 6 else 13 - j)
        assert view.be_in[j] == min(j - 1, view.e_in[j])


def test_spot_view_reversed_arrangement():
    # a_j at spot 12 - j: larger indices all sit to the left.
    view = hv.spot_view_of_permutation(
        _spot_permutation({j: 12 - j for j in range(1, 12)}), _LABELING, "A"
    )
    for j in range(1, 12):
        assert (view.lgt[j], view.rgt[j], view.llt[j], view.rlt[j]) == (
            11 - j, 0, 0, j - 1,
        )
        assert view.e_out[j] == (6 if j <= 6 else 13 - j)
        assert view.be_out[j] == min(j - 1, view.e_out[j])
        assert view.e_in[j] == (2 if j <= 5 else 7 - j)
        assert view.be_in[j] == 0


def test_spot_view_precondition():
    perm = _spot_permutation({j: j for j in range(1, 12)})
    wrong = ColorLabeling(color={}, index={})
    with pytest.raises(ValueError, match="middle third"):
        hv.spot_view_of_permutation(perm, wrong, "A")


def test_spot_views_on_paper(paper_halfperiod, paper_canonical):
    qualifying = hv.middle_third_indices(paper_halfperiod, paper_canonical, "A")
    assert qualifying
    for t in qualifying:
        view = hv.spot_view(paper_halfperiod, paper_canonical, "A", t)
        assert sorted(view.spot.values()) == list(range(1, 12))
        for j in range(1, 12):
            assert view.lgt[j] + view.rgt[j] + view.llt[j] + view.rlt[j] == 10


def test_check_best_out_in_shape(paper_halfperiod, paper_canonical):
    t = hv.middle_third_indices(paper_halfperiod, paper_canonical, "A")[0]
    report = hv.check_best_out_in(paper_halfperiod, paper_canonical, "A", t)
    assert set(report.per_j) == set(range(1, 12))
    for plus, bound, ok in report.per_j.values():
        assert ok == (plus <= bound)


def test_certify_paper(paper_halfperiod):
    report = hv.certify(paper_halfperiod)
    assert not report.hard_invalid
    assert not report.refutation_candidate
    assert report.pcr == 14634
    status = {item.id: item.status for item in report.items}
    assert status["sc-validity"] == hv.HOLDS
    assert status["3-decomposable"] == hv.HOLDS
    assert status["3-symmetric"] == hv.HOLDS
    assert status["canonical-labeling"] == hv.HOLDS
    assert status["bichromatic-closed-form"] == hv.HOLDS
    assert status["halving-sum-identity"] == hv.HOLDS
    # pcr is 14634, not below: the optimal-candidate items are out of scope.
    assert status["profile-equals-V1"] == hv.NOT_APPLICABLE
    assert status["per-element-caps"] == hv.NOT_APPLICABLE
    assert status["best-out-in"] == hv.NOT_APPLICABLE
    assert not report.failures


def test_certify_convex(convex_halfperiod):
    h, _ = convex_halfperiod
    report = hv.certify(h)
    assert not report.hard_invalid
    assert not report.refutation_candidate
    status = {item.id: item.status for item in report.items}
    assert status["sc-validity"] == hv.HOLDS
    # Valid above-target halfperiod without the structure: nothing may fail.
    assert status["3-decomposable"] == hv.NOT_APPLICABLE
    assert not report.failures


def test_certify_corrupted(paper_halfperiod):
    bad = list(paper_halfperiod.transpositions)
    bad[100] = bad[50]
    report = hv.certify(Halfperiod(33, paper_halfperiod.pi0, tuple(bad)))
    assert report.hard_invalid
    assert report.items[0].id == "sc-validity"
    assert report.items[0].status == hv.FAILS
    index, message = report.items[0].witness[0]
    assert index == 100 and "SC2" in message


def test_report_json(paper_halfperiod):
    import json

    report = hv.certify(paper_halfperiod)
    data = json.loads(report.to_json())
    assert data["pcr"] == "14634"
    assert data["hard_invalid"] is False
    assert all(isinstance(item["id"], str) for item in data["items"])


def test_derive_sigma_cycles(paper_canonical):
    sigma = hv.derive_sigma(paper_canonical)
    for x, y in sigma.items():
        assert sigma[sigma[y]] == x
        assert paper_canonical.index[x] == paper_canonical.index[y]
