import random
from math import comb

import pytest

from crosslab.exactnum import ZERO
from crosslab.geometry import PlanePoint, paper_config
from crosslab.halvings import derive_sigma
from crosslab.sequences import build_circular_sequence, transposition_profile
from crosslab.symmetry import (
    COLORS,
    CanonicalLabelingError,
    bichromatic_closed_form,
    canonical_labels,
    check_3symmetric_pointset,
    check_3symmetric_sequence,
    classify_transpositions,
    extremal_reach,
    find_3decomposition,
    labeling_from_json,
    labeling_to_json,
)

from conftest import random_point_set

ORIGIN = PlanePoint(ZERO, ZERO)


def test_pointset_symmetry(paper_points):
    flag, orbit = check_3symmetric_pointset(paper_points, ORIGIN)
    assert flag
    assert sorted(orbit) == list(range(33))
    # Orbit is a product of 11 3-cycles.
    for i in range(33):
        assert orbit[orbit[orbit[i]]] == i


def test_random_set_not_symmetric():
    ps = random_point_set(random.Random(3), 6)
    flag, orbit = check_3symmetric_pointset(ps, ORIGIN)
    assert not flag and orbit is None


def test_sequence_symmetry_conditions(paper_halfperiod, paper_canonical):
    sigma = derive_sigma(paper_canonical)
    report = check_3symmetric_sequence(paper_halfperiod, sigma)
    assert report.ok
    assert set(report.conditions) == {
        "sigma-cubed-identity",
        "orbit-partition",
        "criticality-preserved",
        "cyclic-order-preserved",
    }


def test_sequence_symmetry_rejects_identity(paper_halfperiod):
    sigma = {x: x for x in paper_halfperiod.pi0}
    report = check_3symmetric_sequence(paper_halfperiod, sigma)
    assert not report.conditions["orbit-partition"][0]


def test_decomposition_found(paper_halfperiod, paper_labeling):
    for c in COLORS:
        assert len(paper_labeling.members(c)) == 11
    assert paper_labeling.phase_order_ok


def test_decomposition_absent_for_random_set():
    ps = random_point_set(random.Random(11), 6)
    h = build_circular_sequence(ps)
    assert find_3decomposition(h) is None


def test_bichromatic_closed_form_values(paper_halfperiod, paper_labeling):
    classified = classify_transpositions(paper_halfperiod, paper_labeling)
    closed = tuple(bichromatic_closed_form(33, k) for k in range(1, 17))
    assert classified.n_le_bi == closed
    assert closed[10] == 198
    assert closed[11:] == (231, 264, 297, 330, 363)


def test_classification_sums(paper_halfperiod, paper_labeling):
    classified = classify_transpositions(paper_halfperiod, paper_labeling)
    profile = transposition_profile(paper_halfperiod)
    for k in range(16):
        assert classified.n_mo[k] + classified.n_bi[k] == profile.n_k[k]
        assert sum(classified.n_xx[c][k] for c in COLORS) == classified.n_mo[k]
    # The three per-color splits agree (3-symmetry).
    assert classified.n_xx["A"] == classified.n_xx["B"] == classified.n_xx["C"]
    assert classified.n_xx["A"][11:] == (2, 4, 6, 12, 31)
    assert classified.n_le_xx("A")[-1] == 55  # C(11,2) per class


def test_extremal_reach(paper_halfperiod):
    reach = extremal_reach(paper_halfperiod)
    # Each reach value 1..11 is attained by exactly one element per class.
    assert sorted(reach.values()) == sorted(list(range(1, 12)) * 3)


def test_canonical_labels(paper_halfperiod, paper_labeling, paper_canonical):
    for c in COLORS:
        indices = sorted(
            paper_canonical.index[x] for x in paper_canonical.members(c)
        )
        assert indices == list(range(1, 12))
    # Orbit mates receive equal indices.
    sigma = derive_sigma(paper_canonical)
    report = check_3symmetric_sequence(paper_halfperiod, sigma)
    assert report.ok
    # Frozen mapping for class A of the embedded configuration.
    a_elements = {j: paper_canonical.element("A", j) for j in range(1, 12)}
    assert a_elements == {
        1: 21, 2: 20, 3: 19, 4: 18, 5: 17, 6: 16, 7: 14, 8: 15, 9: 13, 10: 12, 11: 11,
    }


def test_canonical_labels_fail_on_collision():
    ps = random_point_set(random.Random(5), 4)
    h = build_circular_sequence(ps)
    from crosslab.symmetry import ColorLabeling

    with pytest.raises(ValueError):
        canonical_labels(h, ColorLabeling(color={}))  # n != 33


def test_labeling_json_round_trip(paper_canonical):
    text = labeling_to_json(paper_canonical)
    back = labeling_from_json(text)
    assert back.color == {str(x): c for x, c in paper_canonical.color.items()}
    assert back.index == {str(x): j for x, j in paper_canonical.index.items()}
    with pytest.raises(ValueError, match="invalid colors"):
        labeling_from_json('{"colors": {"0": "D"}}')
