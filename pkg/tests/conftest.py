import random

import pytest

from crosslab.geometry import (
    PlanePoint,
    PointSet,
    paper_config,
    validate_general_position,
)
from crosslab.sequences import build_circular_sequence
from crosslab import symmetry as sym


@pytest.fixture(scope="session")
def paper_points():
    return paper_config()

@pytest.fixture(scope="session")
def paper_halfperiod(paper_points):
    return build_circular_sequence(paper_points)


@pytest.fixture(scope="session")
def paper_labeling(paper_halfperiod):
    labeling = sym.find_3decomposition(paper_halfperiod)
    assert labeling is not None
    return labeling


@pytest.fixture(scope="session")
def paper_canonical(paper_halfperiod, paper_labeling):
    return sym.canonical_labels(paper_halfperiod, paper_labeling)


def random_point_set(rng: random.Random, n: int, span: int = 10**6) -> PointSet:
    """A uniformly random integer point set in general position."""
    while True:
        coords = set()
        while len(coords) < n:
            coords.add((rng.randint(-span, span), rng.randint(-span, span)))
        ps = PointSet(tuple(PlanePoint.from_ints(x, y) for x, y in sorted(coords)))
        if validate_general_position(ps).ok:
            return ps
