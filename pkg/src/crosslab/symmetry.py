"""3-symmetry and 3-decomposability certification; transposition coloring.

A halfperiod is 3-decomposable if some rotation of its circular sequence
starts with three contiguous equal blocks (A, B, C) and, strictly later
within that halfperiod, shows the block patterns (B, A, C) and then
(B, C, A).  It is 3-symmetric under a label permutation sigma if sigma cubes
to the identity, splits the labels into three cyclic classes, preserves
k-criticality of every transposition, and preserves every element's cyclic
transposition order up to a shift.

Canonical indexing (n = 33 only): element x_j of a color class is the one
whose extremal reach over the full period is r = 12 - j, where the reach of
an element is min over all permutations of min(position, 34 - position).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .geometry import PointSet, PlanePoint, rotate120
from .sequences import Halfperiod, critical_class, full_period, rotate_halfperiod

COLORS = ("A", "B", "C")


class CanonicalLabelingError(ValueError):
    """The per-color extremal-reach map is not a bijection onto 1..11."""


@dataclass
class ColorLabeling:
    color: dict
    index: dict = field(default_factory=dict)
    sigma: dict = field(default_factory=dict)
    phase_order_ok: bool | None = None

    def members(self, c: str) -> list:
        return [x for x, col in self.color.items() if col == c]

    def element(self, c: str, j: int):
        """The element with color c and canonical index j."""
        for x, col in self.color.items():
            if col == c and self.index.get(x) == j:
                return x
        raise KeyError(f"no element {c}_{j}")


def check_3symmetric_pointset(ps: PointSet, center: PlanePoint):
    """True iff the 120-degree rotation about center permutes the set.

    Returns (flag, orbit_map) where orbit_map sends each point index to the
    index of its rotated image (None if not symmetric).
    """
    try:
        images = [rotate120(p, center) for p in ps]
    except ValueError:
        return False, None
    where = {p: i for i, p in enumerate(ps.points)}
    orbit = {}
    for i, img in enumerate(images):
        j = where.get(img)
        if j is None:
            return False, None
        orbit[i] = j
    return True, orbit


@dataclass
class SymmetrySequenceReport:
    """Outcome of the four 3-symmetric sequence conditions."""

    conditions: dict = field(default_factory=dict)  # id -> (ok, witness)
    uniform_shift: int | None = None

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.conditions.values())


def check_3symmetric_sequence(h: Halfperiod, sigma: dict) -> SymmetrySequenceReport:
    report = SymmetrySequenceReport()
    labels = list(h.pi0)
    n = h.n

    # (1) sigma^3 = id
    bad = [x for x in labels if sigma.get(sigma.get(sigma.get(x))) != x]
    report.conditions["sigma-cubed-identity"] = (not bad, bad[:3] or None)

    # (2) disjoint union of U, sigma(U), sigma^2(U), each of size n/3
    orbits_ok = n % 3 == 0
    witness = None
    if orbits_ok:
        seen = set()
        classes = 0
        for x in labels:
            if x in seen:
                continue
            orb = {x, sigma.get(x), sigma.get(sigma.get(x))}
            if len(orb) != 3 or None in orb:
                orbits_ok, witness = False, x
                break
            seen |= orb
            classes += 1
        if orbits_ok and classes != n // 3:
            orbits_ok, witness = False, classes
    report.conditions["orbit-partition"] = (orbits_ok, witness)

    # (3) k-criticality preserved
    crit = {t.pair: critical_class(t.gate, n) for t in h.transpositions}
    bad3 = []
    for t in h.transpositions:
        image = frozenset((sigma.get(t.left), sigma.get(t.right)))
        if crit.get(image) != critical_class(t.gate, n):
            bad3.append((t.left, t.right))
    report.conditions["criticality-preserved"] = (not bad3, bad3[:3] or None)

    # (4) cyclic partner order preserved up to a per-element shift
    partners: dict = {x: [] for x in labels}
    for t in h.transpositions:
        partners[t.left].append(t.right)
        partners[t.right].append(t.left)
    bad4 = []
    shifts = {}
    for x in labels:
        sx = sigma.get(x)
        if sx not in partners:
            bad4.append(x)
            continue
        mapped = [sigma.get(p) for p in partners[x]]
        target = partners[sx]
        shift = _cyclic_shift(mapped, target)
        if shift is None:
            bad4.append(x)
        else:
            shifts[x] = shift
    report.conditions["cyclic-order-preserved"] = (not bad4, bad4[:3] or None)
    if not bad4 and shifts and len(set(shifts.values())) == 1:
        report.uniform_shift = next(iter(shifts.values()))
    return report


def _cyclic_shift(a: list, b: list) -> int | None:
    """Shift t with a == b[t:] + b[:t], or None."""
    if len(a) != len(b):
        return None
    for t in range(len(b)):
        if a == b[t:] + b[:t]:
            return t
    return None


def find_3decomposition(h: Halfperiod) -> ColorLabeling | None:
    """Scan all rotations of the circular sequence for the block patterns.

    Deterministic: lowest offset wins, and within it the earliest pattern
    permutations.  The returned labeling names the starting blocks (A, B, C)
    left to right; indices are positions within each block of that start.
    """
    n = h.n
    if n % 3:
        return None
    m = n // 3
    half = comb(n, 2)
    perms, _ = full_period(h)
    code = {lab: i for i, lab in enumerate(h.pi0)}
    arr = np.array([[code[x] for x in p] for p in perms], dtype=np.int16)
    ext = np.concatenate([arr, arr[:half]], axis=0)
    inv = list(h.pi0)

    for offset in range(2 * half):
        start = ext[offset]
        bid = np.empty(n, dtype=np.int8)
        bid[start[:m]] = 0  # A
        bid[start[m : 2 * m]] = 1  # B
        bid[start[2 * m :]] = 2  # C
        window = bid[ext[offset + 1 : offset + half + 1]]
        bac = (
            (window[:, :m] == 1).all(axis=1)
            & (window[:, m : 2 * m] == 0).all(axis=1)
            & (window[:, 2 * m :] == 2).all(axis=1)
        )
        if not bac.any():
            continue
        first_bac = int(np.argmax(bac))
        bca = (
            (window[:, :m] == 1).all(axis=1)
            & (window[:, m : 2 * m] == 2).all(axis=1)
            & (window[:, 2 * m :] == 0).all(axis=1)
        )
        if not bca[first_bac + 1 :].any():
            continue
        color = {}
        index = {}
        for pos, c in enumerate(start):
            lab = inv[c]
            color[lab] = COLORS[pos // m]
            index[lab] = pos % m + 1
        labeling = ColorLabeling(color=color, index=index)
        rotated = rotate_halfperiod(h, offset)
        labeling.phase_order_ok = _phase_order_flag(rotated, color)
        return labeling
    return None


def _phase_order_satisfied(transpositions, color: dict) -> bool:
    """Whether bichromatic transpositions run AB, then AC, then BC."""
    phase = {"AB": 0, "AC": 1, "BC": 2}
    last = 0
    for t in transpositions:
        ca, cb = color[t.left], color[t.right]
        if ca == cb:
            continue
        p = phase["".join(sorted((ca, cb)))]
        if p < last:
            return False
        last = p
    return True


def _phase_order_flag(h: Halfperiod, color: dict) -> bool:
    """AB < AC < BC satisfiable under some color renaming and direction.

    The phase order is a convention of the optimality analysis, not a validity
    condition, so failure only clears a flag.
    """
    from itertools import permutations

    for perm in permutations(COLORS):
        rename = dict(zip(COLORS, perm))
        recolored = {x: rename[c] for x, c in color.items()}
        if _phase_order_satisfied(h.transpositions, recolored):
            return True
        if _phase_order_satisfied(tuple(reversed(h.transpositions)), recolored):
            return True
    return False


@dataclass(frozen=True)
class ClassifiedProfile:
    """Per-k mono/bi and per-color splits of the critical transpositions."""

    n: int
    n_mo: tuple[int, ...]
    n_bi: tuple[int, ...]
    n_xx: dict  # color -> tuple

    def _cum(self, v):
        out, acc = [], 0
        for x in v:
            acc += x
            out.append(acc)
        return tuple(out)

    @property
    def n_le_mo(self):
        return self._cum(self.n_mo)

    @property
    def n_le_bi(self):
        return self._cum(self.n_bi)

    def n_le_xx(self, c):
        return self._cum(self.n_xx[c])


def classify_transpositions(h: Halfperiod, labeling: ColorLabeling) -> ClassifiedProfile:
    size = h.n // 2
    n_mo = [0] * size
    n_bi = [0] * size
    n_xx = {c: [0] * size for c in COLORS}
    for t in h.transpositions:
        k = critical_class(t.gate, h.n) - 1
        ca, cb = labeling.color[t.left], labeling.color[t.right]
        if ca == cb:
            n_mo[k] += 1
            n_xx[ca][k] += 1
        else:
            n_bi[k] += 1
    return ClassifiedProfile(h.n, tuple(n_mo), tuple(n_bi), {c: tuple(v) for c, v in n_xx.items()})


def bichromatic_closed_form(n: int, k: int) -> int:
    """N_{<=k}^bi of any 3-decomposable halfperiod (closed form)."""
    if k <= n // 3:
        return 3 * comb(k + 1, 2)
    return 3 * comb(n // 3 + 1, 2) + (k - n // 3) * n


def extremal_reach(h: Halfperiod) -> dict:
    """min over the full period of min(position, n+1-position), per element."""
    n = h.n
    perms, _ = full_period(h)
    reach = {x: n for x in h.pi0}
    for perm in perms:
        for pos, x in enumerate(perm, start=1):
            r = min(pos, n + 1 - pos)
            if r < reach[x]:
                reach[x] = r
    return reach


def canonical_labels(h: Halfperiod, labeling: ColorLabeling) -> ColorLabeling:
    """Re-index each color class by extremal reach (n = 33 only).

    The element of reach r gets index 12 - r; raises CanonicalLabelingError
    if two class members share a reach.
    """
    if h.n != 33:
        raise ValueError("canonical labeling is defined for n = 33 only")
    reach = extremal_reach(h)
    index = {}
    for c in COLORS:
        members = labeling.members(c)
        by_reach = {}
        for x in members:
            by_reach.setdefault(reach[x], []).append(x)
        collisions = {r: xs for r, xs in by_reach.items() if len(xs) > 1}
        if collisions or set(by_reach) != set(range(1, 12)):
            raise CanonicalLabelingError(
                f"canonical labeling undefined for class {c}: "
                f"reach collisions {collisions or dict(sorted(by_reach.items()))}"
            )
        for r, (x,) in by_reach.items():
            index[x] = 12 - r
    return ColorLabeling(
        color=dict(labeling.color),
        index=index,
        sigma=dict(labeling.sigma),
        phase_order_ok=labeling.phase_order_ok,
    )


def labeling_to_json(labeling: ColorLabeling) -> str:
    return json.dumps(
        {
            "colors": {str(x): c for x, c in labeling.color.items()},
            "indices": {str(x): j for x, j in labeling.index.items()},
            "sigma": {str(x): str(y) for x, y in labeling.sigma.items()},
        }
    )


def labeling_from_json(text: str) -> ColorLabeling:
    data = json.loads(text)
    colors = {str(x): c for x, c in data.get("colors", {}).items()}
    bad = {x: c for x, c in colors.items() if c not in COLORS}
    if bad:
        raise ValueError(f"invalid colors: {bad}")
    return ColorLabeling(
        color=colors,
        index={str(x): int(j) for x, j in data.get("indices", {}).items()},
        sigma={str(x): str(y) for x, y in data.get("sigma", {}).items()},
    )
