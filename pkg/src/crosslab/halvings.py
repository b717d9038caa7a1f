"""Halvings calculus for 33-element halfperiods, plus the certificate battery.

Everything here is hard-wired to n = 33: the middle third is positions
12..22, the spot of an element at position i is i - 11, the halvings of a
color class X are its monochromatic transpositions at gates 16 and 17, and
the exit/entrance estimators change branch at spots 5/6/7.

The battery (certify) evaluates, in a fixed order, every checkable condition
a candidate optimal halfperiod would have to satisfy: sequence validity,
the target transposition vectors, 3-decomposability, 3-symmetry, the
mono/bichromatic and per-color splits, canonical labeling, the gate
identities of the entering/leaving analysis, and the halvings inequalities.
Items whose hypotheses fail are reported not-applicable, never as failures:
most of them are conditional on a candidate that beats 14634 crossings, and
the known-optimal configuration must not be misreported as refuted.

A report in which nothing fails on a candidate whose crossing value is below
14634 would contradict the established optimality of that value among
3-symmetric configurations; such a report is flagged as a refutation
candidate demanding manual review.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .sequences import (
    Halfperiod,
    gate_of,
    transposition_profile,
    pcr_from_profile,
    validate_halfperiod,
)
from . import symmetry as sym
from .symmetry import COLORS, ColorLabeling, CanonicalLabelingError
from . import bounds as bnd

N = 33
MIDDLE = range(12, 23)  # positions of the middle third
HALVING_GATES = (16, 17)

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


class WrongSizeError(ValueError):
    """The halvings calculus is defined for 33-element halfperiods only."""


def _require_n33(h: Halfperiod):
    if h.n != N:
        raise WrongSizeError(f"halvings calculus requires n = 33, got n = {h.n}")


@dataclass(frozen=True)
class HalvingProfile:
    """[j]+ / [j]- per canonical index j of one color class."""

    color: str
    plus: dict
    minus: dict

    @property
    def h(self) -> int:
        return sum(self.plus.values())

    @property
    def h_minus(self) -> int:
        return sum(self.minus.values())


def halving_counts(h: Halfperiod, labeling: ColorLabeling, color: str) -> HalvingProfile:
    """Count per-element halvings of a color class.

    A halving at gate 16 or 17 moves its left element one position to the
    right ([j]+) and its right element one to the left ([j]-); attribution is
    by position movement, not by gate label.
    """
    _require_n33(h)
    members = labeling.members(color)
    if any(x not in labeling.index for x in members):
        raise ValueError(f"labeling unavailable: class {color} has unindexed elements")
    plus = {j: 0 for j in range(1, 12)}
    minus = {j: 0 for j in range(1, 12)}
    for t in h.transpositions:
        if t.gate not in HALVING_GATES:
            continue
        if labeling.color.get(t.left) != color or labeling.color.get(t.right) != color:
            continue
        plus[labeling.index[t.left]] += 1
        minus[labeling.index[t.right]] += 1
    return HalvingProfile(color, plus, minus)


@dataclass(frozen=True)
class SpotView:
    """Directional counts and exit/entrance estimators at one permutation."""

    color: str
    t: int
    spot: dict  # canonical index j -> spot 1..11
    lgt: dict
    rgt: dict
    llt: dict
    rlt: dict
    e_out: dict
    be_out: dict
    e_in: dict
    be_in: dict


def spot_view(h: Halfperiod, labeling: ColorLabeling, color: str, t: int) -> SpotView:
    """Spot view of a color class at permutation index t.

    Requires the class to occupy positions 12..22 of pi_t exactly.
    """
    _require_n33(h)
    perms = h.permutations()
    if not 0 <= t < len(perms):
        raise ValueError(f"permutation index {t} out of range")
    perm = perms[t]
    return spot_view_of_permutation(perm, labeling, color, t)


def spot_view_of_permutation(perm, labeling: ColorLabeling, color: str, t: int = -1) -> SpotView:
    middle = [perm[i - 1] for i in MIDDLE]
    if any(labeling.color.get(x) != color for x in middle):
        raise ValueError(f"precondition: middle third not filled by class {color}")
    spot = {labeling.index[x]: pos for pos, x in enumerate(middle, start=1)}
    if sorted(spot) != list(range(1, 12)):
        raise ValueError(f"class {color} indices are not 1..11")
    lgt, rgt, llt, rlt = {}, {}, {}, {}
    e_out, be_out, e_in, be_in = {}, {}, {}, {}
    for j in range(1, 12):
        sj = spot[j]
        lgt[j] = sum(1 for l in range(j + 1, 12) if spot[l] < sj)
        rgt[j] = sum(1 for l in range(j + 1, 12) if spot[l] > sj)
        llt[j] = sum(1 for l in range(1, j) if spot[l] < sj)
        rlt[j] = sum(1 for l in range(1, j) if spot[l] > sj)
        e_out[j] = 2 + lgt[j] if sj <= 5 else 7 - sj + lgt[j]
        be_out[j] = min(rlt[j], max(0, e_out[j]))
        e_in[j] = sj + rgt[j] - 5 if sj <= 6 else 2 + rgt[j]
        be_in[j] = min(llt[j], max(0, e_in[j]))
    return SpotView(color, t, spot, lgt, rgt, llt, rlt, e_out, be_out, e_in, be_in)


def middle_third_indices(h: Halfperiod, labeling: ColorLabeling, color: str) -> list[int]:
    """Permutation indices at which the class fills the middle third."""
    _require_n33(h)
    out = []
    for t, perm in enumerate(h.permutations()):
        if all(labeling.color.get(perm[i - 1]) == color for i in MIDDLE):
            out.append(t)
    return out


@dataclass
class BestOutInReport:
    t: int
    color: str
    per_j: dict  # j -> (plus_j, bound, holds)

    @property
    def all_hold(self) -> bool:
        return all(ok for _, _, ok in self.per_j.values())


def check_best_out_in(
    h: Halfperiod, labeling: ColorLabeling, color: str, t: int
) -> BestOutInReport:
    """Compare true [j]+ against be_out + be_in at permutation t.

    Evaluative only: the inequality is guaranteed under the optimal-candidate
    hypotheses, not for arbitrary halfperiods.
    """
    profile = halving_counts(h, labeling, color)
    view = spot_view(h, labeling, color, t)
    per_j = {}
    for j in range(1, 12):
        bound = view.be_out[j] + view.be_in[j]
        per_j[j] = (profile.plus[j], bound, profile.plus[j] <= bound)
    return BestOutInReport(t, color, per_j)


@dataclass(frozen=True)
class ConstraintItem:
    id: str
    status: str
    witness: object = None


@dataclass
class ConstraintReport:
    items: list[ConstraintItem] = field(default_factory=list)
    hard_invalid: bool = False
    pcr: Fraction | None = None
    refutation_candidate: bool = False

    def add(self, id_: str, status: str, witness=None):
        self.items.append(ConstraintItem(id_, status, witness))

    @property
    def failures(self) -> list[ConstraintItem]:
        return [i for i in self.items if i.status == FAILS]

    def to_jsonable(self) -> dict:
        return {
            "hard_invalid": self.hard_invalid,
            "pcr": None if self.pcr is None else str(self.pcr),
            "refutation_candidate": self.refutation_candidate,
            "items": [
                {"id": i.id, "status": i.status, "witness": _jsonable(i.witness)}
                for i in self.items
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), indent=2, sort_keys=False)


def _jsonable(x):
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def derive_sigma(labeling: ColorLabeling, forward: bool = True) -> dict:
    """Candidate class-cycling permutation from canonical indices.

    Maps A_j -> B_j -> C_j -> A_j (or the reverse cycle): orbit mates of a
    3-symmetric halfperiod carry equal canonical indices.
    """
    cycle = ("A", "B", "C") if forward else ("A", "C", "B")
    sigma = {}
    for pos, c in enumerate(cycle):
        nxt = cycle[(pos + 1) % 3]
        for j in range(1, 12):
            sigma[labeling.element(c, j)] = labeling.element(nxt, j)
    return sigma


def certify(h: Halfperiod, labeling: ColorLabeling | None = None) -> ConstraintReport:
    """Run the full certificate battery on a 33-element halfperiod."""
    _require_n33(h)
    report = ConstraintReport()

    # -- sequence validity (hard gate) ------------------------------------
    validity = validate_halfperiod(h)
    if not validity.ok:
        report.add("sc-validity", FAILS, validity.violations)
        report.hard_invalid = True
        return report
    report.add("sc-validity", HOLDS)

    profile = transposition_profile(h)
    report.pcr = pcr_from_profile(profile)
    below = report.pcr < 14634

    # -- transposition profile vs the target vectors ----------------------
    v1, v2 = bnd.target_vectors()
    matches_v1 = profile.n_le_k == v1
    report.add(
        "profile-equals-V1",
        HOLDS if matches_v1 else (FAILS if below else NOT_APPLICABLE),
        {"measured": profile.n_le_k, "target": v1, "pcr": report.pcr},
    )
    report.add(
        "profile-equals-V2",
        HOLDS if profile.n_k == v2 else (FAILS if below else NOT_APPLICABLE),
        {"measured": profile.n_k, "target": v2},
    )
    report.add(
        "profile-at-least-3sym-bound",
        HOLDS
        if all(m >= b for m, b in zip(profile.n_le_k, bnd.best_lb_vector(N, True).entries))
        else FAILS,
        {"measured": profile.n_le_k},
    )

    # -- 3-decomposability -------------------------------------------------
    if labeling is None:
        labeling = sym.find_3decomposition(h)
        decomposable = labeling is not None
        report.add("3-decomposable", HOLDS if decomposable else FAILS if below else NOT_APPLICABLE)
    else:
        decomposable = True
        report.add("3-decomposable", HOLDS, "labeling supplied")

    # -- canonical labeling ------------------------------------------------
    canonical = None
    if decomposable:
        try:
            canonical = sym.canonical_labels(h, labeling)
            report.add("canonical-labeling", HOLDS)
        except CanonicalLabelingError as exc:
            report.add("canonical-labeling", FAILS if below else NOT_APPLICABLE, str(exc))
    else:
        report.add("canonical-labeling", NOT_APPLICABLE, "no 3-decomposition")

    # -- 3-symmetry --------------------------------------------------------
    symmetric = False
    sigma = dict(labeling.sigma) if labeling is not None and labeling.sigma else {}
    sym_report = None
    if sigma:
        sym_report = sym.check_3symmetric_sequence(h, sigma)
        symmetric = sym_report.ok
    elif canonical is not None:
        for forward in (True, False):
            candidate = derive_sigma(canonical, forward)
            sym_report = sym.check_3symmetric_sequence(h, candidate)
            if sym_report.ok:
                symmetric, sigma = True, candidate
                break
    if sym_report is None:
        report.add("3-symmetric", NOT_APPLICABLE, "no sigma provided or derivable")
    else:
        report.add(
            "3-symmetric",
            HOLDS if symmetric else (FAILS if below else NOT_APPLICABLE),
            {k: ok for k, (ok, _) in sym_report.conditions.items()},
        )
    report.add(
        "N-le-k-multiples-of-3",
        (HOLDS if all(v % 3 == 0 for v in profile.n_le_k) else FAILS)
        if symmetric
        else NOT_APPLICABLE,
        profile.n_le_k,
    )

    # Hypotheses of the conditional (optimal-candidate) items.
    rem34 = symmetric and decomposable and matches_v1

    def conditional(condition_holds: bool, witness=None):
        if not rem34:
            return NOT_APPLICABLE
        return HOLDS if condition_holds else FAILS

    # -- mono/bichromatic splits ------------------------------------------
    if decomposable:
        classified = sym.classify_transpositions(h, labeling)
        closed = tuple(sym.bichromatic_closed_form(N, k) for k in range(1, 17))
        report.add(
            "bichromatic-closed-form",
            HOLDS if classified.n_le_bi == closed else FAILS,
            {"measured": classified.n_le_bi, "closed-form": closed},
        )
        mono_targets = (0,) * 11 + bnd.target_mono_splits()
        report.add(
            "mono-splits-target",
            conditional(classified.n_mo == mono_targets),
            {"measured": classified.n_mo, "target": mono_targets},
        )
        xx_target = (0,) * 11 + bnd.target_per_color_splits()
        xx_ok = all(classified.n_xx[c] == xx_target for c in COLORS)
        report.add(
            "per-color-splits-target",
            conditional(xx_ok),
            {c: classified.n_xx[c] for c in COLORS},
        )
    else:
        classified = None
        report.add("bichromatic-closed-form", NOT_APPLICABLE, "no 3-decomposition")
        report.add("mono-splits-target", NOT_APPLICABLE)
        report.add("per-color-splits-target", NOT_APPLICABLE)

    # -- entering/leaving gate identities ---------------------------------
    if canonical is not None:
        order_ok, order_witness = _entering_leaving_order(h, canonical)
        report.add("middle-third-entry-order", conditional(order_ok), order_witness)
        gates_ok, gates_witness = _boundary_gate_identities(h, canonical)
        report.add("boundary-gate-identities", conditional(gates_ok), gates_witness)
        inner_ok, inner_witness = _inner_gate_identities(h, canonical)
        report.add("inner-gate-identities", conditional(inner_ok), inner_witness)
    else:
        report.add("middle-third-entry-order", NOT_APPLICABLE)
        report.add("boundary-gate-identities", NOT_APPLICABLE)
        report.add("inner-gate-identities", NOT_APPLICABLE)

    # -- halvings ----------------------------------------------------------
    if canonical is not None:
        profiles = {c: halving_counts(h, canonical, c) for c in COLORS}
        sums_ok = all(p.h == p.h_minus for p in profiles.values())
        report.add(
            "halving-sum-identity",
            HOLDS if sums_ok else FAILS,
            {c: (p.h, p.h_minus) for c, p in profiles.items()},
        )
        pa = profiles["A"]
        bound53 = all(
            pa.plus[j] <= min(2 + pa.minus[j], j - 1) for j in range(1, 12)
        )
        report.add(
            "plus-bounded-by-minus-and-index",
            conditional(bound53),
            {j: (pa.plus[j], pa.minus[j]) for j in range(1, 12)},
        )
        caps = {11: 2, 10: 3, 9: 4, 8: 5, 7: 6, 6: 5, 5: 4, 4: 3, 3: 2, 2: 1, 1: 0}
        single_ok = (
            pa.plus[11] == 2
            and pa.plus[1] == 0
            and all(pa.plus[j] <= caps[j] for j in range(2, 11))
        )
        report.add("per-element-caps", conditional(single_ok), dict(pa.plus))
        combo_printed = pa.plus[11] + pa.plus[10] + pa.minus[9] + pa.plus[8]
        combo_alt = pa.plus[11] + pa.plus[10] + pa.plus[9] + pa.plus[8]
        report.add("combo-11-10-9minus-8", conditional(combo_printed <= 13), combo_printed)
        report.add("combo-11-10-9plus-8", conditional(combo_alt <= 13), combo_alt)
        hA = pa.h
        if rem34 and hA >= 32:
            mid = pa.plus[7] + pa.plus[8] + pa.plus[9]
            top = pa.plus[10] + pa.plus[11]
            low = sum(pa.plus[j] for j in range(1, 7))
            report.add("h32-mid-range", HOLDS if 12 <= mid <= 13 else FAILS, mid)
            report.add("h32-top-range", HOLDS if 4 <= top <= 5 else FAILS, top)
            report.add("h32-low-range", HOLDS if 14 <= low <= 15 else FAILS, low)
            report.add(
                "h32-minimums-7-8",
                HOLDS if pa.plus[8] >= 3 and pa.plus[7] >= 4 else FAILS,
                (pa.plus[7], pa.plus[8]),
            )
        else:
            why = "h < 32" if canonical is not None and pa.h < 32 else None
            for item in ("h32-mid-range", "h32-top-range", "h32-low-range", "h32-minimums-7-8"):
                report.add(item, NOT_APPLICABLE, why)
        # best-out-in at every qualifying permutation of class A
        qualifying = middle_third_indices(h, canonical, "A")
        bad = []
        for t in qualifying:
            r = check_best_out_in(h, canonical, "A", t)
            if not r.all_hold:
                bad.append(t)
        report.add(
            "best-out-in",
            conditional(not bad),
            {"qualifying": len(qualifying), "violated-at": bad[:5]},
        )
    else:
        for item in (
            "halving-sum-identity",
            "plus-bounded-by-minus-and-index",
            "per-element-caps",
            "combo-11-10-9minus-8",
            "combo-11-10-9plus-8",
            "h32-mid-range",
            "h32-top-range",
            "h32-low-range",
            "h32-minimums-7-8",
            "best-out-in",
        ):
            report.add(item, NOT_APPLICABLE, "no canonical labeling")

    report.refutation_candidate = below and not report.failures
    return report


def _entering_leaving_order(h: Halfperiod, canonical: ColorLabeling):
    """Per class: entries to the middle third in increasing canonical order,
    exits in decreasing order."""
    pos = {lab: i + 1 for i, lab in enumerate(h.pi0)}
    enters: dict = {c: [] for c in COLORS}
    leaves: dict = {c: [] for c in COLORS}
    for t in h.transpositions:
        g = t.gate
        if g == 11:  # left 11->12 enters; right 12->11 leaves
            _record(enters, leaves, canonical, t.left, t.right)
        elif g == 22:  # right 23->22 enters; left 22->23 leaves
            _record(enters, leaves, canonical, t.right, t.left)
        pos[t.left], pos[t.right] = pos[t.right], pos[t.left]
    witness = {"enters": enters, "leaves": leaves}
    for c in COLORS:
        if enters[c] != sorted(enters[c]) or leaves[c] != sorted(leaves[c], reverse=True):
            return False, witness
    return True, witness


def _record(enters, leaves, canonical, entering, leaving):
    ce = canonical.color.get(entering)
    cl = canonical.color.get(leaving)
    if ce is not None:
        enters[ce].append(canonical.index[entering])
    if cl is not None:
        leaves[cl].append(canonical.index[leaving])


def _boundary_gate_identities(h: Halfperiod, canonical: ColorLabeling):
    """g(a_{11-r}|b_{r+1}) = 11, g(a_{11-r}|c_{r+1}) = 22,
    g(b_{11-r}|c_{r+1}) = 11, for r = 0..10."""
    results = {}
    ok = True
    for r in range(11):
        for tag, (cx, cy), want in (
            ("ab", ("A", "B"), 11),
            ("ac", ("A", "C"), 22),
            ("bc", ("B", "C"), 11),
        ):
            x = canonical.element(cx, 11 - r)
            y = canonical.element(cy, r + 1)
            g = gate_of(h, x, y)
            results[f"{tag}[r={r}]"] = g
            if g != want:
                ok = False
    return ok, results


def _inner_gate_identities(h: Halfperiod, canonical: ColorLabeling):
    """The second-ring gate values of the entering analysis."""
    want = {
        ("A", 10, "B", 1): 12,
        ("A", 10, "C", 1): 21,
        ("A", 9, "B", 2): 12,
        ("A", 9, "B", 1): 13,
        ("A", 9, "C", 1): 20,
        ("A", 9, "C", 2): 21,
    }
    results = {}
    ok = True
    for (cx, jx, cy, jy), target in want.items():
        g = gate_of(h, canonical.element(cx, jx), canonical.element(cy, jy))
        results[f"{cx.lower()}{jx}|{cy.lower()}{jy}"] = g
        if g != target:
            ok = False
    return ok, results
