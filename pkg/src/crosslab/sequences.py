"""Circular sequences of point sets: construction, validation, statistics.

A halfperiod is an initial permutation pi0 of the n labels followed by the
C(n,2) adjacent transpositions of a half-turn of the rotating-line sweep.
The transposition x|y swaps x (initially at the smaller position, the gate)
with its right neighbour y; after all C(n,2) swaps the permutation is the
reverse of pi0.

Sweep conventions (any fixed convention yields a valid allowable sequence,
these make outputs reproducible):

* pi0 orders points by x ascending; a vertical pair is ordered y descending
  and its swap is the event at angle zero, processed first.
* Remaining pairs swap in increasing order of the angle of their connecting
  line, normalized to the open right half-plane, compared exactly.
* Pairs with equal angle (parallel pairs) are processed in lexicographic
  order of (min label, max label); under no-3-collinear they occupy disjoint
  slots and commute.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactnum import sign_pq, cross_sign
from .geometry import PointSet
from .crossings import DegenerateInputError


@dataclass(frozen=True, slots=True)
class Transposition:
    """x|y: x precedes y and sits at position `gate` just before the swap."""

    left: object
    right: object
    gate: int

    @property
    def pair(self) -> frozenset:
        return frozenset((self.left, self.right))


@dataclass(frozen=True)
class Halfperiod:
    n: int
    pi0: tuple
    transpositions: tuple[Transposition, ...]

    def permutations(self) -> list[tuple]:
        """All C(n,2)+1 permutations pi_0 .. pi_C, by replay."""
        perms = [self.pi0]
        cur = list(self.pi0)
        for t in self.transpositions:
            g = t.gate - 1
            cur[g], cur[g + 1] = cur[g + 1], cur[g]
            perms.append(tuple(cur))
        return perms

    def reversed_halfperiod(self) -> Halfperiod:
        """The second half of the full period: starts at reversed pi0."""
        return rotate_halfperiod(self, comb(self.n, 2))


@dataclass
class SequenceValidationReport:
    violations: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def build_circular_sequence(ps: PointSet) -> Halfperiod:
    """Rotating-sweep construction of a halfperiod for a point set.

    Labels are the point indices.  Raises DegenerateInputError on collinear
    triples (detected as a non-adjacent swap during replay).
    """
    pts = ps.points
    n = ps.n

    def cmp_points(i: int, j: int) -> int:
        dx = pts[j].x - pts[i].x
        s = dx.sign()
        if s != 0:
            return -s
        # Vertical pair: y descending so the angle-zero swap comes first.
        dy = pts[j].y - pts[i].y
        s = dy.sign()
        if s == 0:
            raise ValueError("duplicate point")
        return s

    order = sorted(range(n), key=functools.cmp_to_key(cmp_points))
    pi0 = tuple(order)

    vertical: list[tuple[int, int]] = []
    slanted: list[tuple[int, int]] = []
    vecs = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = pts[j] - pts[i]
            s = v.x.sign()
            if s == 0:
                vertical.append((i, j))
            else:
                if s < 0:
                    v = type(v)(-v.x, -v.y)
                vecs[(i, j)] = v
                slanted.append((i, j))

    def cmp_events(a, b) -> int:
        u, v = vecs[a], vecs[b]
        c = cross_sign(u.x, u.y, v.x, v.y)
        if c != 0:
            return -c  # smaller angle first
        return -1 if a < b else (1 if a > b else 0)

    slanted.sort(key=functools.cmp_to_key(cmp_events))
    # Equal-angle pairs sharing a point are a collinear triple; the adjacency
    # check below can miss them when the tie-break happens to order the swaps
    # consistently, so reject them explicitly here.
    def check_disjoint(group):
        seen = set()
        for a, b in group:
            if a in seen or b in seen:
                raise DegenerateInputError(
                    f"degenerate input: collinear triple through pair ({a},{b})"
                )
            seen.update((a, b))

    def same_angle(a, b) -> bool:
        u, v = vecs[a], vecs[b]
        return cross_sign(u.x, u.y, v.x, v.y) == 0

    check_disjoint(vertical)
    start = 0
    for idx in range(1, len(slanted) + 1):
        if idx == len(slanted) or not same_angle(slanted[start], slanted[idx]):
            check_disjoint(slanted[start:idx])
            start = idx

    events = sorted(vertical) + slanted

    pos = {lab: idx + 1 for idx, lab in enumerate(pi0)}
    perm = list(pi0)
    transpositions = []
    for i, j in events:
        pi, pj = pos[i], pos[j]
        if abs(pi - pj) != 1:
            raise DegenerateInputError(
                f"degenerate input: pair ({i},{j}) not adjacent at its event "
                "(collinear triple)"
            )
        g = min(pi, pj)
        left, right = (i, j) if pi < pj else (j, i)
        transpositions.append(Transposition(left, right, g))
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
        pos[left], pos[right] = pos[right], pos[left]
    return Halfperiod(n, pi0, tuple(transpositions))


def validate_halfperiod(h: Halfperiod) -> SequenceValidationReport:
    """Replay oracle for SC1 (adjacency), SC2 (each pair once), reversal."""
    report = SequenceValidationReport()
    n = h.n
    if len(set(h.pi0)) != n:
        report.violations.append((-1, "pi0 is not a permutation"))
        return report
    if len(h.transpositions) != comb(n, 2):
        report.violations.append(
            (-1, f"expected {comb(n, 2)} transpositions, got {len(h.transpositions)}")
        )
    pos = {lab: idx + 1 for idx, lab in enumerate(h.pi0)}
    perm = list(h.pi0)
    seen = set()
    for idx, t in enumerate(h.transpositions):
        if t.left not in pos or t.right not in pos:
            report.violations.append((idx, f"unknown label in {t.left}|{t.right}"))
            return report
        pair = t.pair
        if pair in seen:
            report.violations.append((idx, f"SC2 violation: pair {t.left},{t.right} swaps twice"))
            return report
        seen.add(pair)
        pl, pr = pos[t.left], pos[t.right]
        if pr != pl + 1:
            report.violations.append(
                (idx, f"SC1 violation: {t.left}|{t.right} not adjacent (positions {pl},{pr})")
            )
            return report
        if t.gate != pl:
            report.violations.append((idx, f"gate mismatch: recorded {t.gate}, actual {pl}"))
            return report
        perm[pl - 1], perm[pl] = perm[pl], perm[pl - 1]
        pos[t.left], pos[t.right] = pr, pl
    if report.violations:
        return report
    if tuple(perm) != tuple(reversed(h.pi0)):
        report.violations.append((len(h.transpositions), "final permutation is not reversed pi0"))
    return report


@dataclass(frozen=True)
class TranspositionProfile:
    """N_k and N_{<=k} for k = 1 .. floor(n/2)."""

    n: int
    n_k: tuple[int, ...]

    def __post_init__(self):
        if len(self.n_k) != self.n // 2:
            raise ValueError(f"expected {self.n // 2} entries, got {len(self.n_k)}")

    @property
    def n_le_k(self) -> tuple[int, ...]:
        out, acc = [], 0
        for v in self.n_k:
            acc += v
            out.append(acc)
        return tuple(out)

    @property
    def total(self) -> int:
        return sum(self.n_k)

    # Length-16 paper views for n = 33 (identical layout, named for clarity).
    @property
    def v_k(self) -> tuple[int, ...]:
        return self.n_k

    @property
    def v_le_k(self) -> tuple[int, ...]:
        return self.n_le_k


def critical_class(gate: int, n: int) -> int:
    """The k with gate in {k, n-k}, i.e. min(gate, n - gate)."""
    return min(gate, n - gate)


def transposition_profile(h: Halfperiod) -> TranspositionProfile:
    n_k = [0] * (h.n // 2)
    for t in h.transpositions:
        n_k[critical_class(t.gate, h.n) - 1] += 1
    return TranspositionProfile(h.n, tuple(n_k))


def pcr_from_profile(profile, n: int | None = None) -> Fraction:
    """The sequence-side crossing identity, exact rational.

    Accepts a TranspositionProfile or a bare cumulative vector
    (N_{<=1}, ..., N_{<=floor(n/2)}) with n given explicitly (a length-16
    vector defaults to the n=33 layout).  Only entries k <= floor(n/2)-1
    carry a nonzero coefficient.
    """
    if isinstance(profile, TranspositionProfile):
        n = profile.n
        le = profile.n_le_k
    else:
        le = tuple(profile)
        if n is None:
            n = 2 * len(le) + 1
        if len(le) != n // 2:
            raise ValueError(f"cumulative vector has {len(le)} entries, expected {n // 2}")
    total = Fraction(0)
    for k in range(1, n // 2):
        total += (n - 2 * k - 1) * le[k - 1]
    total -= Fraction(3, 4) * comb(n, 3)
    total += (1 + (-1) ** (n + 1)) * Fraction(comb(n, 2), 8)
    return total


def gate_of(h: Halfperiod, x, y) -> int:
    """Gate of the unique transposition of the unordered pair {x, y}."""
    pair = frozenset((x, y))
    for t in h.transpositions:
        if t.pair == pair:
            return t.gate
    raise KeyError(f"pair ({x},{y}) absent from halfperiod")


def full_period(h: Halfperiod) -> tuple[list[tuple], list[tuple]]:
    """Permutations and swap pairs of one full period (2*C(n,2) events).

    Returns (perms, pairs) with len(perms) == 2*C(n,2); perms[t] is pi_t, and
    pairs[t] is the unordered pair swapped between pi_t and pi_{t+1}
    (pairs[-1] closes the cycle back to pi_0).
    """
    perms = [h.pi0]
    cur = list(h.pi0)
    pairs = []
    for t in h.transpositions:
        g = t.gate - 1
        cur[g], cur[g + 1] = cur[g + 1], cur[g]
        perms.append(tuple(cur))
        pairs.append((t.left, t.right))
    # Second half: same pairs swap back, starting from reversed pi0.
    pos = {lab: idx for idx, lab in enumerate(cur)}
    for t in h.transpositions:
        a, b = t.left, t.right
        pa, pb = pos[a], pos[b]
        if abs(pa - pb) != 1:
            raise ValueError("halfperiod does not extend to a period (SC violation)")
        cur[pa], cur[pb] = cur[pb], cur[pa]
        pos[a], pos[b] = pb, pa
        perms.append(tuple(cur))
        pairs.append((b, a))
    assert perms[-1] == h.pi0
    perms.pop()
    return perms, pairs


def rotate_halfperiod(h: Halfperiod, offset: int) -> Halfperiod:
    """Halfperiod starting `offset` steps into the full period."""
    half = comb(h.n, 2)
    if not 0 <= offset < 2 * half:
        raise ValueError(f"offset must be in [0, {2 * half})")
    if offset == 0:
        return h
    perms, pairs = full_period(h)
    pi0 = perms[offset]
    pos = {lab: idx + 1 for idx, lab in enumerate(pi0)}
    transpositions = []
    for step in range(offset, offset + half):
        a, b = pairs[step % (2 * half)]
        pa, pb = pos[a], pos[b]
        g = min(pa, pb)
        left, right = (a, b) if pa < pb else (b, a)
        transpositions.append(Transposition(left, right, g))
        pos[left], pos[right] = pos[right], pos[left]
    return Halfperiod(h.n, pi0, tuple(transpositions))


def halfperiod_to_json(h: Halfperiod) -> str:
    return json.dumps(
        {
            "n": h.n,
            "pi0": [str(x) for x in h.pi0],
            "transpositions": [[str(t.left), str(t.right), t.gate] for t in h.transpositions],
        },
        indent=None,
    )


def halfperiod_from_json(text: str) -> Halfperiod:
    """Parse the halfperiod JSON; recorded gates, if present, are re-checked."""
    data = json.loads(text)
    n = int(data["n"])
    pi0 = tuple(str(x) for x in data["pi0"])
    if len(pi0) != n:
        raise ValueError(f"pi0 has {len(pi0)} labels, expected {n}")
    entries = data["transpositions"]
    if len(entries) != comb(n, 2):
        raise ValueError(f"expected {comb(n, 2)} transpositions, got {len(entries)}")
    pos = {lab: idx + 1 for idx, lab in enumerate(pi0)}
    transpositions = []
    for idx, entry in enumerate(entries):
        if len(entry) == 3:
            x, y, gate = entry
        elif len(entry) == 2:
            (x, y), gate = entry, None
        else:
            raise ValueError(f"transposition {idx}: expected [x, y, gate?]")
        x, y = str(x), str(y)
        if x not in pos or y not in pos:
            raise ValueError(f"transposition {idx}: unknown label")
        g = pos[x]
        if gate is not None and int(gate) != g:
            raise ValueError(f"transposition {idx}: recorded gate {gate}, recomputed {g}")
        transpositions.append(Transposition(x, y, g))
        pos[x], pos[y] = pos[y], pos[x]
    return Halfperiod(n, pi0, tuple(transpositions))
