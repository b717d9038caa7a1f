"""Exact crossing counts, three independent ways, plus direct k-edge counts.

For a point set in general position the crossings of the induced complete
straight-line graph are exactly the 4-subsets in convex position.  The two
identity-based routes recompute the same number from the k-edge vector

    cr = sum_k (n - 2k - 3) E_{<=k}  - (3/4) C(n,3) + (1 + (-1)^(n+1)) C(n,2)/8
    cr = 3 C(n,4) - sum_k k (n - k - 2) E_k

evaluated over exact rationals (the parity term is fractional mid-way).
Cross-method equality on every input is the module's strongest self-check.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .exactnum import sign_pq
from .geometry import PointSet


class DegenerateInputError(ValueError):
    """A collinear triple was encountered where general position is required."""


@dataclass(frozen=True)
class EdgeProfile:
    """E_k counts for k = 0 .. floor(n/2)-1, with the cumulative view."""

    n: int
    e_k: tuple[int, ...]

    def __post_init__(self):
        if len(self.e_k) != self.n // 2:
            raise ValueError(f"expected {self.n // 2} entries, got {len(self.e_k)}")
        if any(e < 0 for e in self.e_k):
            raise ValueError("negative k-edge count")

    @property
    def e_le_k(self) -> tuple[int, ...]:
        out, acc = [], 0
        for e in self.e_k:
            acc += e
            out.append(acc)
        return tuple(out)

    @property
    def total(self) -> int:
        return sum(self.e_k)


@dataclass(frozen=True)
class CrossingResult:
    value: int
    method: str


def triple_orient_signs(ps: PointSet) -> list[int]:
    """Orientation sign of every sorted triple i<j<k, in colex rank order.

    Rank of (i, j, k) is C(k,3) + C(j,2) + i.  Shared by the brute counter,
    the k-edge counter, and the annealing objective.
    """
    pts = ps.points
    n = len(pts)
    coords = [(p.x.p, p.x.q, p.y.p, p.y.q) for p in pts]
    # Pairwise difference vectors, hoisted out of the triple loop.
    dx = [[None] * n for _ in range(n)]
    dy = [[None] * n for _ in range(n)]
    for i in range(n):
        xi_p, xi_q, yi_p, yi_q = coords[i]
        for j in range(i + 1, n):
            xj_p, xj_q, yj_p, yj_q = coords[j]
            dx[i][j] = (xj_p - xi_p, xj_q - xi_q)
            dy[i][j] = (yj_p - yi_p, yj_q - yi_q)
    signs = [0] * comb(n, 3)
    rank = 0
    for k in range(n):
        for j in range(k):
            for i in range(j):
                uxp, uxq = dx[i][j]
                uyp, uyq = dy[i][j]
                vxp, vxq = dx[i][k]
                vyp, vyq = dy[i][k]
                signs[rank] = sign_pq(
                    uxp * vyp + 3 * uxq * vyq - uyp * vxp - 3 * uyq * vxq,
                    uxp * vyq + uxq * vyp - uyp * vxq - uyq * vxp,
                )
                rank += 1
    return signs


def triple_rank(i: int, j: int, k: int) -> int:
    """Colex rank of sorted triple i < j < k."""
    return comb(k, 3) + comb(j, 2) + i


@functools.lru_cache(maxsize=8)
def _quadruple_triple_ranks(n: int) -> np.ndarray:
    """For every 4-subset of range(n), the colex ranks of its four triples."""
    rows = np.empty((comb(n, 4), 4), dtype=np.int64)
    c3 = [comb(m, 3) for m in range(n)]
    c2 = [comb(m, 2) for m in range(n)]
    r = 0
    for l in range(n):
        for k in range(l):
            for j in range(k):
                for i in range(j):
                    rows[r, 0] = c3[k] + c2[j] + i
                    rows[r, 1] = c3[l] + c2[j] + i
                    rows[r, 2] = c3[l] + c2[k] + i
                    rows[r, 3] = c3[l] + c2[k] + j
                    r += 1
    return rows


def count_crossings_brute(ps: PointSet) -> CrossingResult:
    """Count 4-subsets in convex position by orientation signs.

    A 4-set in general position is convex iff its four triple orientations do
    not split 3-1 (a 3-1 split means one point lies inside the others'
    triangle).
    """
    signs = triple_orient_signs(ps)
    return CrossingResult(_convex_quadruples(signs, ps.n), "brute")


def _convex_quadruples(signs: list[int], n: int) -> int:
    arr = np.asarray(signs, dtype=np.int8)
    if (arr == 0).any():
        raise DegenerateInputError("degenerate input: collinear triple")
    if n < 4:
        return 0
    quads = arr[_quadruple_triple_ranks(n)]
    pos = (quads > 0).sum(axis=1)
    return int(((pos != 1) & (pos != 3)).sum())


def count_k_edges(ps: PointSet) -> EdgeProfile:
    """Side-count every pair against every third point; O(n^3) orientations."""
    signs = triple_orient_signs(ps)
    n = ps.n
    e_k = [0] * (n // 2)
    for j in range(n):
        for i in range(j):
            left = 0
            for m in range(n):
                if m == i or m == j:
                    continue
                if m < i:
                    s = signs[triple_rank(m, i, j)]
                elif m < j:
                    s = -signs[triple_rank(i, m, j)]
                else:
                    s = signs[triple_rank(i, j, m)]
                if s == 0:
                    raise DegenerateInputError("degenerate input: collinear triple")
                if s > 0:
                    left += 1
            e_k[min(left, n - 2 - left)] += 1
    return EdgeProfile(n, tuple(e_k))


def cr_from_le_k(profile: EdgeProfile) -> CrossingResult:
    """Crossings from cumulative k-edge counts, exact rational evaluation."""
    n = profile.n
    le = profile.e_le_k
    total = Fraction(0)
    for k in range(n // 2 - 1):
        total += (n - 2 * k - 3) * le[k]
    total -= Fraction(3, 4) * comb(n, 3)
    total += (1 + (-1) ** (n + 1)) * Fraction(comb(n, 2), 8)
    if total.denominator != 1:
        raise ValueError(f"inconsistent edge vector: non-integral result {total}")
    return CrossingResult(int(total), "from-le-kedges")


def cr_from_k(profile: EdgeProfile) -> CrossingResult:
    """Crossings from plain k-edge counts."""
    n = profile.n
    total = 3 * comb(n, 4)
    for k, e in enumerate(profile.e_k):
        total -= k * (n - k - 2) * e
    return CrossingResult(total, "from-kedges")
