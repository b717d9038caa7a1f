"""The lower-bound ladder for (<=k)-edge counts and the crossing bound.

Six calculators, written in edge indexing (E_{<=k}), assembled once into an
N-indexed vector via the single shift N_{<=k} >= E-bound at k-1.  Everything
is exact integer arithmetic; the one irrational bound (the large-k square
root) is evaluated by integer square-root isolation so the reported integer
never over-claims.

For n = 33 the assembled vector is (3,9,...,333,398,453); with 3-symmetric
rounding (each entry up to a multiple of 3 and the top entry pinned to
C(n,2)) it becomes (3,9,...,333,399,528).  Feeding these to the sequence
crossing identity yields the bounds 14626 and 14628.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt, ceil

from .sequences import pcr_from_profile


def lb_basic(n: int, k: int) -> int:
    """3*C(k+2,2), valid for 0 <= k <= n/2 - 2."""
    if not 0 <= k <= n / 2 - 2:
        raise ValueError(f"k={k} out of range [0, n/2-2] for n={n}")
    return 3 * comb(k + 2, 2)


def lb_aichholzer(n: int, k: int) -> int:
    """Basic bound plus the sum of (3j - n + 3) for j from floor(n/3) to k."""
    if not 0 <= k <= n / 2 - 2:
        raise ValueError(f"k={k} out of range [0, n/2-2] for n={n}")
    return 3 * comb(k + 2, 2) + sum(3 * j - n + 3 for j in range(n // 3, k + 1))


def lb_extended(n: int, k: int) -> int:
    """The generalized-configuration refinement of the ladder.

    Valid over the whole edge-index range 0 <= k <= floor(n/2) - 1 (the
    printed n = 33 assembly uses it at the top index).
    """
    if not 0 <= k <= n // 2 - 1:
        raise ValueError(f"k={k} out of range [0, n//2-1] for n={n}")
    third = n // 3
    return (
        3 * comb(k + 2, 2)
        + 3 * comb(max(k + 2 - third, 0), 2)
        - max(0, (k + 1 - third) * (n - 3 * third))
    )


def large_k_threshold(n: int) -> int:
    return ceil((4 * n - 11) / 9)


def lb_large_k(n: int, k: int) -> int:
    """C(n,2) - (1/9) sqrt(1 - (2k+2)/n) (5n^2 + 19n - 31), rounded up.

    The least integer >= the right-hand side is C(n,2) - floor(x) with
    x = F*sqrt(m*n)/(9n), F = 5n^2+19n-31, m = n-2k-2; floor(x) is computed
    as isqrt(F^2*m*n) // (9n), no floating point involved.
    """
    if k < large_k_threshold(n):
        raise ValueError(f"k={k} below large-k threshold {large_k_threshold(n)} for n={n}")
    m = n - 2 * k - 2
    if m < 0:
        raise ValueError(f"k={k} too large for n={n}")
    f = 5 * n * n + 19 * n - 31
    return comb(n, 2) - isqrt(f * f * m * n) // (9 * n)


def ub_halving(n: int, e_le_low: int) -> int:
    """Upper bound on E_{floor(n/2)-1} from E_{<=floor(n/2)-3} (unused in
    the vector assembly: it bounds from above)."""
    if n < 5:
        raise ValueError("n too small for the halving bound")
    c = comb(n, 2)
    if n % 2 == 0:
        val = Fraction(1, 2) * c - Fraction(1, 2) * e_le_low
    else:
        val = Fraction(2, 3) * c - Fraction(2, 3) * e_le_low + Fraction(1, 3)
    return val.numerator // val.denominator


def lb_almost_halving(n: int) -> int:
    """Lower bound on E_{<=floor(n/2)-2}."""
    if n < 5:
        raise ValueError("n too small for the almost-halving bound")
    c = comb(n, 2)
    if n % 2 == 0:
        floor_term = Fraction(n * (n + 30), 24) - 3
    else:
        floor_term = Fraction((n - 3) * (n + 45), 18) + Fraction(1, 9)
    return c - floor_term.numerator // floor_term.denominator


@dataclass(frozen=True)
class BoundVector:
    """Integer lower bounds for N_{<=k}, k = 1 .. floor(n/2), with provenance."""

    n: int
    entries: tuple[int, ...]
    provenance: tuple[str, ...]

    def __post_init__(self):
        if len(self.entries) != self.n // 2:
            raise ValueError("wrong vector length")
        if any(a > b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("bound vector must be non-decreasing")
        if self.entries[-1] > comb(self.n, 2):
            raise ValueError("top entry exceeds C(n,2)")


def best_lb_vector(n: int, sym3: bool = False) -> BoundVector:
    """Pointwise best of the ladder, in N indexing (N_{<=k} = E-bound at k-1).

    With sym3, every entry is rounded up to the next multiple of 3 and the
    top entry is pinned to the identity N_{<=floor(n/2)} = C(n,2).
    """
    if sym3 and n % 3:
        raise ValueError("sym3 requires n divisible by 3")
    top = n // 2
    entries = []
    provenance = []
    for k in range(1, top + 1):
        e = k - 1  # edge index
        candidates = []
        if e <= n / 2 - 2:
            candidates.append((lb_basic(n, e), "basic"))
            candidates.append((lb_aichholzer(n, e), "aichholzer"))
        if e <= n // 2 - 1:
            candidates.append((lb_extended(n, e), "extended"))
        if e >= large_k_threshold(n) and n - 2 * e - 2 >= 0:
            candidates.append((lb_large_k(n, e), "large-k"))
        if n >= 5 and e == n // 2 - 2:
            candidates.append((lb_almost_halving(n), "almost-halving"))
        if not candidates:
            candidates.append((0, "none"))
        value, source = max(candidates, key=lambda c: c[0])
        if value > comb(n, 2):
            # N_{<=k} can never exceed the pair total; the ladder formulas
            # overshoot it at the top index for small n.
            value, source = comb(n, 2), "pair-total"
        entries.append(value)
        provenance.append(source)
    if sym3:
        for i in range(len(entries)):
            if entries[i] % 3:
                entries[i] += 3 - entries[i] % 3
                provenance[i] += "+3sym-roundup"
        entries[-1] = comb(n, 2)
        provenance[-1] = "pair-total"
    # Monotone repair (the per-k maxima are already monotone for all tested
    # n, but rounding keeps this safe for general n).
    for i in range(1, len(entries)):
        if entries[i] < entries[i - 1]:
            entries[i] = entries[i - 1]
            provenance[i] = provenance[i - 1] + "(monotone)"
    return BoundVector(n, tuple(entries), tuple(provenance))


def lb_crossing(n: int, sym3: bool = False) -> int:
    """Crossing lower bound: the sequence identity at the best bound vector.

    The top entry's coefficient in the identity is zero, so the printed-vs-
    pipeline normalization of the final entry (453 vs 528 at n = 33) cannot
    change the result.
    """
    vec = best_lb_vector(n, sym3)
    entries = list(vec.entries)
    entries[-1] = comb(n, 2)
    value = pcr_from_profile(entries, n=n)
    if value.denominator != 1:
        raise ValueError(f"non-integral crossing bound {value}")
    return int(value)


# Prop 3.1 target vectors for n = 33: the cumulative and per-k transposition
# vectors any 3-symmetric halfperiod with pcr < 14634 would have to attain.
V1 = (3, 9, 18, 30, 45, 63, 84, 108, 135, 165, 198, 237, 282, 333, 399, 528)
V2 = (3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 39, 45, 51, 66, 129)


def target_vectors() -> tuple[tuple[int, ...], tuple[int, ...]]:
    return V1, V2


def target_mono_splits() -> tuple[int, ...]:
    """N_k^mo implied by V2 minus the bichromatic counts, k = 12..16."""
    from .symmetry import bichromatic_closed_form

    bi_k = [
        bichromatic_closed_form(33, k) - bichromatic_closed_form(33, k - 1)
        for k in range(1, 17)
    ]
    return tuple(V2[k - 1] - bi_k[k - 1] for k in range(12, 17))


def target_per_color_splits() -> tuple[int, ...]:
    """Per-color N_k^xx targets, one third of the mono splits, k = 12..16."""
    mono = target_mono_splits()
    if any(m % 3 for m in mono):
        raise ValueError("mono splits are not divisible by 3")
    return tuple(m // 3 for m in mono)
