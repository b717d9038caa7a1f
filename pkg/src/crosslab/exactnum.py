"""Exact arithmetic over Z[sqrt(3)] and the sign predicates built on it.

A scalar is p + q*sqrt(3) with arbitrary-precision integer p, q.  Because
sqrt(3) is irrational, the scalar is zero iff p == q == 0, so equality and
sign tests are decidable with integer arithmetic only: when p and q disagree
in sign, compare p^2 against 3*q^2.

All point coordinates in this package are *doubled*: a stored coordinate
value v denotes the real number v/2.  Positive uniform scaling preserves
every orientation sign, and doubling keeps 120-degree rotations inside the
ring (see geometry.rotate120).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True, slots=True)
class ExactScalar:
    """The real number p + q*sqrt(3), exactly."""

    p: int
    q: int

    def __add__(self, other: ExactScalar) -> ExactScalar:
        return ExactScalar(self.p + other.p, self.q + other.q)

    def __sub__(self, other: ExactScalar) -> ExactScalar:
        return ExactScalar(self.p - other.p, self.q - other.q)

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.p, -self.q)

    def __mul__(self, other: ExactScalar) -> ExactScalar:
        # (p + q*s)(r + t*s) = pr + 3qt + (pt + qr)s  with s = sqrt(3)
        return ExactScalar(
            self.p * other.p + 3 * self.q * other.q,
            self.p * other.q + self.q * other.p,
        )

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def sign(self) -> int:
        return sign_pq(self.p, self.q)

    def half(self) -> ExactScalar:
        """Exact division by 2; raises if either coefficient is odd."""
        if self.p % 2 or self.q % 2:
            raise ValueError(f"{self!r} is not divisible by 2 in Z[sqrt(3)]")
        return ExactScalar(self.p // 2, self.q // 2)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"ExactScalar({self.p}, {self.q})"

    @classmethod
    def from_int(cls, n: int) -> ExactScalar:
        return cls(n, 0)


ZERO = ExactScalar(0, 0)
ONE = ExactScalar(1, 0)
SQRT3 = ExactScalar(0, 1)


def sign_pq(p: int, q: int) -> int:
    """Sign of p + q*sqrt(3) using integer arithmetic only."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # Mixed signs: the dominant term is the one with larger square.
    # p^2 == 3*q^2 cannot happen for q != 0 (sqrt(3) is irrational).
    if p * p > 3 * q * q:
        return 1 if p > 0 else -1
    return 1 if q > 0 else -1


def orient(a, b, c) -> int:
    """Sign of det(b - a, c - a) for points with ExactScalar coordinates.

    +1 counterclockwise, 0 collinear, -1 clockwise.
    """
    ux = b.x - a.x
    uy = b.y - a.y
    vx = c.x - a.x
    vy = c.y - a.y
    return sign_pq(
        ux.p * vy.p + 3 * ux.q * vy.q - (uy.p * vx.p + 3 * uy.q * vx.q),
        ux.p * vy.q + ux.q * vy.p - (uy.p * vx.q + uy.q * vx.p),
    )


class Direction(Enum):
    PARALLEL = "parallel"
    CLOCKWISE_OF = "clockwise-of"
    COUNTERCLOCKWISE_OF = "counterclockwise-of"


def cross_sign(ux: ExactScalar, uy: ExactScalar, vx: ExactScalar, vy: ExactScalar) -> int:
    """Sign of the cross product u x v."""
    return sign_pq(
        ux.p * vy.p + 3 * ux.q * vy.q - (uy.p * vx.p + 3 * uy.q * vx.q),
        ux.p * vy.q + ux.q * vy.p - (uy.p * vx.q + uy.q * vx.p),
    )


def cmp_direction(u, v) -> Direction:
    """Classify the direction of v against u, lines taken modulo pi.

    u and v are objects with ExactScalar fields x, y.  Raises ValueError on a
    zero vector.
    """
    if u.x.is_zero() and u.y.is_zero():
        raise ValueError("degenerate direction: zero vector u")
    if v.x.is_zero() and v.y.is_zero():
        raise ValueError("degenerate direction: zero vector v")
    s = cross_sign(u.x, u.y, v.x, v.y)
    if s == 0:
        return Direction.PARALLEL
    return Direction.COUNTERCLOCKWISE_OF if s > 0 else Direction.CLOCKWISE_OF
