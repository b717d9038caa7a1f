"""Point sets with exact coordinates, 120-degree seed expansion, file I/O.

Coordinates are doubled: a stored component (a, b) denotes the real value
(a + b*sqrt(3))/2.  Plain integer input points (X, Y) are therefore stored
as ((2X, 0), (2Y, 0)).  Doubling keeps the 2*pi/3 rotation

    x' = (-x - sqrt(3)*y) / 2,   y' = (sqrt(3)*x - y) / 2

inside Z[sqrt(3)] for every point reachable from integer input.

The embedded canonical configuration is a 3-symmetric 33-point set given by
an 11-point integer seed rotated twice about the origin.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .exactnum import ExactScalar, SQRT3, ZERO, orient, cross_sign


@dataclass(frozen=True, slots=True)
class PlanePoint:
    x: ExactScalar
    y: ExactScalar

    @classmethod
    def from_ints(cls, x: int, y: int) -> PlanePoint:
        """Plain integer point (x, y), stored in doubled coordinates."""
        return cls(ExactScalar(2 * x, 0), ExactScalar(2 * y, 0))

    def __sub__(self, other: PlanePoint) -> "PlaneVector":
        return PlaneVector(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class PlaneVector:
    x: ExactScalar
    y: ExactScalar


@dataclass(frozen=True)
class PointSet:
    points: tuple[PlanePoint, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points in point set")

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class SeedSet:
    seeds: tuple[PlanePoint, ...]
    center: PlanePoint = PlanePoint(ZERO, ZERO)


def rotate120(p: PlanePoint, center: PlanePoint) -> PlanePoint:
    """Counterclockwise rotation by 2*pi/3 about center, exact in Z[sqrt(3)].

    Applied three times it is the identity; squared distances are preserved.
    Raises ValueError if the image leaves the coefficient ring (cannot happen
    for doubled-integer inputs and their rotation orbit).
    """
    dx = p.x - center.x
    dy = p.y - center.y
    nx = (-dx - SQRT3 * dy).half()
    ny = (SQRT3 * dx - dy).half()
    return PlanePoint(center.x + nx, center.y + ny)


def expand_seed(s: SeedSet) -> PointSet:
    """Orbit Q + rho(Q) + rho^2(Q), in seed order then rotation order."""
    for p in s.seeds:
        if p == s.center:
            raise ValueError("seed collision under rotation: seed equals center")
    if len(set(s.seeds)) != len(s.seeds):
        raise ValueError("duplicate seed points")
    first = [rotate120(p, s.center) for p in s.seeds]
    second = [rotate120(p, s.center) for p in first]
    points = tuple(s.seeds) + tuple(first) + tuple(second)
    if len(set(points)) != len(points):
        raise ValueError("seed collision under rotation")
    return PointSet(points)


# Canonical 11-point integer seed of the embedded 33-point configuration.
PAPER_SEED_INTS: tuple[tuple[int, int], ...] = (
    (-5002188850, 7930184740),
    (-4517239440, 7119489890),
    (-2001253300, 2858553100),
    (-1587210370, 2231322410),
    (-1587210400, 2231322453),
    (-1031839240, 1205866240),
    (-885192360, 1090267740),
    (-705028860, 1001032590),
    (-662219180, 538899580),
    (-659401160, 508368780),
    (-135672160, 456952260),
)


def paper_seed() -> SeedSet:
    return SeedSet(tuple(PlanePoint.from_ints(x, y) for x, y in PAPER_SEED_INTS))


@functools.lru_cache(maxsize=1)
def paper_config() -> PointSet:
    """The embedded 33-point 3-symmetric configuration (seed orbit about 0)."""
    return expand_seed(paper_seed())


@dataclass
class ValidationReport:
    collinear_triples: list[tuple[int, int, int]] = field(default_factory=list)
    parallel_pair_groups: list[list[tuple[int, int]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Hard general position: no three points collinear."""
        return not self.collinear_triples

    @property
    def strict(self) -> bool:
        """Paper-strength general position: additionally no parallel pairs."""
        return self.ok and not self.parallel_pair_groups


def validate_general_position(ps: PointSet, max_findings: int = 32) -> ValidationReport:
    """Exhaustive orientation test over all triples plus parallel-pair scan.

    Collinear triples are a hard failure for all downstream operations;
    parallel disjoint pairs only trigger the deterministic tie-break in the
    sweep construction and are reported as a soft warning.
    """
    report = ValidationReport()
    pts = ps.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    report.collinear_triples.append((i, j, k))
                    if len(report.collinear_triples) >= max_findings:
                        return report

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    vecs = {(i, j): pts[j] - pts[i] for i, j in pairs}

    def cmp(a, b):
        u, v = vecs[a], vecs[b]
        return -cross_sign(u.x, u.y, v.x, v.y)

    # Lines are undirected: normalize each vector into the right half-plane
    # so that equal direction mod pi implies cross product zero.
    for key, v in vecs.items():
        sx = v.x.sign()
        if sx < 0 or (sx == 0 and v.y.sign() < 0):
            vecs[key] = PlaneVector(-v.x, -v.y)
    ordered = sorted(pairs, key=functools.cmp_to_key(cmp))
    group = [ordered[0]] if ordered else []
    for prev, cur in zip(ordered, ordered[1:]):
        u, v = vecs[prev], vecs[cur]
        if cross_sign(u.x, u.y, v.x, v.y) == 0:
            group.append(cur)
        else:
            if len(group) > 1:
                report.parallel_pair_groups.append(group)
            group = [cur]
    if len(group) > 1:
        report.parallel_pair_groups.append(group)
    return report


def parse_points(text: str) -> PointSet:
    """Parse the point-file format: count line, then "ax bx ay by" per point."""
    pts, _ = _parse_body(text, allow_center=False)
    return PointSet(tuple(pts))


def parse_seed(text: str) -> SeedSet:
    """Parse a seed file: same as a point file, optional leading center line."""
    pts, center = _parse_body(text, allow_center=True)
    return SeedSet(tuple(pts), center)


def _parse_body(text: str, allow_center: bool):
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty point file")
    center = PlanePoint(ZERO, ZERO)
    idx = 0
    no, head = lines[idx]
    if head.startswith("center"):
        if not allow_center:
            raise ValueError(f"line {no}: center header not allowed in point file")
        fields = head.split()[1:]
        if len(fields) != 4:
            raise ValueError(f"line {no}: expected 4 integers after 'center'")
        cx, cxb, cy, cyb = (_int_field(no, f) for f in fields)
        center = PlanePoint(ExactScalar(cx, cxb), ExactScalar(cy, cyb))
        idx += 1
        no, head = lines[idx]
    try:
        n = int(head)
    except ValueError:
        raise ValueError(f"line {no}: expected point count, got {head!r}") from None
    body = lines[idx + 1 :]
    if len(body) != n:
        raise ValueError(f"expected {n} point lines, found {len(body)}")
    pts = []
    for no, line in body:
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(f"line {no}: expected 4 integers, got {len(fields)}")
        ax, bx, ay, by = (_int_field(no, f) for f in fields)
        pts.append(PlanePoint(ExactScalar(ax, bx), ExactScalar(ay, by)))
    return pts, center


def _int_field(no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"line {no}: non-integer token {token!r}") from None


def serialize_points(ps: PointSet) -> str:
    lines = [str(ps.n)]
    for p in ps:
        lines.append(f"{p.x.p} {p.x.q} {p.y.p} {p.y.q}")
    return "\n".join(lines) + "\n"


def serialize_seed(s: SeedSet) -> str:
    c = s.center
    lines = [f"center {c.x.p} {c.x.q} {c.y.p} {c.y.q}", str(len(s.seeds))]
    for p in s.seeds:
        lines.append(f"{p.x.p} {p.x.q} {p.y.p} {p.y.q}")
    return "\n".join(lines) + "\n"
