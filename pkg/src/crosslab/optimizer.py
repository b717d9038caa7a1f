"""Simulated annealing over 3-symmetric seeds, with exact acceptance tests.

The search space is the 11-point seed of a 3-symmetric 33-point
configuration; a move perturbs one coordinate of one random seed point by a
uniform nonzero integer within +-move_radius (plain units, so the doubled
representation shifts by twice that) and the objective is the exact crossing
count of the expanded set.  Degenerate expansions (collinear triples,
duplicate points, seed collisions under rotation) score the +infinity
sentinel and are always rejected.

The Metropolis test is deterministic and float-free: exp(-z) for rational
z >= 0 is compared against the drawn uniform via a truncated alternating
series with interval bracketing, so acceptance depends only on the RNG
stream, never on platform rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .crossings import count_crossings_brute, DegenerateInputError
from .exactnum import ExactScalar
from .geometry import PlanePoint, SeedSet, expand_seed

INFEASIBLE = None  # objective sentinel for a degenerate expansion


@dataclass(frozen=True)
class SearchConfig:
    iterations: int = 2000
    rng_seed: int = 1
    move_radius: int = 1
    initial_temperature: Fraction = Fraction(40)
    cooling_rate: Fraction = Fraction(995, 1000)
    report_every: int = 100

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if self.move_radius < 1:
            raise ValueError("move_radius must be at least 1")
        if not 0 < Fraction(self.cooling_rate) < 1:
            raise ValueError("cooling_rate must lie in (0, 1)")
        if Fraction(self.initial_temperature) <= 0:
            raise ValueError("initial_temperature must be positive")


@dataclass
class SearchTrace:
    """Report-step records plus run totals of one annealing run."""

    initial: int
    best: int
    evaluations: int = 0
    accepted: int = 0
    rejected_degenerate: int = 0
    history: list = field(default_factory=list)  # (iteration, current, best)


def objective(seed: SeedSet) -> int | None:
    """Exact crossing count of the expanded seed, or None if degenerate."""
    try:
        ps = expand_seed(seed)
        return count_crossings_brute(ps).value
    except (ValueError, DegenerateInputError):
        return INFEASIBLE


def exp_neg_at_least(z: Fraction, u: Fraction, terms: int = 64) -> bool:
    """Exact decision of exp(-z) >= u for rationals z >= 0, 0 <= u <= 1.

    Brackets exp(-z) between consecutive partial sums of the alternating
    series; for z > 40 the value is below any acceptance draw of interest
    and the test is declared False outright.
    """
    if z < 0:
        raise ValueError("z must be non-negative")
    if u <= 0:
        return True
    if z > 40:
        return False
    term = Fraction(1)
    total = Fraction(1)
    lower, upper = None, None
    for i in range(1, terms + 1):
        term = -term * z / i
        total += term
        if term >= 0:
            upper = total
        else:
            lower = total
        if lower is not None and upper is not None:
            if lower >= u:
                return True
            if upper < u:
                return False
    # The alternating tail at 64 terms is below any draw's resolution for
    # z <= 40; settle on the midpoint of the final bracket.
    lo = lower if lower is not None else total
    hi = upper if upper is not None else total
    return (lo + hi) / 2 >= u


def _perturb(seed: SeedSet, rng: random.Random, radius: int) -> SeedSet:
    """Move one coordinate of one seed point by a nonzero integer in +-radius."""
    i = rng.randrange(len(seed.seeds))
    axis = rng.randrange(2)
    step = 0
    while step == 0:
        step = rng.randint(-radius, radius)
    step *= 2  # plain units in the doubled representation
    pts = list(seed.seeds)
    p = pts[i]
    if axis == 0:
        pts[i] = PlanePoint(ExactScalar(p.x.p + step, p.x.q), p.y)
    else:
        pts[i] = PlanePoint(p.x, ExactScalar(p.y.p + step, p.y.q))
    return SeedSet(tuple(pts), seed.center)


def anneal(start: SeedSet, cfg: SearchConfig) -> tuple[SeedSet, SearchTrace]:
    """Deterministic Metropolis annealing; returns (best seed, trace)."""
    rng = random.Random(cfg.rng_seed)
    current_seed = start
    current = objective(start)
    if current is INFEASIBLE:
        raise ValueError("initial seed expands to a degenerate configuration")
    best_seed = start
    trace = SearchTrace(initial=current, best=current, evaluations=1)
    temperature = Fraction(cfg.initial_temperature)
    for it in range(1, cfg.iterations + 1):
        candidate_seed = _perturb(current_seed, rng, cfg.move_radius)
        candidate = objective(candidate_seed)
        trace.evaluations += 1
        # Draw the acceptance uniform unconditionally so the RNG stream, and
        # hence the whole run, is independent of objective outcomes.
        u = Fraction(rng.random()).limit_denominator(10**12)
        if candidate is INFEASIBLE:
            trace.rejected_degenerate += 1
        else:
            if candidate <= current:
                accept = True
            else:
                z = Fraction(candidate - current) / temperature
                accept = exp_neg_at_least(z, u)
            if accept:
                current_seed, current = candidate_seed, candidate
                trace.accepted += 1
                if current < trace.best:
                    trace.best = current
                    best_seed = current_seed
        temperature *= Fraction(cfg.cooling_rate)
        if cfg.report_every and it % cfg.report_every == 0:
            trace.history.append((it, current, trace.best))
    return best_seed, trace
