"""
Rational approximation of sequences satisfying Conditions I and II.

The lower half is lifted slightly: working downward from the last index
n' whose score is below the midpoint (n-1)/2, each d_k is replaced by a
rational strictly inside (d_k, min(next pick, d_k + 1/m)); the upper half
is the mirror n - 1 - d_{n+1-i}. Prefix sums of the lower half only grow,
so Condition I survives, and the mirror keeps Condition II.

Realizing the approximated sequence exactly stands in for the limit
argument on real sequences: scores within 1/m of the target, exactly
self-converse.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor
from typing import List, Optional, Tuple

from selfconverse.core.conditions import check_condition_I, check_condition_I_half
from selfconverse.core.schema import (
    ApproximationTrace,
    GeneralisedTournament,
    ScoreSequence,
    VertexBijection,
)
from selfconverse.core.utils.errors import ConditionViolation, EmptyInterval, InternalError
from selfconverse.realize.pipeline import RealizationMethod, realize

logger = logging.getLogger(__name__)


def choose_rational_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """
    The rational with the smallest denominator strictly inside (lo, hi).

    Walks the Stern-Brocot tree, taking each run of same-direction steps at
    once (a continued-fraction descent). The simplest rational of an open
    interval is unique, so ties on the denominator cannot occur.

    Raises:
        EmptyInterval: lo >= hi.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise EmptyInterval(f"Interval ({lo}, {hi}) is empty")

    base = floor(lo)
    if base + 1 < hi:
        return Fraction(base + 1)
    # Now base <= lo < hi <= base + 1: recurse on the reciprocals of the
    # fractional parts, where the denominator of the answer becomes a numerator.
    lo_frac, hi_frac = lo - base, hi - base
    upper: Optional[Fraction] = None if lo_frac == 0 else 1 / lo_frac
    inner = _simplest_above(1 / hi_frac, upper)
    return base + 1 / inner


def _simplest_above(lo: Fraction, hi: Optional[Fraction]) -> Fraction:
    """Simplest rational in (lo, hi) for lo >= 1, with hi = None meaning infinity."""
    if hi is None:
        return Fraction(floor(lo) + 1)
    return choose_rational_in_interval(lo, hi)


def _n_prime(d: ScoreSequence) -> Optional[int]:
    mid = Fraction(d.n - 1, 2)
    candidates = [k for k in range(1, d.n // 2 + 1) if d.scores[k - 1] < mid]
    return max(candidates) if candidates else None


def approximate(d: ScoreSequence, m: int) -> Tuple[ScoreSequence, ApproximationTrace]:
    """
    A rational sequence within 1/m of d that satisfies Conditions I and II exactly.

    If every score already equals (n-1)/2 the input is returned with an empty
    trace.

    Raises:
        ConditionViolation: d fails Condition I or II.
    """
    if m < 1:
        raise ValueError(f"Approximation parameter must be positive, got {m}")
    report = check_condition_I(d)
    if not report.ok:
        raise ConditionViolation(f"{d} must satisfy Conditions I and II", report=report)

    n = d.n
    mid = Fraction(n - 1, 2)
    n_prime = _n_prime(d)
    if n_prime is None:
        return d, ApproximationTrace(n_prime=None, m=m)

    eps = Fraction(1, m)
    out: List[Fraction] = list(d.scores)
    intervals: List[Tuple[Fraction, Fraction]] = []
    picks: List[Fraction] = []
    ceiling = mid
    for k in range(n_prime, 0, -1):
        lo = d.scores[k - 1]
        hi = min(ceiling, lo + eps)
        pick = choose_rational_in_interval(lo, hi)
        intervals.append((lo, hi))
        picks.append(pick)
        out[k - 1] = pick
        ceiling = pick
    for k in range(n_prime + 1, (n + 1) // 2 + 1):
        out[k - 1] = mid
    for i in range((n + 1) // 2 + 1, n + 1):
        out[i - 1] = (n - 1) - out[n - i]

    result = ScoreSequence(scores=out)
    if not (check_condition_I_half(result) and check_condition_I(result).ok):
        raise InternalError(f"Approximation {result} of {d} lost Condition I or II")
    trace = ApproximationTrace(
        n_prime=n_prime,
        m=m,
        intervals=tuple(reversed(intervals)),
        picks=tuple(reversed(picks)),
    )
    logger.debug(f"Approximated {d} by {result} (m={m}, n'={n_prime})")
    return result, trace


def realize_real(
    d: ScoreSequence, m: int, cap: Optional[int] = None
) -> Tuple[GeneralisedTournament, VertexBijection, ScoreSequence]:
    """
    Approximate d within 1/m and realize the approximation exactly.

    Realization goes through ``realize`` in ``auto`` mode, so an approximation
    whose blow-up exceeds the cap is symmetrized instead. Returns the
    self-converse realization, its witness and the approximated sequence that
    it realizes.
    """
    approx, _ = approximate(d, m)
    result = realize(approx, RealizationMethod.AUTO, cap=cap)
    if result.witness is None:
        raise InternalError(f"Realization of {approx} returned no witness")
    return result.tournament, result.witness, approx
