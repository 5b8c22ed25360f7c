"""
Blow-up and shrink-down between rational score sequences and 0/1 tournaments.

Each vertex i of the target becomes a cluster of m vertices v_{i,1..m} with
integer outdegrees c_{i,l}. Odd m uses c_{i,l} = m*d_i + (m-1)/2 for every l.
Even m splits the second term as m/2 - 1 for l <= m/2 and m/2 for l > m/2;
the often-quoted split m/2, m/2 + 1 overshoots the forced total C(mn, 2) by
mn, so it cannot be the outdegrees of any tournament.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from selfconverse.core.conditions import check_condition_I, condition_I_holds_for
from selfconverse.core.rational import binomial2, lcm_of
from selfconverse.core.schema import (
    BlowUpPlan,
    GeneralisedTournament,
    ScoreSequence,
    Tournament,
    VertexBijection,
)
from selfconverse.core.utils.errors import (
    ConditionViolation,
    DimensionMismatch,
    InternalError,
    NonIntegral,
)

logger = logging.getLogger(__name__)


def lcm_denominator(d: ScoreSequence) -> int:
    """Least m >= 1 with m * d_i integral for all i."""
    return lcm_of(x.denominator for x in d.scores)


def _second_terms(m: int) -> List[int]:
    if m % 2:
        return [(m - 1) // 2] * m
    half = m // 2
    return [half - 1] * half + [half] * half


def blowup_scores(d: ScoreSequence, m: int) -> BlowUpPlan:
    """
    Integer targets c_{i,l} for a blow-up of d by factor m.

    The plan is verified before it is returned: the total equals C(mn, 2),
    the sorted targets satisfy Condition I, and when d satisfies Condition II
    every c_{i,l} + c_{n+1-i, m+1-l} equals mn - 1.

    Raises:
        NonIntegral: some m * d_i is not an integer.
        ConditionViolation: d fails Condition I.
        InternalError: a plan identity fails.
    """
    if m < 1:
        raise ValueError(f"Blow-up factor must be positive, got {m}")
    scaled = [m * x for x in d.scores]
    for i, x in enumerate(scaled):
        if x.denominator != 1:
            raise NonIntegral(
                f"m * d_{i + 1} = {m} * {d.scores[i]} is not an integer",
                suggestion=f"Use a multiple of {lcm_denominator(d)} as the blow-up factor.",
            )
    report = check_condition_I(d)
    if not report.condition_I:
        raise ConditionViolation(f"{d} fails Condition I", report=report)

    extra = _second_terms(m)
    targets = tuple(tuple(int(x) + e for e in extra) for x in scaled)
    plan = BlowUpPlan(n=d.n, m=m, targets=targets)
    _verify_plan(plan, pairing=report.condition_II)
    logger.debug(f"Blow-up of {d} by m={m}: {plan.flat_targets()}")
    return plan


def _verify_plan(plan: BlowUpPlan, pairing: bool) -> None:
    n, m = plan.n, plan.m
    flat = plan.flat_targets()
    if sum(flat) != binomial2(n * m):
        raise InternalError(f"Blow-up total {sum(flat)} != C({n * m}, 2)", plan)
    if not condition_I_holds_for([Fraction(c) for c in flat]):
        raise InternalError("Blow-up targets fail Condition I", plan)
    if pairing:
        for i in range(n):
            for ell in range(m):
                if plan.targets[i][ell] + plan.targets[n - 1 - i][m - 1 - ell] != n * m - 1:
                    raise InternalError(
                        f"Pairing identity fails at cluster {i + 1}, copy {ell + 1}", plan
                    )


def blowup_involution(plan: BlowUpPlan) -> VertexBijection:
    """
    v_{i,l} -> v_{n+1-i, m+1-l}.

    On the flat labels (i-1)*m + l this is the reversal k -> mn + 1 - k.
    """
    return VertexBijection.reversal(plan.size)


def shrink_down(H: GeneralisedTournament, plan: BlowUpPlan) -> GeneralisedTournament:
    """
    Average the m x m block of arcs between each pair of clusters.

    alpha(w_i, w_j) = (1/m^2) * sum over l, k of alpha_H(v_{i,l}, v_{j,k}).
    With m = 1 the input is returned unchanged.

    Raises:
        DimensionMismatch: H does not have n * m vertices.
    """
    n, m = plan.n, plan.m
    if H.n != n * m:
        raise DimensionMismatch(f"H has {H.n} vertices; plan expects {n} clusters of {m}")
    if m == 1:
        return H

    w = H.weights
    scale = Fraction(1, m * m)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(0))
                continue
            block = sum(
                (w[i * m + ell][j * m + k] for ell in range(m) for k in range(m)), Fraction(0)
            )
            row.append(block * scale)
        rows.append(row)
    return GeneralisedTournament(weights=rows)


def cluster_targets_met(H: Tournament, plan: BlowUpPlan) -> bool:
    return tuple(int(x) for x in H.labeled_scores()) == plan.flat_targets()

