"""
Landau realization: a 0/1 tournament with prescribed integer outdegrees.

Greedy peeling: the vertex with the largest residual score (lowest label on
ties) is removed; it loses to the k - 1 - r vertices of largest residual
score and beats the rest. Losing to the largest scores keeps the residual
sequence as close to regular as possible, which preserves Condition I.
The residual is re-checked exactly after every step.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from selfconverse.core.conditions import check_condition_I, condition_I_holds_for
from selfconverse.core.schema import ScoreSequence, Tournament
from selfconverse.core.utils.errors import ConditionViolation, InternalError, NonIntegral

logger = logging.getLogger(__name__)


def realize_labeled_scores(scores: Sequence[int]) -> Tournament:
    """
    Realize labeled integer outdegrees in any vertex order.

    Vertex i of the result has outdegree ``scores[i]`` exactly.
    """
    n = len(scores)
    if not condition_I_holds_for([Fraction(c) for c in scores]):
        raise ConditionViolation(f"Scores {list(scores)} fail Condition I; no tournament exists")

    beats = [[0] * n for _ in range(n)]
    residual = {v: int(c) for v, c in enumerate(scores)}

    while residual:
        k = len(residual)
        v = min(residual, key=lambda u: (-residual[u], u))
        others = sorted((u for u in residual if u != v), key=lambda u: (-residual[u], u))
        losses = k - 1 - residual[v]
        if not 0 <= losses <= k - 1:
            raise InternalError(
                f"Residual score {residual[v]} of vertex {v + 1} out of range", residual
            )

        for u in others[:losses]:
            beats[u][v] = 1
            residual[u] -= 1
        for u in others[losses:]:
            beats[v][u] = 1
        del residual[v]

        if residual and not condition_I_holds_for([Fraction(c) for c in residual.values()]):
            raise InternalError("Residual scores lost Condition I during Landau peeling", residual)

    T = Tournament.from_adjacency(beats)
    got = [sum(row) for row in beats]
    if got != list(scores):
        raise InternalError(f"Landau realization has outdegrees {got}, expected {list(scores)}")
    return T


def landau_realize(d: ScoreSequence) -> Tournament:
    """
    A tournament whose vertex i has score d_i.

    Raises:
        NonIntegral: some d_i is not an integer.
        ConditionViolation: Condition I fails.
    """
    if not d.is_integral():
        raise NonIntegral(f"Landau realization needs integer scores, got {d}")
    report = check_condition_I(d)
    if not report.condition_I:
        raise ConditionViolation(
            f"{d} fails Condition I at k={report.first_violation}",
            report=report,
            suggestion="Every prefix of the sorted scores must sum to at least C(k, 2).",
        )
    scores: List[int] = [int(x) for x in d.scores]
    logger.debug(f"Landau realization of {d}")
    return realize_labeled_scores(scores)
