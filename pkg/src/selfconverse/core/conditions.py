"""
Feasibility conditions on score sequences.

Condition I (Landau/Moon): every prefix sum of the sorted sequence is at
least C(k, 2), with equality at k = n. Because the sequence is sorted the
prefixes are the binding subsets, so checking them decides the all-subsets
form. Condition II (Eplett): d_i + d_{n+1-i} = n - 1 for every i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from selfconverse.core.rational import binomial2
from selfconverse.core.schema import ConditionReport, GeneralisedTournament, ScoreSequence


def prefix_slacks(scores: Sequence[Fraction]) -> List[Fraction]:
    """s_k = d_1 + ... + d_k - C(k, 2) for k = 1..n."""
    slacks: List[Fraction] = []
    total = Fraction(0)
    for k, d in enumerate(scores, start=1):
        total += d
        slacks.append(total - binomial2(k))
    return slacks


def _first_violation(slacks: Sequence[Fraction]) -> Optional[int]:
    for k, s in enumerate(slacks, start=1):
        if s < 0:
            return k
    if slacks and slacks[-1] != 0:
        return len(slacks)
    return None


def check_condition_II(d: ScoreSequence) -> bool:
    n = d.n
    return all(d.scores[i] + d.scores[n - 1 - i] == n - 1 for i in range(n))


def check_condition_I(d: ScoreSequence) -> ConditionReport:
    """
    Check Condition I by prefixes and report the exact slacks.

    ``first_violation`` is the first k with a negative slack, or n when only
    the final equality fails.
    """
    slacks = prefix_slacks(d.scores)
    violation = _first_violation(slacks)
    return ConditionReport(
        prefix_slacks=tuple(slacks),
        condition_I=violation is None,
        condition_II=check_condition_II(d),
        first_violation=violation,
    )


def check_condition_I_half(d: ScoreSequence) -> bool:
    """
    Condition I via prefixes k <= floor(n/2) only.

    Valid as a decision procedure when Condition II holds: the upper half then
    mirrors the lower half and the total is forced to C(n, 2).
    """
    slacks = prefix_slacks(d.scores[: d.n // 2])
    return all(s >= 0 for s in slacks)


def scores_of(G: GeneralisedTournament) -> Tuple[Tuple[Fraction, ...], ScoreSequence]:
    """Labeled row sums of alpha and their non-decreasing rearrangement."""
    labeled = G.labeled_scores()
    return labeled, ScoreSequence(scores=sorted(labeled))


def condition_I_holds_for(values: Sequence[Fraction]) -> bool:
    """Condition I on an arbitrary (possibly unsorted) list of scores."""
    return _first_violation(prefix_slacks(sorted(values))) is None
