"""
Brute-force ground truth for the self-converse characterization.

The orientation-index space is cut into contiguous chunks that run through
the ParallelExecutor; each chunk returns its tournament count and the score
sequences it proved self-converse, and the chunk results are merged by
union, so the outcome does not depend on the execution mode.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import FrozenSet, List, Optional, Set, Tuple

from selfconverse.core.conditions import check_condition_I
from selfconverse.core.config import get_settings
from selfconverse.core.converse import find_self_converse_witness
from selfconverse.core.execution.executor import ParallelExecutor
from selfconverse.core.schema import OracleReport, ScoreSequence
from selfconverse.oracle.enumeration import (
    check_oracle_size,
    integer_sequences_satisfying_I_II,
    tournament_count,
    tournaments_in_range,
)

logger = logging.getLogger(__name__)

Chunk = Tuple[int, int, int, bool]
ChunkResult = Tuple[int, FrozenSet[Tuple[Fraction, ...]]]


def _scan_chunk(task: Chunk) -> ChunkResult:
    """Count the tournaments of one index range and collect their self-converse score sequences."""
    n, start, stop, prune_scores = task
    found: Set[Tuple[Fraction, ...]] = set()
    count = 0
    for T in tournaments_in_range(n, start, stop):
        count += 1
        key = tuple(sorted(T.labeled_scores()))
        if key in found:
            continue
        if find_self_converse_witness(T, cap=n, prune_scores=prune_scores) is not None:
            found.add(key)
    return count, frozenset(found)


def _chunks(n: int, prune_scores: bool, chunk_size: int) -> List[Chunk]:
    total = tournament_count(n)
    return [
        (n, start, min(start + chunk_size, total), prune_scores)
        for start in range(0, total, chunk_size)
    ]


def _scan(n: int, prune_scores: bool) -> Tuple[int, Set[ScoreSequence]]:
    settings = get_settings()
    tasks = _chunks(n, prune_scores, settings.oracle_chunk_size)
    logger.debug(
        f"Scanning {tournament_count(n)} tournaments on n={n} in {len(tasks)} chunks "
        f"({settings.executor_mode})"
    )
    with ParallelExecutor(max_workers=settings.max_workers, mode=settings.executor_mode) as pool:
        results = pool.map(_scan_chunk, tasks)

    count = 0
    keys: Set[Tuple[Fraction, ...]] = set()
    for chunk_count, chunk_keys in results:
        count += chunk_count
        keys |= chunk_keys
    return count, {ScoreSequence(scores=k) for k in keys}


def bruteforce_self_converse_sequences(
    n: int, prune_scores: bool = True
) -> Set[ScoreSequence]:
    """
    Sorted score sequences of all tournaments on n vertices that admit a witness.

    Raises:
        ResourceLimit: n is above the oracle limit.
    """
    check_oracle_size(n, None)
    _, found = _scan(n, prune_scores)
    return found


def _sorted_sequences(seqs: Set[ScoreSequence]) -> Tuple[ScoreSequence, ...]:
    return tuple(sorted(seqs, key=lambda d: d.scores))


def verify_eplett(n: int, prune_scores: bool = True, max_n: Optional[int] = None) -> OracleReport:
    """
    Compare brute force with Conditions I and II on every tournament of order n.

    ``equal`` is the set equality; ``necessity`` records that every
    brute-forced sequence satisfies both conditions, and ``tournament_count``
    is the number of tournaments scanned (2^C(n, 2) when the enumeration is
    complete).
    """
    check_oracle_size(n, max_n)
    count, brute = _scan(n, prune_scores)
    conditions = integer_sequences_satisfying_I_II(n)

    necessity = all(check_condition_I(d).ok for d in brute)
    report = OracleReport(
        n=n,
        equal=brute == conditions,
        only_in_conditions=_sorted_sequences(conditions - brute),
        only_in_bruteforce=_sorted_sequences(brute - conditions),
        tournament_count=count,
        necessity=necessity,
    )
    if report.equal:
        logger.info(f"n={n}: {len(brute)} self-converse score sequences, sets agree")
    else:
        logger.warning(
            f"n={n}: sets differ ({len(report.only_in_conditions)} only by conditions, "
            f"{len(report.only_in_bruteforce)} only by brute force)"
        )
    return report
