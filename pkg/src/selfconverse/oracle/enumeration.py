"""
Exhaustive enumeration of small tournaments and integer score sequences.

Tournament index convention: list the edges {u, v}, u < v, in lexicographic
order; bit e of the index is 1 when the lower label of edge e beats the
higher one. Index 0 is the transitive tournament in which every higher
label beats every lower one.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Set, Tuple

from selfconverse.core.conditions import check_condition_I
from selfconverse.core.config import get_settings
from selfconverse.core.rational import binomial2
from selfconverse.core.schema import ScoreSequence, Tournament
from selfconverse.core.utils.errors import ResourceLimit

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def lex_edges(n: int) -> List[Edge]:
    """0-based edges (u, v) with u < v in lexicographic order."""
    return list(itertools.combinations(range(n), 2))


def tournament_count(n: int) -> int:
    return 1 << binomial2(n)


def check_oracle_size(n: int, max_n: Optional[int]) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    max_n = get_settings().oracle_max_n if max_n is None else max_n
    if n > max_n:
        raise ResourceLimit(
            f"Exhaustive enumeration on n={n} needs {tournament_count(n)} tournaments; "
            f"the limit is n={max_n}",
            n,
            max_n,
        )


def tournament_from_index(n: int, index: int, edges: Optional[List[Edge]] = None) -> Tournament:
    edges = lex_edges(n) if edges is None else edges
    beats = [[0] * n for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        if index >> e & 1:
            beats[u][v] = 1
        else:
            beats[v][u] = 1
    return Tournament.from_adjacency(beats)


def tournaments_in_range(n: int, start: int, stop: int) -> Iterator[Tournament]:
    """Tournaments with orientation index in [start, stop)."""
    edges = lex_edges(n)
    for index in range(start, stop):
        yield tournament_from_index(n, index, edges)


def enumerate_tournaments(n: int, max_n: Optional[int] = None) -> Iterator[Tournament]:
    """
    Every labeled tournament on n vertices exactly once, in index order.

    Raises:
        ResourceLimit: n is above the configured oracle limit (6 by default).
    """
    check_oracle_size(n, max_n)
    return tournaments_in_range(n, 0, tournament_count(n))


def _non_decreasing(n: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing sequences in [0, n-1] with total C(n, 2) and no negative prefix slack."""
    total = binomial2(n)
    prefix: List[int] = []

    def extend(k: int, running: int, low: int) -> Iterator[Tuple[int, ...]]:
        if k == n:
            if running == total:
                yield tuple(prefix)
            return
        remaining = n - k
        for value in range(low, n):
            s = running + value
            if s < binomial2(k + 1):
                continue
            # The rest is at least value each and at most n - 1 each.
            if s + (remaining - 1) * value > total:
                break
            if s + (remaining - 1) * (n - 1) < total:
                continue
            prefix.append(value)
            yield from extend(k + 1, s, value)
            prefix.pop()

    yield from extend(0, 0, 0)


def integer_sequences_satisfying_I(n: int) -> Set[ScoreSequence]:
    """All integer score sequences of length n (Landau sequences)."""
    found = {ScoreSequence(scores=seq) for seq in _non_decreasing(n)}
    logger.debug(f"{len(found)} integer sequences satisfy Condition I at n={n}")
    return found


def integer_sequences_satisfying_I_II(n: int) -> Set[ScoreSequence]:
    return {d for d in integer_sequences_satisfying_I(n) if check_condition_I(d).condition_II}


def condition_I_by_subsets(d: ScoreSequence, max_n: int = 20) -> bool:
    """
    Condition I in its definitional form: every subset J has sum at least C(|J|, 2).

    Checks all 2^n subsets, so it is only meant as ground truth for the
    prefix check on small n.
    """
    n = d.n
    if n > max_n:
        raise ResourceLimit(f"Subset check on n={n} would visit 2^{n} subsets", n, max_n)
    if sum(d.scores, Fraction(0)) != binomial2(n):
        return False
    for size in range(1, n):
        floor_sum = binomial2(size)
        for subset in itertools.combinations(d.scores, size):
            if sum(subset, Fraction(0)) < floor_sum:
                return False
    return True
