"""
Converse tournaments and self-converse witnesses.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional

from selfconverse.core.config import get_settings
from selfconverse.core.schema import GeneralisedTournament, Tournament, VertexBijection
from selfconverse.core.utils.errors import ResourceLimit

logger = logging.getLogger(__name__)


def converse(G: GeneralisedTournament) -> GeneralisedTournament:
    """Reverse every arc: alpha'(i, j) = 1 - alpha(i, j) off the diagonal."""
    n = G.n
    weights = [
        [Fraction(0) if i == j else 1 - G.weights[i][j] for j in range(n)] for i in range(n)
    ]
    if isinstance(G, Tournament):
        return Tournament(weights=weights)
    return GeneralisedTournament(weights=weights)


def is_isomorphism(
    G1: GeneralisedTournament, G2: GeneralisedTournament, rho: VertexBijection
) -> bool:
    """True iff alpha_1(i, j) = alpha_2(rho(i), rho(j)) for every ordered pair."""
    if G1.n != G2.n or rho.n != G1.n:
        return False
    r = rho.indices()
    w1, w2 = G1.weights, G2.weights
    return all(w1[i][j] == w2[r[i]][r[j]] for i in range(G1.n) for j in range(G1.n))


def reversal_bijection(n: int) -> VertexBijection:
    """rho(i) = n + 1 - i, the witness used on score-sorted labels."""
    return VertexBijection.reversal(n)


def is_self_converse_witness(G: GeneralisedTournament, rho: VertexBijection) -> bool:
    """
    rho is an isomorphism from G onto its converse.

    Same answer as ``is_isomorphism(G, converse(G), rho)`` without building
    the converse.
    """
    if rho.n != G.n:
        return False
    r = rho.indices()
    w = G.weights
    return all(
        w[i][j] == 1 - w[r[i]][r[j]] for i in range(G.n) for j in range(G.n) if i != j
    )


def find_self_converse_witness(
    G: GeneralisedTournament,
    cap: Optional[int] = None,
    prune_scores: bool = True,
) -> Optional[VertexBijection]:
    """
    Search for a bijection mapping G onto its converse.

    Vertices are assigned in label order. Candidates for rho(v) are tried in
    ascending label order with rho(v) = v last; with ``prune_scores`` a vertex
    of labeled score d may only map to a vertex of score n - 1 - d.
    Returns the first witness found, or None.
    """
    cap = get_settings().witness_search_cap if cap is None else cap
    n = G.n
    if n > cap:
        raise ResourceLimit(f"Witness search on {n} vertices exceeds the cap of {cap}", n, cap)

    w = G.weights
    scores = G.labeled_scores()
    candidates: List[List[int]] = []
    for v in range(n):
        pool = [u for u in range(n) if u != v] + [v]
        if prune_scores:
            pool = [u for u in pool if scores[u] == n - 1 - scores[v]]
        if not pool:
            logger.debug(f"Vertex {v + 1} has no score-compatible image; no witness")
            return None
        candidates.append(pool)

    image: Dict[int, int] = {}
    used = [False] * n

    def consistent(v: int, t: int) -> bool:
        for u, s in image.items():
            if w[v][u] != 1 - w[t][s] or w[u][v] != 1 - w[s][t]:
                return False
        return True

    def extend(v: int) -> bool:
        if v == n:
            return True
        for t in candidates[v]:
            if used[t] or not consistent(v, t):
                continue
            image[v] = t
            used[t] = True
            if extend(v + 1):
                return True
            del image[v]
            used[t] = False
        return False

    if not extend(0):
        return None
    return VertexBijection.from_indices([image[v] for v in range(n)])
