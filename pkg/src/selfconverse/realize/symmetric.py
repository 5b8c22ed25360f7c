"""
Self-converse realization of labeled integer outdegrees.

Given outdegrees c and an involution rho with c(v) + c(rho(v)) = N - 1,
build a 0/1 tournament T with outdegrees c such that
alpha_T(u, v) = 1 - alpha_T(rho(u), rho(v)) for all u != v.

Arcs come in coupled orbits {(u, v), (rho(v), rho(u))}: orienting one arc
fixes the other. Two strategies share that contract:

``peel``
    Remove the rho-pair {a, rho(a)} whose lower member has the smallest
    residual score, orient the orbits incident to it, and recurse on the
    residual. The orientation is chosen so that the residual lower halves
    are as large as possible, which is exactly what Condition I asks of a
    sequence satisfying Condition II; the residual is re-checked exactly,
    so every step either stays feasible or reports a bug. Polynomial.
``backtrack``
    Depth-first search over the orbits in label order with residual-degree
    bounds. Exponential in the worst case; the first solution in
    lexicographic order is returned.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from selfconverse.core.conditions import condition_I_holds_for
from selfconverse.core.config import get_settings
from selfconverse.core.converse import is_self_converse_witness
from selfconverse.core.schema import Tournament, VertexBijection
from selfconverse.core.utils.errors import (
    ConditionViolation,
    InternalError,
    ResourceLimit,
    SearchExhausted,
)

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class EdgeOrbit:
    """
    A coupled orbit of arcs under u -> v  =>  rho(v) -> rho(u).

    ``forward`` orients the representative edge from its lower to its higher
    label; ``backward`` is the opposite choice. A self-paired edge {u, rho(u)}
    has a single arc per option.
    """

    forward: Tuple[Arc, ...]

    @property
    def backward(self) -> Tuple[Arc, ...]:
        return tuple((v, u) for u, v in self.forward)

    @property
    def vertices(self) -> Set[int]:
        return {x for arc in self.forward for x in arc}


def edge_orbits(rho: VertexBijection) -> List[EdgeOrbit]:
    """Orbits of unordered edges, ordered by their lexicographically first edge (0-based)."""
    r = rho.indices()
    n = rho.n
    seen: Set[Tuple[int, int]] = set()
    orbits: List[EdgeOrbit] = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in seen:
                continue
            partner = (r[v], r[u])
            seen.add((u, v))
            seen.add((min(partner), max(partner)))
            if set(partner) == {u, v}:
                orbits.append(EdgeOrbit(forward=((u, v),)))
            else:
                orbits.append(EdgeOrbit(forward=((u, v), partner)))
    return orbits


def _check_preconditions(c: Sequence[int], rho: VertexBijection, cap: int) -> None:
    N = len(c)
    if rho.n != N:
        raise ConditionViolation(f"Witness has {rho.n} labels but there are {N} scores")
    if N > cap:
        raise ResourceLimit(
            f"Self-converse realization on {N} vertices exceeds the cap of {cap}", N, cap
        )
    if not rho.is_witness_shaped():
        raise ConditionViolation(
            f"Witness {list(rho.image)} must be an involution with at most one fixed point"
        )
    r = rho.indices()
    for v in range(N):
        if c[v] + c[r[v]] != N - 1:
            raise ConditionViolation(
                f"c({v + 1}) + c({r[v] + 1}) = {c[v] + c[r[v]]}, expected {N - 1}",
                suggestion="Paired vertices must have complementary scores (Condition II).",
            )
    if not condition_I_holds_for([Fraction(x) for x in c]):
        raise ConditionViolation(f"Scores {list(c)} fail Condition I")


def symmetric_realize(
    c: Sequence[int],
    rho: VertexBijection,
    cap: Optional[int] = None,
    strategy: Optional[str] = None,
) -> Tournament:
    """
    A tournament with labeled outdegrees ``c`` for which ``rho`` is a self-converse witness.

    Raises:
        ConditionViolation: a precondition fails.
        ResourceLimit: more than ``cap`` vertices.
        SearchExhausted: no solution found although the preconditions hold (a bug).
    """
    settings = get_settings()
    cap = settings.symmetric_search_cap if cap is None else cap
    strategy = strategy or settings.symmetric_strategy
    c = [int(x) for x in c]
    _check_preconditions(c, rho, cap)

    logger.debug(f"Self-converse realization of {c} with rho={list(rho.image)} ({strategy})")
    if strategy == "peel":
        beats = _peel(c, rho.indices())
    elif strategy == "backtrack":
        beats = _backtrack(c, rho)
    else:
        raise ValueError(f"Unknown strategy: {strategy}")

    T = Tournament.from_adjacency(beats)
    got = [sum(row) for row in beats]
    if got != c:
        raise InternalError(f"Realized outdegrees {got} differ from targets {c}")
    if not is_self_converse_witness(T, rho):
        raise InternalError("Realized tournament is not self-converse under the given witness")
    return T


def _peel(c: List[int], r: Tuple[int, ...]) -> List[List[int]]:
    N = len(c)
    beats = [[0] * N for _ in range(N)]
    residual = list(c)
    fixed = next((v for v in range(N) if r[v] == v), None)
    pairs = [(v, r[v]) for v in range(N) if r[v] > v]

    def arc(u: int, v: int) -> None:
        beats[u][v] = 1

    def split(pair: Tuple[int, int]) -> Tuple[int, int]:
        x, y = pair
        return (x, y) if (residual[x], x) <= (residual[y], y) else (y, x)

    while pairs:
        lows = [split(p) for p in pairs]
        idx = min(range(len(pairs)), key=lambda i: (residual[lows[i][0]], lows[i][0]))
        a, a2 = lows[idx]
        s = residual[a]
        others = sorted(
            (lows[i] for i in range(len(pairs)) if i != idx),
            key=lambda bb: (residual[bb[0]], bb[0]),
        )

        # Sparing a pair with gap >= 2 lifts its lower member by one relative to
        # the balanced choice; the smallest lower members benefit first.
        spare_pool = [bb for bb in others if residual[bb[1]] - residual[bb[0]] >= 2]
        spared = spare_pool[: min(s, len(spare_pool))]
        spared_set = set(spared)
        rest = sorted((bb for bb in others if bb not in spared_set), key=lambda bb: bb[0])

        left = s - len(spared)
        phi = 1 if fixed is not None and left >= 1 else 0
        left -= phi
        q = min(left // 2, len(rest))
        left -= 2 * q
        if left > 1:
            raise SearchExhausted(f"Vertex {a + 1} cannot reach residual score {s}", residual)
        sigma = left

        if sigma:
            arc(a, a2)
        else:
            arc(a2, a)
        if fixed is not None:
            if phi:
                arc(a, fixed)
                arc(fixed, a2)
            else:
                arc(fixed, a)
                arc(a2, fixed)
            residual[fixed] -= 1
        for b, b2 in spared:
            arc(a, b)
            arc(a2, b)
            arc(b2, a)
            arc(b2, a2)
            residual[b2] -= 2
        for k, (b, b2) in enumerate(rest):
            if k < q:
                arc(a, b)
                arc(a, b2)
                arc(b, a2)
                arc(b2, a2)
            else:
                arc(b, a)
                arc(b2, a)
                arc(a2, b)
                arc(a2, b2)
            residual[b] -= 1
            residual[b2] -= 1

        del pairs[idx]
        alive = [residual[v] for p in pairs for v in p]
        if fixed is not None:
            alive.append(residual[fixed])
        if not condition_I_holds_for([Fraction(x) for x in alive]):
            raise SearchExhausted(
                f"Residual scores {alive} after removing pair ({a + 1}, {a2 + 1}) fail Condition I",
                residual,
            )

    return beats


def _backtrack(c: List[int], rho: VertexBijection) -> List[List[int]]:
    N = len(c)
    orbits = edge_orbits(rho)
    gains: List[Tuple[Dict[int, int], Dict[int, int]]] = []
    max_rem = [0] * N
    min_rem = [0] * N
    for o in orbits:
        gf = Counter(u for u, _ in o.forward)
        gb = Counter(u for u, _ in o.backward)
        gains.append((gf, gb))
        for v in o.vertices:
            max_rem[v] += max(gf[v], gb[v])
            min_rem[v] += min(gf[v], gb[v])

    out = [0] * N
    chosen: List[bool] = []

    def search(i: int) -> bool:
        if i == len(orbits):
            return out == c
        o = orbits[i]
        gf, gb = gains[i]
        touched = o.vertices
        for v in touched:
            max_rem[v] -= max(gf[v], gb[v])
            min_rem[v] -= min(gf[v], gb[v])
        for forward, gain in ((True, gf), (False, gb)):
            for v in touched:
                out[v] += gain[v]
            if all(out[v] + min_rem[v] <= c[v] <= out[v] + max_rem[v] for v in touched):
                chosen.append(forward)
                if search(i + 1):
                    return True
                chosen.pop()
            for v in touched:
                out[v] -= gain[v]
        for v in touched:
            max_rem[v] += max(gf[v], gb[v])
            min_rem[v] += min(gf[v], gb[v])
        return False

    if not search(0):
        raise SearchExhausted(f"No self-converse tournament found for scores {c}")

    beats = [[0] * N for _ in range(N)]
    for o, forward in zip(orbits, chosen):
        for u, v in o.forward if forward else o.backward:
            beats[u][v] = 1
    return beats
