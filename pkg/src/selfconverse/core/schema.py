"""
Core data models for selfconverse.

All values are immutable pydantic models over exact ``Fraction`` arithmetic.
Their JSON form writes every rational as a canonical ``"p/q"`` string so
exactness survives the file boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_serializer,
    field_validator,
    model_validator,
)

from selfconverse.core.rational import format_rational, parse_rational

_FROZEN = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _rational_row(values: Any) -> Tuple[Fraction, ...]:
    if isinstance(values, (str, bytes)) or not isinstance(values, Iterable):
        raise ValueError(f"Expected a list of rationals, got {values!r}")
    return tuple(parse_rational(v) for v in values)


def _check_declared_n(data: Any, length_of: str) -> Any:
    """Drop a redundant ``n`` key from JSON input after checking it."""
    if isinstance(data, dict) and "n" in data:
        data = dict(data)
        declared = data.pop("n")
        items = data.get(length_of)
        if items is not None and declared != len(items):
            raise ValueError(f"Declared n={declared} but {length_of} has {len(items)} entries")
    return data


class ScoreSequence(BaseModel):
    """
    A non-decreasing list of non-negative rationals (the d_i).

    The strict constructor rejects unsorted input; use ``normalized`` to sort
    and recover the applied permutation.

    Example:
        >>> ScoreSequence(scores=["1/2", "1/2", 2]).n
        3
    """

    model_config = _FROZEN

    scores: Tuple[Fraction, ...] = Field(..., min_length=1, description="Scores d_1 <= ... <= d_n")

    @model_validator(mode="before")
    @classmethod
    def _strip_n(cls, data: Any) -> Any:
        return _check_declared_n(data, "scores")

    @field_validator("scores", mode="before")
    @classmethod
    def _parse_scores(cls, v: Any) -> Tuple[Fraction, ...]:
        return _rational_row(v)

    @model_validator(mode="after")
    def _check_sorted(self) -> "ScoreSequence":
        for i, d in enumerate(self.scores):
            if d < 0:
                raise ValueError(f"Score d_{i + 1} = {format_rational(d)} is negative")
            if i and d < self.scores[i - 1]:
                raise ValueError(
                    f"Scores must be non-decreasing: d_{i} = {format_rational(self.scores[i - 1])}"
                    f" > d_{i + 1} = {format_rational(d)}"
                )
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def n(self) -> int:
        return len(self.scores)

    @field_serializer("scores")
    def _dump_scores(self, scores: Tuple[Fraction, ...]) -> List[str]:
        return [format_rational(d) for d in scores]

    @classmethod
    def normalized(cls, values: Sequence[Any]) -> Tuple["ScoreSequence", Tuple[int, ...]]:
        """
        Sort arbitrary input and return it with the applied permutation.

        ``permutation[k]`` is the 1-based original label of the k-th sorted entry;
        the sort is stable, so equal scores keep their input order.
        """
        parsed = _rational_row(values)
        order = sorted(range(len(parsed)), key=lambda i: parsed[i])
        return cls(scores=[parsed[i] for i in order]), tuple(i + 1 for i in order)

    def is_integral(self) -> bool:
        return all(d.denominator == 1 for d in self.scores)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "scores": [format_rational(d) for d in self.scores]}

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(d) for d in self.scores) + ")"


class GeneralisedTournament(BaseModel):
    """
    A complete weighted digraph: alpha(i, i) = 0 and alpha(i, j) + alpha(j, i) = 1.

    Vertices are the indices 0..n-1 internally and the labels 1..n in JSON.
    """

    model_config = _FROZEN

    weights: Tuple[Tuple[Fraction, ...], ...] = Field(..., description="n x n weight matrix alpha")

    @model_validator(mode="before")
    @classmethod
    def _strip_n(cls, data: Any) -> Any:
        return _check_declared_n(data, "weights")

    @field_validator("weights", mode="before")
    @classmethod
    def _parse_weights(cls, v: Any) -> Tuple[Tuple[Fraction, ...], ...]:
        if isinstance(v, (str, bytes)) or not isinstance(v, Iterable):
            raise ValueError("weights must be a list of rows")
        return tuple(_rational_row(row) for row in v)

    @model_validator(mode="after")
    def _check_weights(self) -> "GeneralisedTournament":
        n = len(self.weights)
        for i, row in enumerate(self.weights):
            if len(row) != n:
                raise ValueError(f"Row {i + 1} has {len(row)} entries, expected {n}")
            if row[i] != 0:
                raise ValueError(f"alpha({i + 1},{i + 1}) must be 0")
            for j in range(i + 1, n):
                a = row[j]
                if not 0 <= a <= 1:
                    raise ValueError(
                        f"alpha({i + 1},{j + 1}) = {format_rational(a)} is outside [0, 1]"
                    )
                if a + self.weights[j][i] != 1:
                    raise ValueError(f"alpha({i + 1},{j + 1}) + alpha({j + 1},{i + 1}) != 1")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def n(self) -> int:
        return len(self.weights)

    @field_serializer("weights")
    def _dump_weights(self, weights: Tuple[Tuple[Fraction, ...], ...]) -> List[List[str]]:
        return [[format_rational(a) for a in row] for row in weights]

    def weight(self, i: int, j: int) -> Fraction:
        """alpha(i, j) for 0-based vertices."""
        return self.weights[i][j]

    def labeled_scores(self) -> Tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.weights)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "weights": [[format_rational(a) for a in row] for row in self.weights],
        }


class Tournament(GeneralisedTournament):
    """A generalised tournament whose weights are all 0 or 1."""

    @model_validator(mode="after")
    def _check_binary(self) -> "Tournament":
        for i, row in enumerate(self.weights):
            for j, a in enumerate(row):
                if a not in (0, 1):
                    raise ValueError(
                        f"Tournament weight alpha({i + 1},{j + 1}) = "
                        f"{format_rational(a)} is not 0/1"
                    )
        return self

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Tournament":
        """Build from 1-based arcs ``(u, v)`` meaning u beats v; every pair exactly once."""
        rows = [[0] * n for _ in range(n)]
        for u, v in arcs:
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"Invalid arc {u}->{v} for n={n}")
            if rows[u - 1][v - 1] or rows[v - 1][u - 1]:
                raise ValueError(f"Pair {{{u},{v}}} oriented twice")
            rows[u - 1][v - 1] = 1
        for u in range(n):
            for v in range(u + 1, n):
                if rows[u][v] + rows[v][u] != 1:
                    raise ValueError(f"Pair {{{u + 1},{v + 1}}} has no arc")
        return cls(weights=rows)

    @classmethod
    def from_adjacency(cls, beats: Sequence[Sequence[int]]) -> "Tournament":
        """
        Build from a trusted 0/1 matrix without re-validating it.

        Used on hot paths (enumeration, realizers) whose construction already
        guarantees the tournament invariants.
        """
        one, zero = Fraction(1), Fraction(0)
        weights = tuple(tuple(one if a else zero for a in row) for row in beats)
        return cls.model_construct(weights=weights)

    def arcs(self) -> List[Tuple[int, int]]:
        """All arcs u -> v as 1-based pairs, sorted."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.weights)
            for j, a in enumerate(row)
            if a == 1
        ]


class VertexBijection(BaseModel):
    """
    A permutation of the vertex labels 1..n; ``image[i - 1]`` is rho(i).

    As a self-converse witness it is usually an involution with at most one
    fixed point.
    """

    model_config = _FROZEN

    image: Tuple[int, ...] = Field(..., min_length=1, description="1-based images rho(1..n)")

    @model_validator(mode="after")
    def _check_permutation(self) -> "VertexBijection":
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            n = len(self.image)
            raise ValueError(f"image {list(self.image)} is not a permutation of 1..{n}")
        return self

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "VertexBijection":
        return cls(image=tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> "VertexBijection":
        """rho(i) = n + 1 - i."""
        return cls(image=tuple(range(n, 0, -1)))

    @classmethod
    def from_indices(cls, indices: Sequence[int]) -> "VertexBijection":
        return cls(image=tuple(i + 1 for i in indices))

    def indices(self) -> Tuple[int, ...]:
        """0-based form: ``indices()[v]`` is rho(v) for a 0-based vertex v."""
        return tuple(i - 1 for i in self.image)

    def fixed_points(self) -> List[int]:
        return [i + 1 for i, r in enumerate(self.image) if r == i + 1]

    def is_involution(self) -> bool:
        return all(self.image[r - 1] == i + 1 for i, r in enumerate(self.image))

    def is_witness_shaped(self) -> bool:
        """An involution with at most one fixed point."""
        return self.is_involution() and len(self.fixed_points()) <= 1

    def to_json_dict(self) -> Dict[str, Any]:
        return {"image": list(self.image)}


class ConditionReport(BaseModel):
    """Outcome of the Condition I / II checks on a sorted sequence."""

    model_config = _FROZEN

    prefix_slacks: Tuple[Fraction, ...] = Field(
        ..., description="s_k = d_1 + ... + d_k - C(k, 2)"
    )
    condition_I: bool
    condition_II: bool
    first_violation: Optional[int] = Field(
        default=None, description="1-based k of the first failing prefix, if any"
    )

    @field_serializer("prefix_slacks")
    def _dump_slacks(self, slacks: Tuple[Fraction, ...]) -> List[str]:
        return [format_rational(s) for s in slacks]

    @property
    def ok(self) -> bool:
        return self.condition_I and self.condition_II

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


class BlowUpPlan(BaseModel):
    """
    Target outdegrees c_{i,l} of the blow-up: n clusters of m vertices each.

    Vertex v_{i,l} of the blown-up tournament sits at flat index (i-1)*m + (l-1).
    """

    model_config = _FROZEN

    n: int = Field(..., ge=1, description="Cluster count")
    m: int = Field(..., ge=1, description="Blow-up factor")
    targets: Tuple[Tuple[int, ...], ...] = Field(..., description="n x m array of targets")

    @model_validator(mode="after")
    def _check_shape(self) -> "BlowUpPlan":
        if len(self.targets) != self.n or any(len(row) != self.m for row in self.targets):
            raise ValueError(f"targets must be a {self.n} x {self.m} array")
        if any(c < 0 for row in self.targets for c in row):
            raise ValueError("targets must be non-negative")
        return self

    @property
    def size(self) -> int:
        return self.n * self.m

    def flat_targets(self) -> Tuple[int, ...]:
        return tuple(c for row in self.targets for c in row)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "m": self.m, "targets": [list(row) for row in self.targets]}


class ApproximationTrace(BaseModel):
    """
    Audit record of a rational approximation run.

    ``intervals[k]`` and ``picks[k]`` belong to index k + 1, for k < n_prime.
    """

    model_config = _FROZEN

    n_prime: Optional[int] = None
    m: int = Field(..., ge=1)
    intervals: Tuple[Tuple[Fraction, Fraction], ...] = ()
    picks: Tuple[Fraction, ...] = ()

    @model_validator(mode="after")
    def _check_picks(self) -> "ApproximationTrace":
        if len(self.intervals) != len(self.picks):
            raise ValueError("intervals and picks must have equal length")
        for (lo, hi), p in zip(self.intervals, self.picks):
            if not lo < p < hi:
                raise ValueError(f"pick {format_rational(p)} is outside its interval")
        if any(a >= b for a, b in zip(self.picks, self.picks[1:])):
            raise ValueError("picks must be strictly increasing")
        return self

    @field_serializer("intervals")
    def _dump_intervals(self, intervals: Tuple[Tuple[Fraction, Fraction], ...]) -> List[List[str]]:
        return [[format_rational(lo), format_rational(hi)] for lo, hi in intervals]

    @field_serializer("picks")
    def _dump_picks(self, picks: Tuple[Fraction, ...]) -> List[str]:
        return [format_rational(p) for p in picks]

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


class OracleReport(BaseModel):
    """Brute force vs. condition-based sets of self-converse score sequences."""

    model_config = _FROZEN

    n: int
    equal: bool
    only_in_conditions: Tuple[ScoreSequence, ...] = ()
    only_in_bruteforce: Tuple[ScoreSequence, ...] = ()
    tournament_count: int = 0
    necessity: bool = True

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "equal": self.equal,
            "only_in_conditions": [s.to_json_dict()["scores"] for s in self.only_in_conditions],
            "only_in_bruteforce": [s.to_json_dict()["scores"] for s in self.only_in_bruteforce],
            "tournament_count": self.tournament_count,
            "necessity": self.necessity,
        }


__all__ = [
    "ScoreSequence",
    "GeneralisedTournament",
    "Tournament",
    "VertexBijection",
    "ConditionReport",
    "BlowUpPlan",
    "ApproximationTrace",
    "OracleReport",
]
