from fractions import Fraction

import pytest
from pydantic import ValidationError

from selfconverse.core.rational import binomial2, format_rational, lcm_of, parse_rational
from selfconverse.core.schema import (
    ApproximationTrace,
    BlowUpPlan,
    GeneralisedTournament,
    ScoreSequence,
    Tournament,
    VertexBijection,
)


@pytest.mark.parametrize(
    "literal, expected",
    [
        ("1/2", Fraction(1, 2)),
        ("3/6", Fraction(1, 2)),
        ("0.25", Fraction(1, 4)),
        (" 2 ", Fraction(2)),
        (7, Fraction(7)),
        (Fraction(2, 3), Fraction(2, 3)),
    ],
)
def test_parse_rational_is_exact(literal, expected):
    assert parse_rational(literal) == expected


@pytest.mark.parametrize("literal", [0.5, True, "", "1/0", "abc", None])
def test_parse_rational_rejects_inexact_or_malformed(literal):
    with pytest.raises(ValueError):
        parse_rational(literal)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(0)) == "0"


def test_integer_helpers():
    assert lcm_of([2, 3, 4]) == 12
    assert lcm_of([]) == 1
    assert [binomial2(k) for k in range(5)] == [0, 0, 1, 3, 6]


def test_score_sequence_parses_mixed_literals():
    d = ScoreSequence(scores=["1/2", "1/2", 2])
    assert d.n == 3
    assert d.scores == (Fraction(1, 2), Fraction(1, 2), Fraction(2))
    assert str(d) == "(1/2, 1/2, 2)"


@pytest.mark.parametrize(
    "scores",
    [[], [1, 0], ["-1/2", 1], [0.5, 1]],
)
def test_score_sequence_rejects_invalid_input(scores):
    with pytest.raises(ValidationError):
        ScoreSequence(scores=scores)


def test_score_sequence_checks_declared_length():
    assert ScoreSequence.model_validate({"n": 2, "scores": ["1/2", "1/2"]}).n == 2
    with pytest.raises(ValidationError):
        ScoreSequence.model_validate({"n": 3, "scores": ["1/2", "1/2"]})


def test_normalized_sorts_stably_and_reports_permutation():
    d, permutation = ScoreSequence.normalized([2, 0, 1])
    assert d.scores == (0, 1, 2)
    assert permutation == (2, 3, 1)

    _, permutation = ScoreSequence.normalized(["1", "0", "1"])
    assert permutation == (2, 1, 3)


def test_score_sequence_json_form():
    d = ScoreSequence(scores=["1/2", "0.5"])
    assert d.to_json_dict() == {"n": 2, "scores": ["1/2", "1/2"]}
    assert d.model_dump(mode="json") == {"scores": ["1/2", "1/2"], "n": 2}


def test_score_sequences_are_hashable_values():
    a = ScoreSequence(scores=[0, 1, 2])
    b = ScoreSequence(scores=["0", "1", "2"])
    assert a == b
    assert len({a, b}) == 1
    assert a.is_integral()
    assert not ScoreSequence(scores=["1/2", "1/2"]).is_integral()


def test_generalised_tournament_accepts_half_weights():
    G = GeneralisedTournament(weights=[[0, "1/2"], ["1/2", 0]])
    assert G.n == 2
    assert G.labeled_scores() == (Fraction(1, 2), Fraction(1, 2))
    assert G.to_json_dict() == {"n": 2, "weights": [["0", "1/2"], ["1/2", "0"]]}


@pytest.mark.parametrize(
    "weights",
    [
        [[0, 1], [1, 0]],
        [[0, "3/2"], ["-1/2", 0]],
        [[1, 0], [1, 0]],
        [[0, 1, 0], [0, 0]],
    ],
)
def test_generalised_tournament_rejects_invalid_weights(weights):
    with pytest.raises(ValidationError):
        GeneralisedTournament(weights=weights)


def test_generalised_tournament_ignores_extra_keys():
    G = GeneralisedTournament.model_validate(
        {"n": 2, "weights": [[0, 1], [0, 0]], "method": "moon", "witness": {"image": [2, 1]}}
    )
    assert G.n == 2


def test_tournament_requires_binary_weights():
    with pytest.raises(ValidationError):
        Tournament(weights=[[0, "1/2"], ["1/2", 0]])


def test_tournament_builders_agree(three_cycle):
    assert three_cycle.arcs() == [(1, 2), (2, 3), (3, 1)]
    same = Tournament.from_adjacency([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert same.weights == three_cycle.weights


@pytest.mark.parametrize(
    "arcs",
    [
        [(1, 2), (2, 3)],
        [(1, 2), (2, 1), (2, 3), (3, 1)],
        [(1, 1), (1, 2), (2, 3), (3, 1)],
        [(1, 4), (2, 3), (3, 1)],
    ],
)
def test_from_arcs_rejects_incomplete_or_invalid_arcs(arcs):
    with pytest.raises(ValueError):
        Tournament.from_arcs(3, arcs)


def test_vertex_bijection_helpers():
    rho = VertexBijection.reversal(3)
    assert rho.image == (3, 2, 1)
    assert rho.indices() == (2, 1, 0)
    assert rho.fixed_points() == [2]
    assert rho.is_witness_shaped()
    assert VertexBijection.from_indices([1, 0, 2]).image == (2, 1, 3)
    assert not VertexBijection.identity(3).is_witness_shaped()
    assert VertexBijection.identity(1).is_witness_shaped()
    assert not VertexBijection(image=(2, 3, 1)).is_involution()
    assert rho.to_json_dict() == {"image": [3, 2, 1]}


def test_vertex_bijection_must_be_a_permutation():
    with pytest.raises(ValidationError):
        VertexBijection(image=(1, 1))
    with pytest.raises(ValidationError):
        VertexBijection(image=(0, 1))


def test_blowup_plan_shape_is_validated():
    plan = BlowUpPlan(n=2, m=2, targets=((0, 1), (2, 3)))
    assert plan.size == 4
    assert plan.flat_targets() == (0, 1, 2, 3)
    assert plan.to_json_dict() == {"n": 2, "m": 2, "targets": [[0, 1], [2, 3]]}
    with pytest.raises(ValidationError):
        BlowUpPlan(n=2, m=2, targets=((0, 1),))


def test_approximation_trace_checks_picks():
    trace = ApproximationTrace(
        n_prime=1, m=10, intervals=((Fraction(0), Fraction(1, 10)),), picks=(Fraction(1, 11),)
    )
    assert trace.to_json_dict() == {
        "n_prime": 1,
        "m": 10,
        "intervals": [["0", "1/10"]],
        "picks": ["1/11"],
    }
    with pytest.raises(ValidationError):
        ApproximationTrace(
            n_prime=1, m=10, intervals=((Fraction(0), Fraction(1, 10)),), picks=(Fraction(1, 2),)
        )
