from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfconverse.core.conditions import check_condition_I, check_condition_II
from selfconverse.core.converse import is_self_converse_witness
from selfconverse.core.schema import ScoreSequence
from selfconverse.core.utils.errors import ConditionViolation, EmptyInterval
from selfconverse.realize.approximation import (
    approximate,
    choose_rational_in_interval,
    realize_real,
)

WEIGHTS = [Fraction(k, 10) for k in range(11)]
WEIGHTS += [Fraction(1, 3), Fraction(2, 7), Fraction(7071, 10000)]


def seq(*values):
    return ScoreSequence(scores=list(values))


@st.composite
def midpoint_mirrored_sequences(draw):
    """Scores of a random generalised tournament, mirrored about (n-1)/2 to force Condition II."""
    n = draw(st.integers(min_value=1, max_value=7))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a = draw(st.sampled_from(WEIGHTS))
            rows[i][j] = a
            rows[j][i] = 1 - a
    scores = sorted(sum(row, Fraction(0)) for row in rows)
    mid = Fraction(n - 1, 2)
    lower = [min(x, mid) for x in scores[: n // 2]]
    middle = [mid] if n % 2 else []
    return ScoreSequence(scores=lower + middle + [(n - 1) - x for x in reversed(lower)])


def simplest_by_search(lo, hi):
    q = 1
    while True:
        p = floor(lo * q) + 1
        if Fraction(p, q) < hi:
            return Fraction(p, q)
        q += 1


@pytest.mark.parametrize(
    "lo, hi, expected",
    [
        (Fraction(0), Fraction(1, 10), Fraction(1, 11)),
        (Fraction(1, 3), Fraction(2, 3), Fraction(1, 2)),
        (Fraction(7071, 10000), Fraction(7171, 10000), Fraction(5, 7)),
        (Fraction(1, 2), Fraction(3), Fraction(1)),
        (Fraction(-1, 2), Fraction(-1, 3), Fraction(-2, 5)),
        (Fraction(2), Fraction(3), Fraction(5, 2)),
    ],
)
def test_choose_rational_examples(lo, hi, expected):
    assert choose_rational_in_interval(lo, hi) == expected


@pytest.mark.parametrize("lo, hi", [(Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(0))])
def test_choose_rational_rejects_empty_interval(lo, hi):
    with pytest.raises(EmptyInterval) as excinfo:
        choose_rational_in_interval(lo, hi)
    assert excinfo.value.exit_code == 1


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=60),
    st.fractions(min_value=Fraction(1, 60), max_value=3, max_denominator=60),
)
def test_choose_rational_has_smallest_denominator(lo, width):
    hi = lo + width
    pick = choose_rational_in_interval(lo, hi)
    assert lo < pick < hi
    assert pick.denominator == simplest_by_search(lo, hi).denominator


def test_regular_sequence_needs_no_approximation():
    d = seq(1, 1, 1)
    approx, trace = approximate(d, 5)
    assert approx == d
    assert trace.n_prime is None
    assert trace.picks == ()


def test_transitive_triple_is_lifted():
    approx, trace = approximate(seq(0, 1, 2), 10)
    assert approx == seq("1/11", 1, "21/11")
    assert trace.n_prime == 1
    assert trace.intervals == ((Fraction(0), Fraction(1, 10)),)
    assert trace.picks == (Fraction(1, 11),)


def test_pick_can_exceed_denominator_of_input():
    approx, _ = approximate(seq("7071/10000", 1, "12929/10000"), 100)
    assert approx == seq("5/7", 1, "9/7")


def test_picks_increase_below_midpoint():
    approx, trace = approximate(seq(0, 1, 2, 3, 4), 2)
    assert trace.n_prime == 2
    assert trace.picks[0] < trace.picks[1] < 2
    assert check_condition_I(approx).ok
    assert approx.scores[2] == 2


def test_approximate_rejects_infeasible_input():
    with pytest.raises(ConditionViolation):
        approximate(seq("1/2", "1/2", 2), 10)
    with pytest.raises(ValueError):
        approximate(seq(1, 1, 1), 0)


@settings(max_examples=1000, deadline=None)
@given(midpoint_mirrored_sequences(), st.sampled_from([2, 10, 100]))
def test_approximation_properties(d, m):
    assert check_condition_I(d).ok
    approx, trace = approximate(d, m)
    assert check_condition_I(approx).ok
    assert check_condition_II(approx)
    assert max(abs(a - b) for a, b in zip(approx.scores, d.scores)) < Fraction(1, m)
    for k, pick in enumerate(trace.picks):
        assert approx.scores[k] == pick


def test_realize_real_is_exact_on_the_approximation():
    G, rho, approx = realize_real(seq(0, 1, 2), 2)
    assert approx == seq("1/3", 1, "5/3")
    assert G.labeled_scores() == approx.scores
    assert is_self_converse_witness(G, rho)


def test_realize_real_falls_back_above_the_cap():
    G, rho, approx = realize_real(seq(0, 1, 2), 10)
    assert approx == seq("1/11", 1, "21/11")
    assert G.labeled_scores() == approx.scores
    assert rho.image == (3, 2, 1)
    assert is_self_converse_witness(G, rho)
