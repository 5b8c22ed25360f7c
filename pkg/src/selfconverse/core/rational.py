"""
Exact rational helpers.

All scores and weights are ``fractions.Fraction`` values. Inputs are
accepted as ``"p/q"`` strings, integer strings or finite decimal strings,
all converted without rounding; floats are refused because they cannot
carry the equality in Condition I.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Convert a literal to an exact ``Fraction``, rejecting anything inexact."""
    if isinstance(value, bool):
        raise ValueError(f"Boolean is not a rational literal: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational literal")
        try:
            result = Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not an exact rational literal: {value!r}") from e
        return result
    raise ValueError(f"Unsupported rational literal {value!r} of type {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical ``p/q`` form; integers are written without a denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1


def lcm_of(values: Iterable[int]) -> int:
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result


def binomial2(k: int) -> int:
    """C(k, 2)."""
    return k * (k - 1) // 2
