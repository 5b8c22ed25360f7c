"""
selfconverse - exact score sequences of self-converse generalised tournaments.

Decides whether a sequence of rationals is the score sequence of a
(self-converse) generalised tournament and builds explicit realizations
with exact arithmetic, backed by brute-force oracles for small orders.
"""

__version__ = "1.0.0"
__license__ = "Apache-2.0"

from selfconverse.core.conditions import check_condition_I, check_condition_II
from selfconverse.core.schema import (
    GeneralisedTournament,
    ScoreSequence,
    Tournament,
    VertexBijection,
)
from selfconverse.realize.pipeline import realize

__all__ = [
    "__version__",
    "ScoreSequence",
    "GeneralisedTournament",
    "Tournament",
    "VertexBijection",
    "check_condition_I",
    "check_condition_II",
    "realize",
]
