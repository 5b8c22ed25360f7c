"""
Exhaustive ground truth for small orders.
"""

from selfconverse.oracle.enumeration import (
    condition_I_by_subsets,
    enumerate_tournaments,
    integer_sequences_satisfying_I,
    integer_sequences_satisfying_I_II,
    tournament_from_index,
)
from selfconverse.oracle.verification import bruteforce_self_converse_sequences, verify_eplett

__all__ = [
    "enumerate_tournaments",
    "tournament_from_index",
    "integer_sequences_satisfying_I",
    "integer_sequences_satisfying_I_II",
    "condition_I_by_subsets",
    "bruteforce_self_converse_sequences",
    "verify_eplett",
]
