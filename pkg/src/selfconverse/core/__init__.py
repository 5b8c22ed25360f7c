"""
Core models, feasibility conditions and shared infrastructure.
"""

from selfconverse.core.conditions import (
    check_condition_I,
    check_condition_I_half,
    check_condition_II,
    prefix_slacks,
    scores_of,
)
from selfconverse.core.config import ConfigManager, SelfConverseConfig, get_settings
from selfconverse.core.converse import (
    converse,
    find_self_converse_witness,
    is_isomorphism,
    is_self_converse_witness,
    reversal_bijection,
)
from selfconverse.core.schema import (
    ApproximationTrace,
    BlowUpPlan,
    ConditionReport,
    GeneralisedTournament,
    OracleReport,
    ScoreSequence,
    Tournament,
    VertexBijection,
)

__all__ = [
    "ScoreSequence",
    "GeneralisedTournament",
    "Tournament",
    "VertexBijection",
    "ConditionReport",
    "BlowUpPlan",
    "ApproximationTrace",
    "OracleReport",
    "prefix_slacks",
    "check_condition_I",
    "check_condition_I_half",
    "check_condition_II",
    "scores_of",
    "converse",
    "is_isomorphism",
    "is_self_converse_witness",
    "find_self_converse_witness",
    "reversal_bijection",
    "ConfigManager",
    "SelfConverseConfig",
    "get_settings",
]
