"""
Constructive realizers: Landau, self-converse orbits, blow-up pipeline and approximation.
"""

from selfconverse.realize.approximation import (
    approximate,
    choose_rational_in_interval,
    realize_real,
)
from selfconverse.realize.blowup import (
    blowup_involution,
    blowup_scores,
    lcm_denominator,
    shrink_down,
)
from selfconverse.realize.landau import landau_realize
from selfconverse.realize.pipeline import (
    RealizationMethod,
    RealizationResult,
    moon_realize,
    realize,
    realize_self_converse_rational,
    symmetrize,
)
from selfconverse.realize.symmetric import edge_orbits, symmetric_realize

__all__ = [
    "landau_realize",
    "symmetric_realize",
    "edge_orbits",
    "lcm_denominator",
    "blowup_scores",
    "blowup_involution",
    "shrink_down",
    "realize_self_converse_rational",
    "moon_realize",
    "symmetrize",
    "realize",
    "RealizationMethod",
    "RealizationResult",
    "choose_rational_in_interval",
    "approximate",
    "realize_real",
]
