from selfconverse.core.utils.errors import (
    ConditionViolation,
    DimensionMismatch,
    EmptyInterval,
    InternalError,
    NonIntegral,
    ParseError,
    ResourceLimit,
    SearchExhausted,
    SelfConverseError,
    print_friendly_error,
)

__all__ = [
    "SelfConverseError",
    "ConditionViolation",
    "NonIntegral",
    "EmptyInterval",
    "ParseError",
    "ResourceLimit",
    "DimensionMismatch",
    "InternalError",
    "SearchExhausted",
    "print_friendly_error",
]
