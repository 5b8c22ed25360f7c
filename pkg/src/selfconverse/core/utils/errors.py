"""
Exception hierarchy for selfconverse.

Every error carries a stable ``code`` and the CLI ``exit_code`` it maps to,
so shell pipelines can branch on feasibility without parsing messages.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Optional

from rich.console import Console

if TYPE_CHECKING:
    from selfconverse.core.schema import ConditionReport


class SelfConverseError(Exception):
    """Base class for selfconverse exceptions."""

    exit_code: int = 4

    def __init__(self, message: str, suggestion: Optional[str] = None, code: str = "SC_ERR"):
        self.message = message
        self.suggestion = suggestion
        self.code = code
        super().__init__(message)


class ConditionViolation(SelfConverseError):
    """A sequence fails Condition I or II where the operation requires it."""

    exit_code = 1

    def __init__(
        self,
        message: str,
        report: Optional["ConditionReport"] = None,
        suggestion: Optional[str] = None,
    ):
        super().__init__(message, suggestion=suggestion, code="CONDITION_VIOLATION")
        self.report = report


class NonIntegral(SelfConverseError):
    exit_code = 1

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(message, suggestion=suggestion, code="NON_INTEGRAL")


class EmptyInterval(SelfConverseError):
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message, code="EMPTY_INTERVAL")


class ParseError(SelfConverseError):
    """Malformed input file, rational literal or sequence."""

    exit_code = 2

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(message, suggestion=suggestion, code="PARSE_ERROR")


class ResourceLimit(SelfConverseError):
    """The instance is larger than a configured search cap."""

    exit_code = 3

    def __init__(self, message: str, size: int, cap: int):
        super().__init__(
            message,
            suggestion=f"Raise the cap (currently {cap}) or shrink the instance (size {size}).",
            code="RESOURCE_LIMIT",
        )
        self.size = size
        self.cap = cap


class DimensionMismatch(SelfConverseError):
    def __init__(self, message: str):
        super().__init__(message, code="DIMENSION_MISMATCH")


class InternalError(SelfConverseError):
    """A post-condition failed; the result would contradict a theorem."""

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(
            message,
            suggestion="This is a bug. Please report the input that triggered it.",
            code="INTERNAL_ERROR",
        )
        self.details = details


class SearchExhausted(InternalError):
    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message, details=details)
        self.code = "SEARCH_EXHAUSTED"


_stderr = Console(stderr=True)


def print_friendly_error(e: Exception, debug: bool = False) -> None:
    """
    Prints a user-friendly error message with suggestions on stderr.
    """
    if isinstance(e, SelfConverseError):
        _stderr.print(f"[bold red]Error [{e.code}][/bold red]: {e.message}", highlight=False)
        if e.suggestion:
            _stderr.print(f"[yellow]Suggestion[/yellow]: {e.suggestion}", highlight=False)
    else:
        _stderr.print(f"[bold red]Unexpected error[/bold red]: {e}", highlight=False)
        _stderr.print("[yellow]Suggestion[/yellow]: run with --verbose for the full traceback.")

    if debug:
        _stderr.print_exception()
