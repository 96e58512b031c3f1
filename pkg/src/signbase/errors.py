# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Exception hierarchy shared by the engine, families and CLI."""

from __future__ import annotations


class SignbaseError(ValueError):
    """Base class for every input or construction error raised by signbase."""


class EdgeListParseError(SignbaseError):
    """An edge-list document could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        self.line_number = line_number
        self.message = message
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class NotPrimitiveError(SignbaseError):
    """The digraph is not primitive (not strongly connected, or period > 1)."""

    def __init__(self, reason: str, period: int | None = None) -> None:
        self.reason = reason
        self.period = period
        super().__init__(reason)


class PowerfulPatternError(SignbaseError):
    """The sign pattern is powerful: its powers never become all-ambiguous."""


class CycleCapExceededError(SignbaseError):
    """Simple-cycle enumeration produced more cycles than allowed."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"more than {cap} simple cycles; raise max_cycles to catalog this digraph")


class EnumerationBudgetError(SignbaseError):
    """The walk-enumeration oracle visited more nodes than its budget."""

    def __init__(self, budget: int) -> None:
        self.budget = budget
        super().__init__(f"walk enumeration exceeded budget of {budget} nodes")


class FamilyRangeError(SignbaseError):
    """Family parameters lie outside the range in which the family is defined."""


class InfeasibleSignsError(SignbaseError):
    """No arc signing satisfies the requested cycle-sign constraints."""


class IterationCapExceededError(RuntimeError):
    """A power stream ran past its theoretical bound. Always an engine fault."""
