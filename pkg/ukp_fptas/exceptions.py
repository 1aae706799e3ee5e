"""
Exception hierarchy for the solver.

All errors raised by the package derive from KnapsackError so callers
(and the CLI) can catch one base class.
"""

from typing import Optional


class KnapsackError(Exception):
    """Base class for all solver errors."""


class InvalidParameterError(KnapsackError):
    """A parameter (epsilon, generator or bench argument) is out of range."""


class EmptyInstanceError(KnapsackError):
    """The instance has no usable item."""


class OutOfRangeError(KnapsackError):
    """A profit lies outside the interval an index lookup covers."""


class InstanceParseError(KnapsackError):
    """Malformed instance text."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class OracleBudgetError(KnapsackError):
    """An exact oracle would exceed its configured work budget."""

    def __init__(self, what: str, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} units, budget is {budget}")


class InvariantViolation(KnapsackError):
    """Internal consistency check failed (corrupted chain, bad certificate)."""
