"""Exception hierarchy shared by every module.

The CLI maps each family to its own exit code, so new errors should
subclass one of these rather than a bare builtin.
"""


class UnifamilyError(Exception):
    """Base class for library errors."""


class ExpressionParseError(UnifamilyError, ValueError):
    """A value expression could not be parsed."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PoleError(UnifamilyError, ArithmeticError):
    """A generating series has a pole at t = 0 where a power series is needed."""


class SingularOperatorError(UnifamilyError, ArithmeticError):
    """The moment recurrence has no solution for the requested ratio."""


class RegularityError(UnifamilyError, ValueError):
    """An identity was requested for degenerate parameters it does not cover."""


class ConvergenceError(UnifamilyError, ValueError):
    """A limit or infinite sum was requested outside its region of convergence."""


class InsufficientTruncationError(UnifamilyError, ArithmeticError):
    """Not enough coefficients are known to carry out the computation."""


class SeriesZeroDivisionError(UnifamilyError, ZeroDivisionError):
    """Division by a series that is zero to its truncation order."""
