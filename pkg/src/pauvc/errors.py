"""Exception types shared across the package."""


class PauvcError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PauvcError, ValueError):
    """Malformed graph, interval or expression text.

    ``line`` is 1-based when the error can be tied to an input line and
    ``pos`` is a 0-based character offset for expression syntax errors.
    """

    def __init__(self, message, *, line=None, pos=None):
        if line is not None:
            message = f"line {line}: {message}"
        elif pos is not None:
            message = f"position {pos}: {message}"
        super().__init__(message)
        self.line = line
        self.pos = pos


class BudgetExceeded(PauvcError):
    """An exact (exponential) computation was asked to run above its budget."""


class NotInClass(PauvcError):
    """A graph was handed to a class-specific solver but is not in that class."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ExpressionError(PauvcError, ValueError):
    """An expression AST violates its invariants."""
