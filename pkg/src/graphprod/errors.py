"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a documented precondition."""


class TruncationError(ArithmeticError):
    """A computation needs information beyond a truncation degree."""


class ChainComplexError(RuntimeError):
    """A constructed differential does not square to zero."""
