"""Error types raised by the engines."""


class BudgetExceededError(RuntimeError):
    """A requested computation exceeds a configured resource limit."""


class InadequateTruncationError(ValueError):
    """A partial-product truncation order is too small for the requested x."""
