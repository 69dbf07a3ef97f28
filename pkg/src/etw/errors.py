"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph or tree-layout text; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StepError(ValueError):
    """A rewrite step whose precondition does not hold in the given graph."""


class SizeLimitError(ValueError):
    """Input exceeds a configured exact-computation limit."""


class BudgetExceeded(RuntimeError):
    """A search ran out of its state or time budget; the answer is indeterminate."""


class TimeBudgetExceeded(BudgetExceeded):
    """Wall-clock budget ran out."""


class InternalError(AssertionError):
    """A self-check failed; indicates a bug in this package, not bad input."""
