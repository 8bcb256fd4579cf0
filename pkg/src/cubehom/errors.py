class PCSError(ValueError):
    """Malformed input or bad arguments to a combinatorial operation."""


class BudgetExceeded(RuntimeError):
    """An enumeration grew past a configured limit."""


class EnumerationError(RuntimeError):
    """A chain set is not closed under faces (enumeration was incomplete)."""
