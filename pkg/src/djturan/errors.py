"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates an operation's domain."""


class BudgetError(RuntimeError):
    """A node, cycle, or memory budget would be exceeded."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
