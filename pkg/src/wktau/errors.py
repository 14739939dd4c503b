"""Shared exception types."""


class UsageError(ValueError):
    """A caller violated an operation's precondition."""


class DegreeError(UsageError):
    """The requested output needs a series computed to a higher degree."""


class SelectionRuleError(UsageError):
    """A correlator key violates the dimension selection rule."""


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly failed; the pipeline is corrupt."""


class BudgetError(RuntimeError):
    """A configured resource budget was exceeded."""
