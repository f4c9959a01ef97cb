"""Exception types shared across the package."""


class SuperellipticError(Exception):
    """Base class for all package errors."""


class WordSyntaxError(SuperellipticError, ValueError):
    """A word, curve or generator expression failed to parse."""


class ContextMismatchError(SuperellipticError, ValueError):
    """Two values built over different contexts were combined."""


class BudgetError(SuperellipticError, RuntimeError):
    """An intermediate free word exceeded the configured letter budget.

    Raised instead of silently truncating; callers may retry with a larger
    budget (``--budget-letters`` / ``SUPERELLIPTIC_BUDGET_LETTERS``).
    """


class DoesNotLiftError(SuperellipticError, ValueError):
    """A curve with nonzero monodromy was asked for its lifts."""
