"""Exception types shared across the package."""


class ZalphaError(Exception):
    """Base class for all package errors."""


class InputError(ZalphaError):
    """Malformed user input (bad polynomial, bad flag value, bad JSON)."""


class DivisibilityError(ZalphaError):
    """Division by alpha requested for an element not in alpha*Z[alpha].

    Reaching this from the expander indicates a digit-selection bug, since
    the coset-matching rule guarantees divisibility.
    """


class PrecisionExhausted(ZalphaError):
    """Certified refinement did not reach the target within the precision
    budget.  Usually a symptom of (near-)repeated roots, i.e. suspect
    reducible input."""


class SearchExhausted(ZalphaError):
    """Digit search ran out of budget."""

    def __init__(self, message: str, attempted_radius: int = 0):
        super().__init__(message)
        self.attempted_radius = attempted_radius


class BoundaryUndecidable(ZalphaError):
    """An embedding coordinate could neither be separated from zero nor
    proven exactly zero.  Unreachable for legitimate inputs; kept so the
    failure mode is loud instead of a silent wrong sign."""


class GuardExceeded(ZalphaError):
    """A brute-force enumeration would exceed its size guard."""


class BudgetExhausted(ZalphaError):
    """An iteration hit its step budget without resolving."""
