"""Exception types shared across the package."""


class PricingError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(PricingError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidBracketError(DomainError):
    """A search bracket is empty, reversed, or has a non-positive tolerance."""


class InsufficientDataError(DomainError):
    """Too few (or too degenerate) observations to identify the model."""


class DegenerateFitError(DomainError):
    """The data admit no valid parameter estimate."""


class ConvergenceError(PricingError, RuntimeError):
    """An iterative routine exhausted its budget without converging."""


class SearchFailureError(ConvergenceError):
    """A bracketed search found no feasible candidate at all."""
