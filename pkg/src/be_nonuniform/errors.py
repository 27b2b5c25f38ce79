"""Semantic exception hierarchy shared across the package."""


class BeNonuniformError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BeNonuniformError, ValueError):
    """An argument lies outside the operation's mathematical domain."""


class DegenerateDistributionError(DomainError):
    """A distribution with zero variance was used where positive variance is required."""


class CapacityError(BeNonuniformError):
    """A convolution would exceed the configured atom-count cap."""


class GridRangeError(DomainError):
    """A tabulated weight was evaluated outside its grid range."""


class EvaluationError(BeNonuniformError):
    """An objective returned a non-finite value during optimization.

    Carries the offending point in ``point``.
    """

    def __init__(self, message: str, point: float):
        super().__init__(message)
        self.point = point
