"""Exception types shared across the package."""


class JetFinslerError(Exception):
    """Base class for all package errors."""


class DomainError(JetFinslerError):
    """A temporal metric was evaluated where it is not positive."""


class DegeneracyError(JetFinslerError):
    """A cubic-structure quantity is degenerate at the evaluation point."""

    def __init__(self, message, point=None):
        if point is not None:
            message = f"{message} at point {point}"
        super().__init__(message)
        self.point = point


class SingularMetricError(JetFinslerError):
    """The fundamental metric could not be inverted."""


class SamplingError(JetFinslerError):
    """Rejection sampling exhausted its attempt budget."""


class OracleError(JetFinslerError):
    """A finite-difference stencil left the nondegenerate domain."""


class ParameterError(JetFinslerError):
    """An invalid scalar parameter (e.g. a zero Einstein constant)."""


class MetricFileError(JetFinslerError):
    """A custom cubic-metric file could not be parsed."""


class UnknownTensorError(JetFinslerError):
    """An evaluation request named a tensor outside the registry."""
