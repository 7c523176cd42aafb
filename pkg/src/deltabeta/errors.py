"""Exception types shared across the package."""


class DeltaBetaError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(DeltaBetaError):
    """An argument landed within the pole-exclusion radius of a gamma pole."""


class DomainError(DeltaBetaError):
    """An argument is outside the mathematical domain of the operation."""


class SupportError(DeltaBetaError):
    """A test function's support does not contain the sampling point 0."""


class QuadratureError(DeltaBetaError):
    """Quadrature failed to converge.

    Carries the best estimate and its error bound so callers can decide
    whether the partial result is still usable.
    """

    def __init__(self, message, estimate=None, error_bound=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
