"""Exception types shared across the package."""


class ExpquadError(Exception):
    """Base class for all package-specific errors."""


class SeriesConvergenceError(ExpquadError):
    """Power series did not reach the requested tolerance within the term cap."""


class UnsupportedDegreeError(ExpquadError):
    """Requested rational-approximation degree is outside the supported range."""


class SingularDenominatorError(ExpquadError):
    """A partial-fraction denominator fell below the floor; the spectrum
    assumption (nonnegative real part) is likely violated."""


class WeightAccuracyError(ExpquadError):
    """Computed quadrature weights violate the order-condition residual bound."""


class NonFiniteStateError(ExpquadError):
    """The time stepper produced a NaN or Inf state."""

    def __init__(self, step, msg=None):
        self.step = step
        super().__init__(msg or f"non-finite state at step n={step}")
