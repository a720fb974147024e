"""Exception hierarchy shared by all modules."""


class WyskewError(ValueError):
    """Base class for every error raised by the package."""


class NotHermitian(WyskewError):
    pass


class NoConvergence(WyskewError, ArithmeticError):
    pass


class NotPositiveSemidefinite(WyskewError):
    pass


class DimensionMismatch(WyskewError):
    pass


class InvalidDensityMatrix(WyskewError):
    pass


class BlochOutOfBall(WyskewError):
    pass


class BadRank(WyskewError):
    pass


class InvalidPVM(WyskewError):
    pass


class NonpositiveDuration(WyskewError):
    pass


class InconsistentInputs(WyskewError):
    pass


class NotUnitDirection(WyskewError):
    pass


class OutOfRange(WyskewError):
    pass


class InternalConsistencyError(WyskewError, ArithmeticError):
    """A scalar that must be nonnegative came out clearly negative."""


class ToleranceExceeded(WyskewError):
    pass
