"""Domain errors. Every failure a caller can act on derives from QFoundError."""


class QFoundError(Exception):
    """Base class; `exit_code` is what the command line reports for it."""

    exit_code = 1


class InvalidGrid(QFoundError, ValueError):
    pass


class GridTooSmall(InvalidGrid):
    pass


class InvalidState(QFoundError, ValueError):
    """A value type was built with data that breaks its invariants."""


class DerivativeVanishes(QFoundError, ArithmeticError):
    pass


class PoleOnGrid(QFoundError, ArithmeticError):
    pass


class DegenerateMoebius(InvalidState):
    pass


class NonMonotoneMap(QFoundError, ValueError):
    pass


class WavefunctionOverflow(QFoundError, OverflowError):
    """Numerov growth left the representable range; renormalize or shrink the grid."""


class NoEigenvalueInRange(QFoundError):
    exit_code = 2


class DegeneratePair(QFoundError, ValueError):
    pass


class NonMonotoneTime(QFoundError):
    pass


class InvalidPotentialSpec(QFoundError, ValueError):
    pass


class DimensionMismatch(QFoundError, ValueError):
    pass


class NotSeriesParallel(QFoundError, ValueError):
    pass


class UnsupportedDimension(QFoundError, ValueError):
    pass


class NegativeEigenvalue(QFoundError):
    """A probability table whose reconstructed matrix is not a state."""

    def __init__(self, message: str, eigenvalues=None):
        super().__init__(message)
        self.eigenvalues = eigenvalues


class InvalidEffect(QFoundError, ValueError):
    pass


class InvariantFailure(QFoundError):
    exit_code = 3
