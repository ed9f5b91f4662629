"""Exception hierarchy shared by every module."""


class ReciprocalError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ReciprocalError):
    pass


class NonPositiveEntry(ReciprocalError):
    pass


class NonUnitDiagonal(ReciprocalError):
    pass


class ReciprocityViolation(ReciprocalError):
    """Raised when ``a_ij * a_ji`` deviates from 1.

    ``pair`` holds the 0-based indices of the worst offending entry.
    """

    def __init__(self, message, pair=None, deviation=None):
        super().__init__(message)
        self.pair = pair
        self.deviation = deviation


class IndexOutOfRange(ReciprocalError):
    pass


class NoConvergence(ArithmeticError):
    def __init__(self, max_iter):
        super().__init__(f"power iteration did not converge in {max_iter} iterations")
        self.max_iter = max_iter


class NonPositiveArgument(ReciprocalError):
    pass


class OrderTooLarge(ReciprocalError):
    pass


class OrderTooSmall(ReciprocalError):
    pass


class OrderNotOdd(ReciprocalError):
    pass


class ShapeMismatch(ReciprocalError):
    pass


class NotConstantRowSums(ReciprocalError):
    pass


class ConsistentInput(ReciprocalError):
    pass


class ConsistentInputAtFullOrder(ConsistentInput):
    """A consistent matrix bordered by one row always has an efficient Perron vector."""


class WrongOrder(ReciprocalError):
    pass


class InternalInconsistency(RuntimeError):
    """Equivalent criteria disagreed; indicates a tolerance fault."""


class NotFound(RuntimeError):
    pass


class UnknownProperty(KeyError):
    pass
