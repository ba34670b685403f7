"""Exception types raised across the package."""


class PqrsError(Exception):
    """Base class for all library errors."""


class NotDivisible(PqrsError, ArithmeticError):
    """Raised when an exact quotient does not exist in the Laurent ring."""


class HalfPowerOfNonSquare(PqrsError, ValueError):
    """A half-integer power was requested of a rational with no rational square root."""


class ZeroBaseNegativeExponent(PqrsError, ZeroDivisionError):
    pass


class ImaginaryResidueTooLarge(PqrsError, ArithmeticError):
    """The imaginary part of a continuous Hermite value exceeded tolerance."""


class PreconditionViolated(PqrsError, ValueError):
    pass


class TruncationTooSmall(PqrsError, ValueError):
    pass


class DimensionMismatch(PqrsError, ValueError):
    pass
