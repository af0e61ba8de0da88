"""Exception types raised across the package."""


class TrinomError(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(TrinomError):
    """The requested field characteristic is not a prime number."""


class NotPrimitive(TrinomError):
    """A user-supplied modulus polynomial fails the primitivity test."""


class CapExceeded(TrinomError):
    """The requested field or scan is larger than the configured cap."""


class DivisionByZero(TrinomError, ZeroDivisionError):
    """Multiplicative inverse (or negative power) of the zero element."""


class NotADivisor(TrinomError):
    """A polynomial expected to divide x^n - 1 leaves a nonzero remainder."""


class NotInSubfield(TrinomError):
    """An element required to lie in GF(q) does not."""


class NonIntegerSum(TrinomError):
    """A character sum expected to be a rational integer is not one."""


class PreconditionViolated(TrinomError):
    """Operation called outside its stated hypotheses."""


class EvenCharacteristic(TrinomError):
    """Operation defined only for fields of odd characteristic."""


class ZeroRho(TrinomError):
    """The shift parameter rho must be a nonzero subfield element."""


class DimensionNotThree(TrinomError):
    """The chosen exponents do not produce a dimension-3 code."""


class WrongDegree(TrinomError):
    """A parity-check polynomial has the wrong degree for this operation."""


class InconsistentInput(TrinomError):
    """A weight distribution is not consistent with the stated [n, k] code."""


class ConditionsNotMet(TrinomError):
    """The two gcd conditions do not hold for the given exponents."""


class QTooSmall(TrinomError):
    """The operation requires q > 2."""


class InvariantViolation(TrinomError):
    """An arithmetic invariant the implementation relies on was violated."""
