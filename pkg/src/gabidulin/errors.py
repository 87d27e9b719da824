"""Exception types raised across the package."""


class GabidulinError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(GabidulinError, ValueError):
    pass


class NotPrimeError(FieldError):
    pass


class NotIrreducibleError(FieldError):
    pass


class DegreeMismatchError(FieldError):
    pass


class WrongLengthError(FieldError):
    pass


class DigitOutOfRangeError(FieldError):
    pass


class FieldMismatchError(FieldError):
    """Operands live in different field contexts."""


class FieldDivisionError(GabidulinError, ZeroDivisionError):
    pass


class LengthMismatchError(GabidulinError, ValueError):
    pass


class SingularMatrixError(GabidulinError, ValueError):
    pass


class DivisorZeroError(GabidulinError, ZeroDivisionError):
    pass


class DependentBasisError(GabidulinError, ValueError):
    pass


class DependentEvaluationPointsError(DependentBasisError):
    pass


class ZeroPolynomialError(GabidulinError, ValueError):
    pass


class BadParamsError(GabidulinError, ValueError):
    pass


class DependentGError(BadParamsError, DependentBasisError):
    pass


class DegreeTooHighError(GabidulinError, ValueError):
    pass


class RankOutOfRangeError(GabidulinError, ValueError):
    pass


class RadiusExhaustedError(GabidulinError, RuntimeError):
    """The candidate sweep ran past every possible distance."""


class CandidateBudgetError(GabidulinError, RuntimeError):
    """A sweep or enumeration would exceed the configured budget."""


class TooLargeError(CandidateBudgetError):
    pass


class AmbiguousDecodingError(GabidulinError):
    """More than one closest codeword, or the closest one lies outside the
    unique decoding radius.  ``result`` holds the full list-decoding output."""

    def __init__(self, message, result):
        super().__init__(message)
        self.result = result


class DecodingInvariantError(GabidulinError, AssertionError):
    """An internal consistency check of the decoder failed."""
