"""Exception types raised across the package.

Every error is a ``ValueError`` so callers that only care about bad input can
catch one thing; the CLI maps all of them to exit status 2.
"""


class SchurBoundError(ValueError):
    pass


class MalformedDocument(SchurBoundError):
    pass


class IndexOutOfRange(SchurBoundError):
    pass


class BadVectorLength(SchurBoundError):
    pass


class NonPrimeModulus(SchurBoundError):
    pass


class ImageDoesNotSpan(SchurBoundError):
    pass


class SingularMatrix(SchurBoundError):
    pass


class InfeasibleDimensions(SchurBoundError):
    pass


class HypothesisViolated(SchurBoundError):
    pass


class EnumerationTooLarge(SchurBoundError):
    pass


class InvalidParams(SchurBoundError):
    pass


class DuplicatePrime(SchurBoundError):
    pass


class InfeasibleParameters(SchurBoundError):
    pass
