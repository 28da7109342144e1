"""Typed errors raised by the library.

Every error carries its class name as the user-facing tag; the CLI prints
``ErrorName: message`` on stderr and exits with status 2.
"""


class ExpCharError(Exception):
    """Base class for domain errors."""


class DistinctnessViolation(ExpCharError):
    pass


class ZeroScalar(ExpCharError):
    pass


class SymbolicEvaluation(ExpCharError):
    pass


class ZeroFunction(ExpCharError):
    pass


class ZeroPolynomial(ExpCharError):
    pass


class ZeroConstantTerm(ExpCharError):
    pass


class NotSplitOverRationals(ExpCharError):
    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"factor {factor} has no rational roots")


class SingularSystem(ExpCharError):
    pass


class NotADivisor(ExpCharError):
    pass


class NonIntegerResult(ExpCharError):
    pass


class NonIntegerEntry(ExpCharError):
    pass


class NegativeEntry(ExpCharError):
    pass


class EnumerationTooLarge(ExpCharError):
    pass


class ExpressionSyntaxError(ExpCharError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class NestedDelta(ExpCharError):
    pass


class MultipleDelta(ExpCharError):
    pass


class MixedBaseArithmetic(ExpCharError):
    pass


class RouteMismatch(ExpCharError):
    pass
