"""Exception hierarchy shared by every module of the package."""


class CasasAlveroError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(CasasAlveroError, ValueError):
    pass


class ZeroInverse(CasasAlveroError, ZeroDivisionError):
    pass


class ModulusMismatch(CasasAlveroError, ValueError):
    pass


class FactorBudgetExceeded(CasasAlveroError):
    pass


class DivisionByZeroPoly(CasasAlveroError, ZeroDivisionError):
    pass


class ZeroPolynomial(CasasAlveroError, ValueError):
    pass


class BothZero(CasasAlveroError, ValueError):
    pass


class DegenerateInput(CasasAlveroError, ValueError):
    pass


class NotHomogeneous(CasasAlveroError, ValueError):
    pass


class NotBinomialPair(CasasAlveroError, ValueError):
    pass


class UnboundVariables(CasasAlveroError, ValueError):
    pass


class NotExactDivision(CasasAlveroError, ArithmeticError):
    pass


class DegreeZero(CasasAlveroError, ValueError):
    pass


class IndexOutOfRange(CasasAlveroError, IndexError):
    pass


class UnsupportedDegree(CasasAlveroError, ValueError):
    pass


class NeedsManualAnalysis(CasasAlveroError):
    """A branch of the case analysis does not have the expected shape."""

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class NoSolutionModP(CasasAlveroError):
    pass


class BudgetExceeded(CasasAlveroError):
    pass


class UnsupportedPrime(CasasAlveroError, ValueError):
    pass


class ParseError(CasasAlveroError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position
