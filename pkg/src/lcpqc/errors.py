"""Exception hierarchy shared across the package."""


class LcpqcError(Exception):
    """Base class for all errors raised by this package."""


# --- field construction and element arithmetic ---

class NonPrimeCharacteristic(LcpqcError):
    pass


class ReducibleModulus(LcpqcError):
    pass


class DegreeMismatch(LcpqcError):
    pass


class FieldMismatch(LcpqcError):
    pass


class DivisionByZero(LcpqcError):
    pass


class ElementSyntaxError(LcpqcError):
    pass


class NonPrimitiveGeneratorForPowerForm(LcpqcError):
    pass


class ValueOutOfField(LcpqcError):
    pass


# --- polynomial ring ---

class DivisionByZeroPoly(LcpqcError):
    pass


class NonCoprimeParameters(LcpqcError):
    pass


class ZeroLambda(LcpqcError):
    pass


# --- code construction and linear algebra ---

class NotDivisor(LcpqcError):
    pass


class InvalidStandardForm(LcpqcError):
    pass


class RankDeficient(LcpqcError):
    pass


class ShapeMismatch(LcpqcError):
    pass


class ZeroCode(LcpqcError):
    """Minimum distance is undefined for the zero code."""


class MismatchedAmbient(LcpqcError):
    """The two codes do not share the same (q, m, lambda)."""


class DegreeTooLarge(LcpqcError):
    pass


class BudgetExceeded(LcpqcError):
    """A distance search ran out of budget.

    Carries the best bounds established so far: ``lower`` from completed
    column-search rounds, ``upper`` from the lightest codeword seen.
    Either may be None.
    """

    def __init__(self, msg, lower=None, upper=None, work=0):
        super().__init__(msg)
        self.lower = lower
        self.upper = upper
        self.work = work


class TableParseError(LcpqcError):
    """Bad row in a best-known-distance CSV table; carries the line number."""

    def __init__(self, msg, line=None):
        super().__init__(msg)
        self.line = line
