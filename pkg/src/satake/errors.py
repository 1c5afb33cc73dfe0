"""Exception types shared across the package."""


class SatakeError(Exception):
    pass


class InexactDivision(SatakeError, ArithmeticError):
    pass


class ZeroDenominatorForm(SatakeError, ZeroDivisionError):
    pass


class AlphabetTooShort(SatakeError, ValueError):
    pass


class CardinalityMismatch(SatakeError, ValueError):
    pass


class NotSquare(SatakeError, ValueError):
    pass


class NotSkew(SatakeError, ValueError):
    pass


class BadIndex(SatakeError, IndexError):
    pass


class OutOfRange(SatakeError, ValueError):
    pass


class DimensionMismatch(SatakeError, ValueError):
    pass


class RepeatedTValues(SatakeError, ValueError):
    pass


class RankMismatch(SatakeError, ValueError):
    pass


class NotIsotropicBasis(SatakeError, ValueError):
    pass


class RankTooSmall(SatakeError, ValueError):
    pass


class BadLabel(SatakeError, ValueError):
    pass


class ParityViolation(SatakeError, ValueError):
    pass
