"""Exception hierarchy shared by all flagpush modules."""


class FlagpushError(Exception):
    """Base class for every error raised by this package."""


class InvalidCartanType(FlagpushError, ValueError):
    pass


class SizeGuardExceeded(FlagpushError):
    pass


class IndexOutOfRange(FlagpushError, IndexError):
    pass


class RankMismatch(FlagpushError, ValueError):
    pass


class EmptySubset(FlagpushError, ValueError):
    pass


class NotDivisible(FlagpushError, ArithmeticError):
    pass


class DivisionByZeroPoly(FlagpushError, ZeroDivisionError):
    pass


class ParseError(FlagpushError, ValueError):
    """Polynomial expression could not be parsed; ``position`` is a 0-based offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class PolySyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class ExponentNotNonnegativeInteger(ParseError):
    pass


class NotPolynomialResult(FlagpushError, ArithmeticError):
    pass


class RepresentativeMismatch(FlagpushError):
    pass


class NotInImage(FlagpushError):
    pass


class NotInvariant(FlagpushError, ValueError):
    def __init__(self, message, reflection=None):
        self.reflection = reflection
        super().__init__(message)


class RouteDisagreement(FlagpushError):
    pass
