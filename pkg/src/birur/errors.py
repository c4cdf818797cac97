"""Exceptions raised by the solver."""


class BirurError(Exception):
    """Base class for all errors raised by this package."""


class NotInvertible(BirurError):
    """An element has no inverse in the quotient ring it was asked for."""


class NotZeroDimensional(BirurError):
    """The input system has infinitely many complex solutions."""


class BadParameter(BirurError):
    """A parameter value is outside its allowed range."""


class EmptyVariety(BirurError):
    """The operation needs at least one solution but the system has none."""


class IsolationError(BirurError):
    """Root isolation could not satisfy its preconditions."""


class ParseError(BirurError):
    """Polynomial text could not be parsed.

    Carries the zero-based offset of the offending character.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
