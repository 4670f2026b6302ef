"""Exception hierarchy shared by all polyharm modules."""


class PolyharmError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(PolyharmError):
    """Raised by the expression parser; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DimensionMismatchError(PolyharmError):
    """Operands live in different ambient dimensions."""


class NotDivisibleError(PolyharmError):
    """|x|^{2k} does not divide the given polynomial."""


class NotPolynomialError(PolyharmError):
    """A radial expression has no polynomial representation."""


class DomainError(PolyharmError):
    """An argument is outside the operation's domain of validity."""
