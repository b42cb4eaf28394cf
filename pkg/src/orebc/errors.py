"""Exception hierarchy shared by every orebc module."""


class OreError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DivisionByZero(OreError, ZeroDivisionError):
    pass


class FieldMismatch(OreError, ValueError):
    pass


class ZeroPolynomial(OreError, ValueError):
    pass


class BothZero(OreError, ValueError):
    pass


class NotInvertible(OreError, ValueError):
    pass


class AlgebraMismatch(OreError, ValueError):
    pass


class ZeroElement(OreError, ValueError):
    pass


class NotCommuting(OreError):
    """Raised when an operation needs PQ = QP and the pair does not commute."""


class HypothesisViolated(OreError):
    """Two same-degree centralizer elements have non-proportional leading coefficients."""


class NotInCentralizer(OreError):
    pass


class NotFound(OreError):
    """No annihilating polynomial within the searched bounds.

    This is inconclusive: it says nothing about algebraic independence.
    """

    def __init__(self, max_s, max_t, max_y):
        self.max_s, self.max_t, self.max_y = max_s, max_t, max_y
        super().__init__(f"no annihilator with s<={max_s} t<={max_t} y<={max_y}")

    @property
    def bounds(self):
        return (self.max_s, self.max_t, self.max_y)


class ParseError(OreError):
    """Malformed expression text (CLI exit code 2)."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ExponentError(ParseError):
    pass


class ConfigError(ParseError):
    pass
