"""Exception hierarchy shared by the package."""

from __future__ import annotations


class ZagrebError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ZagrebError, ValueError):
    """Malformed edge-list or graph6 input."""


class GraphRangeError(ParseError):
    """A vertex label lies outside the declared vertex range."""


class DomainError(ZagrebError, ValueError):
    """An index or bound is undefined for the given graph (e.g. delta = 0 with a negative exponent)."""


class HypothesisError(ZagrebError, ValueError):
    """The hypotheses of a bound are not met (too few vertices, bad positions, ...)."""


class CapacityError(ZagrebError):
    """Requested enumeration exceeds the exhaustive-enumeration guard."""


class ConvergenceError(ZagrebError, ArithmeticError):
    """Power iteration did not converge within its iteration cap."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual
