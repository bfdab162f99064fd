"""Exact rationals for integer exponents, tolerance-carrying floats otherwise."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

DEFAULT_ABS_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ApproxScalar:
    """A float whose comparisons absorb ``abs_tol``: ``a <= b`` means ``a <= b + abs_tol``."""

    value: float
    abs_tol: float = DEFAULT_ABS_TOL

    def __float__(self) -> float:
        return float(self.value)

    def _tol(self, other) -> float:
        return max(self.abs_tol, getattr(other, "abs_tol", 0.0))

    def __le__(self, other) -> bool:
        return self.value <= float(other) + self._tol(other)

    def __ge__(self, other) -> bool:
        return self.value + self._tol(other) >= float(other)

    def __lt__(self, other) -> bool:
        return not self >= other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __eq__(self, other) -> bool:
        try:
            return abs(self.value - float(other)) <= self._tol(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self) -> str:
        return f"ApproxScalar({self.value!r})"


Scalar = Union[Fraction, ApproxScalar]


def is_integral(alpha) -> bool:
    if isinstance(alpha, Rational):
        return alpha.denominator == 1
    return float(alpha).is_integer()


def as_scalar(x) -> Scalar:
    """Wrap a raw kernel result: rationals stay exact, anything else becomes approximate."""
    if isinstance(x, ApproxScalar):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    return ApproxScalar(float(x))


def leq(a, b, abs_tol: float = DEFAULT_ABS_TOL) -> bool:
    """``a <= b``, exactly when both sides are rational, else with absolute tolerance."""
    if isinstance(a, Rational) and isinstance(b, Rational):
        return a <= b
    return float(a) <= float(b) + abs_tol


def same(a, b, abs_tol: float = DEFAULT_ABS_TOL) -> bool:
    if isinstance(a, Rational) and isinstance(b, Rational):
        return a == b
    return abs(float(a) - float(b)) <= abs_tol


def to_text(x) -> str:
    """Serialized form: ``"p/q"`` for rationals, shortest round-trip decimal for floats."""
    if isinstance(x, Rational):
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def approx6(x) -> float:
    return round(float(x), 6)


def sqrt_scalar(x) -> ApproxScalar:
    return ApproxScalar(math.sqrt(float(x)))
