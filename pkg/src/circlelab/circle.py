"""Exact points on the circle of circumference 1.

Every point is stored as its unique rational representative in [0, 1),
kept in lowest terms by ``fractions.Fraction``.  All group operations are
pure and exact, so set-level equality downstream stays decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, a 'p/q' string, or a Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_fraction(q: Fraction) -> str:
    """Render 'p/q', omitting the denominator when it is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True, order=True)
class CirclePoint:
    """A point of the circle, i.e. a real number taken modulo 1.

    Construction normalizes any rational input to the representative in
    [0, 1); ``CirclePoint(Fraction(7, 3))`` equals ``CirclePoint(Fraction(1, 3))``.
    Immutable; safe to share.
    """

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_fraction(self.value) % 1)

    def norm(self) -> Fraction:
        """Distance to the nearest integer; lies in [0, 1/2]."""
        return min(self.value, 1 - self.value)

    def order(self) -> int:
        """Least k >= 1 with k * self == zero, i.e. the reduced denominator."""
        return self.value.denominator

    def dist_to_order(self, n: int) -> Fraction:
        """Distance to the nearest reduced fraction with denominator exactly n.

        Scans all totient(n) reduced fractions m/n; O(n), which is fine at
        desk scale.  For n == 1 the only candidate is the zero point.
        """
        if n < 1:
            raise ValueError(f"order must be a positive integer, got {n}")
        best: Fraction | None = None
        for m in range(n):
            if gcd(m, n) == 1:
                d = (self - CirclePoint(Fraction(m, n))).norm()
                if best is None or d < best:
                    best = d
        assert best is not None  # m = 0 always qualifies when n == 1
        return best

    def __add__(self, other: "CirclePoint") -> "CirclePoint":
        if not isinstance(other, CirclePoint):
            return NotImplemented
        return CirclePoint(self.value + other.value)

    def __neg__(self) -> "CirclePoint":
        return CirclePoint(-self.value)

    def __sub__(self, other: "CirclePoint") -> "CirclePoint":
        if not isinstance(other, CirclePoint):
            return NotImplemented
        return CirclePoint(self.value - other.value)

    def __rmul__(self, k: int) -> "CirclePoint":
        if not isinstance(k, int):
            return NotImplemented
        return CirclePoint(k * self.value)

    def __str__(self) -> str:
        return f"[{format_fraction(self.value)}]"


ZERO_POINT = CirclePoint(Fraction(0))


def circle_point(value: RationalLike) -> CirclePoint:
    """Convenience constructor accepting ints, 'p/q' strings, and Fractions."""
    return CirclePoint(as_fraction(value))
