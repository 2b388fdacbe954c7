"""Approximate-order sets and their truncated tail unions.

The set of points of approximate order n (up to distance delta) is the
thickening of the finitely many order-n points of the circle: for small
delta it is totient(n) disjoint arcs of length 2*delta.  The
well-approximable set at truncation is the union of these over an index
range filtered by a divisibility predicate.  Infinite limsups are never
materialised; callers work with the monotone family of truncations plus
the subadditive upper bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .arcs import ArcSet, thicken, union_all
from .circle import CirclePoint, RationalLike, as_fraction, format_fraction, parse_fraction
from .numtheory import All, DivBySquare, ExactlyOnce, IndexPredicate, NotDiv, is_prime


# -- radius sequences ---------------------------------------------------------


@dataclass(frozen=True)
class Power:
    """delta_n = coeff / n**exponent, with coeff > 0 and exponent >= 0."""

    coeff: Fraction
    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if self.coeff <= 0:
            raise ValueError(f"power-law coefficient must be positive, got {self.coeff}")
        if self.exponent < 0:
            raise ValueError(f"power-law exponent must be >= 0, got {self.exponent}")

    def eval_at(self, n: int) -> Fraction:
        _check_index(n)
        return self.coeff / n**self.exponent

    def scale(self, m: RationalLike) -> "Power":
        return Power(self.coeff * as_fraction(m), self.exponent)

    def to_json_dict(self) -> dict:
        return {"kind": "power", "c": format_fraction(self.coeff), "a": self.exponent}

    def __str__(self) -> str:
        return f"power:{format_fraction(self.coeff)}:{self.exponent}"


@dataclass(frozen=True)
class Constant:
    """delta_n = value for every n; the value may be <= 0 (empty thickenings)."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_fraction(self.value))

    def eval_at(self, n: int) -> Fraction:
        _check_index(n)
        return self.value

    def scale(self, m: RationalLike) -> "Constant":
        return Constant(self.value * as_fraction(m))

    def to_json_dict(self) -> dict:
        return {"kind": "constant", "c": format_fraction(self.value)}

    def __str__(self) -> str:
        return f"const:{format_fraction(self.value)}"


@dataclass(frozen=True)
class Table:
    """Explicitly tabulated radii delta_1, delta_2, ...; out of range is 0."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    def eval_at(self, n: int) -> Fraction:
        _check_index(n)
        if n <= len(self.values):
            return self.values[n - 1]
        return Fraction(0)

    def scale(self, m: RationalLike) -> "Table":
        f = as_fraction(m)
        return Table(tuple(v * f for v in self.values))

    def to_json_dict(self) -> dict:
        return {"kind": "table", "values": [format_fraction(v) for v in self.values]}

    def __str__(self) -> str:
        return "table:" + ",".join(format_fraction(v) for v in self.values)


DeltaSequence = Union[Power, Constant, Table]


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")


def delta_from_json_dict(data: dict) -> DeltaSequence:
    kind = data.get("kind")
    if kind == "power":
        return Power(parse_fraction(data["c"]), int(data["a"]))
    if kind == "constant":
        return Constant(parse_fraction(data["c"]))
    if kind == "table":
        return Table(tuple(parse_fraction(v) for v in data["values"]))
    raise ValueError(f"unknown delta kind: {kind!r}")


def parse_delta(text: str) -> DeltaSequence:
    """Parse either the JSON form or the inline form power:c:a | const:c | table:v1,v2,..."""
    text = text.strip()
    if text.startswith("{"):
        return delta_from_json_dict(json.loads(text))
    kind, sep, rest = text.partition(":")
    if sep:
        if kind == "power":
            c, _, a = rest.partition(":")
            return Power(parse_fraction(c), int(a))
        if kind in ("const", "constant"):
            return Constant(parse_fraction(rest))
        if kind == "table":
            return Table(tuple(parse_fraction(v) for v in rest.split(",")))
    raise ValueError(f"cannot parse delta sequence: {text!r}")


# -- approximate-order sets ----------------------------------------------------


def finite_order_points(n: int) -> list[CirclePoint]:
    """The totient(n) points of order exactly n, sorted: reduced fractions m/n."""
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    return [CirclePoint(Fraction(m, n)) for m in range(n) if gcd(m, n) == 1]


def approx_order_set(n: int, delta: RationalLike) -> ArcSet:
    """Thickening of the order-n points by delta.

    For 0 < delta < 1/(2n) this is totient(n) disjoint arcs of length
    2*delta, total measure 2*totient(n)*delta.
    """
    return thicken(finite_order_points(n), delta)


@dataclass(frozen=True)
class TailUnionSpec:
    """Finite truncation of a predicate-bounded tail of approximate-order sets."""

    n_min: int
    n_max: int
    pred: IndexPredicate
    delta: DeltaSequence

    def __post_init__(self) -> None:
        if self.n_min < 1:
            raise ValueError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_min > self.n_max:
            raise ValueError(f"need n_min <= n_max, got [{self.n_min}, {self.n_max}]")


def tail_union(spec: TailUnionSpec) -> ArcSet:
    """Union of approx_order_set(i, delta_i) over n_min <= i <= n_max with pred(i)."""
    terms = (
        approx_order_set(i, spec.delta.eval_at(i))
        for i in range(spec.n_min, spec.n_max + 1)
        if spec.pred(i)
    )
    return union_all(terms)


# -- scaling/translation inclusion checks ----------------------------------------

# Each check realises one exactly-verifiable containment between
# approximate-order sets and must return True on every valid input; they
# are exposed as self-checks over the arc algebra.


def check_inclusion_i(m: int, n: int, delta: RationalLike) -> bool:
    """m * AO(n, delta) inside AO(n, m*delta), for coprime m, n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} must be coprime")
    d = as_fraction(delta)
    return approx_order_set(n, d).mul_image(m) <= approx_order_set(n, m * d)


def check_inclusion_ii(m: int, n: int, delta: RationalLike) -> bool:
    """m * AO(n*m, delta) inside AO(n, m*delta)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    d = as_fraction(delta)
    return approx_order_set(n * m, d).mul_image(m) <= approx_order_set(n, m * d)


def check_inclusion_iii(a: CirclePoint, n: int, delta: RationalLike) -> bool:
    """a + AO(n, delta) inside AO(order(a)*n, delta), for order(a) coprime to n."""
    if n < 1:
        raise ValueError("n must be positive")
    q = a.order()
    if gcd(q, n) != 1:
        raise ValueError(f"order(a)={q} and n={n} must be coprime")
    d = as_fraction(delta)
    return approx_order_set(n, d).translate(a) <= approx_order_set(q * n, d)


def check_inclusion_iv(a: CirclePoint, n: int, delta: RationalLike) -> bool:
    """a + AO(n, delta) equals AO(n, delta) exactly, when order(a)**2 divides n."""
    if n < 1:
        raise ValueError("n must be positive")
    q = a.order()
    if n % (q * q) != 0:
        raise ValueError(f"order(a)**2 = {q * q} must divide n = {n}")
    s = approx_order_set(n, as_fraction(delta))
    return s.translate(a) == s


def gallagher_decomposition(
    p: int, n_min: int, n_max: int, delta: DeltaSequence
) -> tuple[ArcSet, ArcSet, ArcSet]:
    """Split the truncated well-approximable set by divisibility at a prime p.

    Returns (A, B, C): the tail unions over indices with p not dividing n,
    p dividing n exactly once, and p**2 dividing n.  Their union is exactly
    the unfiltered tail union over the same range, since the three
    predicates partition the positive integers.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = tail_union(TailUnionSpec(n_min, n_max, NotDiv(p), delta))
    b = tail_union(TailUnionSpec(n_min, n_max, ExactlyOnce(p), delta))
    c = tail_union(TailUnionSpec(n_min, n_max, DivBySquare(p), delta))
    return a, b, c
