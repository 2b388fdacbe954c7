"""Integer helpers: totient, radical, primality, and divisibility predicates."""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division; desk scale (n <= 10**6)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    while n % 2 == 0:
        out[2] = out.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    """Count of 1 <= m <= n coprime to n."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = n
    for p in factorize(n):
        out = (out // p) * (p - 1)
    return out


def totient_range(limit: int) -> list[int]:
    """Sieve phi(0..limit); phi[0] is 0 by convention."""
    if limit < 1:
        raise ValueError(f"expected a positive limit, got {limit}")
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for k in range(p, limit + 1, p):
                phi[k] = (phi[k] // p) * (p - 1)
    phi[0] = 0
    return phi


def radical(n: int) -> int:
    """Product of the distinct prime divisors; radical(1) == 1."""
    out = 1
    for p in factorize(n):
        out *= p
    return out


class IndexPredicate:
    """Divisibility-shaped predicate on positive integers; see subclasses."""

    def __call__(self, n: int) -> bool:
        raise NotImplementedError


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class All(IndexPredicate):
    def __call__(self, n: int) -> bool:
        return True

    def __str__(self) -> str:
        return "all"


@dataclass(frozen=True)
class NotDiv(IndexPredicate):
    """True when p does not divide n."""

    p: int

    def __post_init__(self) -> None:
        _check_prime(self.p)

    def __call__(self, n: int) -> bool:
        return n % self.p != 0

    def __str__(self) -> str:
        return f"ndvd:{self.p}"


@dataclass(frozen=True)
class ExactlyOnce(IndexPredicate):
    """True when p divides n exactly once (p | n and p**2 does not)."""

    p: int

    def __post_init__(self) -> None:
        _check_prime(self.p)

    def __call__(self, n: int) -> bool:
        return n % self.p == 0 and n % (self.p * self.p) != 0

    def __str__(self) -> str:
        return f"exact:{self.p}"


@dataclass(frozen=True)
class DivBySquare(IndexPredicate):
    """True when p**2 divides n."""

    p: int

    def __post_init__(self) -> None:
        _check_prime(self.p)

    def __call__(self, n: int) -> bool:
        return n % (self.p * self.p) == 0

    def __str__(self) -> str:
        return f"sq:{self.p}"


@dataclass(frozen=True)
class Or(IndexPredicate):
    left: IndexPredicate
    right: IndexPredicate

    def __call__(self, n: int) -> bool:
        return self.left(n) or self.right(n)

    def __str__(self) -> str:
        return f"or({self.left},{self.right})"


def parse_predicate(text: str) -> IndexPredicate:
    """Parse the textual predicate form: all | ndvd:p | exact:p | sq:p | or(a,b)."""
    text = text.strip()
    if text == "all":
        return All()
    if text.startswith("or(") and text.endswith(")"):
        inner = text[3:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return Or(parse_predicate(inner[:i]), parse_predicate(inner[i + 1:]))
        raise ValueError(f"malformed or-predicate: {text!r}")
    kind, sep, arg = text.partition(":")
    if sep:
        try:
            p = int(arg)
        except ValueError:
            raise ValueError(f"bad predicate argument in {text!r}") from None
        if kind == "ndvd":
            return NotDiv(p)
        if kind == "exact":
            return ExactlyOnce(p)
        if kind == "sq":
            return DivBySquare(p)
    raise ValueError(f"unknown predicate: {text!r}")
