import random
from math import gcd

import pytest
import sympy

from circlelab import (
    All,
    DivBySquare,
    ExactlyOnce,
    NotDiv,
    Or,
    is_prime,
    parse_predicate,
    radical,
    totient,
    totient_range,
)


def test_totient_examples():
    assert totient(5) == 4
    assert totient(1) == 1
    # brute-force gcd count
    assert totient(12) == sum(1 for m in range(1, 13) if gcd(m, 12) == 1) == 4


def test_totient_against_sympy():
    for n in range(1, 400):
        assert totient(n) == sympy.totient(n)


def test_totient_range_matches_pointwise():
    phi = totient_range(300)
    assert phi[0] == 0
    for n in range(1, 301):
        assert phi[n] == totient(n)


def test_totient_multiplicative():
    pairs = [(m, n) for m in range(1, 60) for n in range(1, 60) if gcd(m, n) == 1]
    for m, n in pairs:
        assert totient(m * n) == totient(m) * totient(n)
    rng = random.Random(3)
    checked = 0
    while checked < 200:
        m, n = rng.randint(1, 500), rng.randint(1, 500)
        if gcd(m, n) == 1:
            assert totient(m * n) == totient(m) * totient(n)
            checked += 1


def test_radical_examples():
    assert radical(12) == 6
    assert radical(1) == 1
    product = 1
    for p in sympy.primefactors(360):
        product *= p
    assert radical(360) == product == 30


def test_radical_divides_and_idempotent():
    for n in range(1, 2000):
        assert n % radical(n) == 0
        assert radical(radical(n)) == radical(n)


def test_totient_rejects_nonpositive():
    with pytest.raises(ValueError):
        totient(0)
    with pytest.raises(ValueError):
        totient_range(0)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    for n in range(2, 500):
        assert is_prime(n) == sympy.isprime(n)


# -- predicates -------------------------------------------------------------------


def test_predicate_examples():
    assert ExactlyOnce(3)(12) is True
    assert ExactlyOnce(2)(12) is False
    assert NotDiv(5)(12) is True
    assert All()(1) is True
    assert DivBySquare(2)(12) is True
    assert Or(NotDiv(2), DivBySquare(2))(4) is True
    assert Or(NotDiv(2), DivBySquare(2))(6) is False


def test_predicates_partition():
    primes = [p for p in range(2, 51) if is_prime(p)]
    for p in primes:
        a, b, c = NotDiv(p), ExactlyOnce(p), DivBySquare(p)
        for n in range(1, 10_001):
            assert a(n) + b(n) + c(n) == 1


def test_predicates_require_prime():
    for cls in (NotDiv, ExactlyOnce, DivBySquare):
        with pytest.raises(ValueError):
            cls(4)
        with pytest.raises(ValueError):
            cls(1)


def test_predicate_text_round_trip():
    for pred in (
        All(),
        NotDiv(3),
        ExactlyOnce(2),
        DivBySquare(5),
        Or(NotDiv(2), DivBySquare(3)),
        Or(Or(NotDiv(2), ExactlyOnce(3)), DivBySquare(5)),
    ):
        assert parse_predicate(str(pred)) == pred


def test_parse_predicate_rejects_garbage():
    for bad in ("nope", "ndvd:", "ndvd:x", "or(all)", "or(all,", ""):
        with pytest.raises(ValueError):
            parse_predicate(bad)
