import random

import pytest

from extvanish.modular import (
    InvalidParameters,
    divisors,
    is_prime,
    is_prime_power,
    make_params,
    multiplicative_order,
)
from oracles import brute_order

PRIMES = [p for p in range(2, 400) if all(p % d for d in range(2, int(p**0.5) + 1))]


@pytest.mark.parametrize("q, r, order", [(3, 13, 3), (7, 5, 4), (1, 7, 1), (1, 2, 1)])
def test_multiplicative_order_examples(q, r, order):
    assert multiplicative_order(q, r) == order


def test_order_not_invertible():
    with pytest.raises(InvalidParameters, match="q not invertible mod r"):
        multiplicative_order(26, 13)


def test_order_divides_r_minus_1_and_matches_brute_force():
    for r in PRIMES[:40]:
        for q in range(1, 3 * r):
            if q % r == 0:
                continue
            d = multiplicative_order(q, r)
            assert (r - 1) % d == 0
            assert d == brute_order(q, r)


def test_prime_helpers():
    assert [m for m in range(30) if is_prime(m)] == PRIMES[:10]
    assert [m for m in range(2, 33) if is_prime_power(m)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32
    ]


@pytest.mark.parametrize("n, q, r, l", [(6, 3, 13, 3), (4, 7, 5, 4), (3, 2, 3, 2), (2, 4, 5, 2)])
def test_make_params(n, q, r, l):
    assert make_params(n, q, r).l == l


@pytest.mark.parametrize(
    "args, message",
    [
        ((5, 8, 7), "hypothesis r ∤ q\\(q−1\\) violated"),
        ((3, 9, 3), "defining characteristic excluded"),
        ((3, 3, 4), "r must be prime"),
        ((3, 6, 5), "q must be a prime power"),
        ((0, 3, 13), "n must be at least 1"),
    ],
)
def test_make_params_rejects(args, message):
    with pytest.raises(InvalidParameters, match=message):
        make_params(*args)


def test_l_never_one_and_order_is_minimal():
    rng = random.Random(1234)
    seen = 0
    while seen < 100:
        r = rng.choice(PRIMES[1:])
        q = rng.choice([p**k for p in PRIMES[:12] for k in (1, 2, 3)])
        if q % r == 0 or (q - 1) % r == 0:
            continue
        seen += 1
        params = make_params(3, q, r)
        l = params.l
        assert l >= 2
        assert pow(q, l, r) == 1
        for d in divisors(l)[:-1]:
            assert pow(q, d, r) != 1
