"""The quantum characteristic ``l`` of (q, r) and the standing hypotheses on it."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "InvalidParameters",
    "ModularParams",
    "is_prime",
    "is_prime_power",
    "divisors",
    "multiplicative_order",
    "quantum_characteristic",
    "make_params",
]


class InvalidParameters(ValueError):
    """(n, q, r) violates a standing hypothesis."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def is_prime_power(m: int) -> bool:
    """Trial factorization: true iff ``m = p**k`` with p prime, k >= 1."""
    if m < 2:
        return False
    p = 2
    while p * p <= m and m % p:
        p += 1
    if m % p:
        return True  # m itself is prime
    while m % p == 0:
        m //= p
    return m == 1


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def multiplicative_order(q: int, r: int) -> int:
    """Smallest ``i >= 1`` with ``q**i == 1 (mod r)``, for prime ``r``."""
    if not is_prime(r):
        raise InvalidParameters("r must be prime")
    base = q % r
    if base == 0:
        raise InvalidParameters("q not invertible mod r")
    # the order divides r - 1
    for d in divisors(r - 1):
        if pow(base, d, r) == 1:
            return d
    raise AssertionError("unreachable for prime r")


def quantum_characteristic(q: int, r: int) -> int:
    """``r`` when q = 1 mod r, otherwise the multiplicative order of q mod r."""
    order = multiplicative_order(q, r)
    return r if order == 1 else order


@dataclass(frozen=True)
class ModularParams:
    """Rank ``n``, field size ``q``, coefficient characteristic ``r``, and derived ``l``."""

    n: int
    q: int
    r: int
    l: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameters("n must be at least 1")
        if not is_prime(self.r):
            raise InvalidParameters("r must be prime")
        if not is_prime_power(self.q):
            raise InvalidParameters("q must be a prime power")
        if self.q % self.r == 0:
            raise InvalidParameters("defining characteristic excluded")
        if (self.q - 1) % self.r == 0:
            raise InvalidParameters("hypothesis r ∤ q(q−1) violated")
        object.__setattr__(self, "l", quantum_characteristic(self.q, self.r))

    @property
    def q_res(self) -> int:
        """q reduced mod r."""
        return self.q % self.r

    def to_dict(self) -> dict[str, int]:
        return {"n": self.n, "q": self.q, "r": self.r, "l": self.l}


def make_params(n: int, q: int, r: int) -> ModularParams:
    return ModularParams(n, q, r)
