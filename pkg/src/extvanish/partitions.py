"""Integer partitions: enumeration, conjugation, dominance, regularity.

Partitions are stored without trailing zeros, so the empty partition is the
unique partition of 0 and equality is plain tuple equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "Partition",
    "Multipartition",
    "IncomparableWeights",
    "enumerate_partitions",
    "conjugate",
    "is_l_regular",
    "is_l_restricted",
    "dominates",
    "dominated_set",
    "hook_lengths",
    "standard_tableau_count",
    "parse_partition",
    "format_partition",
]


class IncomparableWeights(ValueError):
    """Dominance was asked of partitions of different integers."""


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def sort_key(self) -> tuple[int, ...]:
        """Key that sorts partitions of the same n in reverse-lex order."""
        return tuple(-p for p in self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Multipartition:
    """A tuple of partitions; ``shape`` is the composition of their sizes."""

    components: tuple[Partition, ...]
    shape: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "shape", tuple(c.n for c in comps))

    @property
    def n(self) -> int:
        return sum(self.shape)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first in reverse-lexicographic order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    """The transpose ``lam'`` with ``lam'_j = #{i : lam_i >= j}``."""
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def _check_l(l: int) -> None:
    if l < 2:
        raise ValueError(f"l must be at least 2, got {l}")


def is_l_regular(lam: Partition, l: int) -> bool:
    """True iff no part value occurs ``l`` or more times."""
    _check_l(l)
    run = 0
    prev = None
    for p in lam.parts:
        run = run + 1 if p == prev else 1
        prev = p
        if run >= l:
            return False
    return True


def is_l_restricted(lam: Partition, l: int) -> bool:
    """True iff the conjugate of ``lam`` is l-regular.

    Equivalently ``lam_i - lam_{i+1} < l`` for every i (with a trailing zero).
    """
    return is_l_regular(conjugate(lam), l)


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (every partial sum of mu <= lam's)."""
    if mu.n != lam.n:
        raise IncomparableWeights(f"incomparable weights: {mu.n} != {lam.n}")
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu.part(i)
        s_lam += lam.part(i)
        if s_mu > s_lam:
            return False
    return True


def dominated_set(lam: Partition) -> list[Partition]:
    """Every ``mu`` of the same size with ``mu`` dominated by ``lam``, in reverse-lex order."""
    return [mu for mu in enumerate_partitions(lam.n) if dominates(mu, lam)]


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Ragged matrix of hook lengths, row i holding ``lam[i]`` entries.

    With 0-based storage indices (i, j) the hook is
    ``lam[i] + lam'[j] - i - j - 1``, i.e. the 1-based
    ``lam_i + lam'_j + 1 - i - j``.
    """
    dual = conjugate(lam)
    return [[lam[i] + dual[j] - i - j - 1 for j in range(lam[i])] for i in range(len(lam))]


def standard_tableau_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    if lam.n < 1:
        raise ValueError("partition must be nonempty")
    prod = math.prod(h for row in hook_lengths(lam) for h in row)
    return math.factorial(lam.n) // prod


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str | Sequence[int]) -> Partition:
    """Parse ``"2^2,1^2"`` style text (also plain ``"2,2,1,1"`` or ``"(3,1)"``).

    Parts may be given in any order and are sorted; zero parts are dropped.
    """
    if not isinstance(text, str):
        return Partition(tuple(sorted((int(p) for p in text if int(p) != 0), reverse=True)))
    body = text.strip().strip("()[]").strip()
    if not body:
        return Partition(())
    parts: list[int] = []
    for token in body.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value:
            parts.extend([value] * count)
    return Partition(tuple(sorted(parts, reverse=True)))


def format_partition(lam: Partition) -> str:
    """Canonical fully expanded text form, e.g. ``"2,2,1,1"``."""
    return ",".join(str(p) for p in lam.parts)
