"""Permutations of {1..n} in one-line notation, and the indexed table of S_n.

Composition is right-to-left: ``(u * w)(i) = u(w(i))``. Right multiplication
by the simple transposition ``s_i = (i, i+1)`` swaps positions i and i+1 of
the one-line notation, and raises the length exactly when ``w(i) < w(i+1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..partitions import Partition, conjugate

__all__ = [
    "Perm",
    "PermTable",
    "perm_table",
    "young_subgroup",
    "young_generators",
    "longest_element",
    "row_to_column_element",
]


def _inversions(images: tuple[int, ...]) -> int:
    return sum(1 for a, b in itertools.combinations(images, 2) if a > b)


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]
    length: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "length", _inversions(images))

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Perm":
        """The transposition ``(i, i+1)``, 1 <= i <= n-1."""
        return cls.identity(n).times_simple(i)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        out = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            out[w - 1] = i
        return Perm(tuple(out))

    def times_simple(self, i: int) -> "Perm":
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for n={self.n}")
        im = list(self.images)
        im[i - 1], im[i] = im[i], im[i - 1]
        return Perm(tuple(im))

    def is_right_ascent(self, i: int) -> bool:
        """True iff ``l(w s_i) > l(w)``."""
        return self.images[i - 1] < self.images[i]

    def reduced_word(self) -> list[int]:
        """Generator indices ``[i1, ..., ik]`` with ``w = s_i1 s_i2 ... s_ik``, k = l(w)."""
        im = list(self.images)
        word: list[int] = []
        # bubble sort from the right: w s_i ... = identity
        done = False
        while not done:
            done = True
            for i in range(len(im) - 1):
                if im[i] > im[i + 1]:
                    im[i], im[i + 1] = im[i + 1], im[i]
                    word.append(i + 1)
                    done = False
        return word[::-1]


class PermTable:
    """All of S_n indexed by position, with right-multiplication tables per generator."""

    def __init__(self, n: int):
        self.n = n
        perms = [Perm(p) for p in itertools.permutations(range(1, n + 1))]
        perms.sort(key=lambda w: (w.length, w.images))
        self.perms = perms
        self.index = {w: k for k, w in enumerate(perms)}
        size = len(perms)
        # rmul[i-1][k] = index of perms[k] * s_i; ascent[i-1][k] = l grows
        self.rmul = np.zeros((max(n - 1, 0), size), dtype=np.int64)
        self.ascent = np.zeros((max(n - 1, 0), size), dtype=bool)
        for k, w in enumerate(perms):
            for i in range(1, n):
                self.rmul[i - 1, k] = self.index[w.times_simple(i)]
                self.ascent[i - 1, k] = w.is_right_ascent(i)

    def __len__(self) -> int:
        return len(self.perms)


@lru_cache(maxsize=None)
def perm_table(n: int) -> PermTable:
    return PermTable(n)


def _blocks(comp: tuple[int, ...]) -> list[range]:
    out, start = [], 1
    for c in comp:
        out.append(range(start, start + c))
        start += c
    return out


def young_generators(lam: Partition) -> list[int]:
    """Simple reflections ``s_i`` stabilizing the consecutive blocks of ``lam``."""
    gens = []
    for block in _blocks(lam.parts):
        gens.extend(list(block)[:-1])
    return gens


def young_subgroup(lam: Partition) -> list[Perm]:
    """Elements of the parabolic subgroup ``W_lam`` permuting each block of positions."""
    blocks = _blocks(lam.parts)
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        out.append(Perm(tuple(x for part in choice for x in part)))
    return out


def longest_element(lam: Partition) -> Perm:
    """Longest element of ``W_lam``: reverses each block; length sum of C(lam_i, 2)."""
    return Perm(tuple(x for b in _blocks(lam.parts) for x in reversed(b)))


def row_to_column_element(lam: Partition) -> Perm:
    """The element ``w`` used in the Specht generator ``x_lam tau_w y_lam'``.

    If cell (i, j) holds ``a`` in the row-reading tableau of ``lam`` and ``b``
    in the column-reading one, then ``w(b) = a``. This is the distinguished
    double coset representative with ``W_lam ∩ w^-1 W_lam' w = 1``; the
    longest element of ``W_lam`` would give ``x_lam tau_w y_lam' = 0``.
    """
    dual = conjugate(lam)
    row_start = [sum(lam.parts[:i]) for i in range(len(lam))]
    col_start = [sum(dual.parts[:j]) for j in range(len(dual))]
    images = [0] * lam.n
    for i, length in enumerate(lam.parts):
        for j in range(length):
            images[col_start[j] + i] = row_start[i] + j + 1
    return Perm(tuple(images))
