"""Dense linear algebra over the prime field F_p on numpy int64 arrays.

Entries are kept in ``[0, p)``. Products of two entries must fit in int64,
which holds for any p below 3e9; the oracle only uses small primes.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = ["inv", "rref", "rank", "left_kernel", "RowSpace", "spin", "charpoly", "poly_eval_matrix"]


def inv(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` mod ``p`` and its pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray, p: int) -> int:
    return len(rref(m, p)[1])


def left_kernel(m: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{v : v @ m == 0 mod p}``."""
    a = np.asarray(m, dtype=np.int64)
    red, pivots = rref(a.T, p)
    n = a.shape[0]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-red[i, f]) % p
    return basis


class RowSpace:
    """Incrementally built subspace kept in reduced row echelon form."""

    def __init__(self, length: int, p: int):
        self.length = length
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        w = np.array(v, dtype=np.int64) % self.p
        for pc, row in zip(self.pivots, self.rows):
            c = w[pc]
            if c:
                w = (w - c * row) % self.p
        return w

    def add(self, v: np.ndarray) -> bool:
        """Insert ``v``; return whether the dimension grew."""
        w = self.reduce(v)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        w = (w * inv(w[pc], self.p)) % self.p
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c:
                self.rows[i] = (row - c * w) % self.p
        # keep pivots sorted so the basis stays in echelon order
        k = int(np.searchsorted(self.pivots, pc))
        self.rows.insert(k, w)
        self.pivots.insert(k, pc)
        return True

    def __contains__(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v))

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the space."""
        w = np.array(v, dtype=np.int64) % self.p
        coords = w[self.pivots].copy()
        if self.rows and np.any((w - coords @ np.array(self.rows)) % self.p):
            raise ValueError("vector is not in the row space")
        return coords

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.length), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)


def spin(
    seeds: Iterable[np.ndarray],
    actions: Sequence[Callable[[np.ndarray], np.ndarray]] | Sequence[np.ndarray],
    p: int,
    length: int,
    stop_at: int | None = None,
) -> RowSpace:
    """Smallest subspace containing ``seeds`` and closed under ``actions``.

    Actions are matrices (acting on row vectors from the right) or callables.
    ``stop_at`` ends early once that dimension is reached.
    """
    acts = [a if callable(a) else (lambda v, m=a: (v @ m) % p) for a in actions]
    space = RowSpace(length, p)
    queue: list[np.ndarray] = []
    for s in seeds:
        if space.add(s):
            queue.append(np.array(s, dtype=np.int64) % p)
    while queue:
        if stop_at is not None and space.dim >= stop_at:
            break
        v = queue.pop()
        for act in acts:
            w = act(v)
            if space.add(w):
                queue.append(w)
    return space


def charpoly(a: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial of ``a`` mod ``p``, coefficients high degree first."""
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix

    k = GF(p)
    rows = [[k(int(x)) for x in row] for row in np.asarray(a) % p]
    dm = DomainMatrix(rows, a.shape, k)
    return [int(k.to_int(c)) % p for c in dm.charpoly()]


def poly_eval_matrix(coeffs: Sequence[int], a: np.ndarray, p: int) -> np.ndarray:
    """Horner evaluation of a polynomial (high degree first) at the matrix ``a``."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in coeffs:
        out = (out @ a + int(c) * eye) % p
    return out
