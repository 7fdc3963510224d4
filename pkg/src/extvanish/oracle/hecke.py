"""The Iwahori-Hecke algebra of S_n over F_r with parameter specialized to q mod r.

Right multiplication by a generator:

    tau_w tau_s = tau_{ws}                          if l(ws) > l(w)
    tau_w tau_s = q tau_{ws} + (q - 1) tau_w        otherwise

Multiplication by a general ``tau_w`` runs generator by generator along a
reduced word. ``HeckeElement`` is the sparse form; ``DenseHecke`` works on
length-n! coefficient vectors indexed by ``perm_table(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ..partitions import Partition
from .perms import Perm, perm_table, young_generators, young_subgroup

__all__ = [
    "HeckeElement",
    "DenseHecke",
    "tau",
    "hecke_right_multiply_gen",
    "x_element",
    "y_element",
]


@dataclass(frozen=True)
class HeckeElement:
    """Sparse ``sum c_w tau_w`` with coefficients in ``[1, r)``."""

    n: int
    q_res: int
    r: int
    coeffs: Mapping[Perm, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.q_res % self.r == 0:
            raise ValueError("q must be invertible mod r")
        clean: dict[Perm, int] = {}
        for w, c in self.coeffs.items():
            if w.n != self.n:
                raise ValueError("permutation rank mismatch")
            c %= self.r
            if c:
                clean[w] = c
        object.__setattr__(self, "q_res", self.q_res % self.r)
        object.__setattr__(self, "coeffs", clean)

    def _like(self, coeffs: Mapping[Perm, int]) -> "HeckeElement":
        return HeckeElement(self.n, self.q_res, self.r, coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self.n, self.q_res, self.r) == (other.n, other.q_res, other.r) and dict(
            self.coeffs
        ) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.q_res, self.r, frozenset(self.coeffs.items())))

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return self._like(out)

    def __neg__(self) -> "HeckeElement":
        return self._like({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: int) -> "HeckeElement":
        return self._like({w: c * v for w, v in self.coeffs.items()})

    def __rmul__(self, c: int) -> "HeckeElement":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = self._like({})
        for w, c in other.coeffs.items():
            term = self
            for s in w.reduced_word():
                term = hecke_right_multiply_gen(term, s)
            out = out + term.scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w: Perm) -> int:
        return self.coeffs.get(w, 0)

    def to_dense(self) -> np.ndarray:
        table = perm_table(self.n)
        v = np.zeros(len(table), dtype=np.int64)
        for w, c in self.coeffs.items():
            v[table.index[w]] = c
        return v

    @classmethod
    def from_dense(cls, v: np.ndarray, n: int, q_res: int, r: int) -> "HeckeElement":
        table = perm_table(n)
        return cls(n, q_res, r, {table.perms[k]: int(v[k]) for k in np.nonzero(v)[0]})


def tau(w: Perm, q_res: int, r: int) -> HeckeElement:
    return HeckeElement(w.n, q_res, r, {w: 1})


def hecke_right_multiply_gen(h: HeckeElement, s: int) -> HeckeElement:
    if not 1 <= s <= h.n - 1:
        raise ValueError(f"generator index {s} out of range for n={h.n}")
    q, r = h.q_res, h.r
    out: dict[Perm, int] = {}
    for w, c in h.coeffs.items():
        ws = w.times_simple(s)
        if w.is_right_ascent(s):
            out[ws] = (out.get(ws, 0) + c) % r
        else:
            out[ws] = (out.get(ws, 0) + q * c) % r
            out[w] = (out.get(w, 0) + (q - 1) * c) % r
    return h._like(out)


def x_element(lam: Partition, q_res: int, r: int) -> HeckeElement:
    """``sum of tau_w`` over the Young subgroup ``W_lam``."""
    return HeckeElement(lam.n, q_res, r, {w: 1 for w in young_subgroup(lam)})


def y_element(lam: Partition, q_res: int, r: int) -> HeckeElement:
    """``sum of (-q)^(-l(w)) tau_w`` over ``W_lam``; satisfies ``y tau_s = -y`` for s in W_lam."""
    c = (-pow(q_res, -1, r)) % r
    return HeckeElement(lam.n, q_res, r, {w: pow(c, w.length, r) for w in young_subgroup(lam)})


class DenseHecke:
    """Vectorized right action of the generators on coefficient vectors of length n!."""

    def __init__(self, n: int, q_res: int, r: int):
        self.n = n
        self.q = q_res % r
        self.r = r
        self.table = perm_table(n)
        self.size = len(self.table)

    def right_gen(self, v: np.ndarray, s: int) -> np.ndarray:
        rmul = self.table.rmul[s - 1]
        up = self.table.ascent[s - 1]
        down = ~up
        out = np.zeros_like(v)
        out[rmul[up]] = v[up]
        out[rmul[down]] = self.q * v[down]
        out[down] += (self.q - 1) * v[down]
        return out % self.r

    def right_tau(self, v: np.ndarray, w: Perm) -> np.ndarray:
        for s in w.reduced_word():
            v = self.right_gen(v, s)
        return v

    def right_sum(self, v: np.ndarray, lam: Partition, coeff_of_length) -> np.ndarray:
        """``v * sum_{u in W_lam} coeff_of_length(l(u)) tau_u`` by depth-first search.

        Each ``u`` is reached from its parent ``u s`` (s the largest right
        descent of u inside W_lam), so only a root-to-leaf path of partial
        products is held in memory.
        """
        gens = young_generators(lam)
        total = np.zeros_like(v)
        # stack entries: (perm, v * tau_perm)
        stack = [(Perm.identity(self.n), v % self.r)]
        while stack:
            u, vu = stack.pop()
            total = (total + coeff_of_length(u.length) * vu) % self.r
            for s in gens:
                if not u.is_right_ascent(s):
                    continue
                child = u.times_simple(s)
                if max(t for t in gens if not child.is_right_ascent(t)) == s:
                    stack.append((child, self.right_gen(vu, s)))
        return total

    def basis_vector(self, w: Perm) -> np.ndarray:
        v = np.zeros(self.size, dtype=np.int64)
        v[self.table.index[w]] = 1
        return v
