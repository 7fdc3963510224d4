"""Specht modules of the Hecke algebra over F_r as explicit matrix representations.

``S^lam`` is the right ideal ``z H`` with ``z = x_lam tau_w y_lam'``, where
``w`` is :func:`row_to_column_element`. It is spun up from ``z`` inside the
regular module by right multiplication with the generators; the generator
matrices are then read off in the echelon basis of that span.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..modular import ModularParams
from ..partitions import Partition, conjugate, standard_tableau_count
from .gf import RowSpace, spin
from .hecke import DenseHecke, x_element
from .perms import row_to_column_element

__all__ = ["SpechtModuleRep", "SpechtConsistencyError", "specht_generator", "specht_module", "DEFAULT_MAX_N"]

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 7


class SpechtConsistencyError(RuntimeError):
    """The spun-up module has the wrong dimension: a convention bug, not a data condition."""


@dataclass(frozen=True)
class SpechtModuleRep:
    lam: Partition
    q_res: int
    r: int
    dim: int
    basis: np.ndarray
    gen_actions: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return self.lam.n


def specht_generator(lam: Partition, q_res: int, r: int) -> np.ndarray:
    """Dense coefficient vector of ``x_lam tau_w y_lam'`` in the regular module."""
    alg = DenseHecke(lam.n, q_res, r)
    v = alg.right_tau(x_element(lam, q_res, r).to_dense(), row_to_column_element(lam))
    c = (-pow(q_res, -1, r)) % r
    return alg.right_sum(v, conjugate(lam), lambda length: pow(c, length, r))


def specht_module(lam: Partition, params: ModularParams, max_n: int = DEFAULT_MAX_N) -> SpechtModuleRep:
    n = lam.n
    if n != params.n:
        raise ValueError(f"partition of {n} does not match rank n={params.n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the regular-module bound {max_n}")
    r, q = params.r, params.q_res
    alg = DenseHecke(n, q, r)
    z = specht_generator(lam, q, r)
    gens = range(1, n)
    space: RowSpace = spin([z], [lambda v, s=s: alg.right_gen(v, s) for s in gens], r, alg.size)
    expected = standard_tableau_count(lam)
    if space.dim != expected:
        raise SpechtConsistencyError(
            f"dim S^{lam} = {space.dim}, hook-length count = {expected}"
        )
    basis = space.matrix()
    actions = []
    for s in gens:
        image = np.array([alg.right_gen(b, s) for b in basis], dtype=np.int64)
        actions.append(np.array([space.coordinates(row) for row in image], dtype=np.int64).reshape(expected, expected))
    log.debug("built S^%s over F_%d, dim %d", lam, r, expected)
    return SpechtModuleRep(lam, q, r, expected, basis, tuple(actions))
