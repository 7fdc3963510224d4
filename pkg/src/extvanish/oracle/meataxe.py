"""Irreducibility of matrix modules over F_r (Holt-Rees Meataxe with Norton's test).

Each attempt draws a random element ``A`` of the enveloping algebra, and for
each irreducible factor ``f`` of its characteristic polynomial looks at the
null space of ``f(A)``:

* a null vector spinning to a proper subspace proves reducibility;
* if the null space has dimension ``deg f`` and a null vector of the
  transpose also spins to everything, the module is irreducible (Norton).

When no attempt is conclusive, every projective point is spun up in turn,
provided there are at most ``EXHAUSTIVE_LIMIT`` of them.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from .gf import charpoly, left_kernel, poly_eval_matrix, spin
from .specht import SpechtModuleRep

__all__ = ["OracleInconclusive", "meataxe_irreducible", "is_irreducible", "exhaustive_irreducible"]

EXHAUSTIVE_LIMIT = 10**6
MAX_ATTEMPTS = 64


class OracleInconclusive(RuntimeError):
    pass


def meataxe_irreducible(rep: SpechtModuleRep, seed: int = 0) -> bool:
    return is_irreducible(rep.gen_actions, rep.r, rep.dim, seed=seed)


def is_irreducible(
    gens: Sequence[np.ndarray], p: int, dim: int, seed: int = 0, max_attempts: int = MAX_ATTEMPTS
) -> bool:
    if dim < 1:
        raise ValueError("module must be nonzero")
    if dim == 1:
        return True
    gens = [np.asarray(g, dtype=np.int64) % p for g in gens]
    if not gens:
        # trivial action: every line is a submodule
        return False
    transposed = [g.T.copy() for g in gens]
    rng = np.random.default_rng(seed)
    pool = list(gens)
    for _ in range(max_attempts):
        i, j = rng.integers(len(pool), size=2)
        pool.append((pool[i] @ pool[j]) % p)
        coeffs = rng.integers(p, size=len(pool))
        a = sum(int(c) * m for c, m in zip(coeffs, pool)) % p
        verdict = _try_element(a, gens, transposed, p, dim)
        if verdict is not None:
            return verdict
    if (p**dim - 1) // (p - 1) > EXHAUSTIVE_LIMIT:
        raise OracleInconclusive("oracle inconclusive")
    return exhaustive_irreducible(gens, p, dim)


def _try_element(a, gens, transposed, p, dim) -> bool | None:
    _, factors = gf_factor(charpoly(a, p), p, ZZ)
    for f, _mult in sorted(factors, key=lambda fm: len(fm[0])):
        deg = len(f) - 1
        nmat = poly_eval_matrix([int(c) for c in f], a, p)
        null = left_kernel(nmat, p)
        if null.shape[0] == 0:
            continue
        if spin([null[0]], gens, p, dim).dim < dim:
            return False
        if null.shape[0] == deg:
            dual_null = left_kernel(nmat.T, p)
            return spin([dual_null[0]], transposed, p, dim).dim == dim
    return None


def _projective_points(p: int, dim: int):
    # first nonzero coordinate normalized to 1
    for lead in range(dim):
        tail = dim - lead - 1
        for k in range(p**tail):
            v = np.zeros(dim, dtype=np.int64)
            v[lead] = 1
            for t in range(tail):
                k, v[lead + 1 + t] = divmod(k, p)
            yield v


def exhaustive_irreducible(gens: Sequence[np.ndarray], p: int, dim: int) -> bool:
    """Spin every projective point; irreducible iff each spans the whole space."""
    gens = [np.asarray(g, dtype=np.int64) % p for g in gens]
    for v in _projective_points(p, dim):
        if spin([v], gens, p, dim).dim < dim:
            return False
    return True
