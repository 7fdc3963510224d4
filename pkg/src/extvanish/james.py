"""Hook graphs and James's column criterion for two-part partitions.

The James array ``[lam]_{r,l}`` replaces each hook length ``h`` by ``INF``
when ``l`` does not divide ``h``, and otherwise by the exponent of the largest
power of ``r`` dividing ``h`` (which may be 0). ``S(1, lam)`` for a two-part
``lam`` is irreducible iff every column of the array is constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .partitions import Partition, hook_lengths

__all__ = [
    "INF",
    "Symbol",
    "NotTwoPart",
    "HookGraph",
    "JamesArray",
    "hook_graph",
    "james_array",
    "james_irreducible",
    "r_valuation",
]

INF = math.inf
Symbol = Union[int, float]


class NotTwoPart(ValueError):
    """James's criterion was asked of a partition without exactly two parts."""


@dataclass(frozen=True)
class HookGraph:
    shape: Partition
    hooks: tuple[tuple[int, ...], ...]

    def columns(self) -> list[list[int]]:
        return _columns(self.hooks)


@dataclass(frozen=True)
class JamesArray:
    shape: Partition
    symbols: tuple[tuple[Symbol, ...], ...]
    r: int
    l: int

    def columns(self) -> list[list[Symbol]]:
        return _columns(self.symbols)

    def rendered(self) -> list[list[str]]:
        return [[render_symbol(s) for s in row] for row in self.symbols]


def _columns(rows):
    width = len(rows[0]) if rows else 0
    return [[row[j] for row in rows if j < len(row)] for j in range(width)]


def render_symbol(s: Symbol) -> str:
    return "inf" if s == INF else str(s)


def r_valuation(h: int, r: int) -> int:
    """Largest m with ``r**m`` dividing ``h`` (h >= 1)."""
    m = 0
    while h % r == 0:
        h //= r
        m += 1
    return m


def hook_graph(lam: Partition) -> HookGraph:
    if lam.n < 1:
        raise ValueError("hook graph of the empty partition")
    return HookGraph(lam, tuple(tuple(row) for row in hook_lengths(lam)))


def james_array(lam: Partition, r: int, l: int) -> JamesArray:
    graph = hook_graph(lam)
    # l | h with r ∤ h gives 0, not INF
    symbols = tuple(
        tuple(r_valuation(h, r) if h % l == 0 else INF for h in row) for row in graph.hooks
    )
    return JamesArray(lam, symbols, r, l)


def james_irreducible(lam: Partition, r: int, l: int) -> bool:
    if len(lam) != 2:
        raise NotTwoPart("criterion applies to two-part partitions only")
    arr = james_array(lam, r, l)
    return all(len(set(col)) == 1 for col in arr.columns())
