"""Label spaces for irreducible kGL_n(q)-modules.

A semisimple element is represented only by its centralizer type: the
multiset of pairs ``(a, m)`` meaning a factor ``GL_m(q^a)``, with
``sum a * m = n``. Labels attached to a type are multipartitions whose
components have sizes equal to the multiplicities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Any, Union

from .partitions import (
    Multipartition,
    Partition,
    conjugate,
    enumerate_partitions,
    is_l_regular,
    is_l_restricted,
)

__all__ = [
    "Convention",
    "CentralizerType",
    "Unipotent",
    "General",
    "ModuleLabel",
    "InvalidLabel",
    "centralizer_types",
    "multipartitions",
    "label_shapes",
    "dd_to_cps",
    "cps_to_dd",
]


class Convention(str, Enum):
    CPS = "CPS"
    DD = "DD"


class InvalidLabel(ValueError):
    pass


@dataclass(frozen=True)
class CentralizerType:
    """Factors ``(a, m)`` sorted descending; ``GL_m(q^a)`` for each."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, m in self.factors:
            if a < 1 or m < 1:
                raise ValueError(f"bad factor {(a, m)}")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, reverse=True)))

    @property
    def n(self) -> int:
        return sum(a * m for a, m in self.factors)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.factors)

    def is_identity_type(self) -> bool:
        """The type of ``s = 1``: a single factor ``GL_n(q)``."""
        return self.factors == ((1, self.n),)

    def to_json(self) -> list[list[int]]:
        return [[a, m] for a, m in self.factors]


@dataclass(frozen=True)
class Unipotent:
    partition: Partition


@dataclass(frozen=True)
class General:
    type: CentralizerType
    multipartition: Multipartition

    def __post_init__(self) -> None:
        if self.multipartition.shape != self.type.multiplicities:
            raise InvalidLabel(
                f"multipartition shape {self.multipartition.shape} does not match "
                f"type multiplicities {self.type.multiplicities}"
            )


Series = Union[Unipotent, General]


@dataclass(frozen=True)
class ModuleLabel:
    series: Series
    convention: Convention = Convention.CPS

    @classmethod
    def unipotent(cls, lam: Partition, convention: Convention = Convention.CPS) -> "ModuleLabel":
        return cls(Unipotent(lam), Convention(convention))

    def to_json(self) -> dict[str, Any]:
        if isinstance(self.series, Unipotent):
            return {
                "series": "unipotent",
                "convention": self.convention.value,
                "partition": list(self.series.partition.parts),
            }
        return {
            "series": "general",
            "convention": self.convention.value,
            "type": self.series.type.to_json(),
            "multipartition": [list(c.parts) for c in self.series.multipartition.components],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "ModuleLabel":
        conv = Convention(data["convention"])
        if data["series"] == "unipotent":
            return cls(Unipotent(Partition(tuple(data["partition"]))), conv)
        if data["series"] == "general":
            ctype = CentralizerType(tuple((int(a), int(m)) for a, m in data["type"]))
            mp = Multipartition(tuple(Partition(tuple(c)) for c in data["multipartition"]))
            return cls(General(ctype, mp), conv)
        raise InvalidLabel(f"unknown series {data['series']!r}")


def centralizer_types(n: int) -> list[CentralizerType]:
    """Every multiset ``{(a, m)}`` with ``sum a*m = n``, each once, in descending order.

    Built by choosing, for each degree a, a partition of some ``k_a`` with
    ``sum a * k_a = n``; each part m of that partition becomes a factor (a, m).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[CentralizerType] = []

    def rec(a: int, remaining: int, factors: list[tuple[int, int]]) -> None:
        if remaining == 0:
            out.append(CentralizerType(tuple(factors)))
            return
        if a > remaining:
            return
        for k in range(remaining // a, -1, -1):
            parts_list = enumerate_partitions(k) if k else [Partition(())]
            for mu in parts_list:
                rec(a + 1, remaining - a * k, factors + [(a, m) for m in mu.parts])

    rec(1, n, [])
    return sorted(set(out), key=lambda t: t.factors, reverse=True)


def multipartitions(ctype: CentralizerType) -> list[Multipartition]:
    choices = [enumerate_partitions(m) for m in ctype.multiplicities]
    return [Multipartition(tuple(combo)) for combo in itertools.product(*choices)]


def label_shapes(n: int) -> list[tuple[CentralizerType, Multipartition]]:
    """All (type, multipartition) pairs for rank n."""
    return [(t, mp) for t in centralizer_types(n) for mp in multipartitions(t)]


def dd_to_cps(label: ModuleLabel, l: int) -> ModuleLabel:
    """``D'(1, lam)`` in Dipper-Du labelling is ``D(1, lam')`` in CPS labelling."""
    if label.convention is not Convention.DD or not isinstance(label.series, Unipotent):
        raise InvalidLabel("expected a DD unipotent label")
    lam = label.series.partition
    if not is_l_regular(lam, l):
        raise InvalidLabel("not a valid DD principal-series label")
    return ModuleLabel(Unipotent(conjugate(lam)), Convention.CPS)


def cps_to_dd(label: ModuleLabel, l: int) -> ModuleLabel:
    if label.convention is not Convention.CPS or not isinstance(label.series, Unipotent):
        raise InvalidLabel("expected a CPS unipotent label")
    lam = label.series.partition
    if not is_l_restricted(lam, l):
        raise InvalidLabel("not a valid CPS principal-series label")
    return ModuleLabel(Unipotent(conjugate(lam)), Convention.DD)
