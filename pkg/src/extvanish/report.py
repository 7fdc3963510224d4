"""Symbolic Ext-vanishing facts for unipotent kGL_n(q)-modules and the report built from them.

Notation follows the CPS labelling: ``D(1, lam)`` is the irreducible module
labelled by ``lam``, which lies in the unipotent principal series exactly when
``lam`` is l-restricted. ``S(1, lam')`` is the Dipper-James module with head
``D(1, lam)``; it is stored by its own parameter ``lam'``.

The q-Schur side of every comparison is never evaluated. A fact either states
a vanishing that the theory licenses outright, or states an isomorphism with a
q-Schur Ext group as a symbolic claim.
"""

from __future__ import annotations

import json
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable

from .james import hook_graph, james_array, james_irreducible
from .modular import ModularParams, make_params
from .partitions import (
    Partition,
    conjugate,
    dominated_set,
    dominates,
    enumerate_partitions,
    is_l_regular,
    is_l_restricted,
)

__all__ = [
    "Verdict",
    "Method",
    "FactKind",
    "ModuleRef",
    "IrreducibilityVerdict",
    "ExtFact",
    "Report",
    "HypothesisViolation",
    "NotInPrincipalSeries",
    "HigherExtWarning",
    "classify_s1",
    "restricted_partitions",
    "self_extension_facts",
    "ext1_schur_facts",
    "higher_vanishing_facts",
    "generate_report",
    "check_fact",
    "LICENSES",
]


class HypothesisViolation(ValueError):
    """A fact generator was called outside its licensing hypotheses."""


class NotInPrincipalSeries(HypothesisViolation):
    pass


class HigherExtWarning(UserWarning):
    pass


class Verdict(str, Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"


class Method(str, Enum):
    TRIVIAL_MODULE = "TrivialModule"
    JAMES_CRITERION = "JamesCriterion"
    NOT_APPLICABLE = "NotApplicable"


class FactKind(str, Enum):
    # declaration order is the report's sort order
    SELF_EXT1_VANISHES = "SelfExt1Vanishes"
    EXT1_SCHUR_ISO = "Ext1SchurIso"
    EXT1_CROSS_BLOCK_ZERO = "Ext1CrossBlockZero"
    HIGHER_EXT_VANISHES = "HigherExtVanishes"
    STANDARD_PAIR_VANISHES = "StandardPairVanishes"
    STANDARD_IRREDUCIBLE_VANISHES = "StandardIrreducibleVanishes"

    @property
    def rank(self) -> int:
        return list(FactKind).index(self)


LICENSES = {
    "ext1-comparison": "Ext^1_kG(D(1,lam),D(s,mu)) is Ext^1 over S_q(n,n) of L(lam),L(mu) for s = 1, zero for s != 1 (lam l-restricted)",
    "schur-self-ext1": "Ext^1_{S_q(n,n)}(L(lam),L(lam)) = 0 for every lam",
    "higher-comparison": "Ext^i_kG(S(1,lam'),V) is Ext^i over S_q(n,n) of Delta(lam),F(V) for 0 <= i <= l-1 (l > 2, lam l-restricted)",
    "highest-weight": "Ext^i_{S_q(n,n)}(Delta(lam),L(mu)) = Ext^i(Delta(lam),Delta(mu)) = 0 for i >= 1 when mu is dominated by lam",
    "irreducible-head": "S(1,lam') = D(1,lam) when S(1,lam') is irreducible",
}


@dataclass(frozen=True)
class ModuleRef:
    """``D`` = D(1, partition); ``S`` = S(1, partition) by its own DJ parameter; ``X`` = every D(s, mu), s != 1."""

    module: str
    partition: Partition | None = None

    @classmethod
    def d(cls, lam: Partition) -> "ModuleRef":
        return cls("D", lam)

    @classmethod
    def s(cls, lam_prime: Partition) -> "ModuleRef":
        return cls("S", lam_prime)

    @classmethod
    def non_unipotent(cls) -> "ModuleRef":
        return cls("X")

    def sort_key(self) -> tuple:
        rank = "DSX".index(self.module)
        return (rank, self.partition.sort_key() if self.partition is not None else ())

    def to_json(self) -> dict[str, Any]:
        if self.module == "D":
            return {
                "module": "D",
                "series": "unipotent",
                "convention": "CPS",
                "partition": list(self.partition.parts),
            }
        if self.module == "S":
            return {"module": "S", "lambda_prime": list(self.partition.parts)}
        return {"module": "D", "series": "general", "s": "!=1", "mu": "any multipartition of n(s)"}

    def render(self, n: int) -> str:
        if self.module == "D":
            if self.partition == Partition((1,) * n):
                return "k"
            return f"D(1,{_short(self.partition)})"
        if self.module == "S":
            return f"S(1,{_short(self.partition)})"
        return "D(s,mu)"


def _short(lam: Partition) -> str:
    """Exponent shorthand: (2,2,1,1) -> (2^2,1^2)."""
    out = []
    parts = list(lam.parts)
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(str(parts[i]) if j - i == 1 else f"{parts[i]}^{j - i}")
        i = j
    return "(" + ",".join(out) + ")"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    lambda_prime: Partition
    verdict: Verdict
    method: Method

    def to_json(self) -> dict[str, Any]:
        return {
            "lambda_prime": list(self.lambda_prime.parts),
            "verdict": self.verdict.value,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class ExtFact:
    kind: FactKind
    source: ModuleRef
    target: ModuleRef
    degrees: tuple[int, int]
    licensed_by: tuple[str, ...]
    hypotheses: tuple[str, ...] = ()

    def identity(self) -> tuple:
        return (self.kind, self.source, self.target, self.degrees)

    def sort_key(self) -> tuple:
        return (self.kind.rank, self.source.sort_key(), self.target.sort_key(), self.degrees)

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "degrees": list(self.degrees),
            "licensed_by": " + ".join(self.licensed_by),
            "hypotheses": list(self.hypotheses),
        }

    def statement(self, n: int) -> str:
        src, tgt = self.source.render(n), self.target.render(n)
        lo, hi = self.degrees
        if self.kind is FactKind.EXT1_SCHUR_ISO:
            return (
                f"Ext^1_kG({src},{tgt}) ≅ Ext^1_S_q({n},{n})"
                f"(L^k{_short(self.source.partition)},L^k{_short(self.target.partition)})"
            )
        if self.kind is FactKind.EXT1_CROSS_BLOCK_ZERO:
            return f"Ext^1_kG({src},D(s,mu)) = 0 for every s != 1 and every mu"
        if lo == hi:
            return f"Ext^{lo}_kG({src},{tgt}) = 0"
        return f"Ext^i_kG({src},{tgt}) = 0 for {lo} ≤ i ≤ {hi}"


@dataclass
class Report:
    params: ModularParams
    restricted: list[Partition]
    verdicts: list[IrreducibilityVerdict]
    facts: list[ExtFact]
    warnings: list[str] = field(default_factory=list)

    def facts_of(self, kind: FactKind) -> list[ExtFact]:
        return [f for f in self.facts if f.kind is kind]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "restricted": [list(p.parts) for p in self.restricted],
            "verdicts": [v.to_json() for v in self.verdicts],
            "facts": [f.to_json() for f in self.facts],
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        p = self.params
        n = p.n
        lines = [f"G = GL_{n}({p.q}), r = {p.r}, l = {p.l}", ""]
        lines.append(f"{p.l}-restricted partitions of {n}: " + ", ".join(_short(x) for x in self.restricted))
        lines.append("")
        lines.append("Irreducibility of S(1,lam'):")
        for v in self.verdicts:
            lam = conjugate(v.lambda_prime)
            lines.append(
                f"  lam = {_short(lam)}, lam' = {_short(v.lambda_prime)}: {v.verdict.value} ({v.method.value})"
            )
        for kind in FactKind:
            group = self.facts_of(kind)
            if not group:
                continue
            lines.append("")
            lines.append(f"{kind.value}:")
            for i, f in enumerate(group, start=1):
                lines.append(f"  {i}. {f.statement(n)}   [{' + '.join(f.licensed_by)}]")
        if self.warnings:
            lines.append("")
            lines.append("Notes:")
            lines.extend(f"  - {w}" for w in self.warnings)
        return "\n".join(lines) + "\n"


def restricted_partitions(params: ModularParams) -> list[Partition]:
    return [lam for lam in enumerate_partitions(params.n) if is_l_restricted(lam, params.l)]


def classify_s1(lambda_prime: Partition, params: ModularParams) -> IrreducibilityVerdict:
    """Decide irreducibility of ``S(1, lambda_prime)`` where a known criterion applies."""
    if lambda_prime.n != params.n:
        raise ValueError(f"partition of {lambda_prime.n} does not match n={params.n}")
    if not is_l_regular(lambda_prime, params.l):
        raise NotInPrincipalSeries("S(1,λ′) head not in principal series scope")
    if len(lambda_prime) == 1:
        # S(1,(n)) is the trivial module k
        return IrreducibilityVerdict(lambda_prime, Verdict.IRREDUCIBLE, Method.TRIVIAL_MODULE)
    if len(lambda_prime) == 2:
        ok = james_irreducible(lambda_prime, params.r, params.l)
        return IrreducibilityVerdict(
            lambda_prime, Verdict.IRREDUCIBLE if ok else Verdict.REDUCIBLE, Method.JAMES_CRITERION
        )
    return IrreducibilityVerdict(lambda_prime, Verdict.UNKNOWN, Method.NOT_APPLICABLE)


_BASE = ("r_coprime_q_q_minus_1", "source_l_restricted")


def _self_ext_fact(lam: Partition) -> ExtFact:
    return ExtFact(
        FactKind.SELF_EXT1_VANISHES,
        ModuleRef.d(lam),
        ModuleRef.d(lam),
        (1, 1),
        ("ext1-comparison", "schur-self-ext1"),
        _BASE,
    )


def self_extension_facts(params: ModularParams) -> list[ExtFact]:
    """``Ext^1(D(1,lam), D(1,lam)) = 0`` for each l-restricted ``lam``."""
    return [_self_ext_fact(lam) for lam in restricted_partitions(params)]


def ext1_schur_facts(lam: Partition, params: ModularParams) -> list[ExtFact]:
    """Degree-1 comparison facts with source ``D(1, lam)``: one isomorphism per ``mu`` and the cross-block zero."""
    if lam.n != params.n or not is_l_restricted(lam, params.l):
        raise HypothesisViolation(f"{lam} is not an {params.l}-restricted partition of {params.n}")
    src = ModuleRef.d(lam)
    facts = [
        ExtFact(
            FactKind.EXT1_SCHUR_ISO,
            src,
            ModuleRef.d(mu),
            (1, 1),
            ("ext1-comparison",),
            _BASE,
        )
        for mu in enumerate_partitions(params.n)
    ]
    facts.append(
        ExtFact(
            FactKind.EXT1_CROSS_BLOCK_ZERO,
            src,
            ModuleRef.non_unipotent(),
            (1, 1),
            ("ext1-comparison",),
            _BASE,
        )
    )
    return facts


def _higher_facts_for(lam: Partition, params: ModularParams) -> list[ExtFact]:
    l = params.l
    lam_prime = conjugate(lam)
    degrees = (1, l - 1)
    base = _BASE + ("l_gt_2", "target_dominated")
    facts: list[ExtFact] = []
    for mu in dominated_set(lam):
        facts.append(
            ExtFact(
                FactKind.STANDARD_IRREDUCIBLE_VANISHES,
                ModuleRef.s(lam_prime),
                ModuleRef.d(mu),
                degrees,
                ("higher-comparison", "highest-weight"),
                base,
            )
        )
        if is_l_restricted(mu, l):
            facts.append(
                ExtFact(
                    FactKind.STANDARD_PAIR_VANISHES,
                    ModuleRef.s(lam_prime),
                    ModuleRef.s(conjugate(mu)),
                    degrees,
                    ("higher-comparison", "highest-weight"),
                    base + ("target_l_restricted",),
                )
            )
    if classify_s1(lam_prime, params).verdict is Verdict.IRREDUCIBLE:
        for mu in dominated_set(lam):
            facts.append(
                ExtFact(
                    FactKind.HIGHER_EXT_VANISHES,
                    ModuleRef.d(lam),
                    ModuleRef.d(mu),
                    degrees,
                    ("higher-comparison", "highest-weight", "irreducible-head"),
                    base + ("source_specht_irreducible",),
                )
            )
    return facts


def higher_vanishing_facts(params: ModularParams) -> list[ExtFact]:
    """Vanishing of ``Ext^i`` for ``1 <= i <= l-1``; empty (with a warning) unless ``l > 2``."""
    if params.l <= 2:
        warnings.warn("l > 2 required", HigherExtWarning, stacklevel=2)
        return []
    facts: list[ExtFact] = []
    for lam in restricted_partitions(params):
        facts.extend(_higher_facts_for(lam, params))
    return merge_facts(facts)


def merge_facts(facts: Iterable[ExtFact]) -> list[ExtFact]:
    """Deduplicate on (kind, source, target, degrees), merging licences; sort deterministically."""
    merged: dict[tuple, ExtFact] = {}
    for f in facts:
        key = f.identity()
        old = merged.get(key)
        if old is None:
            merged[key] = f
            continue
        lic = tuple(dict.fromkeys(old.licensed_by + f.licensed_by))
        hyp = tuple(dict.fromkeys(old.hypotheses + f.hypotheses))
        merged[key] = ExtFact(f.kind, f.source, f.target, f.degrees, lic, hyp)
    return sorted(merged.values(), key=ExtFact.sort_key)


def _facts_for_restricted(lam: Partition, params: ModularParams) -> list[ExtFact]:
    facts = [_self_ext_fact(lam)]
    facts.extend(ext1_schur_facts(lam, params))
    if params.l > 2:
        facts.extend(_higher_facts_for(lam, params))
    return facts


def generate_report(n: int, q: int, r: int, workers: int = 1) -> Report:
    """Assemble the full report; ``workers > 1`` generates per-partition facts on a thread pool."""
    params = make_params(n, q, r)
    restricted = restricted_partitions(params)
    verdicts = [classify_s1(conjugate(lam), params) for lam in restricted]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda lam: _facts_for_restricted(lam, params), restricted))
    else:
        chunks = [_facts_for_restricted(lam, params) for lam in restricted]
    facts = merge_facts(f for chunk in chunks for f in chunk)
    notes: list[str] = []
    if params.l > 2:
        notes.append(
            "degree l: Ext^l over S_q(n,n) of Delta(lam),F(V) injects into Ext^l_kG(S(1,lam'),V); "
            "an injection, not a vanishing statement"
        )
    else:
        notes.append("l > 2 required: higher Ext facts suppressed")
    unknown = [v for v in verdicts if v.verdict is Verdict.UNKNOWN]
    if unknown:
        notes.append(
            "no irreducibility criterion for S(1,lam') with more than two parts: "
            + ", ".join(_short(v.lambda_prime) for v in unknown)
        )
    return Report(params, restricted, verdicts, facts, notes)


def check_fact(fact: ExtFact, params: ModularParams) -> bool:
    """Recompute every hypothesis recorded on ``fact``; true iff all hold."""
    l = params.l
    src = fact.source
    if src.module == "D":
        lam = src.partition
    elif src.module == "S":
        lam = conjugate(src.partition)
    else:
        return False
    tgt = fact.target
    mu = tgt.partition
    if tgt.module == "S":
        mu = conjugate(mu)
    checks = {
        "r_coprime_q_q_minus_1": params.q % params.r != 0 and (params.q - 1) % params.r != 0,
        "source_l_restricted": lam.n == params.n and is_l_restricted(lam, l),
        "l_gt_2": l > 2,
        "target_dominated": mu is not None and dominates(mu, lam),
        "target_l_restricted": mu is not None and is_l_restricted(mu, l),
        "source_specht_irreducible": classify_s1(conjugate(lam), params).verdict is Verdict.IRREDUCIBLE,
    }
    if any(h not in checks or not checks[h] for h in fact.hypotheses):
        return False
    lo, hi = fact.degrees
    if fact.kind in (
        FactKind.HIGHER_EXT_VANISHES,
        FactKind.STANDARD_PAIR_VANISHES,
        FactKind.STANDARD_IRREDUCIBLE_VANISHES,
    ):
        return 1 <= lo <= hi <= l - 1 and "l_gt_2" in fact.hypotheses
    return (lo, hi) == (1, 1)


def james_table(lam: Partition, params: ModularParams) -> dict[str, Any]:
    """Hook graph, James array and verdict for one partition, as plain data."""
    graph = hook_graph(lam)
    arr = james_array(lam, params.r, params.l)
    out: dict[str, Any] = {
        "partition": list(lam.parts),
        "hooks": [list(row) for row in graph.hooks],
        "symbols": arr.rendered(),
    }
    out["irreducible"] = james_irreducible(lam, params.r, params.l) if len(lam) == 2 else None
    return out
