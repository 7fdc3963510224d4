import json
import warnings

import pytest

from extvanish.modular import make_params
from extvanish.partitions import Partition, conjugate, dominated_set, enumerate_partitions, is_l_restricted
from extvanish.report import (
    FactKind,
    HigherExtWarning,
    HypothesisViolation,
    Method,
    ModuleRef,
    NotInPrincipalSeries,
    Verdict,
    check_fact,
    classify_s1,
    ext1_schur_facts,
    generate_report,
    higher_vanishing_facts,
    merge_facts,
    self_extension_facts,
)

P = Partition.of
ONES = lambda n: Partition((1,) * n)  # noqa: E731
VALID = [(n, q, r) for n in range(1, 7) for q, r in [(3, 13), (7, 5), (2, 3), (4, 5), (2, 7)]]


def _pairs(facts):
    return {(f.source.partition, f.target.partition, f.degrees) for f in facts}


def test_higher_ext_gl4_7():
    facts = higher_vanishing_facts(make_params(4, 7, 5))
    higher = [f for f in facts if f.kind is FactKind.HIGHER_EXT_VANISHES]
    assert _pairs(higher) == {
        (ONES(4), ONES(4), (1, 3)),
        (P(2, 2), P(2, 2), (1, 3)),
        (P(2, 2), P(2, 1, 1), (1, 3)),
        (P(2, 2), ONES(4), (1, 3)),
    }


def test_higher_ext_gl6_3():
    facts = higher_vanishing_facts(make_params(6, 3, 13))
    higher = [f for f in facts if f.kind is FactKind.HIGHER_EXT_VANISHES]
    lam = P(2, 2, 1, 1)
    assert _pairs(higher) == {
        (ONES(6), ONES(6), (1, 2)),
        (lam, lam, (1, 2)),
        (lam, P(2, 1, 1, 1, 1), (1, 2)),
        (lam, ONES(6), (1, 2)),
    }


def test_higher_ext_needs_l_above_two():
    params = make_params(3, 2, 3)
    assert params.l == 2
    with pytest.warns(HigherExtWarning, match="l > 2 required"):
        assert higher_vanishing_facts(params) == []
    rep = generate_report(3, 2, 3)
    assert not any(f.kind.name.startswith(("HIGHER", "STANDARD")) for f in rep.facts)
    assert "l > 2 required: higher Ext facts suppressed" in rep.warnings


def test_ext1_schur_facts_for_two_two():
    params = make_params(4, 7, 5)
    facts = ext1_schur_facts(P(2, 2), params)
    iso = [f for f in facts if f.kind is FactKind.EXT1_SCHUR_ISO]
    cross = [f for f in facts if f.kind is FactKind.EXT1_CROSS_BLOCK_ZERO]
    assert len(iso) == 5 and len(cross) == 1
    assert {f.target.partition for f in iso} == set(enumerate_partitions(4))
    assert cross[0].target == ModuleRef.non_unipotent()


def test_ext1_schur_rejects_unrestricted():
    with pytest.raises(HypothesisViolation):
        ext1_schur_facts(P(4), make_params(4, 7, 5))


@pytest.mark.parametrize(
    "lam_prime, verdict, method",
    [
        (P(4), Verdict.IRREDUCIBLE, Method.TRIVIAL_MODULE),
        (P(2, 2), Verdict.IRREDUCIBLE, Method.JAMES_CRITERION),
        (P(3, 1), Verdict.REDUCIBLE, Method.JAMES_CRITERION),
        (P(2, 1, 1), Verdict.UNKNOWN, Method.NOT_APPLICABLE),
    ],
)
def test_classify_s1(lam_prime, verdict, method):
    v = classify_s1(lam_prime, make_params(4, 7, 5))
    assert (v.verdict, v.method) == (verdict, method)


def test_classify_s1_outside_principal_series():
    with pytest.raises(NotInPrincipalSeries, match="not in principal series scope"):
        classify_s1(ONES(4), make_params(4, 7, 5))


def test_self_extension_one_per_restricted():
    for n, q, r in VALID:
        params = make_params(n, q, r)
        facts = self_extension_facts(params)
        restricted = [lam for lam in enumerate_partitions(n) if is_l_restricted(lam, params.l)]
        assert [f.source.partition for f in facts] == restricted
        assert all(f.source == f.target and f.degrees == (1, 1) for f in facts)


@pytest.mark.parametrize("n, q, r", VALID)
def test_every_fact_rechecks(n, q, r):
    params = make_params(n, q, r)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HigherExtWarning)
        rep = generate_report(n, q, r)
    assert rep.facts
    for f in rep.facts:
        assert check_fact(f, params), f


@pytest.mark.parametrize("n, q, r", [v for v in VALID if make_params(*v).l > 2])
def test_higher_ext_implies_standard_irreducible(n, q, r):
    rep = generate_report(n, q, r)
    std = {(conjugate(f.source.partition), f.target.partition, f.degrees)
           for f in rep.facts_of(FactKind.STANDARD_IRREDUCIBLE_VANISHES)}
    higher = rep.facts_of(FactKind.HIGHER_EXT_VANISHES)
    for f in higher:
        assert (f.source.partition, f.target.partition, f.degrees) in std
    irreducible = [conjugate(v.lambda_prime) for v in rep.verdicts if v.verdict is Verdict.IRREDUCIBLE]
    assert len(higher) == sum(len(dominated_set(lam)) for lam in irreducible)


def test_check_fact_detects_bad_degrees():
    params = make_params(4, 7, 5)
    f = higher_vanishing_facts(params)[0]
    bad = type(f)(f.kind, f.source, f.target, (1, params.l), f.licensed_by, f.hypotheses)
    assert not check_fact(bad, params)
    unlicensed = type(f)(f.kind, f.source, f.target, f.degrees, f.licensed_by, f.hypotheses + ("made_up",))
    assert not check_fact(unlicensed, params)


def test_merge_dedupes_and_joins_licences():
    params = make_params(4, 7, 5)
    f = self_extension_facts(params)[0]
    g = type(f)(f.kind, f.source, f.target, f.degrees, ("extra",), f.hypotheses)
    merged = merge_facts([g, f, f])
    assert len(merged) == 1
    assert merged[0].licensed_by == ("extra", "ext1-comparison", "schur-self-ext1")


def test_facts_sorted_by_kind():
    rep = generate_report(6, 3, 13)
    ranks = [f.kind.rank for f in rep.facts]
    assert ranks == sorted(ranks)
    assert rep.facts == sorted(rep.facts, key=lambda f: f.sort_key())


def test_json_shape():
    obj = json.loads(generate_report(4, 7, 5).to_json())
    assert obj["params"]["l"] == 4
    assert obj["restricted"] == [[3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    fact = obj["facts"][0]
    assert set(fact) == {"kind", "source", "target", "degrees", "licensed_by", "hypotheses"}
    assert fact["source"] == {"module": "D", "series": "unipotent", "convention": "CPS", "partition": [3, 1]}


def test_parallel_output_identical():
    for n, q, r in [(6, 3, 13), (5, 7, 5), (6, 2, 7)]:
        assert generate_report(n, q, r, workers=1).to_json() == generate_report(n, q, r, workers=4).to_json()


def test_n_one():
    rep = generate_report(1, 3, 13)
    assert rep.restricted == [P(1)]
    assert [f.statement(1) for f in rep.facts_of(FactKind.SELF_EXT1_VANISHES)] == ["Ext^1_kG(k,k) = 0"]


def test_text_rendering_uses_k_for_trivial():
    text = generate_report(4, 7, 5).to_text()
    assert "Ext^i_kG(D(1,(2^2)),k) = 0 for 1 ≤ i ≤ 3" in text
    assert "Ext^i_kG(k,k) = 0 for 1 ≤ i ≤ 3" in text
    assert "Notes:" in text
