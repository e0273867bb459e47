from __future__ import annotations

import pytest

from normlab.catalog import build, parse_spec
from normlab.errors import DoesNotNormalize
from normlab.perm import perm_from_cycles
from normlab.structure import fitting_subgroup, p_core, sylow_subgroup
from normlab.subgroups import (
    Subgroup,
    conjugate_subgroup,
    enumerate_subgroups,
    is_normal,
    subgroup,
    trivial_subgroup,
    whole,
)
from normlab.theorems import (
    MODE_FIT_NORMAL,
    MODE_H_NORMAL,
    fixed_point_free,
    frobenius_decomposition,
    is_dihedral_2group,
    is_frobenius_product,
    is_maximal_normalizer,
    maximal_normalizer_context,
    verify_burnside_complement,
    verify_comp22,
    verify_hall_lemma,
    verify_rem23,
    verify_simp,
    verify_thompson,
)
from normlab.verdict import VerdictReport


def _stab(G, k):
    return Subgroup(G, G.point_stabilizer(k))


# -- maximal normalizer --------------------------------------------------------------


def test_maxnorm_s4_point_stabilizer(s4):
    res = is_maximal_normalizer(s4, _stab(s4, 4))
    assert res.passed
    assert res.core_order == 1
    assert res.candidates_checked == 1  # only the rotation subgroup of S3


def test_maxnorm_s4_sylow2(s4):
    res = is_maximal_normalizer(s4, sylow_subgroup(s4, 2))
    assert res.passed
    assert res.core_order == 4
    assert res.quotient_order == 6
    assert res.hbar_order == 2


def test_maxnorm_psl217_sylow2(psl2_17):
    ctx = maximal_normalizer_context(psl2_17, sylow_subgroup(psl2_17, 2))
    for mode in (MODE_FIT_NORMAL, MODE_H_NORMAL):
        res = ctx.result(mode)
        assert res.passed
        assert res.candidates_checked == 6


def test_maxnorm_failure_witness(a5):
    C3 = subgroup(a5, [perm_from_cycles(5, [[1, 2, 3]])])
    res = is_maximal_normalizer(a5, C3)
    assert not res.passed
    assert res.failure is not None
    assert res.failure[1].startswith("6:")  # the normalizer is an S3 of order 6


def test_maxnorm_not_proper(s4):
    res = is_maximal_normalizer(s4, whole(s4))
    assert not res.passed and res.not_proper


def test_maxnorm_conjugation_invariance(s4, a5):
    # the verdict is invariant under conjugating the subgroup
    for G in (s4, a5):
        for H in enumerate_subgroups(G):
            if H.order() in (1, G.order()) or is_normal(G, H):
                continue
            base = is_maximal_normalizer(G, H).passed
            for g in list(G.elements())[::7]:
                Hg = conjugate_subgroup(H, g)
                assert is_maximal_normalizer(G, Hg).passed == base


def test_maxnorm_modes_differ_where_expected():
    # inside PSL(2,13), the alternating subgroups of degree 4 pass only the
    # h-normal quantifier: the Klein subgroup is normal in them, but its
    # order-2 subgroups (normal in the Fitting subgroup) have bigger normalizers
    G, _ = build(parse_spec("PSL2:13"))
    a4_like = None
    for S in enumerate_subgroups(G):
        if S.order() == 12 and not any(g.order() == 6 for g in S.carrier.elements()):
            a4_like = S
            break
    assert a4_like is not None
    ctx = maximal_normalizer_context(G, a4_like)
    assert not ctx.result(MODE_FIT_NORMAL).passed
    assert ctx.result(MODE_H_NORMAL).passed


# -- Frobenius products ----------------------------------------------------------------


def test_frobenius_product_a4(a4):
    V = p_core(a4, 2)
    C3 = subgroup(a4, [perm_from_cycles(4, [[1, 2, 3]])])
    assert is_frobenius_product(a4, V, C3).passed


def test_frobenius_product_s4_fails(s4):
    V = p_core(s4, 2)
    S3 = _stab(s4, 4)
    res = is_frobenius_product(s4, V, S3)
    assert not res.passed
    assert "centralizes" in res.witness


def test_frobenius_product_abelian_fails():
    C6, _ = build(parse_spec("C:6"))
    C3 = subgroup(C6, [perm_from_cycles(6, [[1, 3, 5], [2, 4, 6]])])
    C2 = subgroup(C6, [perm_from_cycles(6, [[1, 4], [2, 5], [3, 6]])])
    res = is_frobenius_product(C6, C3, C2)
    assert not res.passed


def test_frobenius_decomposition_a4(a4):
    dec = frobenius_decomposition(a4)
    assert dec is not None
    assert dec.kernel.order() == 4
    assert dec.complement.order() == 3
    assert dec.product_is_whole
    # the defining properties of the decomposition
    meet = dec.kernel.carrier.element_tuples() & dec.complement.carrier.element_tuples()
    assert len(meet) == 1
    assert dec.kernel.order() * dec.complement.order() == a4.order()


def test_frobenius_decomposition_agl():
    for p in (5, 7, 11):
        G, _ = build(parse_spec(f"AGL1:{p}"))
        dec = frobenius_decomposition(G)
        assert dec is not None
        assert dec.kernel.order() == p
        assert dec.complement.order() == p - 1


def test_frobenius_decomposition_none():
    for name in ("C:6", "S:4", "D:4", "PSL2:5"):
        G, _ = build(parse_spec(name))
        assert frobenius_decomposition(G) is None, name


# -- fixed point free actions -------------------------------------------------------


def test_fixed_point_free_a4(a4):
    V = p_core(a4, 2)
    C3 = subgroup(a4, [perm_from_cycles(4, [[1, 2, 3]])])
    ok, witness = fixed_point_free(V, C3, a4)
    assert ok and witness == ""


def test_fixed_point_free_fails_in_s4(s4):
    V = p_core(s4, 2)
    C2 = subgroup(s4, [perm_from_cycles(4, [[1, 2]])])
    ok, witness = fixed_point_free(V, C2, s4)
    assert not ok and "fixes" in witness


def test_fixed_point_free_trivial_actor(s4):
    V = p_core(s4, 2)
    ok, _ = fixed_point_free(V, trivial_subgroup(s4), s4)
    assert ok


def test_fixed_point_free_requires_normalizing(s4):
    C3 = subgroup(s4, [perm_from_cycles(4, [[1, 2, 3]])])
    C4 = subgroup(s4, [perm_from_cycles(4, [[1, 2, 3, 4]])])
    with pytest.raises(DoesNotNormalize):
        fixed_point_free(C3, C4, s4)


# -- dihedral recognition --------------------------------------------------------------


def test_dihedral_recognition(d4, q8):
    assert is_dihedral_2group(d4) == (True, False)
    assert is_dihedral_2group(q8) == (False, False)
    V4, _ = build(parse_spec("PROD(C:2,C:2)"))
    assert is_dihedral_2group(V4) == (True, True)
    C4, _ = build(parse_spec("C:4"))
    assert is_dihedral_2group(C4) == (False, False)
    C8, _ = build(parse_spec("C:8"))
    assert is_dihedral_2group(C8) == (False, False)
    D8, _ = build(parse_spec("D:8"))
    assert is_dihedral_2group(D8) == (True, False)


# -- verifiers --------------------------------------------------------------------------


def test_comp22_s4_point_stabilizer(s4):
    report = verify_comp22(s4, _stab(s4, 4))
    assert report.status == "confirmed"
    assert report.metadata["frobenius_product_order"] == 12
    names = [c.name for c in report.conclusion_checks]
    assert "semidirect-order-product" in names


def test_comp22_s4_sylow2(s4):
    report = verify_comp22(s4, sylow_subgroup(s4, 2))
    assert report.status == "confirmed"
    assert report.metadata["frobenius_product_order"] == 6


def test_comp22_agl_family():
    for p in (5, 7, 11, 13):
        G, H = build(parse_spec(f"AGL1:{p}", selector="stab:1"))
        report = verify_comp22(G, H)
        assert report.status == "confirmed", p


def test_comp22_psl217_never_counterexample(psl2_17):
    report = verify_comp22(psl2_17, sylow_subgroup(psl2_17, 2))
    assert report.status == "hypotheses-not-met"
    failed = [c.name for c in report.hypothesis_checks if not c.passed]
    assert failed == ["group-solvable"]


def test_hall_lemma_s4_sylow2(s4):
    report = verify_hall_lemma(s4, sylow_subgroup(s4, 2))
    assert report.status == "confirmed"


def test_hall_lemma_s4_s3_not_nilpotent(s4):
    report = verify_hall_lemma(s4, _stab(s4, 4))
    assert report.status == "hypotheses-not-met"
    failed = [c.name for c in report.hypothesis_checks if not c.passed]
    assert failed == ["subgroup-nilpotent"]


def test_hall_lemma_agl7():
    G, H = build(parse_spec("AGL1:7", selector="stab:1"))
    report = verify_hall_lemma(G, H)
    assert report.status == "confirmed"
    hall_check = next(c for c in report.conclusion_checks if c.name == "image-is-hall-subgroup")
    assert hall_check.passed


def test_rem23_psl217(psl2_17):
    report = verify_rem23(psl2_17, sylow_subgroup(psl2_17, 2))
    assert report.status == "confirmed"
    assert report.metadata["branch"] == "sylow-2"


def test_rem23_s4(s4):
    report = verify_rem23(s4, sylow_subgroup(s4, 2))
    assert report.status == "confirmed"
    assert report.metadata["branch"] == "solvable"


def test_rem23_a5_strict_normalizer_witness(a5):
    C3 = subgroup(a5, [perm_from_cycles(5, [[1, 2, 3]])])
    report = verify_rem23(a5, C3)
    assert report.status == "hypotheses-not-met"
    witness = report.metadata["strict_normalizer_witness"]
    assert witness is not None
    assert witness["normalizer_order"] == 6
    assert not report.metadata["strict_normalizer_violated"]


def test_simp_psl217(psl2_17):
    report = verify_simp(psl2_17, sylow_subgroup(psl2_17, 2))
    assert report.status == "confirmed"
    assert report.metadata["psl2_parameters"] == [17]
    by_name = {c.name: c for c in report.conclusion_checks}
    assert by_name["unique-minimal-normal"].passed
    assert by_name["factor-sylow-2-dihedral"].passed
    assert by_name["quotient-by-minimal-normal-is-2-group"].passed


def test_simp_psl25_klein_degenerate():
    # the Sylow 2-subgroup of the order-60 member is the Klein four-group;
    # the degenerate dihedral case must be flagged
    G, _ = build(parse_spec("PSL2:5"))
    H = sylow_subgroup(G, 2)
    report = verify_simp(G, H)
    assert report.mode == MODE_FIT_NORMAL
    if report.status == "confirmed":
        assert report.metadata["klein_degenerate_factors"] == [True]
    else:
        # the pipeline decides the maximal-normalizer hypothesis
        assert report.status == "hypotheses-not-met"


def test_simp_solvable_group_hypotheses_not_met(s4):
    report = verify_simp(s4, sylow_subgroup(s4, 2))
    assert report.status == "hypotheses-not-met"


def test_thompson_agl7():
    G, _ = build(parse_spec("AGL1:7"))
    K = fitting_subgroup(G)
    stab = Subgroup(G, G.point_stabilizer(1))
    C3 = subgroup(G, [g for g in stab.carrier.elements() if g.order() == 3][:1])
    report = verify_thompson(K, C3, G)
    assert report.status == "confirmed"


def test_thompson_a4(a4):
    V = p_core(a4, 2)
    C3 = subgroup(a4, [perm_from_cycles(4, [[1, 2, 3]])])
    report = verify_thompson(V, C3, a4)
    assert report.status == "confirmed"


def test_thompson_with_fixed_point(s4):
    V = p_core(s4, 2)
    C2 = subgroup(s4, [perm_from_cycles(4, [[1, 2]])])
    report = verify_thompson(V, C2, s4)
    assert report.status == "hypotheses-not-met"


def test_burnside_complements():
    for spec, expect_cyclic_order in (("AGL1:5", 4), ("AGL1:7", 6)):
        G, H = build(parse_spec(spec, selector="stab:1"))
        assert H.order() == expect_cyclic_order
        report = verify_burnside_complement(H, "test attestation")
        assert report.status == "confirmed"
        assert any(c.name == "order-pq-implies-cyclic" for c in report.conclusion_checks)


def test_burnside_prime_order_complement(a4):
    dec = frobenius_decomposition(a4)
    report = verify_burnside_complement(dec.complement, "test")
    assert report.status == "confirmed"


def test_report_serialization_roundtrip(s4):
    report = verify_comp22(s4, _stab(s4, 4))
    data = report.to_dict()
    back = VerdictReport.from_dict(data)
    assert back.to_dict() == data
