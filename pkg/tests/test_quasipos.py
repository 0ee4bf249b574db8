#!/usr/bin/env python3
"""
Test script for quasipositivity verdicts and their certificates.
"""

import numpy as np
import pytest

from src.braid.braid_word import closure_to_diagram, expand_qp, exponent_sum, free_reduce, random_qp
from src.diagram.link_diagram import LinkDiagram, disjoint_union, is_positive_diagram, writhe
from src.diagram.pd_codec import serialize_pd
from src.diagram.builder import braid_closure
from src.errors import (
    HypothesisViolated,
    InconsistentBraidData,
    InputError,
    InternalError,
    InvalidDiagram,
    NegativeR,
    NotAlternating,
    ParityError,
)
from src.invariants.signature import link_signature
from src.quasipos.verdicts import (
    BraidData,
    Outcome,
    QuasipositivityCertifier,
    RCounts,
    Verdict,
    dhl_verdict,
    generalized_verdict,
    mt_check,
    proof_chain_check,
    r_pm,
    require_hypotheses,
    verify_certificate,
)
from src.seifert.seifert_graph import is_dhl, seifert_circles, seifert_graph, tree_stats


def non_dhl_candidate(corpus, max_d_minus):
    """First generated diagram outside the pair criterion with >= 3 circles."""
    for _, d in corpus:
        graph = seifert_graph(d)
        if is_dhl(d, graph) or graph.vertices < 3:
            continue
        if tree_stats(graph).d_minus <= max_d_minus:
            return d
    return None


# --------------------------------------------------
# Braid data arithmetic
# --------------------------------------------------

def test_braid_data_validation():
    with pytest.raises(InputError):
        BraidData(0, 1)
    with pytest.raises(InputError):
        BraidData(2, 1, "guess")
    assert BraidData(3, 0, "table").to_dict() == {"b": 3, "w_beta": 0, "source": "table"}


def test_r_pm():
    assert r_pm(3, 0, BraidData(3, 0)) == RCounts(0, 0)
    assert r_pm(5, 1, BraidData(3, 1)) == RCounts(1, 1)
    assert r_pm(4, 3, BraidData(3, 2)) == RCounts(1, 0)


def test_r_pm_parity():
    with pytest.raises(ParityError):
        r_pm(4, 5, BraidData(3, 5))
    with pytest.raises(ParityError):
        r_pm(3, 0, BraidData(4, 0))


def test_r_pm_negative():
    with pytest.raises(NegativeR):
        r_pm(2, 0, BraidData(4, 0))
    with pytest.raises(NegativeR):
        r_pm(4, 3, BraidData(3, 0))


def test_mt_check():
    # positive trefoil as a 2-strand braid of writhe 3
    assert mt_check(-2, 0, 2, 3)
    # figure-eight as a 3-strand braid of writhe 0
    assert not mt_check(0, 0, 3, 0)
    with pytest.raises(InputError):
        mt_check(0, -1, 2, 0)


# --------------------------------------------------
# Pair-criterion route
# --------------------------------------------------

def test_positive_trefoil_is_sqp(pos_trefoil):
    verdict = dhl_verdict(pos_trefoil)
    assert verdict.outcome is Outcome.SQP
    assert verdict.label == "StronglyQuasipositive"
    assert verdict.certificate["witness"] == serialize_pd(pos_trefoil)
    assert verdict.certificate["chain"][-1] == "positive_diagram_sqp"


def test_fig8_is_not_qp(fig8):
    verdict = dhl_verdict(fig8)
    assert verdict.outcome is Outcome.NOT_QP
    assert verdict.certificate["negative_crossings"] == [1, 3]
    assert verdict.certificate["violated_bound"] == [{"component": 0, "lhs": 1, "rhs": 3}]
    assert "signature_bound" in verdict.certificate["chain"]


def test_negative_trefoil_is_not_qp(neg_trefoil):
    assert dhl_verdict(neg_trefoil).outcome is Outcome.NOT_QP


def test_kink_is_inconclusive(kink):
    verdict = dhl_verdict(kink)
    assert verdict.outcome is Outcome.INCONCLUSIVE
    assert verdict.reason == "NotDHL"
    assert verdict.label == "Inconclusive(NotDHL)"
    assert verdict.certificate["non_dhl_components"] == [0]


def test_split_links(pos_trefoil, pos_hopf, fig8):
    both_positive = dhl_verdict(disjoint_union(pos_trefoil, pos_hopf))
    assert both_positive.outcome is Outcome.SQP
    assert len(both_positive.certificate["components"]) == 2

    mixed = dhl_verdict(disjoint_union(pos_trefoil, fig8))
    assert mixed.outcome is Outcome.NOT_QP
    assert [v["component"] for v in mixed.certificate["violated_bound"]] == [1]


def test_pair_route_rejects_bad_input():
    with pytest.raises(InvalidDiagram):
        dhl_verdict(LinkDiagram())
    with pytest.raises(NotAlternating):
        dhl_verdict(braid_closure(2, [1, -1]))


def test_verdict_matches_positivity_on_corpus(two_bridge_10):
    decided = 0
    for _, d in two_bridge_10:
        verdict = dhl_verdict(d)
        if verdict.outcome is Outcome.INCONCLUSIVE:
            assert not is_dhl(d)
            continue
        decided += 1
        assert (verdict.outcome is Outcome.SQP) == is_positive_diagram(d)
        assert proof_chain_check(d)
    assert decided > 0


def test_proof_chain_check(pos_trefoil, pos_hopf, fig8, kink):
    assert proof_chain_check(pos_trefoil)
    assert proof_chain_check(pos_hopf)
    assert proof_chain_check(fig8)
    with pytest.raises(HypothesisViolated):
        proof_chain_check(kink)


# --------------------------------------------------
# Writhe-cone route
# --------------------------------------------------

def test_require_hypotheses(unknot0, kink, pos_trefoil, pos_hopf):
    cases = [
        (unknot0, "nontrivial"),
        (disjoint_union(pos_trefoil, pos_hopf), "connected"),
        (braid_closure(2, [1, -1, 1, -1]), "alternating"),
        (kink, "reduced"),
    ]
    for d, hypothesis in cases:
        with pytest.raises(HypothesisViolated) as info:
            require_hypotheses(d)
        assert info.value.hypothesis == hypothesis
    require_hypotheses(pos_trefoil, dhl=True)


def test_internal_braid_data_agrees_with_pair_route(fig8, pos_trefoil):
    for d in (fig8, pos_trefoil):
        bd = BraidData(seifert_circles(d).s, writhe(d), "DHL-internal")
        assert generalized_verdict(d, bd).outcome is dhl_verdict(d).outcome


def test_fig8_with_wrong_braid_data(fig8):
    with pytest.raises(InconsistentBraidData):
        generalized_verdict(fig8, BraidData(2, 1))


def test_writhe_cone_decides(two_bridge_10):
    d = non_dhl_candidate(two_bridge_10, max_d_minus=10 ** 6)
    assert d is not None
    s, w = seifert_circles(d).s, writhe(d)
    verdict = generalized_verdict(d, BraidData(s - 1, w - 1, "table"))
    assert verdict.certificate["r_plus"] == 1
    assert verdict.certificate["r_minus"] == 0
    expected = Outcome.SQP if is_positive_diagram(d) else Outcome.NOT_QP
    assert verdict.outcome is expected
    if expected is Outcome.NOT_QP:
        assert verdict.certificate["failed_inequality"]["statement"] == "d_plus >= s - 1"
    assert verify_certificate(d, verdict)


def test_writhe_cone_inconclusive(two_bridge_10):
    d = non_dhl_candidate(two_bridge_10, max_d_minus=3)
    assert d is not None
    s, w = seifert_circles(d).s, writhe(d)
    verdict = generalized_verdict(d, BraidData(s - 2, w + 2))
    assert verdict.outcome is Outcome.INCONCLUSIVE
    assert verdict.reason == "RMinusBoundFails"
    assert verdict.certificate["r_minus"] == 2


# --------------------------------------------------
# Certificates and the certifier
# --------------------------------------------------

def test_verify_certificate(pos_trefoil, fig8):
    for d in (pos_trefoil, fig8):
        assert verify_certificate(d, dhl_verdict(d))

    verdict = dhl_verdict(fig8)
    forged = Verdict(Outcome.SQP, verdict.certificate)
    assert not verify_certificate(fig8, forged)
    assert not verify_certificate(fig8, Verdict(Outcome.SQP, {}))


def test_certifier_routes(pos_trefoil, kink, unknot0, fig8):
    certifier = QuasipositivityCertifier({"verify_certificates": True})
    assert certifier.certify(pos_trefoil).outcome is Outcome.SQP
    assert certifier.certify(fig8, BraidData(3, 0, "DHL-internal")).outcome is Outcome.NOT_QP
    assert certifier.certify(kink, BraidData(2, 1)).label == "Inconclusive(NotReduced)"
    assert certifier.certify(unknot0, BraidData(1, 0)).label == "Inconclusive(NoCrossings)"
    non_alternating = braid_closure(2, [1, -1, 1, -1])
    assert certifier.certify(non_alternating).label == "Inconclusive(NotAlternating)"


def test_certifier_rejects_unverifiable_certificate(pos_trefoil, monkeypatch):
    monkeypatch.setattr("src.quasipos.verdicts.verify_certificate", lambda d, verdict, bd=None: False)
    with pytest.raises(InternalError):
        QuasipositivityCertifier({"verify_certificates": True}).certify(pos_trefoil)
    # re-verification switched off returns the verdict unchecked
    assert QuasipositivityCertifier({"verify_certificates": False}).certify(pos_trefoil).outcome is Outcome.SQP


def test_internal_braid_data(fig8, kink, unknot0):
    certifier = QuasipositivityCertifier()
    assert certifier.braid_data_for(fig8) == BraidData(3, 0, "DHL-internal")
    assert certifier.braid_data_for(kink) is None
    assert certifier.braid_data_for(unknot0) is None


def test_signature_bound_on_random_quasipositive_braids():
    rng = np.random.default_rng(2024)
    for i in range(1000):
        strands = int(rng.integers(2, 7))
        factors = int(rng.integers(0, 9))
        max_conj = int(rng.integers(0, 7))
        word = free_reduce(expand_qp(random_qp(strands, factors, max_conj, seed=i)))
        report = link_signature(closure_to_diagram(word))
        assert mt_check(report.sigma, report.nullity, strands, exponent_sum(word)), (i, word)
