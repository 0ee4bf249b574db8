"""
Quasipositivity verdicts for alternating link diagrams.

Every verdict carries a certificate: the chain of results it relies on,
the numbers those results were applied to, and for positive answers the
diagram itself as witness. Anything outside the hypotheses of a result is
reported as Inconclusive with the failed hypothesis named, never guessed.

Certificate chain steps:
    seifert_circle_criterion          every joined circle pair has >= 2 crossings
                                      iff the diagram realizes the braid index
    signature_formula                 sigma = d(D) - w(D) on reduced alternating D
    signature_bound                   a quasipositive link satisfies
                                      1 + nullity >= |sigma| + strands - w(beta)
    dhl_positivity                    pair-criterion diagram of a quasipositive
                                      link is positive
    positive_alternating_equivalence  quasipositive <=> positive, on that class
    writhe_cone_positivity            with 2 r- <= d-, quasipositive implies positive
    positive_diagram_sqp              a positive diagram is strongly quasipositive
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from src.diagram.link_diagram import (
    LinkDiagram,
    connected_components,
    is_alternating,
    is_connected,
    negative_crossings,
    writhe,
)
from src.diagram.pd_codec import serialize_pd
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
from src.seifert.seifert_graph import is_dhl, is_reduced, seifert_circles, seifert_graph, tree_stats

logger = logging.getLogger(__name__)

SOURCES = ("table", "DHL-internal", "user")

DHL_ROUTE = "dhl"
WRITHE_CONE_ROUTE = "writhe_cone"

NOT_DHL = "NotDHL"
R_MINUS_BOUND_FAILS = "RMinusBoundFails"

_REASONS = {"dhl": NOT_DHL, "nontrivial": "NoCrossings"}


class Outcome(str, Enum):
    SQP = "StronglyQuasipositive"
    NOT_QP = "NotQuasipositive"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class BraidData:
    b: int
    w_beta: int
    source: str = "user"

    def __post_init__(self):
        if self.b < 1:
            raise InputError(f"braid index must be positive, got {self.b}")
        if self.source not in SOURCES:
            raise InputError(f"unknown braid data source {self.source!r}")

    def to_dict(self) -> dict:
        return {"b": self.b, "w_beta": self.w_beta, "source": self.source}


@dataclass(frozen=True)
class RCounts:
    r_plus: int
    r_minus: int


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    certificate: Dict = field(default_factory=dict)
    reason: Optional[str] = None

    @property
    def label(self) -> str:
        if self.outcome is Outcome.INCONCLUSIVE:
            return f"Inconclusive({self.reason})"
        return self.outcome.value

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "reason": self.reason,
            "certificate": self.certificate,
        }


def mt_check(sigma: int, nullity: int, n: int, w: int) -> bool:
    """Necessary condition for a quasipositive n-strand braid of writhe w."""
    if nullity < 0 or n < 1:
        raise InputError(f"need nullity >= 0 and n >= 1, got nullity={nullity}, n={n}")
    return 1 + nullity >= abs(sigma) + n - w


def r_pm(s: int, w_d: int, bd: BraidData) -> RCounts:
    """Split s - b and w(D) - w(beta) into the counts r+ and r-."""
    circle_gap = s - bd.b
    writhe_gap = w_d - bd.w_beta
    if (circle_gap - writhe_gap) % 2:
        raise ParityError(
            f"s - b = {circle_gap} and w(D) - w(beta) = {writhe_gap} differ in parity"
        )
    r_plus = (circle_gap + writhe_gap) // 2
    r_minus = (circle_gap - writhe_gap) // 2
    if circle_gap < 0 or r_plus < 0 or r_minus < 0:
        raise NegativeR(f"braid data gives r+ = {r_plus}, r- = {r_minus} (s = {s}, b = {bd.b})")
    return RCounts(r_plus, r_minus)


def _component_summary(index: int, part: LinkDiagram) -> dict:
    circles = seifert_circles(part)
    graph = seifert_graph(part, circles)
    summary = {
        "component": index,
        "crossings": len(part.crossings),
        "s": circles.s,
        "w": writhe(part),
        "dhl": is_dhl(part, graph),
        "negative_crossings": negative_crossings(part),
    }
    if part.crossings:
        stats = tree_stats(graph)
        summary.update({"d": stats.d, "d_plus": stats.d_plus, "d_minus": stats.d_minus})
        summary["bound_rhs"] = abs(stats.d - summary["w"]) + circles.s - summary["w"]
    return summary


def dhl_verdict(d: LinkDiagram) -> Verdict:
    """Pair-criterion route: decides every diagram whose split components all qualify."""
    if d.is_empty:
        raise InvalidDiagram("empty diagram")
    if not is_alternating(d):
        raise NotAlternating("the pair-criterion route needs an alternating diagram")

    components = [_component_summary(i, part) for i, part in enumerate(connected_components(d))]
    base = {"route": DHL_ROUTE, "components": components}

    failing = [c["component"] for c in components if not c["dhl"]]
    if failing:
        return Verdict(Outcome.INCONCLUSIVE, {**base, "failed_hypothesis": NOT_DHL, "non_dhl_components": failing}, NOT_DHL)

    negatives = negative_crossings(d)
    if not negatives:
        certificate = {
            **base,
            "chain": ["seifert_circle_criterion", "positive_alternating_equivalence", "positive_diagram_sqp"],
            "witness": serialize_pd(d),
            "negative_crossings": [],
        }
        return Verdict(Outcome.SQP, certificate)

    certificate = {
        **base,
        "chain": ["seifert_circle_criterion", "signature_formula", "signature_bound", "dhl_positivity"],
        "negative_crossings": negatives,
        "violated_bound": [
            {"component": c["component"], "lhs": 1, "rhs": c["bound_rhs"]}
            for c in components if c["negative_crossings"]
        ],
    }
    return Verdict(Outcome.NOT_QP, certificate)


def require_hypotheses(d: LinkDiagram, dhl: bool = False) -> None:
    if d.is_empty or not d.crossings:
        raise HypothesisViolated("nontrivial", "diagram has no crossings")
    if not is_connected(d):
        raise HypothesisViolated("connected")
    if not is_alternating(d):
        raise HypothesisViolated("alternating")
    graph = seifert_graph(d)
    if not is_reduced(graph):
        raise HypothesisViolated("reduced")
    if dhl and not is_dhl(d, graph):
        raise HypothesisViolated("dhl")


def generalized_verdict(d: LinkDiagram, bd: BraidData) -> Verdict:
    """Writhe-cone route for connected reduced alternating diagrams with braid data."""
    require_hypotheses(d)
    circles = seifert_circles(d)
    graph = seifert_graph(d, circles)
    stats = tree_stats(graph)
    s, w = circles.s, writhe(d)

    if is_dhl(d, graph) and (bd.b, bd.w_beta) != (s, w):
        raise InconsistentBraidData(
            f"this diagram realizes its braid index: expected b = {s}, w(beta) = {w}, "
            f"got b = {bd.b}, w(beta) = {bd.w_beta}"
        )
    r = r_pm(s, w, bd)

    evidence = {
        "route": WRITHE_CONE_ROUTE,
        **bd.to_dict(),
        "s": s,
        "w_d": w,
        "r_plus": r.r_plus,
        "r_minus": r.r_minus,
        "d": stats.d,
        "d_plus": stats.d_plus,
        "d_minus": stats.d_minus,
    }
    if 2 * r.r_minus > stats.d_minus:
        return Verdict(
            Outcome.INCONCLUSIVE,
            {**evidence, "failed_hypothesis": R_MINUS_BOUND_FAILS, "condition": "2 * r_minus <= d_minus"},
            R_MINUS_BOUND_FAILS,
        )

    negatives = negative_crossings(d)
    if not negatives:
        return Verdict(Outcome.SQP, {
            **evidence,
            "chain": ["writhe_cone_positivity", "positive_diagram_sqp"],
            "witness": serialize_pd(d),
            "negative_crossings": [],
        })
    return Verdict(Outcome.NOT_QP, {
        **evidence,
        "chain": ["signature_formula", "signature_bound", "writhe_cone_positivity"],
        "negative_crossings": negatives,
        "failed_inequality": {"statement": "d_plus >= s - 1", "d_plus": stats.d_plus, "s_minus_1": s - 1},
    })


def proof_chain_check(d: LinkDiagram) -> bool:
    """On a pair-criterion diagram, the signature bound holds iff D is positive."""
    require_hypotheses(d, dhl=True)
    s = seifert_circles(d).s
    w = writhe(d)
    d_value = tree_stats(seifert_graph(d)).d
    bound_holds = 1 >= abs(d_value - w) + s - w
    positive = not negative_crossings(d)
    if bound_holds != positive:
        logger.error(f"Bound/positivity mismatch on {d.name or 'diagram'}: bound {bound_holds}, positive {positive}")
    return bound_holds == positive


def verify_certificate(d: LinkDiagram, verdict: Verdict, bd: Optional[BraidData] = None) -> bool:
    """
    Recompute the verdict from the diagram. Braid data comes from ``bd``
    when given, otherwise from the certificate itself.
    """
    route = verdict.certificate.get("route")
    if route == DHL_ROUTE:
        recomputed = dhl_verdict(d)
    elif route == WRITHE_CONE_ROUTE:
        cert = verdict.certificate
        bd = bd if bd is not None else BraidData(cert["b"], cert["w_beta"], cert["source"])
        recomputed = generalized_verdict(d, bd)
    else:
        logger.warning(f"Certificate without a known route: {route!r}")
        return False
    return recomputed.to_dict() == verdict.to_dict()


class QuasipositivityCertifier:
    """
    Picks the route for a diagram: the writhe-cone route when braid data is
    supplied, otherwise the pair-criterion route. Hypothesis failures turn
    into Inconclusive verdicts.
    """

    def __init__(self, config: Optional[dict] = None):
        self.config = config or {}
        self.verify = self.config.get("verify_certificates", True)

    def certify(self, d: LinkDiagram, bd: Optional[BraidData] = None) -> Verdict:
        try:
            verdict = generalized_verdict(d, bd) if bd is not None else dhl_verdict(d)
        except NotAlternating:
            verdict = Verdict(Outcome.INCONCLUSIVE, {"failed_hypothesis": "alternating"}, "NotAlternating")
        except HypothesisViolated as exc:
            verdict = Verdict(Outcome.INCONCLUSIVE, {"failed_hypothesis": exc.hypothesis}, _REASONS.get(exc.hypothesis, f"Not{exc.hypothesis.capitalize()}"))

        if self.verify and "route" in verdict.certificate and not verify_certificate(d, verdict):
            logger.error(f"Certificate for {d.name or 'diagram'} failed re-verification")
            raise InternalError(f"certificate for {d.name or 'diagram'} does not re-verify ({verdict.label})")
        logger.info(f"{d.name or 'diagram'}: {verdict.label}")
        return verdict

    def braid_data_for(self, d: LinkDiagram) -> Optional[BraidData]:
        """Internal braid data when the diagram realizes its own braid index."""
        if not d.crossings or not is_connected(d) or not is_alternating(d):
            return None
        graph = seifert_graph(d)
        if not is_dhl(d, graph):
            return None
        return BraidData(graph.vertices, writhe(d), "DHL-internal")

