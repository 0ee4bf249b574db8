"""
Signature, nullity and determinant by two routes: the checkerboard
(Gordon-Litherland) form for any connected diagram, and the closed formula
sigma = d(D) - w(D) for connected reduced alternating diagrams.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.diagram.faces import CheckerboardColoring
from src.diagram.link_diagram import (
    LinkDiagram,
    connected_components,
    is_alternating,
    is_connected,
    writhe,
)
from src.errors import DisconnectedInput, HypothesisViolated, InvalidDiagram
from src.invariants.exact_signature import inertia
from src.invariants.goeritz import goeritz
from src.seifert.seifert_graph import is_reduced, seifert_graph, tree_stats

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignatureReport:
    sigma: int
    nullity: int
    determinant: int
    w: int
    d: int
    traczyk_sigma: Optional[int] = None
    agreement: bool = False

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "nullity": self.nullity,
            "det": self.determinant,
            "w": self.w,
            "d": self.d,
            "traczyk_sigma": self.traczyk_sigma,
            "agreement": self.agreement,
        }

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.sigma, self.nullity, self.determinant)


def gordon_litherland(d: LinkDiagram, col: Optional[CheckerboardColoring] = None) -> Tuple[int, int, int]:
    """(sigma, nullity, |det|) of a connected diagram from one coloring."""
    if not is_connected(d):
        raise DisconnectedInput("signature oracle needs a connected diagram")
    if not d.crossings:
        return (0, 0, 1)
    data = goeritz(d, col)
    form = inertia(data.matrix)
    determinant = abs(form.det.numerator) if form.zero == 0 else 0
    return (form.signature - data.type2_correction, form.zero, determinant)


def gl_signature(d: LinkDiagram) -> SignatureReport:
    sigma, nullity, determinant = gordon_litherland(d)
    stats = tree_stats(seifert_graph(d))
    return SignatureReport(sigma, nullity, determinant, writhe(d), stats.d)


def link_signature(d: LinkDiagram) -> SignatureReport:
    """
    Split-aware signature. Sigma, w and d add over diagram components;
    nullity adds and gains components - 1; the determinant of a split
    link is 0.
    """
    parts = connected_components(d)
    if not parts:
        raise InvalidDiagram("empty diagram has no signature")
    reports = [gl_signature(p) for p in parts]
    nullity = sum(r.nullity for r in reports) + len(reports) - 1
    determinant = 0
    if nullity == 0:
        determinant = reports[0].determinant
    return SignatureReport(
        sigma=sum(r.sigma for r in reports),
        nullity=nullity,
        determinant=determinant,
        w=sum(r.w for r in reports),
        d=sum(r.d for r in reports),
    )


def traczyk_signature(d: LinkDiagram) -> Tuple[int, int]:
    if not is_connected(d):
        raise HypothesisViolated("connected")
    if not is_alternating(d):
        raise HypothesisViolated("alternating")
    graph = seifert_graph(d)
    if not is_reduced(graph):
        raise HypothesisViolated("reduced")
    return (tree_stats(graph).d - writhe(d), 0)


def verify_traczyk(d: LinkDiagram) -> SignatureReport:
    traczyk_sigma, _ = traczyk_signature(d)
    oracle = gl_signature(d)
    agreement = oracle.sigma == traczyk_sigma and oracle.nullity == 0
    if not agreement:
        logger.warning(
            f"Signature routes disagree on {d.name or 'diagram'}: "
            f"oracle {oracle.sigma} (nullity {oracle.nullity}) vs formula {traczyk_sigma}"
        )
    return SignatureReport(
        oracle.sigma, oracle.nullity, oracle.determinant, oracle.w, oracle.d,
        traczyk_sigma, agreement,
    )


def signature_report_to_json(report: SignatureReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True)
