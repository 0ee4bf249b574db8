"""
Diagram invariant checks: arc usage, orientation and per-component Euler
characteristic. ``validate`` returns violations as data; ``ensure_valid``
raises the first one.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Type

import networkx as nx

from src.diagram.faces import trace_corner_cycles
from src.diagram.link_diagram import LinkDiagram, crossing_graph
from src.errors import (
    ArcUsedTwiceError,
    InputError,
    MalformedSyntax,
    NonSphericalEmbedding,
    OrientationInconsistent,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    kind: Type[InputError]
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.__name__, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    """Violations found on a diagram, in check order; ``components`` only when valid."""
    violations: List[Violation] = field(default_factory=list)
    components: int = 0

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def kinds(self) -> List[str]:
        return [v.kind.__name__ for v in self.violations]

    def raise_first(self) -> None:
        if self.violations:
            first = self.violations[0]
            raise first.kind(first.message)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "components": self.components,
            "violations": [v.to_dict() for v in self.violations],
        }


def _shape_violations(d: LinkDiagram) -> List[Violation]:
    found = []
    if d.free_loops < 0:
        found.append(Violation(MalformedSyntax, "negative free loop count"))
    for pos, crossing in enumerate(d.crossings):
        if len(crossing.slots) != 4:
            found.append(Violation(MalformedSyntax, f"crossing {pos} does not have 4 slots"))
        elif any(not isinstance(a, int) or a < 1 for a in crossing.slots):
            found.append(Violation(MalformedSyntax, f"crossing {pos} has a non-positive arc label"))
        if crossing.over_in not in (1, 3):
            found.append(Violation(MalformedSyntax, f"crossing {pos}: over_in must be 1 or 3"))
    return found


def _arc_violations(d: LinkDiagram) -> List[Violation]:
    found = []
    for arc, occ in sorted(d.occurrences.items()):
        if len(occ) != 2:
            found.append(Violation(
                ArcUsedTwiceError, f"arc {arc} occurs {len(occ)} time(s), expected 2"
            ))
            continue
        incoming = sum(1 for pos, slot in occ if d.crossings[pos].is_incoming(slot))
        if incoming != 1:
            found.append(Violation(
                OrientationInconsistent,
                f"arc {arc} is incoming at {incoming} of its 2 ends",
            ))
    return found


def _euler_violations(d: LinkDiagram) -> List[Violation]:
    found = []
    parts = list(nx.connected_components(crossing_graph(d)))
    part_of = {pos: part_id for part_id, part in enumerate(parts) for pos in part}
    face_counts = [0] * len(parts)
    for cycle in trace_corner_cycles(d):
        face_counts[part_of[cycle[0][0]]] += 1
    for part_id, part in enumerate(parts):
        v = len(part)
        chi = v - 2 * v + face_counts[part_id]
        if chi != 2:
            found.append(Violation(
                NonSphericalEmbedding,
                f"component containing crossing {min(part)} has V-E+F = {chi}",
            ))
    return found


def validate(d: LinkDiagram) -> ValidationReport:
    """
    Check shape, arc usage and the sphere Euler characteristic, stopping at
    the first stage that finds a problem.

    Args:
        d: Diagram to check

    Returns:
        ValidationReport; ``valid`` is true when no violation was found
    """
    violations = _shape_violations(d)
    if not violations:
        violations = _arc_violations(d)
    if not violations:
        violations = _euler_violations(d)
    components = 0
    if not violations:
        components = (
            nx.number_connected_components(crossing_graph(d)) if d.crossings else 0
        ) + d.free_loops
    for violation in violations:
        logger.debug(f"{violation.kind.__name__}: {violation.message}")
    return ValidationReport(violations, components)


def ensure_valid(d: LinkDiagram) -> LinkDiagram:
    """Return ``d`` unchanged or raise the first violation's error."""
    validate(d).raise_first()
    return d
