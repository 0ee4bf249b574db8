"""
Face tracing and checkerboard coloring from the crossing rotation system.

Corner ``(x, j)`` is the region between slots ``j`` and ``j+1`` of crossing
``x``. Walking along the arc in slot ``j+1`` to its other end ``(y, k)``
lands in corner ``(y, k)`` of the same face.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from src.diagram.link_diagram import LinkDiagram, Slot, is_connected
from src.errors import DisconnectedInput, InternalError

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"
BLACK = "black"
WHITE = "white"


def next_corner(d: LinkDiagram, corner: Slot) -> Slot:
    """Counterclockwise successor of a face corner: across the next slot's arc."""
    pos, j = corner
    return d.other_end(pos, (j + 1) % 4)


def corner_arc_side(d: LinkDiagram, corner: Slot) -> Tuple[int, str]:
    """The boundary arc leaving the corner and the side the face lies on."""
    pos, j = corner
    slot = (j + 1) % 4
    crossing = d.crossings[pos]
    side = LEFT if crossing.is_incoming(slot) else RIGHT
    return crossing.slots[slot], side


def trace_corner_cycles(d: LinkDiagram) -> List[List[Slot]]:
    """All faces as corner cycles, in discovery order; no connectivity check."""
    seen = set()
    cycles: List[List[Slot]] = []
    for pos in range(len(d.crossings)):
        for j in range(4):
            if (pos, j) in seen:
                continue
            cycle = []
            corner = (pos, j)
            while corner not in seen:
                seen.add(corner)
                cycle.append(corner)
                corner = next_corner(d, corner)
            cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class FaceSet:
    """
    Faces of a connected diagram.

    ``faces[f]`` is the cyclic list of (arc, side) pairs bounding face ``f``;
    ``corners[f]`` lists the matching crossing corners.
    """
    faces: Tuple[Tuple[Tuple[int, str], ...], ...]
    corners: Tuple[Tuple[Slot, ...], ...]
    face_of_corner: Dict[Slot, int] = field(compare=False)
    arc_faces: Dict[int, Dict[str, int]] = field(compare=False)

    def __len__(self) -> int:
        return len(self.faces)

    def face_crossings(self, face: int) -> List[int]:
        return sorted({pos for pos, _ in self.corners[face]})

    def face_arcs(self, face: int) -> List[int]:
        return [arc for arc, _ in self.faces[face]]

    def left_face(self, arc: int) -> int:
        """Face on the left of ``arc`` as it is traversed."""
        return self.arc_faces[arc][LEFT]

    def right_face(self, arc: int) -> int:
        return self.arc_faces[arc][RIGHT]


def faces(d: LinkDiagram) -> FaceSet:
    """
    Trace the faces of a connected diagram from its rotation system.

    Args:
        d: Connected link diagram

    Returns:
        FaceSet with c + 2 faces for c >= 1 crossings, two for a lone circle

    Raises:
        DisconnectedInput: If the diagram has more than one split part
    """
    if not is_connected(d):
        raise DisconnectedInput("face tracing needs a connected diagram")
    if not d.crossings:
        # a lone circle splits the sphere into two discs
        return FaceSet(((), ()), ((), ()), {}, {})

    cycles = trace_corner_cycles(d)
    face_of_corner: Dict[Slot, int] = {}
    arc_faces: Dict[int, Dict[str, int]] = {}
    sided = []
    for f, cycle in enumerate(cycles):
        boundary = []
        for corner in cycle:
            face_of_corner[corner] = f
            arc, side = corner_arc_side(d, corner)
            boundary.append((arc, side))
            arc_faces.setdefault(arc, {})[side] = f
        sided.append(tuple(boundary))

    total = sum(len(c) for c in cycles)
    if total != 4 * len(d.crossings):
        raise InternalError(f"face lengths sum to {total}, expected {4 * len(d.crossings)}")
    logger.debug(f"Traced {len(cycles)} faces over {len(d.crossings)} crossings")
    return FaceSet(tuple(sided), tuple(tuple(c) for c in cycles), face_of_corner, arc_faces)


@dataclass(frozen=True)
class CheckerboardColoring:
    """Two-colouring of the faces; faces sharing an arc get different colours."""

    color: Tuple[str, ...]
    face_set: FaceSet = field(compare=False, repr=False)

    def faces_of(self, colour: str) -> List[int]:
        return [f for f, c in enumerate(self.color) if c == colour]

    @property
    def white_faces(self) -> List[int]:
        return self.faces_of(WHITE)

    @property
    def black_faces(self) -> List[int]:
        return self.faces_of(BLACK)

    def swapped(self) -> "CheckerboardColoring":
        flip = {BLACK: WHITE, WHITE: BLACK}
        return CheckerboardColoring(tuple(flip[c] for c in self.color), self.face_set)


def face_adjacency(face_set: FaceSet) -> nx.Graph:
    """Dual graph: one node per face, one edge per arc between its two sides."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(face_set)))
    for sides in face_set.arc_faces.values():
        graph.add_edge(sides[LEFT], sides[RIGHT])
    return graph


def checkerboard(d: LinkDiagram, face_set: FaceSet | None = None) -> CheckerboardColoring:
    """
    Proper two-coloring of the faces. Of the two faces along the lowest
    arc label, the one traced first is black.
    """
    face_set = face_set if face_set is not None else faces(d)
    if not d.crossings:
        return CheckerboardColoring((BLACK, WHITE), face_set)

    lowest = min(face_set.arc_faces)
    root = min(face_set.arc_faces[lowest].values())
    distance = nx.single_source_shortest_path_length(face_adjacency(face_set), root)
    color = tuple(BLACK if distance[f] % 2 == 0 else WHITE for f in range(len(face_set)))

    for arc, sides in face_set.arc_faces.items():
        if color[sides[LEFT]] == color[sides[RIGHT]]:
            raise InternalError(f"faces on both sides of arc {arc} share a color")
    return CheckerboardColoring(color, face_set)
