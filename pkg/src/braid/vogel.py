"""
Diagram -> braid transform that keeps the Seifert-circle count and the
writhe.

A face whose boundary holds arcs of two different Seifert circles, both
with the face on the same side, admits a move: a finger of the first arc
is pushed across the face and over the second arc, adding one positive
and one negative crossing. The two circles merge and a small circle
appears, so the count is unchanged. Once no face admits a move, the
circles are coherently nested and the crossings are read off in angular
order along a cut running from the outermost circle inwards.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.braid.braid_word import BraidWord
from src.diagram.faces import LEFT, RIGHT, FaceSet, faces
from src.diagram.link_diagram import Crossing, LinkDiagram, is_connected
from src.diagram.validation import ensure_valid
from src.errors import BraidReadError, DisconnectedInput, NonTermination
from src.seifert.seifert_graph import (
    SeifertCircleSet,
    circle_sides,
    seifert_circles,
    smoothing_successor,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_MOVE_FACTOR = 4


@dataclass(frozen=True)
class FingerMove:
    face: int
    finger_arc: int
    crossed_arc: int
    side: str


def find_move(d: LinkDiagram, face_set: FaceSet, circles: SeifertCircleSet) -> Optional[FingerMove]:
    """Lowest admissible face, then the lexicographically least arc pair."""
    circle_of = circles.circle_of_arc
    for f, boundary in enumerate(face_set.faces):
        side_of = dict(boundary)
        arcs = sorted(side_of)
        for i, e1 in enumerate(arcs):
            for e2 in arcs[i + 1:]:
                if circle_of[e1] != circle_of[e2] and side_of[e1] == side_of[e2]:
                    return FingerMove(f, e1, e2, side_of[e1])
    return None


def apply_move(d: LinkDiagram, move: FingerMove) -> LinkDiagram:
    """
    Push ``finger_arc`` over ``crossed_arc`` inside the face. The finger
    arc is split into a/b/c pieces around new crossings X then Y, the
    crossed arc into a/b/c pieces around Y then X.
    """
    top = max(d.arcs)
    e1a, e1b, e1c, e2a, e2b, e2c = range(top + 1, top + 7)
    e1, e2 = move.finger_arc, move.crossed_arc
    replace_at = {
        d.tails[e1]: e1a, d.heads[e1]: e1c,
        d.tails[e2]: e2a, d.heads[e2]: e2c,
    }
    crossings = []
    for pos, c in enumerate(d.crossings):
        slots = tuple(replace_at.get((pos, slot), arc) for slot, arc in enumerate(c.slots))
        crossings.append(Crossing(slots, c.over_in, pos))

    n = len(crossings)
    if move.side == RIGHT:
        x = Crossing((e2b, e1a, e2c, e1b), 1, n)
        y = Crossing((e2a, e1c, e2b, e1b), 3, n + 1)
    else:
        x = Crossing((e2b, e1b, e2c, e1a), 3, n)
        y = Crossing((e2a, e1b, e2b, e1c), 1, n + 1)
    crossings.extend([x, y])
    return ensure_valid(LinkDiagram(tuple(crossings), 0, d.name))


def braid_diagram(d: LinkDiagram, max_move_factor: int = DEFAULT_MAX_MOVE_FACTOR) -> Tuple[LinkDiagram, int]:
    """Apply moves until none is admissible; returns the diagram and move count."""
    circles = seifert_circles(d)
    bound = max_move_factor * (len(d.crossings) + circles.s) ** 2 + 1
    moves = 0
    while True:
        move = find_move(d, faces(d), circles)
        if move is None:
            return d, moves
        if moves >= bound:
            logger.error(
                f"Braiding did not settle after {moves} moves "
                f"({len(d.crossings)} crossings, {circles.s} circles)"
            )
            raise NonTermination(f"more than {bound} moves without reaching a braided diagram")
        d = apply_move(d, move)
        circles = seifert_circles(d)
        moves += 1


def _circle_order(d: LinkDiagram, circles: SeifertCircleSet) -> Tuple[List[int], Dict[int, int]]:
    """Circles from outermost to innermost, and the lower circle of each crossing."""
    sides = circle_sides(d, circles)
    lower_of: Dict[int, int] = {}
    above: Dict[int, set] = {}
    below: Dict[int, set] = {}
    for pos, per_circle in sides.items():
        (u, side_u), (v, _) = per_circle.items()
        low, high = (u, v) if side_u == RIGHT else (v, u)
        lower_of[pos] = low
        above.setdefault(low, set()).add(high)
        below.setdefault(high, set()).add(low)

    for c in range(circles.s):
        if len(above.get(c, ())) > 1 or len(below.get(c, ())) > 1:
            raise BraidReadError(f"circle {c} is not in a nested chain")
    starts = [c for c in range(circles.s) if c not in below]
    if len(starts) != 1:
        raise BraidReadError(f"expected one outermost circle, found {len(starts)}")
    order = [starts[0]]
    while order[-1] in above:
        order.append(next(iter(above[order[-1]])))
    if len(order) != circles.s:
        raise BraidReadError("nested chain does not reach every circle")
    return order, lower_of


def read_braid_word(d: LinkDiagram) -> BraidWord:
    """Read the word of a diagram whose Seifert circles are coherently nested."""
    circles = seifert_circles(d)
    if not d.crossings:
        return BraidWord(circles.s)
    order, lower_of = _circle_order(d, circles)
    position = {c: i + 1 for i, c in enumerate(order)}
    face_set = faces(d)

    # cut through one arc per circle, consecutive cut arcs sharing a face
    cuts = [min(circles.circles[order[0]])]
    for inner in order[1:]:
        face = face_set.right_face(cuts[-1])
        candidates = [a for a in circles.circles[inner] if face_set.left_face(a) == face]
        if not candidates:
            raise BraidReadError(f"no arc of circle {inner} borders face {face}")
        cuts.append(min(candidates))

    succ = smoothing_successor(d)
    precedence = nx.DiGraph()
    precedence.add_nodes_from(range(len(d.crossings)))
    for circle, arc in zip(order, cuts):
        sequence = []
        for _ in circles.circles[circle]:
            sequence.append(d.heads[arc][0])
            arc = succ[arc]
        precedence.add_edges_from(zip(sequence, sequence[1:]))
    try:
        sweep = list(nx.lexicographical_topological_sort(precedence))
    except nx.NetworkXUnfeasible as exc:
        raise BraidReadError("crossing order along the circles is cyclic") from exc

    letters = tuple(position[lower_of[x]] * d.crossings[x].sign for x in sweep)
    return BraidWord(circles.s, letters)


def vogel_transform(d: LinkDiagram, max_move_factor: int = DEFAULT_MAX_MOVE_FACTOR) -> BraidWord:
    """
    Braid a connected diagram without changing its Seifert circle count.

    Args:
        d: Connected diagram
        max_move_factor: Guard on the number of moves, scaled by
            (crossings + circles) squared

    Returns:
        BraidWord on s(d) strands whose closure is isotopic to ``d``

    Raises:
        DisconnectedInput: If ``d`` has more than one split part
        NonTermination: If the move guard is exceeded
    """
    if not is_connected(d):
        raise DisconnectedInput("braiding needs a connected diagram")
    braided, moves = braid_diagram(d, max_move_factor)
    word = read_braid_word(braided)
    logger.info(
        f"Braided {d.name or 'diagram'} with {moves} moves: "
        f"{word.strands} strands, {len(word)} letters"
    )
    return word
