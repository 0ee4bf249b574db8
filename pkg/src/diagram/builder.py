"""
Planar diagram assembly from stacked braid crossings.

Strands run upward through positions 1..n. Each letter crosses positions
|k| and |k|+1; its four ports are recorded counterclockwise with the
under-strand on ports 0 and 2. Boundary ends are then glued (braid
closure or plat caps), components are oriented by walking them, and arcs
are renumbered along each component.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from src.diagram.link_diagram import Crossing, LinkDiagram
from src.diagram.validation import ensure_valid
from src.errors import IndexOutOfRange, InternalError

logger = logging.getLogger(__name__)

# Port positions entered when a strand moves upward.
_UPWARD_PORTS = {1: (0, 3), -1: (0, 1)}


class PlanarBuilder:
    """Accumulates braid letters on ``strands`` positions, then closes them."""

    def __init__(self, strands: int):
        if strands < 1:
            raise IndexOutOfRange(f"need at least one strand, got {strands}")
        self.strands = strands
        self._next_id = 0
        self.bottom = [self._new_end() for _ in range(strands)]
        self.top = list(self.bottom)
        self.ports: List[Tuple[int, int, int, int]] = []
        self.letter_signs: List[int] = []
        self._glue = UnionFind()

    def _new_end(self) -> int:
        self._next_id += 1
        return self._next_id

    def add_letter(self, letter: int) -> None:
        """Stack one crossing on positions |letter| and |letter|+1; the sign picks the over-strand."""
        i = abs(letter)
        if letter == 0 or i >= self.strands:
            raise IndexOutOfRange(f"letter {letter} outside 1..{self.strands - 1}")
        sw, se = self.top[i - 1], self.top[i]
        ne, nw = self._new_end(), self._new_end()
        if letter > 0:
            # over-strand SW -> NE, under-strand SE -> NW
            self.ports.append((se, ne, nw, sw))
        else:
            self.ports.append((sw, se, ne, nw))
        self.letter_signs.append(1 if letter > 0 else -1)
        self.top[i - 1], self.top[i] = nw, ne

    def add_word(self, letters: Sequence[int]) -> "PlanarBuilder":
        for letter in letters:
            self.add_letter(letter)
        return self

    def glue(self, a: int, b: int) -> None:
        self._glue.union(a, b)

    def close_braid(self) -> None:
        for p in range(self.strands):
            self.glue(self.bottom[p], self.top[p])

    def close_plat(self) -> None:
        """Cap adjacent bottom ends and adjacent top ends in pairs."""
        if self.strands % 2:
            raise IndexOutOfRange("plat closure needs an even number of strands")
        for p in range(0, self.strands, 2):
            self.glue(self.bottom[p], self.bottom[p + 1])
            self.glue(self.top[p], self.top[p + 1])

    def build(self, name: Optional[str] = None) -> LinkDiagram:
        """
        Orient the glued strands and emit a validated diagram.

        Args:
            name: Diagram name carried into reports

        Returns:
            LinkDiagram with arcs numbered along each component; closed
            strands that meet no crossing become free loops
        """
        classes: Dict[int, List[Tuple[int, int]]] = {}
        for pos, ports in enumerate(self.ports):
            for port, end in enumerate(ports):
                classes.setdefault(self._glue[end], []).append((pos, port))
        all_ends = range(1, self._next_id + 1)
        loops = len({self._glue[e] for e in all_ends} - set(classes))
        for root, where in classes.items():
            if len(where) != 2:
                raise InternalError(f"glued end class {root} touches {len(where)} ports")

        def other(pos: int, port: int) -> Tuple[int, int]:
            a, b = classes[self._glue[self.ports[pos][port]]]
            return b if a == (pos, port) else a

        # Each component is walked upward from the first crossing it meets;
        # arcs are labelled in the order they are entered.
        entered: List[Dict[int, bool]] = [{} for _ in self.ports]
        labels: Dict[int, int] = {}
        for start in range(len(self.ports)):
            for start_port in _UPWARD_PORTS[self.letter_signs[start]]:
                pos, port = start, start_port
                while port not in entered[pos]:
                    entered[pos][port] = True
                    entered[pos][(port + 2) % 4] = False
                    labels.setdefault(self._glue[self.ports[pos][port]], len(labels) + 1)
                    pos, port = other(pos, (port + 2) % 4)

        crossings = []
        for pos, ports in enumerate(self.ports):
            arcs = [labels[self._glue[end]] for end in ports]
            if entered[pos][0]:
                over_in = 3 if entered[pos][3] else 1
            else:
                arcs = arcs[2:] + arcs[:2]
                over_in = 3 if entered[pos][1] else 1
            crossings.append(Crossing(tuple(arcs), over_in, pos))

        diagram = LinkDiagram(tuple(crossings), loops, name)
        logger.debug(f"Built diagram: {len(crossings)} crossings, {loops} free loops")
        return ensure_valid(diagram)


def braid_closure(strands: int, letters: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    """
    Closure of a braid word, each top end glued to the bottom end below it.

    Args:
        strands: Number of braid strands
        letters: Signed generator indices, 1 <= |k| < strands
        name: Optional diagram name

    Returns:
        Validated LinkDiagram, all strands oriented upward
    """
    builder = PlanarBuilder(strands).add_word(letters)
    builder.close_braid()
    return builder.build(name)


def plat_closure(strands: int, letters: Sequence[int], name: Optional[str] = None) -> LinkDiagram:
    """Plat closure on an even number of strands (caps on positions 1-2, 3-4, ...)."""
    builder = PlanarBuilder(strands).add_word(letters)
    builder.close_plat()
    return builder.build(name)
