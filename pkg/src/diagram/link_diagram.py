"""
Oriented link diagram data model.

A crossing lists its four arc labels counterclockwise starting at the
incoming under-strand, so the under-strand always runs slot 0 -> slot 2.
``over_in`` records which of slots 1/3 carries the incoming over-strand.
Signs follow the usual right-hand rule: the crossing is positive exactly
when the over-strand runs from slot 3 to slot 1.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]  # (crossing position, slot number)


@dataclass(frozen=True)
class Crossing:
    """
    One crossing in PD form.

    ``slots`` run counterclockwise from the incoming under-strand, so the
    under-strand passes from slot 0 to slot 2. ``over_in`` is the slot (1 or
    3) where the over-strand enters; ``index`` is the crossing's position.
    """
    slots: Tuple[int, int, int, int]
    over_in: int
    index: int = 0

    @property
    def sign(self) -> int:
        """+1 when the over-strand enters at slot 3 (right-handed), -1 otherwise."""
        return 1 if self.over_in == 3 else -1

    @property
    def over_out(self) -> int:
        return 4 - self.over_in

    @property
    def incoming_slots(self) -> Tuple[int, int]:
        return (0, self.over_in)

    @property
    def outgoing_slots(self) -> Tuple[int, int]:
        return (2, self.over_out)

    def is_incoming(self, slot: int) -> bool:
        return slot == 0 or slot == self.over_in

    def mirrored(self) -> "Crossing":
        """Switch over and under; the new under-strand is the old over-strand."""
        s = self.slots
        if self.over_in == 3:
            return Crossing((s[3], s[0], s[1], s[2]), 1, self.index)
        return Crossing((s[1], s[2], s[3], s[0]), 3, self.index)


@dataclass(frozen=True)
class LinkDiagram:
    """
    Immutable oriented diagram: crossings plus a count of crossingless loops.

    Construct through ``parse_pd``, ``closure_to_diagram`` or the two-bridge
    generator to get a validated value; direct construction skips validation
    so that ``validate`` can report on broken input.
    """
    crossings: Tuple[Crossing, ...] = ()
    free_loops: int = 0
    name: Optional[str] = None

    def __len__(self) -> int:
        return len(self.crossings)

    def __iter__(self) -> Iterator[Crossing]:
        return iter(self.crossings)

    @property
    def is_empty(self) -> bool:
        return not self.crossings and self.free_loops == 0

    @cached_property
    def occurrences(self) -> Dict[int, List[Slot]]:
        """Arc label -> list of (crossing position, slot) where it appears."""
        occ: Dict[int, List[Slot]] = defaultdict(list)
        for pos, crossing in enumerate(self.crossings):
            for slot, arc in enumerate(crossing.slots):
                occ[arc].append((pos, slot))
        return dict(occ)

    @property
    def arcs(self) -> List[int]:
        return sorted(self.occurrences)

    @cached_property
    def heads(self) -> Dict[int, Slot]:
        """Arc label -> the slot where the arc enters a crossing."""
        return {
            arc: (pos, slot)
            for arc, occ in self.occurrences.items()
            for pos, slot in occ
            if self.crossings[pos].is_incoming(slot)
        }

    @cached_property
    def tails(self) -> Dict[int, Slot]:
        """Arc label -> the slot where the arc leaves a crossing."""
        return {
            arc: (pos, slot)
            for arc, occ in self.occurrences.items()
            for pos, slot in occ
            if not self.crossings[pos].is_incoming(slot)
        }

    def other_end(self, pos: int, slot: int) -> Slot:
        """The slot at the far end of the arc sitting in ``slot`` of crossing ``pos``."""
        arc = self.crossings[pos].slots[slot]
        for other in self.occurrences[arc]:
            if other != (pos, slot):
                return other
        raise KeyError(f"arc {arc} has a single occurrence")

    def with_name(self, name: Optional[str]) -> "LinkDiagram":
        return replace(self, name=name)


def writhe(d: LinkDiagram) -> int:
    """Sum of crossing signs."""
    return sum(c.sign for c in d.crossings)


def is_positive_diagram(d: LinkDiagram) -> bool:
    return all(c.sign == 1 for c in d.crossings)


def negative_crossings(d: LinkDiagram) -> List[int]:
    return [c.index for c in d.crossings if c.sign == -1]


def is_alternating(d: LinkDiagram) -> bool:
    """
    Over/under alternate along every component.

    An arc leaves its tail crossing through ``tail_slot`` and enters its
    head through ``head_slot``; odd slots are over-passes, so the two
    parities must differ for every arc.
    """
    for arc, (_, tail_slot) in d.tails.items():
        _, head_slot = d.heads[arc]
        if tail_slot % 2 == head_slot % 2:
            return False
    return True


def mirror(d: LinkDiagram) -> LinkDiagram:
    """
    Mirror image: every crossing switched, orientation kept.

    Args:
        d: Diagram to mirror

    Returns:
        Diagram with negated writhe, named ``mirror(<name>)`` when ``d`` is named
    """
    name = f"mirror({d.name})" if d.name else None
    return LinkDiagram(tuple(c.mirrored() for c in d.crossings), d.free_loops, name)


def crossing_graph(d: LinkDiagram) -> nx.MultiGraph:
    """Crossing positions joined by one edge per arc."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(d.crossings)))
    for arc, occ in d.occurrences.items():
        if len(occ) == 2:
            (p, _), (q, _) = occ
            graph.add_edge(p, q, key=arc)
    return graph


def component_count(d: LinkDiagram) -> int:
    """Number of split parts, free loops included."""
    if not d.crossings:
        return d.free_loops
    return nx.number_connected_components(crossing_graph(d)) + d.free_loops


def link_component_count(d: LinkDiagram) -> int:
    """Number of link components: strands followed straight through crossings."""
    strands = nx.Graph()
    strands.add_nodes_from(d.arcs)
    for arc, (pos, slot) in d.heads.items():
        strands.add_edge(arc, d.crossings[pos].slots[(slot + 2) % 4])
    return nx.number_connected_components(strands) + d.free_loops


def is_connected(d: LinkDiagram) -> bool:
    return component_count(d) == 1


def connected_components(d: LinkDiagram) -> List[LinkDiagram]:
    """
    Split by diagram connectivity; crossings are re-indexed from 0 inside
    each part, arc labels are kept. Free loops come last, one per loop.
    """
    parts: List[LinkDiagram] = []
    if d.crossings:
        groups = sorted(
            (sorted(group) for group in nx.connected_components(crossing_graph(d))),
            key=lambda group: group[0],
        )
        for group in groups:
            crossings = tuple(
                replace(d.crossings[pos], index=new)
                for new, pos in enumerate(group)
            )
            parts.append(LinkDiagram(crossings, 0))
    parts.extend(LinkDiagram((), 1) for _ in range(d.free_loops))
    if len(parts) == 1 and d.name:
        parts[0] = parts[0].with_name(d.name)
    return parts


def disjoint_union(first: LinkDiagram, second: LinkDiagram) -> LinkDiagram:
    """Place ``second`` beside ``first``; its arcs and indices are shifted."""
    arc_shift = max(first.arcs, default=0)
    index_shift = len(first.crossings)
    shifted = tuple(
        Crossing(
            tuple(a + arc_shift for a in c.slots),
            c.over_in,
            c.index + index_shift,
        )
        for c in second.crossings
    )
    name = None
    if first.name and second.name:
        name = f"{first.name} + {second.name}"
    return LinkDiagram(
        first.crossings + shifted, first.free_loops + second.free_loops, name
    )


def relabel_arcs(d: LinkDiagram, mapping: Dict[int, int]) -> LinkDiagram:
    """
    Rename arcs through ``mapping``; crossings, signs and slot order are kept.

    Args:
        d: Source diagram
        mapping: Old arc label -> new arc label, injective over ``d.arcs``

    Returns:
        Diagram with the same crossings under the new labels
    """
    return LinkDiagram(
        tuple(
            Crossing(tuple(mapping[a] for a in c.slots), c.over_in, c.index)
            for c in d.crossings
        ),
        d.free_loops,
        d.name,
    )
