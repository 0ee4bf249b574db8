"""
Seifert circles, the signed Seifert graph and spanning-tree sign counts.

Smoothing a crossing joins the incoming under-arc to the outgoing
over-arc and the incoming over-arc to the outgoing under-arc, which keeps
orientation. Circles are the orbits of that successor map; circle ids are
ordered by smallest arc label, free loops last.
"""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from src.diagram.faces import LEFT, RIGHT
from src.diagram.link_diagram import LinkDiagram, is_alternating, is_connected
from src.errors import DisconnectedGraph, DisconnectedInput, NotAlternating, SelfLoopDetected

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int, int]  # (circle, circle, sign, crossing index)


@dataclass(frozen=True)
class SeifertCircleSet:
    """
    Seifert circles as cyclic arc sequences; free loops are empty circles.

    ``incidence[pos]`` holds the two circles crossing ``pos`` joins and
    ``circle_of_arc`` maps every arc to its circle.
    """
    circles: Tuple[Tuple[int, ...], ...]
    incidence: Dict[int, Tuple[int, int]] = field(compare=False)
    circle_of_arc: Dict[int, int] = field(compare=False)

    @property
    def s(self) -> int:
        return len(self.circles)


@dataclass(frozen=True)
class SeifertGraph:
    """Signed multigraph on circles; edges are (u, v, sign, crossing index) with u <= v."""
    vertices: int
    edges: Tuple[Edge, ...]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertices))
        for u, v, sign, index in self.edges:
            graph.add_edge(u, v, key=index, sign=sign)
        return graph

    def multiplicities(self) -> Counter:
        return Counter((u, v) for u, v, _, _ in self.edges)

    @property
    def is_connected(self) -> bool:
        return self.vertices > 0 and nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class TreeStats:
    """Edge and sign counts of one spanning tree."""
    d: int
    d_plus: int
    d_minus: int
    tree: Tuple[Edge, ...] = ()

    def signature(self) -> Tuple[int, int, int]:
        return (self.d, self.d_plus, self.d_minus)


def smoothing_successor(d: LinkDiagram) -> Dict[int, int]:
    """Arc -> next arc along its Seifert circle after oriented smoothing."""
    succ = {}
    for c in d.crossings:
        succ[c.slots[0]] = c.slots[c.over_out]
        succ[c.slots[c.over_in]] = c.slots[2]
    return succ


def seifert_circles(d: LinkDiagram) -> SeifertCircleSet:
    """
    Seifert's algorithm: smooth every crossing along the orientation and
    collect the resulting circles.

    Args:
        d: Valid diagram, split or not

    Returns:
        SeifertCircleSet with circles ordered by their smallest starting arc,
        free loops appended last
    """
    succ = smoothing_successor(d)
    seen = set()
    circles: List[Tuple[int, ...]] = []
    for start in sorted(succ):
        if start in seen:
            continue
        orbit = []
        arc = start
        while arc not in seen:
            seen.add(arc)
            orbit.append(arc)
            arc = succ[arc]
        circles.append(tuple(orbit))
    circles.extend(() for _ in range(d.free_loops))

    circle_of_arc = {arc: cid for cid, circle in enumerate(circles) for arc in circle}
    incidence = {
        pos: (circle_of_arc[c.slots[0]], circle_of_arc[c.slots[c.over_in]])
        for pos, c in enumerate(d.crossings)
    }
    return SeifertCircleSet(tuple(circles), incidence, circle_of_arc)


def seifert_graph(d: LinkDiagram, circles: Optional[SeifertCircleSet] = None) -> SeifertGraph:
    """
    Build the signed Seifert graph.

    Args:
        d: Valid diagram
        circles: Circles already computed for ``d``

    Returns:
        SeifertGraph with one edge per crossing

    Raises:
        SelfLoopDetected: If a crossing smooths onto a single circle
    """
    circles = circles if circles is not None else seifert_circles(d)
    edges = []
    for pos, c in enumerate(d.crossings):
        u, v = circles.incidence[pos]
        if u == v:
            logger.error(f"Crossing {c.index} smooths onto a single circle {u}")
            raise SelfLoopDetected(f"crossing {c.index} joins circle {u} to itself")
        edges.append((min(u, v), max(u, v), c.sign, c.index))
    return SeifertGraph(circles.s, tuple(edges))


def seifert_graph_to_json(g: SeifertGraph) -> dict:
    return {"vertices": g.vertices, "edges": [list(e) for e in g.edges]}


def _stats(edges: Sequence[Edge]) -> TreeStats:
    plus = sum(1 for e in edges if e[2] == 1)
    minus = len(edges) - plus
    return TreeStats(plus - minus, plus, minus, tuple(edges))


def _require_connected(g: SeifertGraph) -> None:
    if not g.is_connected:
        raise DisconnectedGraph(f"Seifert graph on {g.vertices} vertices is not connected")


def tree_stats(g: SeifertGraph) -> TreeStats:
    """Breadth-first tree from circle 0, incident edges taken by crossing index."""
    _require_connected(g)
    incident: Dict[int, List[Edge]] = {v: [] for v in range(g.vertices)}
    for edge in g.edges:
        incident[edge[0]].append(edge)
        incident[edge[1]].append(edge)

    visited = {0}
    queue = deque([0])
    tree: List[Edge] = []
    while queue:
        u = queue.popleft()
        for edge in sorted(incident[u], key=lambda e: e[3]):
            v = edge[1] if edge[0] == u else edge[0]
            if v not in visited:
                visited.add(v)
                tree.append(edge)
                queue.append(v)
    return _stats(tree)


def random_tree_stats(g: SeifertGraph, rng: np.random.Generator) -> TreeStats:
    """Kruskal over a random edge order."""
    _require_connected(g)
    forest = UnionFind(range(g.vertices))
    tree = []
    for i in rng.permutation(len(g.edges)):
        u, v, _, _ = g.edges[int(i)]
        if forest[u] != forest[v]:
            forest.union(u, v)
            tree.append(g.edges[int(i)])
    return _stats(tree)


def tree_independence(g: SeifertGraph, trials: int = 100, seed: int = 0) -> Tuple[bool, List[Tuple[int, int, int]]]:
    """
    Compare the canonical tree against ``trials`` random spanning trees.

    Returns whether all agree and the sorted distinct (d, d+, d-) triples seen.
    """
    rng = np.random.default_rng(seed)
    seen = {tree_stats(g).signature()}
    for _ in range(trials):
        seen.add(random_tree_stats(g, rng).signature())
    if len(seen) > 1:
        logger.warning(f"Spanning-tree dependent sign counts: {sorted(seen)}")
    return len(seen) == 1, sorted(seen)


def is_reduced(g: SeifertGraph) -> bool:
    """No edge is a bridge; a nugatory crossing shows up as one."""
    _require_connected(g)
    return not nx.has_bridges(g.to_networkx())


def circle_sides(d: LinkDiagram, circles: SeifertCircleSet) -> Dict[int, Dict[int, str]]:
    """
    For each crossing position, the side on which each incident circle sees
    the other one, reading the circle along its orientation.
    """
    sides = {}
    for pos, c in enumerate(d.crossings):
        under_circle, over_circle = circles.incidence[pos]
        if c.sign == 1:
            sides[pos] = {under_circle: LEFT, over_circle: RIGHT}
        else:
            sides[pos] = {under_circle: RIGHT, over_circle: LEFT}
    return sides


def is_special(d: LinkDiagram, circles: Optional[SeifertCircleSet] = None) -> bool:
    """True when no circle has crossings attached on both of its sides."""
    if not is_connected(d):
        raise DisconnectedInput("is_special needs a connected diagram")
    circles = circles if circles is not None else seifert_circles(d)
    attached: Dict[int, set] = {}
    for per_circle in circle_sides(d, circles).values():
        for circle, side in per_circle.items():
            attached.setdefault(circle, set()).add(side)
    return all(len(s) <= 1 for s in attached.values())


def is_dhl(d: LinkDiagram, g: Optional[SeifertGraph] = None) -> bool:
    """Every pair of circles joined by a crossing is joined by at least two."""
    if not is_alternating(d):
        raise NotAlternating("the Seifert-circle pair criterion needs an alternating diagram")
    g = g if g is not None else seifert_graph(d)
    return all(m >= 2 for m in g.multiplicities().values())
