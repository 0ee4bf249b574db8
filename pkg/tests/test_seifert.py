#!/usr/bin/env python3
"""
Test script for face tracing, checkerboard coloring and the Seifert package.
"""

import numpy as np
import pytest

from src.diagram.faces import BLACK, WHITE, checkerboard, faces
from src.corpus.two_bridge import two_bridge
from src.diagram.link_diagram import disjoint_union, is_positive_diagram, relabel_arcs
from src.errors import DisconnectedGraph, DisconnectedInput, NotAlternating
from src.diagram.builder import braid_closure
from src.seifert.seifert_graph import (
    is_dhl,
    is_reduced,
    is_special,
    random_tree_stats,
    seifert_circles,
    seifert_graph,
    seifert_graph_to_json,
    tree_independence,
    tree_stats,
)


# --------------------------------------------------
# Faces
# --------------------------------------------------

def test_face_count_is_crossings_plus_two(pos_trefoil, pos_hopf, fig8, kink):
    for d in (pos_trefoil, pos_hopf, fig8, kink):
        assert len(faces(d)) == len(d) + 2


def test_every_arc_has_two_sides(fig8):
    face_set = faces(fig8)
    for arc in fig8.arcs:
        assert face_set.left_face(arc) != face_set.right_face(arc)
    assert sum(len(f) for f in face_set.faces) == 4 * len(fig8)


def test_checkerboard_is_proper(fig8):
    col = checkerboard(fig8)
    face_set = col.face_set
    assert len(col.black_faces) + len(col.white_faces) == len(face_set)
    for arc in fig8.arcs:
        assert col.color[face_set.left_face(arc)] != col.color[face_set.right_face(arc)]
    swapped = col.swapped()
    assert swapped.black_faces == col.white_faces


def test_unknot_faces(unknot0):
    col = checkerboard(unknot0)
    assert len(col.face_set) == 2
    assert col.color == (BLACK, WHITE)


def test_faces_need_connected_diagram(pos_trefoil, pos_hopf):
    with pytest.raises(DisconnectedInput):
        faces(disjoint_union(pos_trefoil, pos_hopf))


# --------------------------------------------------
# Seifert circles and graph
# --------------------------------------------------

@pytest.mark.parametrize("fixture,s", [
    ("pos_trefoil", 2), ("pos_hopf", 2), ("fig8", 3), ("kink", 2),
    ("unknot0", 1), ("neg_trefoil", 2),
])
def test_circle_counts(request, fixture, s):
    assert seifert_circles(request.getfixturevalue(fixture)).s == s


def test_braid_closure_has_one_circle_per_strand():
    d = braid_closure(4, [1, 2, 3, -2, 1])
    assert seifert_circles(d).s == 4


def test_circles_partition_arcs(fig8):
    circles = seifert_circles(fig8)
    arcs = sorted(a for circle in circles.circles for a in circle)
    assert arcs == fig8.arcs


def test_fig8_graph(fig8):
    g = seifert_graph(fig8)
    assert g.vertices == 3
    assert len(g.edges) == 4
    assert sorted(g.multiplicities().values()) == [2, 2]
    assert g.is_connected
    stats = tree_stats(g)
    assert stats.signature() == (0, 1, 1)
    assert len(stats.tree) == 2
    assert seifert_graph_to_json(g)["vertices"] == 3


def test_trefoil_tree(pos_trefoil, neg_trefoil):
    assert tree_stats(seifert_graph(pos_trefoil)).signature() == (1, 1, 0)
    assert tree_stats(seifert_graph(neg_trefoil)).signature() == (-1, 0, 1)


def test_random_trees_agree_on_braid_closures(fig8):
    g = seifert_graph(fig8)
    rng = np.random.default_rng(3)
    assert random_tree_stats(g, rng).signature() == (0, 1, 1)
    independent, seen = tree_independence(g, trials=25, seed=11)
    assert independent
    assert seen == [(0, 1, 1)]


def test_disconnected_graph(pos_trefoil, pos_hopf):
    g = seifert_graph(disjoint_union(pos_trefoil, pos_hopf))
    assert not g.is_connected
    with pytest.raises(DisconnectedGraph):
        tree_stats(g)
    with pytest.raises(DisconnectedGraph):
        is_reduced(g)


def test_reduced(pos_trefoil, fig8, kink):
    assert is_reduced(seifert_graph(pos_trefoil))
    assert is_reduced(seifert_graph(fig8))
    assert not is_reduced(seifert_graph(kink))


def test_special(pos_trefoil, neg_trefoil, fig8):
    assert is_special(pos_trefoil)
    assert is_special(neg_trefoil)
    assert not is_special(fig8)


def test_dhl(pos_trefoil, fig8, kink):
    assert is_dhl(pos_trefoil)
    assert is_dhl(fig8)
    assert not is_dhl(kink)


def test_dhl_needs_alternating():
    with pytest.raises(NotAlternating):
        is_dhl(braid_closure(2, [1, -1]))


def test_spanning_tree_independence_on_corpus(two_bridge_10):
    for _, d in two_bridge_10:
        independent, seen = tree_independence(seifert_graph(d), trials=100, seed=0)
        assert independent, (d.name, seen)


def test_positive_alternating_diagrams_are_special(two_bridge_10):
    positive = [d for _, d in two_bridge_10 if is_positive_diagram(d)]
    assert positive
    for d in positive:
        assert is_special(d), d.name

    nested = two_bridge((2, 1, 2))
    if is_positive_diagram(nested):
        assert is_special(nested)


def test_dhl_ignores_arc_labels(two_bridge_10, fig8, kink):
    rng = np.random.default_rng(7)
    for d in [fig8, kink] + [d for _, d in two_bridge_10[:60]]:
        arcs = d.arcs
        shuffled = rng.permutation(arcs)
        relabeled = relabel_arcs(d, {a: int(b) for a, b in zip(arcs, shuffled)})
        assert is_dhl(relabeled) == is_dhl(d), d.name
        assert seifert_circles(relabeled).s == seifert_circles(d).s
