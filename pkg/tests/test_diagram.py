#!/usr/bin/env python3
"""
Test script for the diagram package: PD dialects, validation, JSON codec
and the basic diagram predicates.
"""

import pytest

from src.diagram.builder import braid_closure
from src.diagram.link_diagram import (
    Crossing,
    LinkDiagram,
    component_count,
    connected_components,
    disjoint_union,
    is_alternating,
    is_connected,
    is_positive_diagram,
    link_component_count,
    mirror,
    negative_crossings,
    writhe,
)
from src.diagram.pd_codec import dumps, from_json_dict, loads, parse_pd, serialize_pd, to_json_dict
from src.diagram.validation import validate
from src.errors import (
    ArcUsedTwiceError,
    MalformedSyntax,
    NonSphericalEmbedding,
    OrientationInconsistent,
)
from tests.conftest import NEG_TREFOIL_PD


def test_strict_pd_negative_trefoil(neg_trefoil):
    assert len(neg_trefoil) == 3
    assert [c.sign for c in neg_trefoil] == [-1, -1, -1]
    assert writhe(neg_trefoil) == -3
    assert is_alternating(neg_trefoil)
    assert is_connected(neg_trefoil)
    assert link_component_count(neg_trefoil) == 1
    assert negative_crossings(neg_trefoil) == [0, 1, 2]


def test_inferred_dialect_matches_strict(neg_trefoil):
    inferred = parse_pd("X(1,4,2,5),X(5,2,6,3),X(3,6,4,1)", dialect="inferred")
    assert inferred.crossings == neg_trefoil.crossings


def test_wrapped_square_bracket_input(neg_trefoil):
    wrapped = parse_pd("PD[X[1,4,2,5], X[5,2,6,3], X[3,6,4,1]]")
    assert wrapped.crossings == neg_trefoil.crossings


def test_serialize_is_strict_dialect(neg_trefoil):
    assert serialize_pd(neg_trefoil) == NEG_TREFOIL_PD
    assert parse_pd(serialize_pd(neg_trefoil)).crossings == neg_trefoil.crossings


def test_free_loops():
    d = parse_pd("O(2)")
    assert len(d) == 0
    assert d.free_loops == 2
    assert component_count(d) == 2
    assert link_component_count(d) == 2
    assert serialize_pd(d) == "O(2)"

    with_loop = parse_pd(NEG_TREFOIL_PD + ",O(1)")
    assert component_count(with_loop) == 2
    assert not is_connected(with_loop)


def test_mixed_dialects_rejected():
    with pytest.raises(MalformedSyntax):
        parse_pd("X(1,4,2,5;1),X(5,2,6,3),X(3,6,4,1;1)")


@pytest.mark.parametrize("text", [
    "X(1,4,2)",
    "Y(1,2,3,4)",
    "X(1,4,2,5;2),X(5,2,6,3;1),X(3,6,4,1;1)",
    "X(0,4,2,5;1)",
    "X(1,4,2,x;1)",
])
def test_malformed_syntax(text):
    with pytest.raises(MalformedSyntax):
        parse_pd(text)


def test_strict_dialect_requires_markers():
    with pytest.raises(MalformedSyntax):
        parse_pd("X(1,4,2,5),X(5,2,6,3),X(3,6,4,1)", dialect="strict")
    with pytest.raises(MalformedSyntax):
        parse_pd(NEG_TREFOIL_PD, dialect="inferred")


def test_arc_used_once():
    with pytest.raises(ArcUsedTwiceError):
        parse_pd("X(1,2,3,4;1)")


def test_orientation_inconsistent():
    with pytest.raises(OrientationInconsistent):
        parse_pd("X(1,4,2,5;1),X(5,2,6,3;1),X(3,6,4,1;3)")


def test_non_spherical_embedding():
    """A single crossing whose two arcs cross each other again is a torus picture."""
    with pytest.raises(NonSphericalEmbedding):
        parse_pd("X(1,2,1,2;1)")


def test_validate_reports_instead_of_raising():
    broken = LinkDiagram((Crossing((1, 1, 2, 3), 1, 0),), 0)
    report = validate(broken)
    assert not report.valid
    assert "ArcUsedTwiceError" in report.kinds
    assert report.to_dict()["valid"] is False


def test_validate_counts_components(pos_trefoil, pos_hopf):
    report = validate(disjoint_union(pos_trefoil, pos_hopf))
    assert report.valid
    assert report.components == 2


def test_json_codec(pos_trefoil):
    data = to_json_dict(pos_trefoil)
    assert data["name"] == "pos_trefoil"
    assert len(data["crossings"]) == 3
    back = from_json_dict(data)
    assert back.crossings == pos_trefoil.crossings
    assert loads(dumps(pos_trefoil)).crossings == pos_trefoil.crossings


def test_json_codec_rejects_garbage():
    with pytest.raises(MalformedSyntax):
        from_json_dict({"free_loops": 1})
    with pytest.raises(MalformedSyntax):
        from_json_dict({"crossings": [{"slots": [1, 2, 3]}]})
    with pytest.raises(MalformedSyntax):
        loads("{not json")


def test_mirror(neg_trefoil):
    m = mirror(neg_trefoil)
    assert writhe(m) == 3
    assert is_positive_diagram(m)
    assert is_alternating(m)
    assert mirror(m).crossings == neg_trefoil.crossings


def test_link_components(pos_trefoil, pos_hopf, fig8, unknot0):
    assert link_component_count(pos_trefoil) == 1
    assert link_component_count(pos_hopf) == 2
    assert link_component_count(fig8) == 1
    assert link_component_count(unknot0) == 1


def test_disjoint_union_and_split(pos_trefoil, pos_hopf):
    union = disjoint_union(pos_trefoil, pos_hopf)
    assert len(union) == 5
    assert component_count(union) == 2
    assert link_component_count(union) == 3
    assert union.name == "pos_trefoil + pos_hopf"

    parts = connected_components(union)
    assert [len(p) for p in parts] == [3, 2]
    assert all(is_connected(p) for p in parts)
    assert [c.index for c in parts[1]] == [0, 1]


def test_writhe_adds_over_split_parts(pos_trefoil, pos_hopf, fig8, neg_trefoil):
    union = disjoint_union(disjoint_union(pos_trefoil, fig8), disjoint_union(neg_trefoil, pos_hopf))
    parts = connected_components(union)
    assert len(parts) == 4
    assert writhe(union) == sum(writhe(p) for p in parts) == 3 + 0 - 3 + 2


def test_non_alternating_closure():
    d = braid_closure(2, [1, -1])
    assert not is_alternating(d)
    assert link_component_count(d) == 2


def test_braid_closures_alternate(pos_trefoil, fig8, kink):
    assert is_alternating(pos_trefoil)
    assert is_alternating(fig8)
    assert is_alternating(kink)
    assert writhe(fig8) == 0
    assert negative_crossings(fig8) == [1, 3]


def test_empty_diagram():
    assert LinkDiagram().is_empty
    assert not LinkDiagram((), 1).is_empty
    assert parse_pd("").is_empty
