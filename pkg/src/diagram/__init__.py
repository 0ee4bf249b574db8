"""
Diagram Package: oriented link diagrams, PD codecs, faces and coloring.
"""

from .link_diagram import (
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
    relabel_arcs,
    writhe,
)
from .faces import CheckerboardColoring, FaceSet, checkerboard, faces
from .validation import ValidationReport, Violation, ensure_valid, validate
from .pd_codec import parse_pd, serialize_pd, to_json_dict, from_json_dict
from .builder import PlanarBuilder, braid_closure, plat_closure

__all__ = [
    'Crossing', 'LinkDiagram', 'component_count', 'connected_components',
    'disjoint_union', 'is_alternating', 'is_connected', 'is_positive_diagram',
    'link_component_count',
    'mirror', 'negative_crossings', 'relabel_arcs', 'writhe',
    'CheckerboardColoring', 'FaceSet', 'checkerboard', 'faces',
    'ValidationReport', 'Violation', 'ensure_valid', 'validate',
    'parse_pd', 'serialize_pd', 'to_json_dict', 'from_json_dict',
    'PlanarBuilder', 'braid_closure', 'plat_closure',
]
