"""
Seifert Package: circles, signed Seifert graph and classification flags.
"""

from .seifert_graph import (
    SeifertCircleSet,
    SeifertGraph,
    TreeStats,
    circle_sides,
    is_dhl,
    is_reduced,
    is_special,
    random_tree_stats,
    seifert_circles,
    seifert_graph,
    seifert_graph_to_json,
    smoothing_successor,
    tree_independence,
    tree_stats,
)

__all__ = [
    'SeifertCircleSet', 'SeifertGraph', 'TreeStats', 'circle_sides', 'is_dhl',
    'is_reduced', 'is_special', 'random_tree_stats', 'seifert_circles',
    'seifert_graph', 'seifert_graph_to_json', 'smoothing_successor',
    'tree_independence', 'tree_stats',
]
