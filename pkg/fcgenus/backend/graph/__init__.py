"""Multigraphs, spanning trees, fundamental cycles and their intersecting graph."""

from .multigraph import (
    EdgeSubset,
    Multigraph,
    add_edges,
    betti,
    components_of_subset,
    is_connected,
)
from .spanning_forest import (
    FundamentalCycle,
    SpanningTree,
    fundamental_cycles,
    spanning_tree,
    spanning_tree_from_edges,
    xi_of_tree,
)
from .intersect_graph import IntersectionGraph, build_intersection_graph, pairwise_intersecting

__all__ = [
    'EdgeSubset',
    'Multigraph',
    'add_edges',
    'betti',
    'components_of_subset',
    'is_connected',
    'FundamentalCycle',
    'SpanningTree',
    'fundamental_cycles',
    'spanning_tree',
    'spanning_tree_from_edges',
    'xi_of_tree',
    'IntersectionGraph',
    'build_intersection_graph',
    'pairwise_intersecting',
]
