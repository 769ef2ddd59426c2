"""Graph family generators."""

from .families import (
    FAMILY_ARITY,
    bouquet,
    build_family,
    cartesian_path_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    dumbbell,
    generalized_petersen,
    halin_composition,
    halin_graph,
    hypercube,
    path_graph,
    random_connected,
    star_graph,
    theta_graph,
    wheel_graph,
)

__all__ = [
    'FAMILY_ARITY',
    'bouquet',
    'build_family',
    'cartesian_path_product',
    'complete_bipartite',
    'complete_graph',
    'cycle_graph',
    'disjoint_union',
    'dumbbell',
    'generalized_petersen',
    'halin_composition',
    'halin_graph',
    'hypercube',
    'path_graph',
    'random_connected',
    'star_graph',
    'theta_graph',
    'wheel_graph',
]
