import networkx as nx
import pytest

from fcgenus.backend.errors import InvalidParameters, NotSimple
from fcgenus.backend.generators import (
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
    theta_graph,
    wheel_graph,
)
from fcgenus.backend.graph import Multigraph, betti, is_connected
from fcgenus.backend.models import FAMILIES, FamilySpec, HalinSpec


def test_path_product_of_a_single_vertex_is_a_path():
    assert cartesian_path_product(Multigraph(1), 3) == path_graph(3)


def test_edge_times_p1_is_a_four_cycle(to_nx):
    product = cartesian_path_product(path_graph(1), 1)
    assert nx.is_isomorphic(to_nx(product), to_nx(cycle_graph(4)))


def test_triangular_prism_counts():
    prism = cartesian_path_product(cycle_graph(3), 1)
    assert (prism.n_vertices, prism.n_edges, betti(prism)) == (6, 9, 4)


@pytest.mark.parametrize("base_vertices, base_edges, n", [(3, 3, 2), (4, 5, 4), (5, 4, 1)])
def test_path_product_counts(base_vertices, base_edges, n):
    base = random_connected(base_vertices, base_edges, seed=7, simple=True)
    product = cartesian_path_product(base, n)
    assert product.n_vertices == base_vertices * (n + 1)
    assert product.n_edges == base_edges * (n + 1) + base_vertices * n
    assert product.is_simple()


def test_path_product_needs_a_simple_base():
    with pytest.raises(NotSimple):
        cartesian_path_product(cycle_graph(2), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_hypercube_counts(n, to_nx):
    q = hypercube(n)
    assert q.n_vertices == 2**n
    assert q.n_edges == n * 2 ** (n - 1)
    assert nx.is_isomorphic(to_nx(q), nx.MultiGraph(nx.hypercube_graph(n)))


def test_small_hypercubes(to_nx):
    assert hypercube(1) == complete_graph(2)
    assert nx.is_isomorphic(to_nx(hypercube(2)), to_nx(cycle_graph(4)))
    assert betti(hypercube(3)) == 5


@pytest.mark.parametrize("n", [0, 11])
def test_hypercube_dimension_guard(n):
    with pytest.raises(InvalidParameters):
        hypercube(n)


@pytest.mark.parametrize("n, k", [(5, 2), (6, 2), (7, 3), (12, 5), (4, 1)])
def test_generalized_petersen_counts(n, k):
    g = generalized_petersen(n, k)
    assert (g.n_vertices, g.n_edges, betti(g)) == (2 * n, 3 * n, n + 1)
    assert all(g.degree(v) == 3 for v in range(g.n_vertices))


def test_petersen_and_cube():
    assert nx.is_isomorphic(nx.Graph(list(generalized_petersen(5, 2).edges)), nx.petersen_graph())
    assert nx.is_isomorphic(nx.Graph(list(generalized_petersen(4, 1).edges)), nx.Graph(list(hypercube(3).edges)))


@pytest.mark.parametrize("n, k", [(2, 1), (4, 2), (5, 0), (6, 3)])
def test_generalized_petersen_parameter_range(n, k):
    with pytest.raises(InvalidParameters):
        generalized_petersen(n, k)


def test_wheel_layout():
    w = wheel_graph(4)
    assert w.edges[:4] == ((0, 1), (0, 2), (0, 3), (0, 4))
    assert w.edges[4:] == ((1, 2), (2, 3), (3, 4), (1, 4))


@pytest.mark.parametrize("tree_size", [2, 3, 4, 6, 9, 15, 30])
@pytest.mark.parametrize("seed", range(5))
def test_halin_graphs_are_planar_with_minimum_degree_three(tree_size, seed, to_nx):
    g = halin_graph(tree_size, seed)
    assert g.is_simple() and is_connected(g)
    assert all(g.degree(v) >= 3 for v in range(g.n_vertices))
    planar, _ = nx.check_planarity(nx.Graph(to_nx(g)))
    assert planar
    assert halin_graph(tree_size, seed) == g


def test_wheel_composition_counts():
    g = halin_composition(HalinSpec(kind="wheel", size=4), HalinSpec(kind="wheel", size=4), 2, seed=5)
    assert g.n_vertices == 10
    assert g.n_edges == 8 + 8 + 2
    assert betti(g) == 9
    crossing = [(u, v) for u, v in g.edges if (u < 5) != (v < 5)]
    assert len(crossing) == 2 and len(set(crossing)) == 2


def test_composition_is_reproducible():
    spec = HalinSpec(kind="random", size=7)
    assert halin_composition(spec, spec, 3, seed=11) == halin_composition(spec, spec, 3, seed=11)


def test_composition_needs_two_edges():
    with pytest.raises(InvalidParameters):
        halin_composition(HalinSpec(), HalinSpec(), 1)


def test_random_connected_examples():
    assert random_connected(1, 3, loops_allowed=True, seed=0) == bouquet(3)
    tree = random_connected(5, 4, seed=9)
    assert is_connected(tree) and betti(tree) == 0
    assert random_connected(8, 14, loops_allowed=True, seed=4) == random_connected(8, 14, loops_allowed=True, seed=4)


@pytest.mark.parametrize("seed", range(20))
def test_random_connected_shape(seed):
    g = random_connected(9, 16, seed=seed)
    assert (g.n_vertices, g.n_edges) == (9, 16)
    assert is_connected(g)
    assert all(u != v for u, v in g.edges)
    simple = random_connected(9, 16, seed=seed, simple=True)
    assert simple.is_simple() and is_connected(simple)


def test_random_connected_parameter_errors():
    with pytest.raises(InvalidParameters):
        random_connected(5, 3)
    with pytest.raises(InvalidParameters):
        random_connected(1, 2)
    with pytest.raises(InvalidParameters):
        random_connected(4, 7, simple=True)


def test_small_fixtures():
    assert dumbbell().n_edges == 7 and betti(dumbbell()) == 2
    assert complete_graph(5).n_edges == 10
    assert complete_bipartite(2, 3).edges == ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))
    assert theta_graph(1, 1, 1) == Multigraph.from_edges(2, [(0, 1)] * 3)
    assert disjoint_union(cycle_graph(3), bouquet(1)).edges == ((0, 1), (1, 2), (0, 2), (3, 3))


@pytest.mark.parametrize(
    "family, parameters, n_edges",
    [
        ("hypercube", [3], 12),
        ("gen-petersen", [5, 2], 15),
        ("dumbbell", [], 7),
        ("bouquet", [4], 4),
        ("complete", [5], 10),
        ("complete-bipartite", [3, 3], 9),
        ("cartesian-path", [2], 15),
        ("halin-composition", [2], 18),
        ("random-connected", [6, 9], 9),
    ],
)
def test_build_family(family, parameters, n_edges):
    assert build_family(FamilySpec(family=family, parameters=parameters, seed=1)).n_edges == n_edges


def test_build_family_checks_arity():
    with pytest.raises(InvalidParameters):
        build_family(FamilySpec(family="gen-petersen", parameters=[5]))


def test_every_family_has_an_arity():
    assert set(FAMILY_ARITY) == set(FAMILIES)
