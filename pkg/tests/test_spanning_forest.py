import pytest

from fcgenus.backend.errors import DisconnectedGraph, InvalidParameters, InvalidSpanningTree
from fcgenus.backend.generators import bouquet, complete_graph, cycle_graph, dumbbell, path_graph, random_connected
from fcgenus.backend.graph import Multigraph, fundamental_cycles, spanning_tree, spanning_tree_from_edges, xi_of_tree
from fcgenus.backend.graph.multigraph import is_connected
from fcgenus.backend.graph.spanning_forest import cycle_for_endpoints, is_closed_cycle, tree_path


def _is_spanning_tree(g: Multigraph, tree_ids) -> bool:
    ids = list(tree_ids)
    return len(ids) == g.n_vertices - 1 and is_connected(Multigraph.from_edges(g.n_vertices, [g.edges[i] for i in ids]))


def test_dfs_tree_of_k4_follows_ascending_edge_ids():
    t = spanning_tree(complete_graph(4))
    assert list(t.tree_edges) == [0, 3, 5]
    assert t.parent[0] is None
    assert t.parent[3] == (2, 5)
    assert t.depth == (0, 1, 2, 3)
    assert list(t.cotree()) == [1, 2, 4]


def test_dfs_tree_is_deterministic():
    g = random_connected(7, 12, loops_allowed=True, seed=3)
    assert spanning_tree(g).tree_edges == spanning_tree(g).tree_edges


@pytest.mark.parametrize("seed", range(10))
def test_random_tree_is_a_spanning_tree(seed):
    g = random_connected(8, 15, loops_allowed=True, seed=seed)
    t = spanning_tree(g, "random", seed)
    assert t.strategy == "random" and t.seed == seed
    assert _is_spanning_tree(g, t.tree_edges)
    assert spanning_tree(g, "random", seed).tree_edges == t.tree_edges


def test_random_strategy_needs_a_seed():
    with pytest.raises(InvalidParameters):
        spanning_tree(complete_graph(3), "random")


def test_unknown_strategy_is_rejected():
    with pytest.raises(InvalidParameters):
        spanning_tree(complete_graph(3), "bfs")


def test_disconnected_graph_has_no_spanning_tree():
    with pytest.raises(DisconnectedGraph):
        spanning_tree(Multigraph.from_edges(3, [(0, 1)]))


def test_single_vertex_tree_is_empty():
    t = spanning_tree(bouquet(2))
    assert list(t.tree_edges) == []
    cycles = fundamental_cycles(bouquet(2), t)
    assert [c.cycle_vertices for c in cycles] == [frozenset({0}), frozenset({0})]


def test_fundamental_cycles_of_k4():
    g = complete_graph(4)
    cycles = fundamental_cycles(g, spanning_tree(g))
    assert [c.cotree_edge for c in cycles] == [1, 2, 4]
    assert [sorted(c.cycle_edges) for c in cycles] == [[0, 1, 3], [0, 2, 3, 5], [3, 4, 5]]
    assert [sorted(c.cycle_vertices) for c in cycles] == [[0, 1, 2], [0, 1, 2, 3], [1, 2, 3]]


def test_parallel_edge_closes_a_two_cycle():
    g = cycle_graph(2)
    cycles = fundamental_cycles(g, spanning_tree(g))
    assert len(cycles) == 1
    assert sorted(cycles[0].cycle_edges) == [0, 1]
    assert is_closed_cycle(g, cycles[0])


@pytest.mark.parametrize("seed", range(20))
def test_every_fundamental_cycle_is_closed(seed):
    g = random_connected(7, 13, loops_allowed=True, seed=seed)
    t = spanning_tree(g, "random", seed)
    cycles = fundamental_cycles(g, t)
    assert len(cycles) == g.n_edges - g.n_vertices + 1
    for cycle in cycles:
        assert cycle.cotree_edge in cycle.cycle_edges
        assert is_closed_cycle(g, cycle)
        assert all(e == cycle.cotree_edge or e in t.tree_edges for e in cycle.cycle_edges)


def test_tree_path_walks_through_the_common_ancestor():
    g = Multigraph.from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4)])
    t = spanning_tree(g)
    edges, vertices = tree_path(t, 2, 4)
    assert vertices == [2, 1, 0, 3, 4]
    assert edges == [1, 0, 2, 3]
    assert tree_path(t, 0, 4) == ([2, 3], [0, 3, 4])
    assert tree_path(t, 3, 3) == ([], [3])


def test_cycle_for_a_new_edge():
    t = spanning_tree(path_graph(3))
    cycle = cycle_for_endpoints(t, 0, 3, edge_id=3, n_edges=4)
    assert sorted(cycle.cycle_edges) == [0, 1, 2, 3]
    assert cycle.cycle_vertices == frozenset({0, 1, 2, 3})
    loop = cycle_for_endpoints(t, 2, 2, edge_id=3, n_edges=4)
    assert list(loop.cycle_edges) == [3] and loop.cycle_vertices == frozenset({2})


def test_spanning_tree_from_explicit_edges():
    g = complete_graph(4)
    star = spanning_tree_from_edges(g, [0, 1, 2])
    assert star.strategy == "given"
    assert star.parent[1:] == ((0, 0), (0, 1), (0, 2))
    assert xi_of_tree(g, star) == 1


@pytest.mark.parametrize("edge_ids", [[0, 1], [0, 1, 3], [0, 1, 2, 3], [0, 1, 9]])
def test_spanning_tree_from_edges_rejects_non_trees(edge_ids):
    with pytest.raises(InvalidSpanningTree):
        spanning_tree_from_edges(complete_graph(4), edge_ids)


def test_xi_of_tree_counts_odd_cotree_components():
    g = dumbbell()
    assert xi_of_tree(g, spanning_tree(g)) == 2
    assert xi_of_tree(cycle_graph(5), spanning_tree(cycle_graph(5))) == 1
    assert xi_of_tree(bouquet(4), spanning_tree(bouquet(4))) == 0


def test_tree_from_another_graph_is_rejected():
    with pytest.raises(InvalidSpanningTree):
        fundamental_cycles(complete_graph(4), spanning_tree(cycle_graph(4)))
