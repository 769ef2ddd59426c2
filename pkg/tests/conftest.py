"""Shared fixtures for the fcgenus test suite."""

import logging
import random

import networkx as nx
import pytest

from fcgenus.backend.generators import random_connected
from fcgenus.backend.graph import Multigraph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running performance checks")


@pytest.fixture(autouse=True)
def _reset_fcgenus_logging():
    """The CLI installs handlers on captured streams; drop them after each test."""
    yield
    root = logging.getLogger("fcgenus")
    for handler in list(root.handlers):
        root.removeHandler(handler)


def multigraph_from_nx(graph: nx.Graph) -> Multigraph:
    index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
    return Multigraph.from_edges(len(index), [(index[u], index[v]) for u, v in graph.edges()])


def multigraph_to_nx(g: Multigraph) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.n_vertices))
    graph.add_edges_from(g.edges)
    return graph


@pytest.fixture
def to_nx():
    return multigraph_to_nx


@pytest.fixture
def from_nx():
    return multigraph_from_nx


@pytest.fixture(scope="session")
def small_connected_graphs():
    """Every connected simple graph on 1 to 5 vertices, one per isomorphism class."""
    return [
        multigraph_from_nx(graph)
        for graph in nx.graph_atlas_g()
        if 1 <= graph.number_of_nodes() <= 5 and nx.is_connected(graph)
    ]


@pytest.fixture(scope="session")
def random_multigraphs():
    """500 seeded connected multigraphs with n <= 6, m <= 10, loops and parallel edges allowed."""
    rng = random.Random(20240601)
    graphs = []
    for seed in range(500):
        n = rng.randint(1, 6)
        m = rng.randint(max(n - 1, 0), 10)
        graphs.append(random_connected(n, m, loops_allowed=True, seed=seed))
    return graphs
