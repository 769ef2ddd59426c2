"""
The fundamental intersecting graph: one vertex per fundamental cycle, two
cycles adjacent exactly when they share a graph vertex.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

import numpy as np

from fcgenus.backend.graph.spanning_forest import FundamentalCycle
from fcgenus.backend.matching.blossom import SimpleGraph
from fcgenus.utils import performance_monitor

logger = logging.getLogger("fcgenus.graph")

# Rows of the cycle/cycle product computed per block; bounds peak memory.
BLOCK_ROWS = 1024


@dataclass(frozen=True, eq=False)
class IntersectionGraph:
    """Simple graph on cycle indices; index i is ``source_cycles[i]``."""

    n_cycles: int
    adjacency: SimpleGraph
    source_cycles: Tuple[FundamentalCycle, ...]

    def neighbors(self, i: int) -> List[int]:
        return self.adjacency.neighbors(i)

    def has_edge(self, i: int, j: int) -> bool:
        return self.adjacency.has_edge(i, j)

    @property
    def n_edges(self) -> int:
        return self.adjacency.n_edges

    def edges(self) -> Iterator[Tuple[int, int]]:
        return self.adjacency.edges()

    def as_simple_graph(self) -> SimpleGraph:
        return self.adjacency


def cycles_intersect(a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    """True at the first common vertex."""
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return not small.isdisjoint(large)


def witness_vertex(a: FrozenSet[int], b: FrozenSet[int]) -> int:
    """Smallest vertex shared by two cycles."""
    return min(a & b)


@performance_monitor.log_execution_time
def build_intersection_graph(cycles: Sequence[FundamentalCycle]) -> IntersectionGraph:
    """
    Build G_M for cycles taken from one (graph, tree) pair.

    Only vertices lying on two or more cycles can create adjacency, so the
    cycle-by-vertex incidence matrix keeps just those columns; the product
    ``M @ M.T`` then counts shared vertices for every pair at once.
    """
    k = len(cycles)
    if k == 0:
        return IntersectionGraph(0, SimpleGraph(0, ()), ())

    multiplicity: Dict[int, int] = {}
    for cycle in cycles:
        for v in cycle.cycle_vertices:
            multiplicity[v] = multiplicity.get(v, 0) + 1
    shared_vertices = sorted(v for v, count in multiplicity.items() if count > 1)
    column = {v: i for i, v in enumerate(shared_vertices)}

    # float32 holds shared-vertex counts exactly far beyond any graph this handles.
    incidence = np.zeros((k, len(shared_vertices)), dtype=np.float32)
    for i, cycle in enumerate(cycles):
        columns = [column[v] for v in cycle.cycle_vertices if v in column]
        if columns:
            incidence[i, columns] = 1.0

    rows: List[np.ndarray] = []
    for start in range(0, k, BLOCK_ROWS):
        block = incidence[start:start + BLOCK_ROWS] @ incidence.T
        for offset, counts in enumerate(block):
            counts[start + offset] = 0.0
            rows.append(np.flatnonzero(counts > 0.0))

    graph = IntersectionGraph(k, SimpleGraph.from_rows(rows), tuple(cycles))
    logger.debug(
        "Built fundamental intersecting graph",
        extra={"n_cycles": k, "n_edges": graph.n_edges, "shared_vertices": len(shared_vertices)},
    )
    return graph


def pairwise_intersecting(igraph: IntersectionGraph) -> bool:
    """True iff every two cycles share a vertex (G_M is complete)."""
    k = igraph.n_cycles
    return igraph.n_edges == k * (k - 1) // 2
