"""
Brute-force ground truth.

- Betti deficiency by enumerating every spanning tree (deletion/contraction
  over the multigraph) and minimising the odd cotree components.
- Maximum genus from the deficiency.
- Maximum matching size by branch-and-bound, and an exhaustive
  augmenting-path search.

Every oracle refuses over-budget input with BudgetExceeded instead of
returning a truncated answer.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import numpy as np

from fcgenus.backend.errors import BudgetExceeded, InvariantViolation
from fcgenus.backend.graph.multigraph import DisjointSet, Multigraph, betti
from fcgenus.backend.graph.spanning_forest import SpanningTree, spanning_tree_from_edges
from fcgenus.backend.matching.blossom import Matching, SimpleGraph
from fcgenus.backend.models import OracleBudget
from fcgenus.utils import performance_monitor

logger = logging.getLogger("fcgenus.oracles")


@dataclass(frozen=True)
class XiOracleResult:
    """Exact Betti deficiency with one optimal tree and the xi(G,T) histogram."""

    xi: int
    optimal_tree: SpanningTree
    trees_enumerated: int
    xi_table: Dict[int, int] = field(default_factory=dict)


def count_spanning_trees(g: Multigraph) -> int:
    """Kirchhoff's matrix-tree count; loops ignored, parallel edges counted."""
    n = g.n_vertices
    if n == 1:
        return 1
    laplacian = np.zeros((n, n), dtype=np.float64)
    for u, v in g.edges:
        if u == v:
            continue
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    return int(round(float(np.linalg.det(laplacian[1:, 1:]))))


def _check_graph_budget(g: Multigraph, budget: OracleBudget) -> int:
    if g.n_vertices > budget.max_vertices:
        raise BudgetExceeded("max_vertices", budget.max_vertices, g.n_vertices)
    if g.n_edges > budget.max_edges:
        raise BudgetExceeded("max_edges", budget.max_edges, g.n_edges)
    expected = count_spanning_trees(g)
    if expected > budget.max_trees:
        raise BudgetExceeded("max_trees", budget.max_trees, expected)
    return expected


def enumerate_spanning_trees(g: Multigraph) -> Iterator[List[int]]:
    """
    Yield the edge-id list of every spanning tree exactly once.

    Edges are decided in id order: contract the edge (it joins two current
    super-vertices) or delete it (the rest must still connect everything).
    An edge whose ends were already merged is a loop of the contracted graph
    and can only be deleted; parallel edges give distinct trees.
    """
    edges = g.edges
    m = len(edges)
    chosen: List[int] = []

    def still_connected(labels: List[int], start: int, components: int) -> bool:
        dsu = DisjointSet(len(labels))
        merged = 1
        for index in range(start, m):
            u, v = edges[index]
            if dsu.union(labels[u], labels[v]):
                merged += 1
                if merged == components:
                    return True
        return merged >= components

    def branch(index: int, labels: List[int], components: int) -> Iterator[List[int]]:
        if components == 1:
            yield list(chosen)
            return
        if index == m:
            return
        u, v = edges[index]
        label_u, label_v = labels[u], labels[v]
        if label_u != label_v:
            contracted = [label_u if label == label_v else label for label in labels]
            chosen.append(index)
            yield from branch(index + 1, contracted, components - 1)
            chosen.pop()
        if still_connected(labels, index + 1, components):
            yield from branch(index + 1, labels, components)

    yield from branch(0, list(range(g.n_vertices)), g.n_vertices)


def _odd_cotree_components(g: Multigraph, tree_ids: List[int]) -> int:
    in_tree = set(tree_ids)
    dsu = DisjointSet(g.n_vertices)
    cotree = [edge_id for edge_id in range(g.n_edges) if edge_id not in in_tree]
    for edge_id in cotree:
        dsu.union(*g.edges[edge_id])
    sizes: Counter = Counter(dsu.find(g.edges[edge_id][0]) for edge_id in cotree)
    return sum(1 for size in sizes.values() if size % 2 == 1)


@performance_monitor.log_execution_time
def xi_oracle(g: Multigraph, budget: Optional[OracleBudget] = None) -> XiOracleResult:
    """Betti deficiency: minimum over all spanning trees of the odd cotree components."""
    budget = budget or OracleBudget()
    betti(g)
    expected = _check_graph_budget(g, budget)

    best_xi: Optional[int] = None
    best_tree: List[int] = []
    table: Counter = Counter()
    enumerated = 0
    for tree_ids in enumerate_spanning_trees(g):
        enumerated += 1
        xi = _odd_cotree_components(g, tree_ids)
        table[xi] += 1
        if best_xi is None or xi < best_xi:
            best_xi, best_tree = xi, tree_ids

    if enumerated != expected:
        raise InvariantViolation(
            "spanning-tree enumeration disagrees with the matrix-tree count",
            {"enumerated": enumerated, "kirchhoff": expected},
        )
    logger.info("Betti deficiency enumerated", extra={"xi": best_xi, "trees": enumerated})
    return XiOracleResult(
        xi=best_xi,
        optimal_tree=spanning_tree_from_edges(g, best_tree),
        trees_enumerated=enumerated,
        xi_table=dict(sorted(table.items())),
    )


def genus_oracle(g: Multigraph, budget: Optional[OracleBudget] = None) -> int:
    """Maximum genus (beta - xi) / 2 with xi taken over all spanning trees."""
    result = xi_oracle(g, budget)
    return (betti(g) - result.xi) // 2


def matching_oracle(h: SimpleGraph, budget: Optional[OracleBudget] = None) -> int:
    """Maximum matching size by branch-and-bound over which partner the lowest free vertex takes."""
    budget = budget or OracleBudget()
    if h.n_vertices > budget.max_matching_vertices:
        raise BudgetExceeded("max_matching_vertices", budget.max_matching_vertices, h.n_vertices)

    neighbours = [h.neighbors(v) for v in range(h.n_vertices)]
    best = 0

    def solve(free: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if free == 0 or size + bin(free).count("1") // 2 <= best:
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for w in neighbours[v]:
            if rest >> w & 1:
                solve(rest & ~(1 << w), size + 1)
        solve(rest, size)

    solve((1 << h.n_vertices) - 1, 0)
    return best


def has_augmenting_path(h: SimpleGraph, matching: Matching, budget: Optional[OracleBudget] = None) -> bool:
    """Exhaustive search for an alternating path joining two exposed vertices."""
    budget = budget or OracleBudget()
    if h.n_vertices > budget.max_matching_vertices:
        raise BudgetExceeded("max_matching_vertices", budget.max_matching_vertices, h.n_vertices)
    mate = matching.mate_array(h.n_vertices)
    neighbours = [h.neighbors(v) for v in range(h.n_vertices)]

    def extend(v: int, visited: frozenset) -> bool:
        for w in neighbours[v]:
            if w in visited or mate[v] == w:
                continue
            if mate[w] == -1:
                return True
            x = mate[w]
            if x not in visited and extend(x, visited | {w, x}):
                return True
        return False

    return any(mate[s] == -1 and extend(s, frozenset((s,))) for s in range(h.n_vertices))
