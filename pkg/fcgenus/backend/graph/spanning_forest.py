"""
Spanning trees, fundamental cycles and the tree-dependent Betti deficiency.

A spanning tree is stored as its edge set plus a rooted parent structure, so
the tree path between any two vertices is found by walking both ends up to
their lowest common ancestor.
"""

import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from fcgenus.backend.errors import InvalidParameters, InvalidSpanningTree
from fcgenus.backend.graph.multigraph import (
    DisjointSet,
    EdgeSubset,
    Multigraph,
    components_of_subset,
    require_connected,
)

logger = logging.getLogger("fcgenus.graph")

TREE_STRATEGIES = ("dfs", "random")

ParentLink = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class SpanningTree:
    """Tree edges plus, per vertex, the (parent vertex, connecting edge id) link."""

    tree_edges: EdgeSubset
    parent: Tuple[ParentLink, ...]
    depth: Tuple[int, ...]
    root: int = 0
    strategy: str = "dfs"
    seed: Optional[int] = None

    @property
    def n_vertices(self) -> int:
        return len(self.parent)

    def cotree(self) -> EdgeSubset:
        return self.tree_edges.complement()


@dataclass(frozen=True)
class FundamentalCycle:
    """The unique cycle of T + cotree_edge."""

    cotree_edge: int
    cycle_edges: EdgeSubset
    cycle_vertices: FrozenSet[int]


def spanning_tree(g: Multigraph, strategy: str = "dfs", seed: Optional[int] = None) -> SpanningTree:
    """
    Build a spanning tree of ``g``.

    ``"dfs"`` roots the tree at vertex 0 and explores incident edges in
    ascending edge-id order, so equal graphs always give the same tree.
    ``"random"`` runs the same depth-first search from a random root with each
    vertex's incident edges shuffled by a ``random.Random(seed)`` stream.
    """
    if strategy not in TREE_STRATEGIES:
        raise InvalidParameters(f"unknown tree strategy {strategy!r}", {"choices": TREE_STRATEGIES})
    if strategy == "random" and seed is None:
        raise InvalidParameters("the random tree strategy needs a seed")
    require_connected(g)

    n = g.n_vertices
    rng = random.Random(seed) if strategy == "random" else None

    def ordered_incidence(vertex: int) -> List[Tuple[int, int]]:
        row = list(g.incidence(vertex))
        if rng is not None:
            rng.shuffle(row)
        return row

    root = rng.randrange(n) if rng is not None else 0
    visited = [False] * n
    parent: List[ParentLink] = [None] * n
    depth = [0] * n
    tree_ids: List[int] = []

    visited[root] = True
    stack = [(root, iter(ordered_incidence(root)))]
    while stack:
        vertex, neighbours = stack[-1]
        for edge_id, other in neighbours:
            if not visited[other]:
                visited[other] = True
                parent[other] = (vertex, edge_id)
                depth[other] = depth[vertex] + 1
                tree_ids.append(edge_id)
                stack.append((other, iter(ordered_incidence(other))))
                break
        else:
            stack.pop()

    tree = SpanningTree(
        tree_edges=g.edge_subset(tree_ids),
        parent=tuple(parent),
        depth=tuple(depth),
        root=root,
        strategy=strategy,
        seed=seed,
    )
    logger.debug(
        "Built spanning tree",
        extra={"strategy": strategy, "seed": seed, "root": root, "tree_edges": len(tree_ids)},
    )
    return tree


def spanning_tree_from_edges(g: Multigraph, edge_ids: Iterable[int], root: int = 0) -> SpanningTree:
    """Wrap an explicit edge set as a SpanningTree, checking that it is one."""
    ids = sorted(set(edge_ids))
    if len(ids) != g.n_vertices - 1:
        raise InvalidSpanningTree(
            f"a spanning tree of {g.n_vertices} vertices has {g.n_vertices - 1} edges, got {len(ids)}",
            {"edge_ids": ids},
        )
    if not 0 <= root < g.n_vertices:
        raise InvalidSpanningTree(f"root {root} is not a vertex")

    dsu = DisjointSet(g.n_vertices)
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(g.n_vertices)]
    for edge_id in ids:
        if not 0 <= edge_id < g.n_edges:
            raise InvalidSpanningTree(f"edge id {edge_id} is not an edge of the graph")
        u, v = g.endpoints(edge_id)
        if not dsu.union(u, v):
            raise InvalidSpanningTree(f"edge {edge_id} closes a cycle", {"edge_id": edge_id})
        adjacency[u].append((edge_id, v))
        adjacency[v].append((edge_id, u))

    parent: List[ParentLink] = [None] * g.n_vertices
    depth = [0] * g.n_vertices
    seen = [False] * g.n_vertices
    seen[root] = True
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for edge_id, other in adjacency[vertex]:
            if not seen[other]:
                seen[other] = True
                parent[other] = (vertex, edge_id)
                depth[other] = depth[vertex] + 1
                queue.append(other)

    return SpanningTree(
        tree_edges=g.edge_subset(ids),
        parent=tuple(parent),
        depth=tuple(depth),
        root=root,
        strategy="given",
    )


def tree_path(t: SpanningTree, u: int, v: int) -> Tuple[List[int], List[int]]:
    """
    Tree path from ``u`` to ``v`` as ``(edge ids, vertex ids)``, both in walk
    order; the vertex list starts with ``u`` and ends with ``v``.
    """
    parent, depth = t.parent, t.depth
    left_edges: List[int] = []
    right_edges: List[int] = []
    left_vertices = [u]
    right_vertices = [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a, edge_id = parent[a]
        left_edges.append(edge_id)
        left_vertices.append(a)
    while depth[b] > depth[a]:
        b, edge_id = parent[b]
        right_edges.append(edge_id)
        right_vertices.append(b)
    while a != b:
        a, edge_id = parent[a]
        left_edges.append(edge_id)
        left_vertices.append(a)
        b, edge_id = parent[b]
        right_edges.append(edge_id)
        right_vertices.append(b)
    # a == b is the common ancestor; it closes both lists.
    return left_edges + right_edges[::-1], left_vertices + right_vertices[-2::-1]


def cycle_for_endpoints(t: SpanningTree, u: int, v: int, edge_id: int, n_edges: int) -> FundamentalCycle:
    """
    The cycle an edge ``edge_id`` joining ``u`` and ``v`` closes through ``t``;
    the edge need not exist yet (``n_edges`` is the size of the graph it lives in).
    """
    if u == v:
        return FundamentalCycle(edge_id, EdgeSubset(n_edges, frozenset((edge_id,))), frozenset((u,)))
    path_edges, path_vertices = tree_path(t, u, v)
    return FundamentalCycle(
        cotree_edge=edge_id,
        cycle_edges=EdgeSubset(n_edges, frozenset(path_edges) | {edge_id}),
        cycle_vertices=frozenset(path_vertices),
    )


def _require_tree_of(g: Multigraph, t: SpanningTree) -> None:
    if t.tree_edges.size != g.n_edges or t.n_vertices != g.n_vertices:
        raise InvalidSpanningTree(
            "spanning tree belongs to another graph",
            {"tree_size": t.tree_edges.size, "n_edges": g.n_edges},
        )


def fundamental_cycles(g: Multigraph, t: SpanningTree) -> List[FundamentalCycle]:
    """One fundamental cycle per cotree edge, in ascending cotree edge id order."""
    _require_tree_of(g, t)
    cycles = []
    for edge_id in range(g.n_edges):
        if edge_id in t.tree_edges:
            continue
        u, v = g.endpoints(edge_id)
        cycles.append(cycle_for_endpoints(t, u, v, edge_id, g.n_edges))
    logger.debug("Extracted fundamental cycles", extra={"cycles": len(cycles)})
    return cycles


def xi_of_tree(g: Multigraph, t: SpanningTree) -> int:
    """Number of components of G minus E(T) with an odd number of edges."""
    _require_tree_of(g, t)
    return sum(1 for component in components_of_subset(g, t.cotree()) if len(component) % 2 == 1)


def is_closed_cycle(g: Multigraph, cycle: FundamentalCycle) -> bool:
    """Every cycle vertex has degree two within the cycle's edges (a loop counts twice)."""
    degree = {v: 0 for v in cycle.cycle_vertices}
    for edge_id in cycle.cycle_edges.ids:
        u, v = g.endpoints(edge_id)
        if u not in degree or v not in degree:
            return False
        degree[u] += 1
        degree[v] += 1
    return all(d == 2 for d in degree.values())


def tree_in_supergraph(t: SpanningTree, g: Multigraph) -> SpanningTree:
    """The same tree viewed inside ``g``, a graph with extra edges appended and no new vertices."""
    if g.n_vertices != t.n_vertices or g.n_edges < t.tree_edges.size:
        raise InvalidSpanningTree("graph is not an edge-extension of the tree's graph")
    return SpanningTree(
        tree_edges=EdgeSubset(g.n_edges, t.tree_edges.ids),
        parent=t.parent,
        depth=t.depth,
        root=t.root,
        strategy=t.strategy,
        seed=t.seed,
    )
