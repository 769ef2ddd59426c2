"""
Immutable multigraph value type and the elementary queries built on it.

Loops and parallel edges are allowed. Edge ids are dense (0..m-1) and are the
edges' positions in ``Multigraph.edges``; a loop counts once towards the edge
count and twice towards its vertex's degree.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from fcgenus.backend.errors import DisconnectedGraph, InvalidGraph

logger = logging.getLogger("fcgenus.graph")

Edge = Tuple[int, int]


class DisjointSet:
    """Union-find over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge ids of a graph with ``size`` edges."""

    size: int
    ids: FrozenSet[int] = frozenset()

    def __post_init__(self):
        for edge_id in self.ids:
            if not 0 <= edge_id < self.size:
                raise InvalidGraph(
                    f"edge id {edge_id} outside 0..{self.size - 1}",
                    {"edge_id": edge_id, "size": self.size},
                )

    @classmethod
    def from_ids(cls, size: int, ids: Iterable[int]) -> "EdgeSubset":
        return cls(size, frozenset(ids))

    @classmethod
    def full(cls, size: int) -> "EdgeSubset":
        return cls(size, frozenset(range(size)))

    def complement(self) -> "EdgeSubset":
        return EdgeSubset(self.size, frozenset(range(self.size)) - self.ids)

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.ids

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.ids))

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices 0..n_vertices-1."""

    n_vertices: int
    edges: Tuple[Edge, ...] = ()
    labels: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise InvalidGraph("a graph needs at least one vertex", {"n_vertices": self.n_vertices})
        normalized = []
        for edge_id, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise InvalidGraph(
                    f"edge {edge_id} = ({u}, {v}) references a vertex outside 0..{self.n_vertices - 1}",
                    {"edge_id": edge_id},
                )
            normalized.append((u, v) if u <= v else (v, u))
        # Endpoint pairs are unordered; store them sorted so equal graphs compare equal.
        object.__setattr__(self, "edges", tuple(normalized))
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise InvalidGraph("labels must name every vertex", {"labels": len(self.labels)})

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[int]] = None) -> "Multigraph":
        return cls(
            n_vertices,
            tuple((int(u), int(v)) for u, v in edges),
            tuple(labels) if labels is not None else None,
        )

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int) -> Edge:
        return self.edges[edge_id]

    @cached_property
    def _incidence(self) -> Tuple[Tuple[Edge, ...], ...]:
        rows: List[List[Edge]] = [[] for _ in range(self.n_vertices)]
        for edge_id, (u, v) in enumerate(self.edges):
            rows[u].append((edge_id, v))
            if u != v:
                rows[v].append((edge_id, u))
        return tuple(tuple(row) for row in rows)

    def incidence(self, vertex: int) -> Tuple[Edge, ...]:
        """Ascending ``(edge_id, other_endpoint)`` pairs; a loop appears once."""
        return self._incidence[vertex]

    def degree(self, vertex: int) -> int:
        return sum(2 if other == vertex else 1 for _, other in self._incidence[vertex])

    def is_simple(self) -> bool:
        seen: Set[Edge] = set()
        for u, v in self.edges:
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    def label_of(self, vertex: int) -> int:
        return self.labels[vertex] if self.labels is not None else vertex

    def edge_subset(self, ids: Iterable[int] = ()) -> EdgeSubset:
        return EdgeSubset.from_ids(self.n_edges, ids)


def is_connected(g: Multigraph) -> bool:
    """True iff ``g`` has a single connected component."""
    dsu = DisjointSet(g.n_vertices)
    for u, v in g.edges:
        dsu.union(u, v)
        if dsu.components == 1:
            return True
    return dsu.components == 1


def require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(context={"n_vertices": g.n_vertices, "n_edges": g.n_edges})


def betti(g: Multigraph) -> int:
    """Cycle rank |E| - |V| + 1 of a connected graph."""
    require_connected(g)
    return g.n_edges - g.n_vertices + 1


def components_of_subset(g: Multigraph, s: EdgeSubset) -> List[EdgeSubset]:
    """
    Partition ``s`` into the edge sets of the connected components of the
    subgraph formed by its edges. Isolated vertices form no component.

    Components are ordered by their smallest edge id.
    """
    if s.size != g.n_edges:
        raise InvalidGraph("edge subset belongs to a graph of another size", {"size": s.size, "n_edges": g.n_edges})
    dsu = DisjointSet(g.n_vertices)
    for edge_id in s.ids:
        u, v = g.edges[edge_id]
        dsu.union(u, v)

    groups: Dict[int, List[int]] = {}
    for edge_id in sorted(s.ids):
        root = dsu.find(g.edges[edge_id][0])
        groups.setdefault(root, []).append(edge_id)
    return [EdgeSubset.from_ids(g.n_edges, ids) for ids in groups.values()]


def subgraph_vertices(g: Multigraph, s: EdgeSubset) -> Set[int]:
    """Vertices touched by the edges of ``s``."""
    touched: Set[int] = set()
    for edge_id in s.ids:
        touched.update(g.edges[edge_id])
    return touched


def add_edges(g: Multigraph, new: Iterable[Sequence[int]]) -> Multigraph:
    """Return a copy of ``g`` with ``new`` appended after the existing edge ids."""
    appended = tuple((int(u), int(v)) for u, v in new)
    result = Multigraph(g.n_vertices, g.edges + appended, g.labels)
    logger.debug("Added edges", extra={"added": len(appended), "n_edges": result.n_edges})
    return result


def induced_on_edges(g: Multigraph, s: EdgeSubset, vertices: Iterable[int]) -> Multigraph:
    """
    The subgraph on ``vertices`` (relabelled densely in ascending order) with the
    edges of ``s`` whose endpoints both lie in it.
    """
    ordered = sorted(set(vertices))
    index = {v: i for i, v in enumerate(ordered)}
    kept = []
    for edge_id in sorted(s.ids):
        u, v = g.edges[edge_id]
        if u in index and v in index:
            kept.append((index[u], index[v]))
    labels = tuple(g.label_of(v) for v in ordered)
    return Multigraph(len(ordered), tuple(kept), labels)
