"""
Maximum-cardinality matching on general simple graphs.

Edmonds' blossom algorithm: a breadth-first alternating forest grown from one
exposed root at a time, odd cycles (blossoms) shrunk by re-basing their
vertices onto the blossom base. The search starts from a greedy matching
(augmenting paths of length one) and visits roots in ascending index order,
so the result is fully determined by the input.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from fcgenus.backend.errors import NotSimple
from fcgenus.utils import performance_monitor

logger = logging.getLogger("fcgenus.matching")


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected simple graph; ``rows[v]`` holds v's neighbours in ascending order."""

    n_vertices: int
    rows: Tuple[np.ndarray, ...]

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        adjacency: List[set] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at vertex {u}", {"vertex": u})
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise NotSimple(f"edge ({u}, {v}) leaves the vertex range", {"n_vertices": n_vertices})
            if v in adjacency[u]:
                raise NotSimple(f"parallel edge ({u}, {v})", {"edge": (u, v)})
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n_vertices, tuple(np.array(sorted(row), dtype=np.int64) for row in adjacency))

    @classmethod
    def from_rows(cls, rows: Sequence[np.ndarray]) -> "SimpleGraph":
        """Wrap already-ascending, symmetric, loop-free neighbour rows."""
        return cls(len(rows), tuple(np.asarray(row, dtype=np.int64) for row in rows))

    def neighbors(self, vertex: int) -> List[int]:
        return self.rows[vertex].tolist()

    def has_edge(self, u: int, v: int) -> bool:
        row = self.rows[u]
        position = int(np.searchsorted(row, v))
        return position < len(row) and int(row[position]) == v

    @property
    def n_edges(self) -> int:
        return sum(len(row) for row in self.rows) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in row.tolist():
                if u < v:
                    yield u, v


@dataclass(frozen=True)
class Matching:
    """Disjoint vertex pairs, each stored as (smaller, larger), sorted."""

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> "Matching":
        return cls(tuple((v, w) for v, w in enumerate(mate) if w != -1 and v < w))

    def mate_array(self, n_vertices: int) -> List[int]:
        mate = [-1] * n_vertices
        for u, v in self.pairs:
            mate[u] = v
            mate[v] = u
        return mate


def is_valid_matching(h: SimpleGraph, matching: Matching) -> bool:
    """Pairs are edges of ``h`` and no vertex is used twice."""
    used = set()
    for u, v in matching.pairs:
        if u in used or v in used or u == v or not h.has_edge(u, v):
            return False
        used.update((u, v))
    return True


def _greedy(h: SimpleGraph) -> np.ndarray:
    mate = np.full(h.n_vertices, -1, dtype=np.int64)
    for v in range(h.n_vertices):
        if mate[v] != -1:
            continue
        row = h.rows[v]
        if len(row) == 0:
            continue
        free = row[mate[row] == -1]
        if len(free):
            w = int(free[0])
            mate[v] = w
            mate[w] = v
    return mate


class _BlossomSearch:
    """One alternating-forest search from a single exposed root."""

    def __init__(self, h: SimpleGraph, mate: List[int]):
        self.h = h
        self.mate = mate
        self.n = h.n_vertices

    def find_augmenting_path(self, root: int) -> int:
        """Grow the forest from ``root``; return the exposed end of an augmenting path or -1."""
        n, mate = self.n, self.mate
        self.parent = parent = [-1] * n
        self.base = base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        while queue:
            v = queue.popleft()
            for to in self.h.rows[v].tolist():
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # `to` is an outer vertex: v-to closes an odd cycle.
                    current_base = self._lowest_common_ancestor(v, to)
                    in_blossom = [False] * n
                    self._mark_path(v, current_base, to, in_blossom)
                    self._mark_path(to, current_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = current_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def _lowest_common_ancestor(self, a: int, b: int) -> int:
        base, mate, parent = self.base, self.mate, self.parent
        on_path = [False] * self.n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def _mark_path(self, v: int, blossom_base: int, child: int, in_blossom: List[bool]) -> None:
        base, mate, parent = self.base, self.mate, self.parent
        while base[v] != blossom_base:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment(self, end: int) -> None:
        mate, parent = self.mate, self.parent
        v = end
        while v != -1:
            pv = parent[v]
            ppv = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = ppv


@performance_monitor.log_execution_time
def max_matching(h: SimpleGraph) -> Matching:
    """
    A maximum-cardinality matching of ``h``.

    Roots are searched once each, in ascending order; a root whose search
    fails stays exposed for good, since augmenting elsewhere never gives it an
    augmenting path again.
    """
    mate = _greedy(h).tolist()
    greedy_size = sum(1 for v, w in enumerate(mate) if w > v)

    search = _BlossomSearch(h, mate)
    augmentations = 0
    for root in range(h.n_vertices):
        if mate[root] != -1 or len(h.rows[root]) == 0:
            continue
        end = search.find_augmenting_path(root)
        if end != -1:
            search.augment(end)
            augmentations += 1

    matching = Matching.from_mate(mate)
    logger.debug(
        "Maximum matching found",
        extra={
            "n_vertices": h.n_vertices,
            "greedy_size": greedy_size,
            "augmentations": augmentations,
            "size": matching.size,
        },
    )
    return matching
