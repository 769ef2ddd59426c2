"""
Graph family generators.

Upper-embeddable families (cartesian products with a path, hypercubes,
generalized Petersen graphs, Halin compositions) plus the small fixtures and
seeded random multigraphs the acceptance corpora are built from. Every
seeded generator draws from its own ``random.Random`` so equal seeds give
equal graphs.
"""

import logging
import random
from typing import Dict, List, Optional, Set, Tuple

from fcgenus.backend.errors import InvalidParameters, NotSimple
from fcgenus.backend.graph.multigraph import Edge, Multigraph, require_connected
from fcgenus.backend.models import FamilySpec, HalinSpec

logger = logging.getLogger("fcgenus.generators")

MAX_HYPERCUBE_DIMENSION = 10


def _require(condition: bool, message: str, **context) -> None:
    if not condition:
        raise InvalidParameters(message, context)


def path_graph(length: int) -> Multigraph:
    """Path with ``length`` edges on vertices 0..length."""
    _require(length >= 0, "path length must be >= 0", length=length)
    return Multigraph.from_edges(length + 1, [(i, i + 1) for i in range(length)])


def cycle_graph(n: int) -> Multigraph:
    """C_n; C_1 is a loop and C_2 a pair of parallel edges."""
    _require(n >= 1, "cycle needs n >= 1", n=n)
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Multigraph:
    """K_{1,k} with centre 0."""
    _require(k >= 0, "star needs k >= 0", k=k)
    return Multigraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel_graph(rim: int) -> Multigraph:
    """Hub 0 joined to the rim cycle 1..rim; spokes come first, then rim edges."""
    _require(rim >= 3, "wheel needs a rim of at least 3 vertices", rim=rim)
    spokes = [(0, i) for i in range(1, rim + 1)]
    cycle = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Multigraph.from_edges(rim + 1, spokes + cycle)


def bouquet(k: int) -> Multigraph:
    """B_k: one vertex carrying ``k`` loops."""
    _require(k >= 0, "bouquet needs k >= 0", k=k)
    return Multigraph.from_edges(1, [(0, 0)] * k)


def dumbbell() -> Multigraph:
    """Triangles 0-1-2 and 3-4-5 joined by the bridge (0, 3)."""
    return Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)])


def complete_graph(n: int) -> Multigraph:
    _require(n >= 1, "complete graph needs n >= 1", n=n)
    return Multigraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    _require(a >= 1 and b >= 1, "complete bipartite graph needs both sides non-empty", a=a, b=b)
    return Multigraph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def theta_graph(*lengths: int) -> Multigraph:
    """Internally disjoint paths of the given lengths between poles 0 and 1."""
    _require(len(lengths) >= 1 and all(length >= 1 for length in lengths), "theta paths need length >= 1",
             lengths=list(lengths))
    edges: List[Edge] = []
    n = 2
    for length in lengths:
        previous = 0
        for _ in range(length - 1):
            edges.append((previous, n))
            previous = n
            n += 1
        edges.append((previous, 1))
    return Multigraph.from_edges(n, edges)


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    """``g`` followed by ``h`` shifted by ``g.n_vertices``; labels are dropped."""
    offset = g.n_vertices
    shifted = [(u + offset, v + offset) for u, v in h.edges]
    return Multigraph.from_edges(offset + h.n_vertices, list(g.edges) + shifted)


def cartesian_path_product(g: Multigraph, n: int) -> Multigraph:
    """
    G x P_n: layers 0..n each carrying a copy of ``g``, consecutive layers
    joined vertex to vertex. Vertex (v, layer) gets id ``layer * |V(g)| + v``.
    """
    if not g.is_simple():
        raise NotSimple("cartesian product needs a simple base graph", {"n_edges": g.n_edges})
    require_connected(g)
    _require(n >= 1, "path length must be >= 1", n=n)
    width = g.n_vertices
    edges: List[Edge] = []
    for layer in range(n + 1):
        edges.extend((layer * width + u, layer * width + v) for u, v in g.edges)
    for layer in range(n):
        edges.extend((layer * width + v, (layer + 1) * width + v) for v in range(width))
    return Multigraph.from_edges(width * (n + 1), edges)


def hypercube(n: int) -> Multigraph:
    """Q_n built from two copies of Q_{n-1} joined by a perfect matching."""
    _require(1 <= n <= MAX_HYPERCUBE_DIMENSION, f"hypercube dimension must lie in 1..{MAX_HYPERCUBE_DIMENSION}", n=n)
    edges: List[Edge] = [(0, 1)]
    size = 2
    for _ in range(n - 1):
        edges = edges + [(u + size, v + size) for u, v in edges] + [(v, v + size) for v in range(size)]
        size *= 2
    return Multigraph.from_edges(size, edges)


def generalized_petersen(n: int, k: int) -> Multigraph:
    """
    P(n, k) with outer vertices u_i = i and inner vertices v_i = n + i.

    Edges: outer cycle (u_i, u_{i+1}), spokes (u_i, v_i), inner edges
    (v_i, v_{i+k}), in that order.
    """
    _require(n >= 3, "generalized Petersen graph needs n >= 3", n=n)
    _require(1 <= k and 2 * k < n, "generalized Petersen graph needs 1 <= k < n/2", n=n, k=k)
    logger.info(
        "Generalized Petersen inner edges read as (v_i, v_{i+k})",
        extra={"n": n, "k": k, "printed_reading": "(u_i, v_{i+k})"},
    )
    outer = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    return Multigraph.from_edges(2 * n, outer + spokes + inner)


def _suppress_degree_two(adjacency: Dict[int, List[int]]) -> None:
    changed = True
    while changed:
        changed = False
        for vertex in list(adjacency):
            neighbours = adjacency[vertex]
            if len(neighbours) != 2:
                continue
            a, b = neighbours
            adjacency[a][adjacency[a].index(vertex)] = b
            adjacency[b][adjacency[b].index(vertex)] = a
            del adjacency[vertex]
            changed = True


def halin_graph(tree_size: int, seed: int = 0) -> Multigraph:
    """
    A random Halin graph: a random recursive tree on ``tree_size`` vertices
    with a random rotation at every vertex, degree-2 vertices suppressed, and
    the leaves joined by a cycle in boundary-walk order.

    Trees that collapse to a single edge fall back to K_{1,3}, giving K_4.
    """
    _require(tree_size >= 2, "Halin tree needs at least 2 vertices", tree_size=tree_size)
    rng = random.Random(seed)
    adjacency: Dict[int, List[int]] = {v: [] for v in range(tree_size)}
    for v in range(1, tree_size):
        parent = rng.randrange(v)
        adjacency[v].append(parent)
        adjacency[parent].append(v)
    _suppress_degree_two(adjacency)
    if len(adjacency) < 4:
        adjacency = {0: [1, 2, 3], 1: [0], 2: [0], 3: [0]}
    for neighbours in adjacency.values():
        rng.shuffle(neighbours)

    root = next(v for v in sorted(adjacency) if len(adjacency[v]) >= 3)
    order: List[int] = []
    leaves: List[int] = []
    stack: List[Tuple[int, int]] = [(root, -1)]
    while stack:
        vertex, parent = stack.pop()
        order.append(vertex)
        children = [w for w in adjacency[vertex] if w != parent]
        if not children:
            leaves.append(vertex)
        stack.extend((child, vertex) for child in reversed(children))

    index = {v: i for i, v in enumerate(order)}
    tree_edges = sorted({tuple(sorted((index[v], index[w]))) for v in adjacency for w in adjacency[v]})
    rim = [(index[leaves[i]], index[leaves[(i + 1) % len(leaves)]]) for i in range(len(leaves))]
    g = Multigraph.from_edges(len(order), tree_edges + rim)
    logger.debug("Halin graph drawn", extra={"seed": seed, "n_vertices": g.n_vertices, "leaves": len(leaves)})
    return g


def _halin_side(spec: HalinSpec, rng: random.Random) -> Multigraph:
    if spec.kind == "wheel":
        return wheel_graph(spec.size)
    return halin_graph(spec.size, rng.randrange(2**32))


def halin_composition(spec1: HalinSpec, spec2: HalinSpec, k: int, seed: int = 0) -> Multigraph:
    """Two disjoint Halin graphs plus ``k`` distinct random edges between them."""
    _require(k >= 2, "Halin composition needs k >= 2 connecting edges", k=k)
    rng = random.Random(seed)
    first = _halin_side(spec1, rng)
    second = _halin_side(spec2, rng)
    n1, n2 = first.n_vertices, second.n_vertices
    _require(k <= n1 * n2, "more connecting edges requested than vertex pairs exist", k=k, pairs=n1 * n2)
    picks = rng.sample(range(n1 * n2), k)
    connecting = [(pick // n2, n1 + pick % n2) for pick in picks]
    union = disjoint_union(first, second)
    return Multigraph.from_edges(union.n_vertices, list(union.edges) + connecting)


def random_connected(n: int, m: int, loops_allowed: bool = False, seed: int = 0, simple: bool = False) -> Multigraph:
    """
    A random spanning tree on ``n`` vertices plus ``m - n + 1`` random extra
    edges. ``simple=True`` draws the extras from non-edges only.
    """
    _require(n >= 1, "random graph needs n >= 1", n=n)
    _require(m >= n - 1, "a connected graph needs m >= n - 1", n=n, m=m)
    extra = m - n + 1
    rng = random.Random(seed)
    relabel = list(range(n))
    rng.shuffle(relabel)
    edges: List[Edge] = [(relabel[v], relabel[rng.randrange(v)]) for v in range(1, n)]

    if simple:
        present: Set[Edge] = {(min(u, v), max(u, v)) for u, v in edges}
        candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
        _require(extra <= len(candidates), "too many edges for a simple graph", n=n, m=m)
        edges.extend(rng.sample(candidates, extra))
    else:
        _require(n > 1 or loops_allowed or extra == 0, "a one-vertex graph with edges needs loops", m=m)
        for _ in range(extra):
            u, v = rng.randrange(n), rng.randrange(n)
            while u == v and not loops_allowed:
                u, v = rng.randrange(n), rng.randrange(n)
            edges.append((u, v))
    return Multigraph.from_edges(n, edges)

FAMILY_ARITY: Dict[str, Tuple[int, ...]] = {
    "cartesian-path": (1,),
    "hypercube": (1,),
    "gen-petersen": (2,),
    "halin-composition": (1, 3),
    "bouquet": (1,),
    "dumbbell": (0,),
    "complete": (1,),
    "complete-bipartite": (2,),
    "random-connected": (2, 3),
}


def build_family(spec: FamilySpec, base: Optional[Multigraph] = None) -> Multigraph:
    """
    Build the graph a FamilySpec names. Parameters per family:

    - cartesian-path: n (base graph from ``base``, triangle by default)
    - hypercube: n
    - gen-petersen: n k
    - halin-composition: k, or k s1 s2 for random Halin sides on s1 and s2 tree vertices
    - bouquet: k
    - dumbbell: none
    - complete: n
    - complete-bipartite: a b
    - random-connected: n m, or n m loops (0/1)
    """
    allowed = FAMILY_ARITY[spec.family]
    params = list(spec.parameters)
    if len(params) not in allowed:
        raise InvalidParameters(
            f"{spec.family} takes {' or '.join(str(a) for a in allowed)} parameter(s), got {len(params)}",
            {"family": spec.family, "parameters": params},
        )
    seed = spec.seed if spec.seed is not None else 0

    if spec.family == "cartesian-path":
        g = cartesian_path_product(base if base is not None else cycle_graph(3), params[0])
    elif spec.family == "hypercube":
        g = hypercube(params[0])
    elif spec.family == "gen-petersen":
        g = generalized_petersen(params[0], params[1])
    elif spec.family == "halin-composition":
        g = _build_halin_composition(params, seed)
    elif spec.family == "bouquet":
        g = bouquet(params[0])
    elif spec.family == "dumbbell":
        g = dumbbell()
    elif spec.family == "complete":
        g = complete_graph(params[0])
    elif spec.family == "complete-bipartite":
        g = complete_bipartite(params[0], params[1])
    else:
        g = random_connected(params[0], params[1], loops_allowed=len(params) == 3 and bool(params[2]), seed=seed)

    logger.info(
        "Family generated",
        extra={"family": spec.family, "parameters": params, "n_vertices": g.n_vertices, "n_edges": g.n_edges},
    )
    return g


def _build_halin_composition(parameters: List[int], seed: int) -> Multigraph:
    if len(parameters) == 1:
        return halin_composition(HalinSpec(), HalinSpec(), parameters[0], seed)
    k, size1, size2 = parameters
    _require(size1 >= 3 and size2 >= 3, "Halin tree sizes must be >= 3", size1=size1, size2=size2)
    return halin_composition(HalinSpec(kind="random", size=size1), HalinSpec(kind="random", size=size2), k, seed)
