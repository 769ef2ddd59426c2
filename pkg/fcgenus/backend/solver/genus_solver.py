"""
Maximum genus through fundamental cycles.

Pipeline: spanning tree -> fundamental cycles -> intersecting graph G_M ->
maximum matching. The matching size is the maximum genus; the Betti
deficiency follows as beta - 2 * gamma. The module also hosts the two-edge
increment experiment, the edge-cut criteria and the pairwise-intersecting
criterion.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from fcgenus.backend.errors import (
    InvalidGraph,
    InvariantViolation,
    NotATwoComponentCut,
    PreconditionFailed,
)
from fcgenus.backend.graph.intersect_graph import (
    build_intersection_graph,
    cycles_intersect,
    pairwise_intersecting,
    witness_vertex,
)
from fcgenus.backend.graph.multigraph import (
    DisjointSet,
    EdgeSubset,
    Multigraph,
    add_edges,
    betti,
    induced_on_edges,
)
from fcgenus.backend.graph.spanning_forest import (
    FundamentalCycle,
    SpanningTree,
    cycle_for_endpoints,
    fundamental_cycles,
    spanning_tree,
    tree_in_supergraph,
    xi_of_tree,
)
from fcgenus.backend.matching.blossom import max_matching
from fcgenus.backend.models import CertificatePair, GenusReport, Theorem4Result, Theorem5Result
from fcgenus.utils import error_tracker, performance_monitor

logger = logging.getLogger("fcgenus.solver")

EndpointPair = Tuple[int, int]


def verify_report(report: GenusReport, cycles: Optional[Sequence[FundamentalCycle]] = None) -> None:
    """Raise InvariantViolation unless every GenusReport invariant holds."""
    problems = []
    if report.gamma_max != len(report.certificate):
        problems.append("gamma_max differs from certificate size")
    if report.xi != report.beta - 2 * report.gamma_max or report.xi < 0:
        problems.append("xi is not beta - 2 * gamma_max >= 0")
    if report.xi % 2 != report.beta % 2:
        problems.append("xi and beta differ in parity")
    if not 0 <= report.gamma_max <= report.beta // 2:
        problems.append("gamma_max outside 0..floor(beta/2)")
    if report.upper_embeddable != (report.xi <= 1):
        problems.append("upper_embeddable disagrees with xi <= 1")

    used = set()
    for pair in report.certificate:
        if pair.cycle_a in used or pair.cycle_b in used or pair.cycle_a == pair.cycle_b:
            problems.append(f"certificate reuses a cycle in ({pair.cycle_a}, {pair.cycle_b})")
        used.update((pair.cycle_a, pair.cycle_b))
        if cycles is not None:
            a, b = cycles[pair.cycle_a], cycles[pair.cycle_b]
            if pair.witness_vertex not in a.cycle_vertices or pair.witness_vertex not in b.cycle_vertices:
                problems.append(f"witness {pair.witness_vertex} not on both cycles {pair.cycle_a}, {pair.cycle_b}")

    if problems:
        raise InvariantViolation(
            "genus report invariants violated: " + "; ".join(problems),
            {"beta": report.beta, "gamma_max": report.gamma_max, "xi": report.xi},
        )


@performance_monitor.log_execution_time
@error_tracker.handle_exception()
def maximum_genus(
    g: Multigraph,
    tree_strategy: str = "dfs",
    seed: Optional[int] = None,
    tree: Optional[SpanningTree] = None,
) -> GenusReport:
    """
    Maximum genus of a connected multigraph from any one spanning tree.

    ``tree`` overrides ``tree_strategy``/``seed`` when given.
    """
    beta = betti(g)
    t = tree if tree is not None else spanning_tree(g, tree_strategy, seed)
    cycles = fundamental_cycles(g, t)
    igraph = build_intersection_graph(cycles)
    matching = max_matching(igraph.as_simple_graph())

    certificate = [
        CertificatePair(
            cycle_a=a,
            cycle_b=b,
            witness_vertex=witness_vertex(cycles[a].cycle_vertices, cycles[b].cycle_vertices),
            cotree_edge_a=cycles[a].cotree_edge,
            cotree_edge_b=cycles[b].cotree_edge,
        )
        for a, b in matching.pairs
    ]
    gamma = matching.size
    xi = beta - 2 * gamma

    report = GenusReport(
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        beta=beta,
        gamma_max=gamma,
        xi=xi,
        upper_embeddable=xi <= 1,
        tree_edges=list(t.tree_edges),
        tree_xi=xi_of_tree(g, t),
        strategy=t.strategy,
        seed=t.seed,
        intersection_edges=igraph.n_edges,
        vertex_labels=[g.label_of(v) for v in range(g.n_vertices)],
        certificate=certificate,
    )
    verify_report(report, cycles)

    logger.info(
        "Maximum genus computed",
        extra={"beta": beta, "gamma_max": gamma, "xi": xi, "tree_xi": report.tree_xi, "strategy": t.strategy},
    )
    return report.with_tree(t)


def _check_endpoints(g: Multigraph, pair: EndpointPair) -> None:
    u, v = pair
    if not (0 <= u < g.n_vertices and 0 <= v < g.n_vertices):
        raise InvalidGraph(f"edge {pair} references a vertex outside 0..{g.n_vertices - 1}")


def theorem4_increment(g: Multigraph, t: SpanningTree, e1: EndpointPair, e2: EndpointPair) -> Theorem4Result:
    """
    Add two new edges whose cycles through ``t`` share a vertex and report the
    maximum genus before and after.

    The matching gains at least the new adjacent pair, so the genus rises by
    one or two; a rise of two is logged as a counterexample to the exact
    one-step claim and reported with ``exact_increment=False``.
    """
    _check_endpoints(g, e1)
    _check_endpoints(g, e2)
    first = cycle_for_endpoints(t, e1[0], e1[1], g.n_edges, g.n_edges + 2)
    second = cycle_for_endpoints(t, e2[0], e2[1], g.n_edges + 1, g.n_edges + 2)
    if not cycles_intersect(first.cycle_vertices, second.cycle_vertices):
        raise PreconditionFailed(
            "the cycles the two new edges close through the tree are vertex-disjoint",
            {"e1": list(e1), "e2": list(e2)},
        )

    before = maximum_genus(g, tree=t)
    extended = add_edges(g, [e1, e2])
    after = maximum_genus(extended, tree=tree_in_supergraph(t, extended))

    increment = after.gamma_max - before.gamma_max
    if increment < 1:
        raise InvariantViolation(
            "adding two intersecting fundamental cycles did not raise the genus",
            {"before": before.gamma_max, "after": after.gamma_max},
        )
    result = Theorem4Result(
        before=before,
        after=after,
        shared_vertex=witness_vertex(first.cycle_vertices, second.cycle_vertices),
        increment=increment,
        exact_increment=increment == 1,
        upper_embeddability_agrees=before.upper_embeddable == after.upper_embeddable,
    )
    if not result.exact_increment:
        logger.warning(
            "Two-edge increment counterexample",
            extra={
                "edges": [list(edge) for edge in g.edges],
                "e1": list(e1),
                "e2": list(e2),
                "gamma_before": before.gamma_max,
                "gamma_after": after.gamma_max,
            },
        )
    return result


def cut_between(g: Multigraph, side_vertices) -> EdgeSubset:
    """E[G1, G2] for the vertex bipartition given by one side."""
    side = set(side_vertices)
    return g.edge_subset(i for i, (u, v) in enumerate(g.edges) if (u in side) != (v in side))


def _split_by_cut(g: Multigraph, cut: EdgeSubset) -> Tuple[List[int], List[int]]:
    if cut.size != g.n_edges:
        raise InvalidGraph("cut belongs to a graph of another size")
    dsu = DisjointSet(g.n_vertices)
    for edge_id, (u, v) in enumerate(g.edges):
        if edge_id not in cut:
            dsu.union(u, v)
    if dsu.components != 2:
        raise NotATwoComponentCut(
            f"removing the cut leaves {dsu.components} components, not 2",
            {"components": dsu.components},
        )
    first_root = dsu.find(0)
    side_1 = [v for v in range(g.n_vertices) if dsu.find(v) == first_root]
    side_2 = [v for v in range(g.n_vertices) if dsu.find(v) != first_root]
    for edge_id in cut:
        u, v = g.endpoints(edge_id)
        if dsu.find(u) == dsu.find(v):
            raise NotATwoComponentCut(f"cut edge {edge_id} lies inside one side", {"edge_id": edge_id})
    return side_1, side_2


def theorem5_check(g: Multigraph, cut: EdgeSubset) -> Theorem5Result:
    """
    Edge-cut criteria: with both sides upper-embeddable, gamma >= floor(beta/2) - 1;
    condition (1) both side Betti numbers even, or (2) an odd cut with odd
    Betti sum, makes the graph upper-embeddable.
    """
    betti(g)
    side_1, side_2 = _split_by_cut(g, cut)
    remaining = cut.complement()
    report_1 = maximum_genus(induced_on_edges(g, remaining, side_1))
    report_2 = maximum_genus(induced_on_edges(g, remaining, side_2))
    report = maximum_genus(g)

    condition1 = report_1.beta % 2 == 0 and report_2.beta % 2 == 0
    condition2 = len(cut) % 2 == 1 and (report_1.beta + report_2.beta) % 2 == 1
    sides_upper_embeddable = report_1.upper_embeddable and report_2.upper_embeddable
    result = Theorem5Result(
        bound_holds=report.gamma_max >= report.beta // 2 - 1,
        condition1=condition1,
        condition2=condition2,
        upper_claim_applicable=condition1 or condition2,
        sides_upper_embeddable=sides_upper_embeddable,
        upper_embeddable=report.upper_embeddable,
        beta=report.beta,
        beta_1=report_1.beta,
        beta_2=report_2.beta,
        cut_size=len(cut),
        gamma_max=report.gamma_max,
    )
    if sides_upper_embeddable and (
        not result.bound_holds or (result.upper_claim_applicable and not result.upper_embeddable)
    ):
        logger.warning("Edge-cut criterion counterexample", extra=result.model_dump())
    return result


def corollary1_check(g: Multigraph, t: SpanningTree) -> bool:
    """
    Whether every two fundamental cycles of ``t`` meet. When they do, the
    graph must come out upper-embeddable; otherwise InvariantViolation.
    """
    cycles = fundamental_cycles(g, t)
    premise = pairwise_intersecting(build_intersection_graph(cycles))
    if premise:
        report = maximum_genus(g, tree=t)
        if not report.upper_embeddable:
            raise InvariantViolation(
                "fundamental cycles pairwise intersect but the graph is not upper-embeddable",
                {"beta": report.beta, "gamma_max": report.gamma_max},
            )
    return premise
