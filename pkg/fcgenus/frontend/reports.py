"""
Rendering of genus reports and oracle checks, and counterexample bundles.

JSON output is sorted-key and free of timestamps so equal runs produce equal
bytes. Text output is a rich table rendered without colour.
"""

import hashlib
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence

from rich.console import Console
from rich.table import Table

from fcgenus.backend.graph.intersect_graph import IntersectionGraph
from fcgenus.backend.graph.multigraph import Multigraph
from fcgenus.backend.models import CheckOutcome, GenusReport
from fcgenus.backend.oracles import XiOracleResult
from fcgenus.frontend.edge_list import emit_edge_list

logger = logging.getLogger("fcgenus.cli")

TABLE_WIDTH = 100


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_record(source: str, report: GenusReport) -> Dict[str, Any]:
    record = report.model_dump(mode="json")
    record["source"] = source
    return record


def records_to_json(records: Sequence[Dict[str, Any]]) -> str:
    """A single record is emitted as an object, several as an array in input order."""
    if len(records) == 1:
        return to_json(records[0])
    return to_json(list(records))


def _render(renderables: Sequence[Any]) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=TABLE_WIDTH, color_system=None, force_terminal=False)
    for renderable in renderables:
        console.print(renderable)
    return buffer.getvalue()


def render_report(source: str, report: GenusReport, verbose: bool = False) -> str:
    summary = Table(title=f"Maximum genus: {source}", show_header=True)
    summary.add_column("quantity")
    summary.add_column("value", justify="right")
    summary.add_row("vertices", str(report.n_vertices))
    summary.add_row("edges", str(report.n_edges))
    summary.add_row("beta", str(report.beta))
    summary.add_row("gamma_max", str(report.gamma_max))
    summary.add_row("xi", str(report.xi))
    summary.add_row("upper_embeddable", "yes" if report.upper_embeddable else "no")
    summary.add_row("tree strategy", report.strategy if report.seed is None else f"{report.strategy} (seed {report.seed})")
    summary.add_row("G_M edges", str(report.intersection_edges))
    if verbose:
        summary.add_row("xi(G,T) of the tree used", str(report.tree_xi))
        summary.add_row("tree edges", " ".join(str(e) for e in report.tree_edges))

    renderables: List[Any] = [summary]
    if report.certificate:
        pairs = Table(title="Matched fundamental cycle pairs")
        for column in ("cycle_a", "cycle_b", "cotree_edge_a", "cotree_edge_b", "witness_vertex"):
            pairs.add_column(column, justify="right")
        for pair in report.certificate:
            pairs.add_row(
                str(pair.cycle_a),
                str(pair.cycle_b),
                str(pair.cotree_edge_a),
                str(pair.cotree_edge_b),
                str(pair.witness_vertex),
            )
        renderables.append(pairs)
    return _render(renderables)


def render_check(outcomes: Sequence[CheckOutcome], verbose: bool = False) -> str:
    table = Table(title="Pipeline versus oracle")
    columns = ["source", "beta", "gamma (pipeline)", "gamma (oracle)", "xi (pipeline)", "xi (oracle)", "agrees"]
    if verbose:
        columns.append("trees")
    for column in columns:
        table.add_column(column)
    for outcome in outcomes:
        row = [
            outcome.source,
            str(outcome.beta),
            str(outcome.gamma_pipeline),
            str(outcome.gamma_oracle),
            str(outcome.xi_pipeline),
            str(outcome.xi_oracle),
            "yes" if outcome.agrees else f"NO ({outcome.bundle_path})",
        ]
        if verbose:
            row.append(str(outcome.trees_enumerated))
        table.add_row(*row)
    return _render([table])


def write_counterexample_bundle(
    directory: str,
    source: str,
    g: Multigraph,
    report: GenusReport,
    igraph: IntersectionGraph,
    oracle: XiOracleResult,
) -> Path:
    """Write everything needed to replay a pipeline/oracle disagreement; returns the file path."""
    edge_text = emit_edge_list(g)
    digest = hashlib.sha1(edge_text.encode("utf-8")).hexdigest()[:12]
    path = Path(directory) / f"{Path(source).stem}-{digest}.json"
    path.parent.mkdir(parents=True, exist_ok=True)

    bundle = {
        "source": source,
        "edges": [list(edge) for edge in g.edges],
        "vertex_labels": report.vertex_labels,
        "beta": report.beta,
        "tree_edges": report.tree_edges,
        "gm_edges": [list(edge) for edge in igraph.edges()],
        "matching": [[pair.cycle_a, pair.cycle_b] for pair in report.certificate],
        "gamma_pipeline": report.gamma_max,
        "gamma_oracle": (report.beta - oracle.xi) // 2,
        "xi_oracle": oracle.xi,
        "oracle_tree_edges": list(oracle.optimal_tree.tree_edges),
        "xi_table": {str(xi): count for xi, count in oracle.xi_table.items()},
        "trees_enumerated": oracle.trees_enumerated,
    }
    path.write_text(to_json(bundle), encoding="utf-8")
    logger.warning("Counterexample bundle written", extra={"path": str(path), "source": source})
    return path
