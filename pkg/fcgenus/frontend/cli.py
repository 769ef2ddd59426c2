"""
Command-line front end.

    fcgenus compute GRAPH... [--json] [--tree dfs|random --seed N]
    fcgenus check GRAPH... [--budget-trees N] [--bundle-dir DIR]
    fcgenus gen FAMILY [PARAM...] [--seed N] [--base GRAPH]
    fcgenus gm-dump GRAPH...

Exit codes: 0 success, 1 internal invariant violation or oracle mismatch,
2 input error, 3 oracle budget exceeded. With several inputs the exit code
is the first non-zero code in input order.
"""

import argparse
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar, Union

from pydantic import ValidationError
from tqdm import tqdm

from fcgenus.backend.config import Settings, get_settings
from fcgenus.backend.errors import GenusError
from fcgenus.backend.generators import build_family
from fcgenus.backend.graph import build_intersection_graph, fundamental_cycles, spanning_tree
from fcgenus.backend.models import FAMILIES, CheckOutcome, FamilySpec, GenusReport, OracleBudget, RunConfig
from fcgenus.backend.oracles import xi_oracle
from fcgenus.backend.solver import maximum_genus
from fcgenus.frontend.edge_list import emit_edge_list, read_edge_list
from fcgenus.frontend.reports import (
    records_to_json,
    render_check,
    render_report,
    report_record,
    to_json,
    write_counterexample_bundle,
)
from fcgenus.utils import error_tracker, performance_monitor, setup_logging
from fcgenus.utils.cli_logger import CliLogger

logger = logging.getLogger("fcgenus.cli")

T = TypeVar("T")
FileResult = Tuple[str, Union[T, GenusError]]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging and extra report fields")
    common.add_argument("--quiet", "-q", action="store_true", help="suppress progress messages")

    tree = argparse.ArgumentParser(add_help=False)
    tree.add_argument("--tree", dest="tree_strategy", choices=("dfs", "random"), default="dfs")
    tree.add_argument("--seed", type=int, help="seed for --tree random")
    tree.add_argument("--workers", type=int, help="threads used for several input files")

    parser = argparse.ArgumentParser(
        prog="fcgenus",
        description="Maximum genus and upper-embeddability of multigraphs via fundamental cycles.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    compute = sub.add_parser("compute", parents=[common, tree], help="maximum genus of edge-list graphs")
    compute.add_argument("inputs", nargs="+")

    check = sub.add_parser("check", parents=[common, tree], help="compare the pipeline with the spanning-tree oracle")
    check.add_argument("inputs", nargs="+")
    check.add_argument("--budget-trees", type=int, help="largest spanning-tree count the oracle enumerates")
    check.add_argument("--budget-vertices", type=int)
    check.add_argument("--budget-edges", type=int)
    check.add_argument("--bundle-dir", help="directory for counterexample bundles")

    gen = sub.add_parser("gen", parents=[common], help="write a family member as an edge list")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("parameters", nargs="*", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--base", dest="base_graph", help="base graph for cartesian-path (default: triangle)")

    gm_dump = sub.add_parser("gm-dump", parents=[common, tree], help="write the fundamental intersecting graph")
    gm_dump.add_argument("inputs", nargs="+")
    return parser


def config_from_args(args: argparse.Namespace, settings: Settings) -> RunConfig:
    budget = OracleBudget(
        max_vertices=getattr(args, "budget_vertices", None) or settings.oracle_max_vertices,
        max_edges=getattr(args, "budget_edges", None) or settings.oracle_max_edges,
        max_trees=getattr(args, "budget_trees", None) or settings.oracle_max_trees,
    )
    family = None
    if args.subcommand == "gen":
        family = FamilySpec(family=args.family, parameters=args.parameters, seed=args.seed)
    return RunConfig(
        subcommand=args.subcommand,
        inputs=getattr(args, "inputs", []),
        output_format="json" if args.json else args.output_format,
        output=args.output,
        tree_strategy=getattr(args, "tree_strategy", "dfs"),
        seed=args.seed,
        budget=budget,
        bundle_dir=getattr(args, "bundle_dir", None) or settings.counterexample_dir,
        family=family,
        base_graph=getattr(args, "base_graph", None),
        workers=getattr(args, "workers", None) or settings.workers,
        verbose=args.verbose,
        quiet=args.quiet,
    )


def _write_output(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
        CliLogger.file_event("write", f"Wrote {cfg.output}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _process_files(cfg: RunConfig, work: Callable[[str], T]) -> List[FileResult]:
    """Run ``work`` on every input in a thread pool; results keep input order."""

    def guarded(path: str) -> FileResult:
        try:
            return path, work(path)
        except GenusError as e:
            return path, e

    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=min(cfg.workers, len(cfg.inputs))) as executor:
        results = list(
            tqdm(
                executor.map(guarded, cfg.inputs),
                total=len(cfg.inputs),
                desc=cfg.subcommand,
                disable=cfg.quiet or len(cfg.inputs) < 2,
                file=sys.stderr,
            )
        )
    if len(cfg.inputs) > 1:
        elapsed = time.perf_counter() - start
        performance_monitor.log_batch_processing(len(cfg.inputs), elapsed, cfg.subcommand)
        CliLogger.performance(cfg.subcommand, elapsed, files=len(cfg.inputs))
    return results


def _first_failure(results: Sequence[FileResult]) -> int:
    for path, outcome in results:
        if isinstance(outcome, GenusError):
            CliLogger.error(f"{path}: {outcome.message}", context="budget" if outcome.exit_code == 3 else "error")
    codes = [outcome.exit_code for _, outcome in results if isinstance(outcome, GenusError)]
    return codes[0] if codes else 0


def run_compute(cfg: RunConfig) -> int:
    def work(path: str) -> GenusReport:
        g = read_edge_list(path)
        CliLogger.file_event("read", f"Read {path}", vertices=g.n_vertices, edges=g.n_edges)
        report = maximum_genus(g, cfg.tree_strategy, cfg.seed)
        CliLogger.pipeline_event("genus", f"{path}: gamma_max {report.gamma_max}", xi=report.xi)
        return report

    results = _process_files(cfg, work)
    succeeded = [(path, report) for path, report in results if isinstance(report, GenusReport)]
    if succeeded:
        if cfg.output_format == "json":
            text = records_to_json([report_record(path, report) for path, report in succeeded])
        else:
            text = "".join(render_report(path, report, cfg.verbose) for path, report in succeeded)
        _write_output(cfg, text)
    return _first_failure(results)


def run_check(cfg: RunConfig) -> int:
    def work(path: str) -> CheckOutcome:
        g = read_edge_list(path)
        report = maximum_genus(g, cfg.tree_strategy, cfg.seed)
        CliLogger.pipeline_event("oracle", f"{path}: enumerating spanning trees")
        oracle = xi_oracle(g, cfg.budget)
        gamma_oracle = (report.beta - oracle.xi) // 2
        outcome = CheckOutcome(
            source=path,
            beta=report.beta,
            gamma_pipeline=report.gamma_max,
            gamma_oracle=gamma_oracle,
            xi_pipeline=report.xi,
            xi_oracle=oracle.xi,
            trees_enumerated=oracle.trees_enumerated,
            agrees=report.gamma_max == gamma_oracle,
        )
        if not outcome.agrees:
            igraph = build_intersection_graph(fundamental_cycles(g, report.tree_used))
            bundle = write_counterexample_bundle(cfg.bundle_dir, path, g, report, igraph, oracle)
            outcome = outcome.model_copy(update={"bundle_path": str(bundle)})
            CliLogger.warning(f"{path}: pipeline and oracle disagree", context="counterexample", bundle=str(bundle))
        else:
            CliLogger.success(f"{path}: pipeline agrees with the oracle", gamma_max=report.gamma_max)
        return outcome

    results = _process_files(cfg, work)
    outcomes = [outcome for _, outcome in results if isinstance(outcome, CheckOutcome)]
    if outcomes:
        if cfg.output_format == "json":
            text = records_to_json([outcome.model_dump(mode="json") for outcome in outcomes])
        else:
            text = render_check(outcomes, cfg.verbose)
        _write_output(cfg, text)

    failure = _first_failure(results)
    if failure:
        return failure
    return 0 if all(outcome.agrees for outcome in outcomes) else 1


def run_gen(cfg: RunConfig) -> int:
    base = read_edge_list(cfg.base_graph) if cfg.base_graph else None
    g = build_family(cfg.family, base)
    CliLogger.file_event(
        "generate", f"Generated {cfg.family.family}", vertices=g.n_vertices, edges=g.n_edges
    )
    if cfg.output_format == "json":
        _write_output(cfg, to_json({"n_vertices": g.n_vertices, "edges": [list(edge) for edge in g.edges]}))
    else:
        _write_output(cfg, emit_edge_list(g))
    return 0


def run_gm_dump(cfg: RunConfig) -> int:
    def work(path: str) -> str:
        g = read_edge_list(path)
        cycles = fundamental_cycles(g, spanning_tree(g, cfg.tree_strategy, cfg.seed))
        igraph = build_intersection_graph(cycles)
        header = f"# {path}: {igraph.n_cycles} fundamental cycles, {igraph.n_edges} intersecting pairs\n"
        # Edge lines cannot carry cycles that meet no other cycle.
        isolated = [i for i in range(igraph.n_cycles) if not igraph.neighbors(i)]
        if isolated:
            header += "# isolated: " + " ".join(str(i) for i in isolated) + "\n"
        return header + "".join(f"{i} {j}\n" for i, j in igraph.edges())

    results = _process_files(cfg, work)
    dumps = [text for _, text in results if isinstance(text, str)]
    if dumps:
        _write_output(cfg, "".join(dumps))
    return _first_failure(results)


RUNNERS = {
    "compute": run_compute,
    "check": run_check,
    "gen": run_gen,
    "gm-dump": run_gm_dump,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()

    setup_logging(
        log_level="DEBUG" if args.verbose else settings.log_level,
        enable_file=settings.log_to_file,
        log_dir=settings.log_dir,
    )
    CliLogger.quiet = args.quiet

    try:
        cfg = config_from_args(args, settings)
    except ValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        CliLogger.error(f"Invalid arguments: {message}")
        return 2

    CliLogger.debug(f"Running {cfg.subcommand}", context="startup", inputs=len(cfg.inputs))
    try:
        return RUNNERS[cfg.subcommand](cfg)
    except GenusError as e:
        CliLogger.error(e.message, context="budget" if e.exit_code == 3 else "error")
        return e.exit_code
    except Exception as e:
        error_tracker.log_error(e, {"subcommand": cfg.subcommand})
        CliLogger.error(f"Internal error: {e}")
        return 1
