import dataclasses
import json

import pytest

from fcgenus.backend.generators import complete_graph, dumbbell, hypercube, path_graph
from fcgenus.backend.oracles import xi_oracle
from fcgenus.backend.solver import maximum_genus
from fcgenus.frontend.cli import main
from fcgenus.frontend.edge_list import emit_edge_list, parse_edge_list
from fcgenus.frontend.reports import render_report, report_record


@pytest.fixture
def graph_file(tmp_path):
    def write(name, g_or_text):
        text = g_or_text if isinstance(g_or_text, str) else emit_edge_list(g_or_text)
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def _flat(text: str) -> str:
    return " ".join(text.split())


def test_compute_k4_json(graph_file, capsys):
    code = main(["compute", "--json", "--quiet", graph_file("k4.txt", complete_graph(4))])
    out = capsys.readouterr().out
    assert code == 0
    report = json.loads(out)
    assert (report["beta"], report["gamma_max"], report["xi"]) == (3, 1, 1)
    assert report["upper_embeddable"] is True
    assert len(report["certificate"]) == 1
    assert set(report["certificate"][0]) == {"cycle_a", "cycle_b", "witness_vertex", "cotree_edge_a", "cotree_edge_b"}


def test_compute_tree_has_empty_certificate(graph_file, capsys):
    code = main(["compute", "--format", "json", "-q", graph_file("tree.txt", path_graph(4))])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["gamma_max"] == 0 and report["certificate"] == []


def test_compute_disconnected_graph(graph_file, capsys):
    code = main(["compute", graph_file("split.txt", "0 1\n2 3\n")])
    assert code == 2
    assert "graph is disconnected" in _flat(capsys.readouterr().err)


def test_compute_parse_error_names_the_line(graph_file, capsys):
    code = main(["compute", graph_file("bad.txt", "0 1\nfoo bar\n")])
    assert code == 2
    assert "line 2" in _flat(capsys.readouterr().err)


def test_compute_json_is_byte_identical(graph_file, capsys):
    path = graph_file("dumbbell.txt", dumbbell())
    main(["compute", "--json", "-q", path])
    first = capsys.readouterr().out
    main(["compute", "--json", "-q", path])
    assert capsys.readouterr().out == first


def test_compute_several_files_keeps_input_order(graph_file, capsys):
    paths = [graph_file(f"g{i}.txt", g) for i, g in enumerate([complete_graph(5), path_graph(2), complete_graph(4)])]
    code = main(["compute", "--json", "-q", "--workers", "3", *paths])
    records = json.loads(capsys.readouterr().out)
    assert code == 0
    assert [r["source"] for r in records] == paths
    assert [r["gamma_max"] for r in records] == [3, 0, 1]


def test_compute_text_table(graph_file, capsys):
    code = main(["compute", "-q", "--verbose", graph_file("k4.txt", complete_graph(4))])
    out = capsys.readouterr().out
    assert code == 0
    assert "gamma_max" in out and "upper_embeddable" in out


def test_compute_random_tree_needs_seed(graph_file, capsys):
    code = main(["compute", "--tree", "random", graph_file("k4.txt", complete_graph(4))])
    assert code == 2
    assert "--seed" in capsys.readouterr().err


def test_compute_writes_output_file(graph_file, tmp_path):
    target = tmp_path / "report.json"
    code = main(["compute", "--json", "-q", "-o", str(target), graph_file("k4.txt", complete_graph(4))])
    assert code == 0
    assert json.loads(target.read_text())["gamma_max"] == 1


@pytest.mark.parametrize("g", [complete_graph(4), dumbbell()])
def test_check_agrees_with_the_oracle(g, graph_file, capsys):
    code = main(["check", "--json", "-q", graph_file("g.txt", g)])
    outcome = json.loads(capsys.readouterr().out)
    assert code == 0
    assert outcome["agrees"] is True
    assert outcome["gamma_pipeline"] == outcome["gamma_oracle"]


def test_check_refuses_over_budget_graphs(graph_file, capsys):
    code = main(["check", "-q", graph_file("q4.txt", hypercube(4))])
    assert code == 3
    assert "budget" in capsys.readouterr().err


def test_check_tree_budget_flag(graph_file, capsys):
    code = main(["check", "-q", "--budget-trees", "10", graph_file("k4.txt", complete_graph(4))])
    assert code == 3


@pytest.mark.parametrize(
    "arguments, lines",
    [
        (["hypercube", "3"], 12),
        (["gen-petersen", "5", "2"], 15),
        (["dumbbell"], 7),
    ],
)
def test_gen_line_counts(arguments, lines, capsys):
    code = main(["gen", "-q", *arguments])
    out = capsys.readouterr().out
    assert code == 0
    assert len(out.splitlines()) == lines


def test_gen_is_deterministic_under_a_seed(capsys):
    main(["gen", "-q", "halin-composition", "3", "6", "7", "--seed", "4"])
    first = capsys.readouterr().out
    main(["gen", "-q", "halin-composition", "3", "6", "7", "--seed", "4"])
    assert capsys.readouterr().out == first


def test_gen_invalid_parameters(capsys):
    assert main(["gen", "gen-petersen", "4", "2"]) == 2
    assert main(["gen", "hypercube"]) == 2


def test_gen_product_with_a_base_file(graph_file, capsys):
    base = graph_file("edge.txt", "0 1\n")
    code = main(["gen", "-q", "cartesian-path", "1", "--base", base])
    assert code == 0
    assert len(capsys.readouterr().out.splitlines()) == 4


def test_gm_dump_of_k4(graph_file, capsys):
    code = main(["gm-dump", "-q", graph_file("k4.txt", complete_graph(4))])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0].startswith("#") and "3 fundamental cycles" in lines[0]
    assert lines[1:] == ["0 1", "0 2", "1 2"]


def test_gm_dump_lists_isolated_cycles(graph_file, capsys):
    code = main(["gm-dump", "-q", graph_file("dumbbell.txt", dumbbell())])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert "2 fundamental cycles, 0 intersecting pairs" in lines[0]
    assert lines[1:] == ["# isolated: 0 1"]


def test_undecodable_file_is_an_input_error(graph_file, tmp_path, capsys):
    good = graph_file("k4.txt", complete_graph(4))
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"0 1\n\xff\xfe 2\n")
    code = main(["compute", "--json", "-q", good, str(bad)])
    captured = capsys.readouterr()
    assert code == 2
    assert json.loads(captured.out)["source"] == good
    assert "line 2" in _flat(captured.err)


def test_check_reports_agreement(graph_file, capsys):
    code = main(["check", graph_file("k4.txt", complete_graph(4))])
    assert code == 0
    assert "agrees with the oracle" in _flat(capsys.readouterr().err)


def test_check_disagreement_writes_a_bundle(graph_file, tmp_path, capsys, monkeypatch):
    def skewed_oracle(g, budget=None):
        result = xi_oracle(g, budget)
        return dataclasses.replace(result, xi=result.xi + 2)

    monkeypatch.setattr("fcgenus.frontend.cli.xi_oracle", skewed_oracle)
    bundle_dir = tmp_path / "bundles"
    code = main(["check", "--json", "--bundle-dir", str(bundle_dir), graph_file("k4.txt", complete_graph(4))])
    captured = capsys.readouterr()
    outcome = json.loads(captured.out)
    assert code == 1
    assert outcome["agrees"] is False
    assert "pipeline and oracle disagree" in _flat(captured.err)

    bundles = list(bundle_dir.glob("*.json"))
    assert len(bundles) == 1 and str(bundles[0]) == outcome["bundle_path"]
    bundle = json.loads(bundles[0].read_text())
    assert (bundle["gamma_pipeline"], bundle["gamma_oracle"]) == (1, 0)


def test_batches_report_their_timing(graph_file, capsys):
    paths = [graph_file(f"g{i}.txt", complete_graph(4)) for i in range(2)]
    code = main(["compute", "--json", *paths])
    assert code == 0
    assert "Performance metrics for compute" in _flat(capsys.readouterr().err)


def test_text_and_json_certificates_name_the_same_vertex():
    g = parse_edge_list("10 20\n10 30\n10 40\n20 30\n20 40\n30 40\n")
    report = maximum_genus(g)
    rows = [line for line in render_report("k4", report).splitlines() if line.startswith("│")]
    cells = [cell.strip() for cell in rows[-1].strip("│").split("│")]
    pair = report_record("k4", report)["certificate"][0]
    assert cells == [str(pair[key]) for key in ("cycle_a", "cycle_b", "cotree_edge_a", "cotree_edge_b", "witness_vertex")]
    assert pair["witness_vertex"] < g.n_vertices
