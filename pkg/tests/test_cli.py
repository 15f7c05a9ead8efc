"""
命令列 整合測試
透過 app.main 執行各子命令，檢查 JSON 報告與結束碼
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

import app
from src import config


@pytest.fixture(autouse=True)
def restore_caps(monkeypatch):
    """app.main writes the cap flags into config; restore them after each test."""
    monkeypatch.setattr(config, "ENUM_CAP", config.ENUM_CAP)
    monkeypatch.setattr(config, "GRAPH_MAX", config.GRAPH_MAX)


def run(capsys, *argv):
    status = app.main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return status, report, captured.err


def test_catalog(capsys):
    status, report, err = run(capsys, "catalog")
    assert status == app.EXIT_OK
    assert "petersen" in report["results"]["graphs"]
    assert "s_<n>" in report["results"]["groups"]
    assert report["complete"] is True
    assert report["schema_version"] == config.REPORT_SCHEMA_VERSION
    assert "Basic Permutation Groups Toolkit" in err


def test_constant(capsys):
    status, report, _ = run(capsys, "constant", "--cutoff", "2")
    assert status == app.EXIT_OK
    assert report["results"]["partial_sum"] == 1.5
    assert report["arguments"]["cutoff"] == 2


def test_analyze_symmetric_group(capsys):
    status, report, _ = run(capsys, "analyze-group", "--catalog", "s_4")
    results = report["results"]
    assert status == app.EXIT_OK
    assert results["group"]["order"] == 24
    assert results["primitive"] is True
    assert results["subdegrees"] == [1, 3]
    assert results["normal_subgroup_orders"] == [1, 4, 12, 24]
    assert results["onan_scott"]["tag"] == "HA"
    assert results["lattice_L1"]["covers"] == [[0, 1]]
    assert results["wreath_embedding"]["verified"] is True
    assert report["omissions"] == []


def test_analyze_coset_action(capsys):
    status, report, _ = run(capsys, "analyze-group", "--catalog", "a5_coset_c5", "--alpha", "2")
    results = report["results"]
    assert status == app.EXIT_OK
    assert results["quasiprimitive"] is True
    assert results["primitive"] is False
    assert len(results["lattice_L1"]["nodes"]) >= 3
    assert results["lattice_L1"]["nodes"][0]["block"] == [2]
    assert len(results["lattice_L2"]["nodes"]) == 2
    assert all(c["quasiprimitive"] for c in results["lattice_L2"]["components"])


def test_analyze_group_file(capsys, tmp_path):
    path = tmp_path / "d8.txt"
    path.write_text("# square\ndegree 4\n(1 2 3 4)\n(2 4)\n", encoding="utf-8")
    status, report, _ = run(capsys, "analyze-group", str(path))
    assert status == app.EXIT_OK
    assert report["inputs"]["group"]["file"] == "d8.txt"
    assert len(report["inputs"]["group"]["sha256"]) == 64
    assert report["results"]["primitive"] is False
    assert report["results"]["onan_scott"]["tag"] == "NOT_QUASIPRIMITIVE"


def test_intransitive_group_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("degree 4\n(1 2)\n", encoding="utf-8")
    status, report, err = run(capsys, "analyze-group", str(path))
    assert status == app.EXIT_ERROR
    assert report is None
    assert "group is not transitive" in err


def test_malformed_group_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("degree 3\n(1 2)\n(1 5)\n", encoding="utf-8")
    status, _, err = run(capsys, "analyze-group", str(path))
    assert status == app.EXIT_ERROR
    assert "line 3" in err


def test_missing_file(capsys, tmp_path):
    status, _, err = run(capsys, "analyze-group", str(tmp_path / "absent.txt"))
    assert status == app.EXIT_ERROR
    assert "cannot read input" in err


def test_source_flags_are_exclusive(tmp_path):
    with pytest.raises(SystemExit):
        app.main(["analyze-group"])
    with pytest.raises(SystemExit):
        app.main(["analyze-group", str(tmp_path / "g.txt"), "--catalog", "s_4"])


def test_enumeration_cap_gives_partial_report(capsys):
    status, report, _ = run(capsys, "--enum-cap", "10", "analyze-group", "--catalog", "s_5")
    assert status == app.EXIT_PARTIAL
    assert report["complete"] is False
    assert report["settings"]["enum_cap"] == 10
    sections = {o["section"] for o in report["omissions"]}
    assert "quasiprimitive" in sections
    assert report["results"]["primitive"] is True


def test_analyze_petersen(capsys):
    status, report, _ = run(capsys, "analyze-graph", "--graph-catalog", "petersen",
                            "--aut", "--s", "4")
    results = report["results"]
    assert status == app.EXIT_OK
    assert results["automorphism_search"]["order"] == 120
    assert results["arc_transitivity"]["max_s"] == 3
    assert results["arc_transitivity"]["verdicts"]["4"] == "not_transitive"
    assert results["girth"] == 5
    assert results["diameter"] == 2
    assert results["distance_transitive"] is True
    assert "vertex_count_predicate" not in results


def test_analyze_heawood_predicate(capsys):
    _, report, _ = run(capsys, "analyze-graph", "--graph-catalog", "heawood", "--s", "5")
    assert report["results"]["arc_transitivity"]["max_s"] == 4
    assert report["results"]["vertex_count_predicate"] is True


def test_analyze_graph_with_group(capsys):
    status, report, _ = run(capsys, "analyze-graph", "--graph-catalog", "cycle_7",
                            "--group-catalog", "d_14")
    assert status == app.EXIT_OK
    assert report["results"]["distance_transitive"] is True
    assert report["inputs"]["group"] == {"catalog": "d_14"}


def test_group_degree_mismatch(capsys):
    status, _, _ = run(capsys, "analyze-graph", "--graph-catalog", "petersen",
                       "--group-catalog", "s_4")
    assert status == app.EXIT_ERROR


def test_reduce_dodecahedron(capsys):
    status, report, _ = run(capsys, "reduce", "--graph-catalog", "dodecahedron", "--aut",
                            "--s", "2")
    results = report["results"]
    assert status == app.EXIT_OK
    assert results["steps"] == 1
    terminal = results["trace"]["terminal"]
    assert terminal["vertices"] == 10
    assert terminal["group_order"] == 60
    assert terminal["quasiprimitive"] is True
    assert results["trace"]["steps"][0]["quotient"]["is_cover"] is True


def test_reduce_bipartite_obstruction(capsys):
    _, report, _ = run(capsys, "reduce", "--graph-catalog", "complete_bipartite_3_3", "--aut")
    assert report["results"]["trace"]["terminal"]["bipartite_obstruction"] is True


def test_reduce_distance_mode(capsys):
    _, report, _ = run(capsys, "reduce", "--graph-catalog", "cycle_6", "--group-catalog", "d_12",
                       "--mode", "distance")
    assert report["results"]["mode"] == "distance"
    assert report["results"]["trace"]["terminal"]["vertices"] == 3


def test_graph_file_input(capsys, tmp_path):
    graph = tmp_path / "c5.txt"
    graph.write_text("graph 5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n", encoding="utf-8")
    group = tmp_path / "d10.txt"
    group.write_text("degree 5\n(1 2 3 4 5)\n(2 5)(3 4)\n", encoding="utf-8")
    status, report, _ = run(capsys, "analyze-graph", str(graph), str(group))
    assert status == app.EXIT_OK
    assert report["inputs"]["graph"]["file"] == "c5.txt"
    assert report["results"]["arc_transitivity"]["max_s"] == config.MAX_ARC_LENGTH


def test_report_is_deterministic(capsys):
    _, first, _ = run(capsys, "analyze-group", "--catalog", "d_12")
    _, second, _ = run(capsys, "analyze-group", "--catalog", "d_12")
    assert first == second
    assert "timing" not in first


def test_timing_flag(capsys):
    _, report, _ = run(capsys, "--timing", "constant", "--cutoff", "10")
    assert report["timing"]["seconds"] >= 0


def test_sample_files(capsys):
    status, report, _ = run(capsys, "analyze-graph", str(config.GRAPHS_DIR / "c5.txt"),
                            str(config.GROUPS_DIR / "d10.txt"))
    assert status == app.EXIT_OK
    assert report["results"]["distance_transitive"] is True
    _, report, _ = run(capsys, "analyze-group", str(config.GROUPS_DIR / "d8.txt"))
    assert report["results"]["group"]["order"] == 8
