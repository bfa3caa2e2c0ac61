"""Integration tests for the emd-lab command line.

Tests cover:
- compute: table and JSON output, family specs, files, stdin
- family: closed form against exact value, exit codes
- verify: suite selection, report shape, failing suites
- scan: corpus diagnostics and bound selections
- Error handling: input errors exit 2, budget overruns exit 3
"""

import io
import json
import textwrap
from collections import Counter
from pathlib import Path

import pytest

from src.families import cycle, generate, star
from src.formulas import GENERAL_BOUND_IDS
from src.graph_core import emit_graph6
from src.main import EXIT_BUDGET, EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_OK, main

REPO_ROOT = Path(__file__).parent.parent
SHIPPED_CORPUS = REPO_ROOT / "data" / "corpus-n6.g6"
DEFAULT_CONFIG = REPO_ROOT / "config" / "lab.yaml"

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def config_file(tmp_path):
    """Small configuration so every suite finishes quickly."""
    path = tmp_path / "lab.yaml"
    path.write_text(
        textwrap.dedent("""\
            solver:
              time_budget_seconds: 60
            trees:
              count: 3
              max_n: 7
              seed: 2
            families:
              cycle: "3..6"
            bipartite_max_order: 4
            pairs:
              - ["path:2", "path:2"]
        """)
    )
    return str(path)


def _json_out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


class TestCompute:
    def test_family_spec_json(self, capsys, config_file):
        status = main(["compute", "cycle:6", "--format", "json", "--config", config_file])
        assert status == EXIT_OK
        payload = _json_out(capsys)
        assert payload["graph"] == {"n": 6, "m": 6, "graph6": emit_graph6(generate(cycle(6)))}
        values = {p["parameter"]: p["value"] for p in payload["parameters"]}
        assert values == {
            "beta": 2,
            "beta_e": 2,
            "gamma": 2,
            "gamma_ve": 2,
            "gamma_md": 3,
            "gamma_emd": 2,
        }
        assert all(b["holds"] for b in payload["bounds"])

    def test_selected_parameters_only(self, capsys, config_file):
        status = main(
            ["compute", "path:4", "--gamma-emd", "--format", "json", "--config", config_file]
        )
        assert status == EXIT_OK
        payload = _json_out(capsys)
        assert payload["parameters"] == [
            {
                "parameter": "gamma_emd",
                "value": 2,
                "witness": [0, 1],
                "method": "exact-search",
                "combinations_examined": 5,
            }
        ]
        assert payload["bounds"] == []

    def test_table_output(self, capsys, config_file):
        assert main(["compute", "path:4", "--beta", "--gamma", "--config", config_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("n=4 m=3\n")
        assert "gamma" in out and "[0, 2]" in out

    def test_edge_list_file(self, capsys, tmp_path, config_file):
        graph = tmp_path / "p3.txt"
        graph.write_text("3 2\n0 1\n1 2\n")
        status = main(["compute", str(graph), "--beta", "--format", "json", "--config", config_file])
        assert status == EXIT_OK
        assert _json_out(capsys)["parameters"][0]["witness"] == [0]

    def test_graph6_from_stdin(self, capsys, monkeypatch, config_file):
        monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
        status = main(["compute", "-", "--all", "--format", "json", "--config", config_file])
        assert status == EXIT_OK
        assert len(_json_out(capsys)["parameters"]) == 6

    def test_single_vertex_defaults_to_domination(self, capsys, config_file):
        assert main(["compute", "path:1", "--format", "json", "--config", config_file]) == 0
        params = _json_out(capsys)["parameters"]
        assert [p["parameter"] for p in params] == ["gamma"]

    def test_output_file(self, capsys, tmp_path, config_file):
        target = tmp_path / "out.json"
        main(["compute", "cycle:4", "--format", "json", "--output", str(target), "--config", config_file])
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["graph"]["n"] == 4


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


class TestFamily:
    def test_matching_range(self, capsys, config_file):
        status = main(["family", "cycle", "3..6", "--format", "json", "--config", config_file])
        assert status == EXIT_OK
        report = _json_out(capsys)
        assert report["summary"]["mismatch"] == 0
        assert report["meta"]["suites"] == ["family"]

    def test_mismatch_exits_one(self, capsys, config_file):
        status = main(["family", "grid2", "3..3", "--gamma-emd", "--config", config_file])
        assert status == EXIT_MISMATCH
        out = capsys.readouterr().out
        assert "grid2-gamma-emd" in out
        assert "mismatch=1" in out

    def test_out_of_domain_shows_exact_value(self, capsys, config_file):
        status = main(
            ["family", "wheel", "5..5", "--gamma-md", "--format", "json", "--config", config_file]
        )
        assert status == EXIT_OK
        (check,) = _json_out(capsys)["checks"]
        assert check["status"] == "out-of-domain"
        assert isinstance(check["computed"], int)

    def test_multi_parameter_template(self, capsys, config_file):
        status = main(
            ["family", "kb:3,n", "3..4", "--gamma-md", "--format", "json", "--config", config_file]
        )
        assert status == EXIT_OK
        checks = _json_out(capsys)["checks"]
        assert [c["instance"] for c in checks] == ["kb:3,3", "kb:3,4"]
        assert [c["computed"] for c in checks] == [4, 5]

    def test_product_template(self, capsys, config_file):
        status = main(
            ["family", "corona:path:n,path:2", "2..3", "--gamma-ve", "--format", "json", "--config", config_file]
        )
        assert status in (EXIT_OK, EXIT_MISMATCH)
        instances = {c["instance"] for c in _json_out(capsys)["checks"]}
        assert instances == {"corona:path:2,path:2", "corona:path:3,path:2"}

    def test_bare_complete_bipartite_needs_a_template(self, capsys, config_file):
        assert main(["family", "kb", "2..3", "--config", config_file]) == EXIT_INPUT_ERROR
        assert "expected ','" in capsys.readouterr().err

    def test_unknown_family(self, capsys, config_file):
        assert main(["family", "hypercube", "2..3", "--config", config_file]) == EXIT_INPUT_ERROR
        assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class TestVerify:
    def test_fixtures_report_mismatches(self, capsys, config_file):
        status = main(["verify", "--suite", "fixtures", "--format", "json", "--config", config_file])
        assert status == EXIT_MISMATCH
        report = _json_out(capsys)
        assert report["meta"]["suites"] == ["fixtures"]
        assert report["summary"]["mismatch"] == 2
        assert set(report) == {"meta", "checks", "summary"}

    def test_comma_separated_suites(self, capsys, config_file):
        status = main(
            ["verify", "--suite", "families,corona-join", "--format", "json", "--config", config_file]
        )
        report = _json_out(capsys)
        assert report["meta"]["suites"] == ["families", "corona-join"]
        assert status == (EXIT_MISMATCH if report["summary"]["mismatch"] else EXIT_OK)

    def test_report_is_reproducible(self, capsys, config_file):
        argv = ["verify", "--suite", "trees", "--format", "json", "--config", config_file]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_default_run_is_byte_identical(self, capsys):
        argv = ["verify", "--format", "json", "--config", str(DEFAULT_CONFIG)]
        first_status = main(argv)
        first = capsys.readouterr().out
        assert main(argv) == first_status == EXIT_MISMATCH
        assert capsys.readouterr().out == first
        report = json.loads(first)
        assert report["meta"]["suites"] == ["families", "corona-join", "fixtures", "comparison", "trees"]

    def test_seed_flag_overrides_config(self, capsys, config_file):
        main(["verify", "--suite", "trees", "--seed", "41", "--format", "json", "--config", config_file])
        assert _json_out(capsys)["meta"]["seed"] == 41

    def test_unknown_suite(self, capsys, config_file):
        assert main(["verify", "--suite", "nope", "--config", config_file]) == EXIT_INPUT_ERROR
        assert "Unknown suite" in capsys.readouterr().err

    def test_failing_suite_exits_two(self, capsys, tmp_path):
        path = tmp_path / "lab.yaml"
        path.write_text('pairs:\n  - ["bogus:1", "path:2"]\n')
        assert main(["verify", "--suite", "corona-join", "--config", str(path)]) == EXIT_INPUT_ERROR
        assert "corona-join" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


class TestScan:
    def test_general_bounds_hold(self, capsys, tmp_path, config_file):
        corpus = tmp_path / "small.g6"
        corpus.write_text("A_\nBo\nBw\nCl\n")
        status = main(
            ["scan", str(corpus), "--bounds", "general", "--format", "json", "--config", config_file]
        )
        assert status == EXIT_OK
        report = _json_out(capsys)
        assert report["diagnostics"] == []
        assert report["summary"]["mismatch"] == 0

    def test_shipped_corpus_general_bounds(self, capsys, config_file):
        status = main(
            ["scan", str(SHIPPED_CORPUS), "--bounds", "general", "--format", "json", "--config", config_file]
        )
        assert status == EXIT_OK
        report = _json_out(capsys)
        assert report["diagnostics"] == []
        per_bound = Counter(check["theorem_id"] for check in report["checks"])
        # 142 graphs: 141 with n >= 3, 11 regular, 52 with a universal vertex, 19 with two.
        assert per_bound["bound-sandwich-emd-lower"] == 142
        assert per_bound["bound-gamma-ve-one-iff-radius2-independent"] == 142
        assert per_bound["bound-beta-e-full-iff-common-neighbour"] == 141
        assert per_bound["bound-beta-e-log-regular"] == 11
        assert per_bound["bound-gamma-emd-universal"] == 52
        assert per_bound["bound-gamma-emd-two-universal"] == 19
        assert set(per_bound) == {f"bound-{bound_id}" for bound_id in GENERAL_BOUND_IDS}
        assert report["summary"] == {
            "match": 2139,
            "mismatch": 0,
            "out_of_domain": 0,
            "budget_exceeded": 0,
        }

    def test_tree_floor_counterexample(self, capsys, tmp_path, config_file):
        corpus = tmp_path / "star.g6"
        corpus.write_text(emit_graph6(generate(star(5))) + "\n")
        status = main(["scan", str(corpus), "--bounds", "tree-gamma-ve-floor", "--config", config_file])
        assert status == EXIT_MISMATCH
        assert "bound-tree-gamma-ve-floor" in capsys.readouterr().out

    def test_bad_line_is_diagnosed(self, capsys, tmp_path, config_file):
        corpus = tmp_path / "bad.g6"
        corpus.write_text("A_\n!!\n")
        status = main(["scan", str(corpus), "--bounds", "general", "--config", config_file])
        assert status == EXIT_OK
        assert "line 2:" in capsys.readouterr().out

    def test_unknown_bound(self, capsys, config_file):
        assert main(["scan", "-", "--bounds", "bogus", "--config", config_file]) == EXIT_INPUT_ERROR

    def test_missing_corpus(self, capsys, tmp_path, config_file):
        missing = str(tmp_path / "absent.g6")
        assert main(["scan", missing, "--config", config_file]) == EXIT_INPUT_ERROR


# ---------------------------------------------------------------------------
# Error handling
# ---------------------------------------------------------------------------


class TestErrors:
    def test_malformed_graph_file(self, capsys, tmp_path, config_file):
        graph = tmp_path / "loop.txt"
        graph.write_text("2 1\n1 1\n")
        assert main(["compute", str(graph), "--config", config_file]) == EXIT_INPUT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_disconnected_graph_for_metric_parameter(self, capsys, tmp_path, config_file):
        graph = tmp_path / "two.txt"
        graph.write_text("4 2\n0 1\n2 3\n")
        assert main(["compute", str(graph), "--beta", "--config", config_file]) == EXIT_INPUT_ERROR

    def test_budget_exceeded(self, capsys, config_file):
        status = main(["compute", "complete:16", "--beta", "--budget", "1e-9", "--config", config_file])
        assert status == EXIT_BUDGET
        assert "at least" in capsys.readouterr().err

    def test_non_positive_budget_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["compute", "path:3", "--budget", "0"])
        assert excinfo.value.code == 2

    def test_reports_never_mix_with_logs(self, capsys, config_file):
        main(["compute", "path:3", "--format", "json", "--log-level", "DEBUG", "--config", config_file])
        captured = capsys.readouterr()
        json.loads(captured.out)
        assert '"level": "DEBUG"' in captured.err
