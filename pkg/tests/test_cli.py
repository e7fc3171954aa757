import json

import pytest

from u6n_ncg import closed_forms
from u6n_ncg.cli import cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyCommand:
    def test_json_report_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "2", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 2
        assert all(e["status"] == "match" for e in report["entries"])

    def test_corrupted_closed_form_exits_two(self, capsys, monkeypatch):
        monkeypatch.setattr(closed_forms, "cf_edge_count", lambda n: 1)
        code, out, _ = run(capsys, "verify", "--n", "2", "--format", "json")
        assert code == 2
        report = json.loads(out)
        statuses = {e["name"]: e["status"] for e in report["entries"]}
        assert statuses["edge_count"] == "mismatch"

    def test_known_exception_does_not_flip_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "1")
        assert code == 0
        assert "known_paper_exception" in out

    def test_range_produces_array(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-range", "1:2", "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert [r["n"] for r in reports] == [1, 2]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "2")
        assert code == 0
        assert "edge_count" in out and "match" in out

    def test_caps_override(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n", "2", "--caps", "detour=5,resolving=5", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        statuses = {e["name"]: e["status"] for e in report["entries"]}
        assert statuses["detour_polynomial"] == "skipped_cap"
        assert statuses["resolving_polynomial"] == "skipped_cap"

    def test_bad_caps_key(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "2", "--caps", "bogus=3")
        assert code == 1
        assert "bogus" in err

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify", "--n-range", "3")
        assert code == 1
        assert "A:B" in err


class TestPolyCommand:
    def test_resolving_closed_matches_brute_text(self, capsys):
        code, out, _ = run(capsys, "poly", "resolving", "--n", "2")
        assert code == 0
        assert out.strip() == "32*x^6 + 56*x^7 + 36*x^8 + 10*x^9 + x^10"

    def test_both_sources_agree(self, capsys):
        code, out, _ = run(capsys, "poly", "independence", "--n", "1", "--source", "both")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "brute: 1 + 5*x + x^2"
        assert lines[1] == "closed: 1 + 5*x + x^2"

    def test_closed_source_skips_search(self, capsys):
        code, out, _ = run(capsys, "poly", "total-ecc", "--n", "1", "--source", "closed")
        assert code == 0
        assert out.strip() == "5*x^2"

    def test_cap_violation_exits_one(self, capsys):
        code, _, err = run(capsys, "poly", "resolving", "--n", "4")
        assert code == 1
        assert "16" in err

    def test_unknown_kind(self, capsys):
        code, _, _ = run(capsys, "poly", "zeta", "--n", "2")
        assert code == 1


class TestExportCommand:
    def test_dot_n1(self, capsys):
        code, out, _ = run(capsys, "export", "--n", "1", "--format", "dot")
        assert code == 0
        lines = out.strip().splitlines()
        assert sum("label=" in line for line in lines) == 5
        assert sum("--" in line for line in lines) == 9

    def test_json_n1(self, capsys):
        code, out, _ = run(capsys, "export", "--n", "1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert len(data["vertices"]) == 5
        assert len(data["edges"]) == 9


class TestBuildCommand:
    def test_u6n_summary(self, capsys):
        code, out, _ = run(capsys, "build", "--n", "2")
        assert code == 0
        assert "order: 12" in out
        assert "abelian: false" in out
        assert "center_size: 2" in out
        assert "parameter_n: 2" in out

    def test_table_summary(self, capsys, tmp_path):
        path = tmp_path / "c3.json"
        path.write_text(
            json.dumps({"labels": ["e", "g", "g2"], "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
        )
        code, out, _ = run(capsys, "build", "--table", str(path))
        assert code == 0
        assert "order: 3" in out
        assert "abelian: true" in out
        assert "parameter_n" not in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "build", "--table", str(tmp_path / "nope.json"))
        assert code == 1

    def test_invalid_table(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"labels": ["e", "x"], "table": [[0, 1], [1, 7]]}))
        code, _, err = run(capsys, "build", "--table", str(path))
        assert code == 1
        assert "closure" in err


class TestGraphCommand:
    @pytest.mark.parametrize(
        "invariant,expected",
        [
            ("edges", "81"),
            ("alpha", "6"),
            ("tau", "9"),
            ("omega", "4"),
            ("chi", "4"),
        ],
    )
    def test_invariants_n3(self, capsys, invariant, expected):
        code, out, _ = run(capsys, "graph", "--n", "3", "--invariant", invariant)
        assert code == 0
        assert out.strip() == expected

    def test_beta_n2(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "2", "--invariant", "beta")
        assert code == 0
        assert out.strip() == "6"

    def test_ecc_n1(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "1", "--invariant", "ecc")
        assert code == 0
        assert out.strip() == "1,2"

    def test_detour_index_n2(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "2", "--invariant", "detour-index")
        assert code == 0
        assert out.strip() == "405"


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "2", "--frobnicate")
        assert code == 1
        assert "usage" in err

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "explode")
        assert code == 1

    def test_missing_required(self, capsys):
        code, _, _ = run(capsys, "graph", "--n", "2")
        assert code == 1

    def test_both_n_and_range_rejected(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "1", "--n-range", "1:2")
        assert code == 1

    def test_invalid_n_value(self, capsys):
        code, _, err = run(capsys, "build", "--n", "0")
        assert code == 1
        assert "positive" in err

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "verify" in out
