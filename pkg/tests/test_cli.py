"""
Tests for molr.cli - all CLI commands via CliRunner.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import json

import pytest
from click.testing import CliRunner

import molr
from molr.cli import cli
from molr.cli_utils import EXIT_BUDGET, EXIT_MISMATCH, EXIT_SUCCESS, EXIT_USAGE
from molr.core import conjugate_swap
from molr.records import MolrRecord, parse_records, serialize_records


def _invoke(*args, **kwargs):
    return CliRunner().invoke(cli, list(args), **kwargs)


def _envelope(result):
    # log warnings may precede the envelope when stderr is mixed in
    text = result.stdout
    return json.loads(text[text.index("{\n"):])


def _record_file(tmp_path, name, *records):
    path = tmp_path / name
    path.write_text(serialize_records(records))
    return str(path)


# ---------------------------------------------------------------------------
# TestCLIBase
# ---------------------------------------------------------------------------


class TestCLIBase:
    def test_help_exits_zero(self):
        result = _invoke("--help")
        assert result.exit_code == 0
        assert "Usage:" in result.output

    def test_version_matches_package(self):
        result = _invoke("--version")
        assert result.exit_code == 0
        assert molr.__version__ in result.output

    @pytest.mark.parametrize("command", [
        "enumerate", "verify", "classify", "canon", "paratopism",
        "extend", "galois", "geometry", "expected", "fixtures",
    ])
    def test_command_help(self, command):
        result = _invoke(command, "--help")
        assert result.exit_code == 0
        assert "--output" in result.output

    def test_unknown_command_is_a_usage_error(self):
        assert _invoke("frobnicate").exit_code == EXIT_USAGE

    def test_malformed_config(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("enumeration: [unclosed\n")
        result = _invoke("--config", str(path), "expected", "-n", "4")
        assert result.exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestEnumerateCommand
# ---------------------------------------------------------------------------


class TestEnumerateCommand:
    def test_writes_record_file(self, tmp_path):
        path = tmp_path / "mols.txt"
        result = _invoke("enumerate", "-n", "4", "-t", "3", "-k", "4", "-f", str(path))
        assert result.exit_code == EXIT_SUCCESS, result.output
        (record,) = parse_records(path.read_text())
        assert record.aut == 288
        assert record.flags.code() == "HTsHsT"

    def test_json_envelope(self):
        result = _invoke("enumerate", "-n", "4", "-t", "2", "-k", "3", "-f", "-", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        env = _envelope(result)
        assert env["schema_version"] == "1"
        assert env["command"] == "enumerate"
        assert env["success"] is True
        counts = env["data"]["counts"]
        assert counts["isotopism"] == 2
        assert counts["paratopism"] == 2
        assert counts["regularity"] == [2, 2, 1, 1]
        assert counts["histograms"]["all"] == {"8": 1, "24": 1}
        assert len(parse_records(env["data"]["records"])) == 2

    def test_records_on_stdout(self):
        result = _invoke("enumerate", "-n", "4", "-t", "2", "-k", "2", "-f", "-", "--no-paratopism")
        assert result.exit_code == EXIT_SUCCESS
        assert result.stdout.count("MOLR n=4 k=2 t=2") == 3

    def test_default_path_uses_output_directory(self, tmp_path):
        out = tmp_path / "results"
        config = tmp_path / "config.yaml"
        config.write_text(f"output:\n  directory: {out}\n")
        result = _invoke("--config", str(config), "enumerate", "-n", "4", "-t", "2", "-k", "4")
        assert result.exit_code == EXIT_SUCCESS, result.output
        assert (out / "molr_n4_t2_k4.txt").exists()

    def test_filter(self):
        result = _invoke("enumerate", "-n", "5", "-t", "2", "-k", "5", "--filter",
                         "stepwise_transitive", "-f", "-", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["filter"] == "stepwise_transitive"
        assert data["counts"]["isotopism"] == 1

    def test_missing_n(self):
        assert _invoke("enumerate", "-t", "2", "-k", "2").exit_code == EXIT_USAGE

    def test_k_greater_than_n(self):
        result = _invoke("enumerate", "-n", "3", "-t", "1", "-k", "4", "-o", "json")
        assert result.exit_code == EXIT_USAGE
        assert _envelope(result)["success"] is False

    def test_budget_exceeded(self):
        result = _invoke("enumerate", "-n", "5", "-t", "2", "-k", "3", "--budget", "1",
                         "-f", "-", "-o", "json")
        assert result.exit_code == EXIT_BUDGET
        env = _envelope(result)
        assert env["success"] is False
        assert env["data"]["level"] == 2

    def test_budget_from_environment(self):
        result = _invoke("enumerate", "-n", "5", "-t", "2", "-k", "3", "-f", "-", "-o", "json",
                         env={"MOLR_BUDGET": "1"})
        assert result.exit_code == EXIT_BUDGET

    def test_input_json_overrides_flags(self):
        result = _invoke("enumerate", "-n", "4", "-t", "2", "-k", "2", "-f", "-", "-o", "json",
                         "--input-json", '{"k": 3, "paratopism": false}')
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["k"] == 3
        assert data["counts"]["paratopism"] is None

    def test_invalid_input_json(self):
        result = _invoke("enumerate", "-n", "4", "-t", "2", "-k", "2", "-o", "json",
                         "--input-json", "{not json")
        assert result.exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestVerifyCommand
# ---------------------------------------------------------------------------


class TestVerifyCommand:
    def test_n4_passes(self):
        result = _invoke("verify", "n4", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["suite"] == "n4"
        assert data["mismatches"] == []
        assert data["checked"] > 0

    def test_text_mode(self):
        result = _invoke("verify", "n4")
        assert result.exit_code == EXIT_SUCCESS
        assert "checks match" in result.output

    def test_mismatch_exit_code(self, monkeypatch):
        from molr import verify as verify_module

        counts = dict(verify_module.ISOTOPISM_COUNTS)
        counts[(4, 3)] = {2: 2, 3: 5, 4: 1}
        monkeypatch.setattr(verify_module, "ISOTOPISM_COUNTS", counts)
        result = _invoke("verify", "n4", "-o", "json")
        assert result.exit_code == EXIT_MISMATCH
        assert _envelope(result)["success"] is False

    def test_unknown_suite(self):
        assert _invoke("verify", "n3").exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestRecordCommands
# ---------------------------------------------------------------------------


class TestRecordCommands:
    def test_classify(self, tmp_path, mols4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(mols4))
        result = _invoke("classify", path, "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["records_checked"] == 1
        assert data["classes"][0]["aut"] == 96
        assert data["classes"][0]["flags"] == "HTsHsT"

    def test_classify_header_disagreement(self, tmp_path, mols4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(mols4, aut=97))
        result = _invoke("classify", path, "-o", "json")
        assert result.exit_code == EXIT_MISMATCH
        assert "aut=97" in _envelope(result)["errors"][0]

    def test_classify_writes_annotated_file(self, tmp_path, rect_2x4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(rect_2x4))
        out = tmp_path / "out.txt"
        result = _invoke("classify", path, "-f", str(out), "--no-stepwise")
        assert result.exit_code == EXIT_SUCCESS
        (record,) = parse_records(out.read_text())
        assert record.aut is not None

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("MOLR n=3 k=1 t=1\n0 0 1\n")
        result = _invoke("classify", str(path), "-o", "json")
        assert result.exit_code == EXIT_USAGE
        assert "bad.txt:1:" in _envelope(result)["errors"][0]

    def test_missing_file(self, tmp_path):
        assert _invoke("canon", str(tmp_path / "nope.txt")).exit_code == EXIT_USAGE

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing\n")
        assert _invoke("canon", str(path)).exit_code == EXIT_USAGE

    def test_canon(self, tmp_path, mols4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(mols4))
        result = _invoke("canon", path, "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        (row,) = _envelope(result)["data"]["classes"]
        assert row["aut"] == 96
        assert row["orbits"] == [[0, 1]]
        assert bytes.fromhex(row["key"])[:3] == bytes([4, 4, 2])

    def test_paratopism_merges_conjugates(self, tmp_path, rect_2x4):
        path = _record_file(
            tmp_path, "in.txt",
            MolrRecord(rect_2x4), MolrRecord(conjugate_swap(rect_2x4, 0)),
        )
        result = _invoke("paratopism", path, "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["records"] == 2
        assert data["paratopism_classes"] == 1
        assert data["members"] == [[1, 2]]

    def test_extend(self, tmp_path):
        seeds = tmp_path / "seeds.txt"
        assert _invoke("enumerate", "-n", "4", "-t", "2", "-k", "2", "-f", str(seeds)).exit_code == 0
        result = _invoke("extend", str(seeds), "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert (data["k"], data["parents"]) == (3, 3)
        assert data["counts"]["isotopism"] == 2
        assert len(parse_records(data["records"])) == 2

    def test_extend_rejects_mixed_shapes(self, tmp_path, mols4, rect_2x4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(rect_2x4), MolrRecord(mols4))
        assert _invoke("extend", path, "-o", "json").exit_code == EXIT_USAGE

    def test_extend_full_squares(self, tmp_path, mols4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(mols4))
        assert _invoke("extend", path).exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestGaloisCommand
# ---------------------------------------------------------------------------


class TestGaloisCommand:
    def test_json(self):
        result = _invoke("galois", "4", "--aut", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        assert data["aut"] == 288
        assert data["field"] == {"p": 2, "r": 2, "generator": 2, "modulus": [1, 1, 1]}
        assert [c["k"] for c in data["chain"]] == [4, 3, 2]
        assert len(data["squares"]) == 3

    def test_record_file(self, tmp_path):
        path = tmp_path / "gf5.txt"
        result = _invoke("galois", "5", "-f", str(path))
        assert result.exit_code == EXIT_SUCCESS
        (record,) = parse_records(path.read_text())
        assert (record.molr.t, record.molr.k) == (4, 5)

    @pytest.mark.parametrize("n", ["2", "6", "16"])
    def test_unsupported_orders(self, n):
        assert _invoke("galois", n, "-o", "json").exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestGeometryCommand
# ---------------------------------------------------------------------------


class TestGeometryCommand:
    @pytest.fixture
    def gf3_file(self, tmp_path):
        """Record file holding the 2-MOLS of order 3."""
        path = tmp_path / "gf3.txt"
        assert _invoke("galois", "3", "-f", str(path)).exit_code == 0
        return str(path)

    def test_complete(self, gf3_file):
        result = _invoke("geometry", gf3_file, "-a", "complete", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        data = _envelope(result)["data"]
        (report,) = data["reports"]
        assert report["kind"] == "projective"
        assert report["points"] == 13
        assert data["incidence"].count("\n") == 14

    def test_net_text(self, gf3_file):
        result = _invoke("geometry", gf3_file)
        assert result.exit_code == EXIT_SUCCESS
        assert "row:0 0 1 2" in result.stdout

    def test_sandler_pair(self, gf3_file, tmp_path):
        out = tmp_path / "residue.txt"
        result = _invoke("geometry", gf3_file, "-a", "sandler", "-l", "0,3",
                         "-f", str(out), "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        assert _envelope(result)["data"]["reports"][0]["points"] == 4
        assert out.exists()

    def test_sandler_parallel_lines(self, gf3_file):
        result = _invoke("geometry", gf3_file, "-a", "sandler", "-l", "0,1", "-o", "json")
        assert result.exit_code == EXIT_USAGE

    def test_sandler_needs_lines(self, gf3_file):
        assert _invoke("geometry", gf3_file, "-a", "sandler").exit_code == EXIT_USAGE

    def test_bad_line_spec(self, gf3_file):
        assert _invoke("geometry", gf3_file, "-a", "sandler", "-l", "a,b").exit_code == EXIT_USAGE

    def test_complete_needs_full_set(self, tmp_path, mols4):
        path = _record_file(tmp_path, "in.txt", MolrRecord(mols4))
        assert _invoke("geometry", path, "-a", "complete").exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestExpectedCommand
# ---------------------------------------------------------------------------


class TestExpectedCommand:
    def test_tables(self):
        result = _invoke("expected", "-n", "4", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        tables = _envelope(result)["data"]["tables"]
        assert [t["t"] for t in tables] == [2, 3]
        assert tables[0]["isotopism"] == {"2": 3, "3": 2, "4": 1}

    def test_single_t(self):
        result = _invoke("expected", "-n", "6", "-t", "5", "-o", "json")
        (table,) = _envelope(result)["data"]["tables"]
        assert table["paratopism"]["2"] == 17

    def test_census(self):
        result = _invoke("expected", "-n", "8", "-t", "2", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        census = _envelope(result)["data"]["stepwise_census"]
        assert census["2"]["2"] == [186, 99]

    def test_text(self):
        result = _invoke("expected", "-n", "9")
        assert result.exit_code == EXIT_SUCCESS
        assert "Stepwise census" in result.output

    def test_output_from_environment(self):
        result = _invoke("expected", "-n", "5", env={"MOLR_OUTPUT": "json"})
        assert _envelope(result)["command"] == "expected"

    @pytest.mark.parametrize("args", [["-n", "3"], ["-n", "4", "-t", "7"], ["-n", "8", "-t", "9"]])
    def test_unknown_table(self, args):
        assert _invoke("expected", *args).exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# TestFixturesCommand
# ---------------------------------------------------------------------------


class TestFixturesCommand:
    def test_list(self):
        result = _invoke("fixtures", "-o", "json")
        assert result.exit_code == EXIT_SUCCESS
        rows = _envelope(result)["data"]["fixtures"]
        names = {row["name"] for row in rows}
        assert {"transitive9", "incomplete9x10", "galois9", "hall3456"} <= names
        incomplete9x10 = next(row for row in rows if row["name"] == "incomplete9x10")
        assert (incomplete9x10["shape"], incomplete9x10["t"]) == ("9x10", 3)

    def test_list_text(self):
        result = _invoke("fixtures")
        assert result.exit_code == EXIT_SUCCESS
        assert "transitive8" in result.output

    def test_export(self, tmp_path):
        path = tmp_path / "transitive8.txt"
        result = _invoke("fixtures", "transitive8", "-f", str(path))
        assert result.exit_code == EXIT_SUCCESS
        (record,) = parse_records(path.read_text())
        assert record.aut == 48

    def test_export_to_stdout(self):
        result = _invoke("fixtures", "incomplete9x10")
        assert result.exit_code == EXIT_SUCCESS
        assert result.stdout.startswith("MOLR n=10 k=9 t=3\n")

    def test_unknown(self):
        assert _invoke("fixtures", "nope", "-o", "json").exit_code == EXIT_USAGE
