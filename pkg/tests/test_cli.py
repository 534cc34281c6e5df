"""Tests for the command-line interface: dispatch, formats, exit codes."""

import csv
import io
import json
import math

import pytest

from zetabound.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def parse_csv(text):
    lines = text.strip().splitlines()
    assert lines[0].startswith("# ")
    meta = json.loads(lines[0][2:])
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))
    return meta, rows


class TestEval:
    def test_modulus_at_t1(self, capsys):
        status, out, _ = run_cli(capsys, "--format", "json", "eval", "--t", "1", "--r", "1e-8")
        assert status == 0
        doc = json.loads(out)
        row = doc["rows"][0]
        assert row["modulus"] == pytest.approx(1.0945, abs=1e-4)
        assert row["err"] <= 1e-8 * (1.0 + 1e-3)  # analytic bound plus fp slack
        assert row["n_terms"] >= 1

    def test_peak_ratio(self, capsys):
        status, out, _ = run_cli(capsys, "--format", "json", "eval", "--t", "17.7477",
                                 "--r", "1e-8")
        doc = json.loads(out)
        row = doc["rows"][0]
        assert row["modulus"] / math.log(17.7477) == pytest.approx(0.6443, abs=1e-4)

    def test_zero_threshold_is_usage_error(self, capsys):
        status, _, err = run_cli(capsys, "eval", "--t", "1", "--r", "0")
        assert status == 2
        assert "error" in err


class TestTables:
    def test_table1_row(self, capsys):
        status, out, _ = run_cli(capsys, "table1", "--t0", "1e6")
        assert status == 0
        assert "0.1796" in out and "0.7421" in out and "1.0295" in out

    def test_table1_default_grid(self, capsys):
        status, out, _ = run_cli(capsys, "--format", "json", "table1")
        doc = json.loads(out)
        assert len(doc["rows"]) == 22
        first, last = doc["rows"][0], doc["rows"][-1]
        assert first["t0"] == 1e5 and last["t0"] == 1e300
        assert round(last["v"], 4) == 0.5046

    def test_table1_domain_error(self, capsys):
        status, _, err = run_cli(capsys, "table1", "--t0", "1000")
        assert status == 2
        assert "1000" in err

    def test_table2_rows(self, capsys):
        status, out, _ = run_cli(capsys, "table2", "--t0", "1e1", "--t0", "1e9")
        assert status == 0
        assert "2.4868" in out and "0.6584" in out

    def test_table3_row(self, capsys):
        status, out, _ = run_cli(capsys, "table3", "--t0", "1e15")
        assert status == 0
        assert "0.5912" in out and "0.5192" in out

    def test_table3_below_optimiser_range_blank_v(self, capsys):
        status, out, _ = run_cli(capsys, "--format", "json", "table3", "--t0", "100")
        assert status == 0
        doc = json.loads(out)
        assert doc["rows"][0]["v"] is None
        assert doc["rows"][0]["v_tilde"] == pytest.approx(0.5 + 0.6633 / math.log(100.0))


class TestFormats:
    def test_csv_metadata_and_roundtrip(self, capsys):
        _, out, _ = run_cli(capsys, "--format", "csv", "table1", "--t0", "1e6")
        meta, rows = parse_csv(out)
        assert meta["schema_version"] == "1"
        assert meta["command"] == "table1"
        assert len(rows) == 1
        # 17-significant-digit csv field re-parses to the table-mode value
        _, table_out, _ = run_cli(capsys, "table1", "--t0", "1e6")
        for key in ("beta", "v", "u"):
            assert f"{float(rows[0][key]):.4f}" in table_out

    def test_json_machine_table_consistency(self, capsys):
        _, json_out, _ = run_cli(capsys, "--format", "json", "table2", "--t0", "1e3")
        _, table_out, _ = run_cli(capsys, "table2", "--t0", "1e3")
        value = json.loads(json_out)["rows"][0]["C"]
        assert f"{value:.4f}" in table_out

    def test_rows_sorted_by_primary_key(self, capsys):
        _, out, _ = run_cli(capsys, "--format", "json", "table2",
                            "--t0", "1e5", "--t0", "1e2", "--t0", "1e4")
        doc = json.loads(out)
        t0s = [row["t0"] for row in doc["rows"]]
        assert t0s == sorted(t0s)

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rows.csv"
        status, out, _ = run_cli(capsys, "--format", "csv", "--out", str(target),
                                 "table2", "--t0", "10")
        assert status == 0
        assert out == ""
        meta, rows = parse_csv(target.read_text())
        assert meta["command"] == "table2"
        assert float(rows[0]["C"]) == pytest.approx(2.4868, abs=1e-4)


class TestScan:
    def test_bound_holds_exit_zero(self, capsys):
        status, out, _ = run_cli(
            capsys, "scan", "--lo", "2.72", "--hi", "100",
            "--bound", "vlog:0.6443", "--r", "1e-4",
        )
        assert status == 0
        _, rows = parse_csv(out)
        margins = [float(row["margin"]) for row in rows]
        assert min(margins) == pytest.approx(0.0, abs=5e-4)

    def test_affine_bound_exit_zero(self, capsys):
        status, out, _ = run_cli(
            capsys, "scan", "--lo", "2.72", "--hi", "100",
            "--bound", "affine:0.5,0.6633",
        )
        assert status == 0

    def test_violated_bound_exit_one(self, capsys):
        status, _, _ = run_cli(
            capsys, "scan", "--lo", "2.72", "--hi", "100", "--bound", "vlog:0.5",
        )
        assert status == 1

    def test_budget_exit_three(self, capsys):
        status, _, err = run_cli(
            capsys, "scan", "--lo", "2.72", "--hi", "100", "--budget", "1e3",
        )
        assert status == 3
        assert "budget" in err

    def test_bad_bound_spec(self, capsys):
        status, _, _ = run_cli(
            capsys, "scan", "--lo", "2.72", "--hi", "10", "--bound", "nonsense:1",
        )
        assert status == 2

    def test_plain_scan_rows(self, capsys):
        status, out, _ = run_cli(capsys, "scan", "--lo", "2.72", "--hi", "3.0")
        assert status == 0
        _, rows = parse_csv(out)
        assert 26 <= len(rows) <= 30
        assert rows[0]["margin"] == ""


class TestFigures:
    def test_c0_endpoint(self, capsys):
        status, out, _ = run_cli(capsys, "figures", "c0")
        assert status == 0
        _, rows = parse_csv(out)
        assert len(rows) == 1001
        assert float(rows[-1]["p"]) == 1.0
        assert float(rows[-1]["y"]) == pytest.approx(0.5, abs=1e-12)

    def test_c1_sigma1_endpoint(self, capsys):
        status, out, _ = run_cli(capsys, "figures", "c1-sigma1")
        _, rows = parse_csv(out)
        assert float(rows[-1]["y"]) == pytest.approx(0.0932, abs=1e-4)

    def test_unknown_figure(self, capsys):
        status, _, err = run_cli(capsys, "figures", "nope")
        assert status == 2
        assert "unknown figure" in err


class TestConstants:
    def test_rows(self, capsys):
        status, out, _ = run_cli(capsys, "constants")
        assert status == 0
        assert "4.9443" in out       # lambda1
        assert "-0.3417" in out      # gamma - (1/2) log 2 pi
        assert "0.5000" in out       # b0
        assert "0.0173" in out and "0.0932" in out
