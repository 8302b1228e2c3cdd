"""Tests for the command line interface and the JSON report layer."""

import json
import subprocess
import sys

import pytest

from divideknots import cli
from divideknots.errors import InternalInvariantError
from divideknots.report import report_document, to_json
from divideknots.divides import snail


# ---------------------------------------------------------------------------
# Exit codes


def test_validate_ok(capsys):
    assert cli.main(["validate", "--gauss", "v1+ v1+"]) == 0
    out = capsys.readouterr().out
    assert out == "ok: 1 double points, 3 regions (1 inner)\n"


def test_validate_json(capsys):
    assert cli.main(["validate", "--gauss", "", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {
        "valid": True,
        "gauss": "",
        "double_points": 0,
        "regions": 2,
        "inner_regions": 0,
    }


def test_malformed_code_exits_2(capsys):
    assert cli.main(["validate", "--gauss", "v1+ v1-"]) == 2
    assert "invalid divide" in capsys.readouterr().err


def test_unrealizable_code_exits_2(capsys):
    assert cli.main(["report", "--gauss", "v1+ v2+ v1+ v2+"]) == 2
    assert "invalid divide" in capsys.readouterr().err


def test_bad_snail_index_exits_2(capsys):
    assert cli.main(["validate", "--snail", "0"]) == 2


def test_missing_file_exits_3(tmp_path, capsys):
    rc = cli.main(["report", "--file", str(tmp_path / "absent.divide")])
    assert rc == 3
    assert "i/o error" in capsys.readouterr().err


def test_unwritable_out_exits_3(tmp_path, capsys):
    rc = cli.main(["report", "--snail", "1",
                   "--out", str(tmp_path / "no" / "such" / "dir" / "x.json")])
    assert rc == 3


def test_internal_invariant_exits_4(monkeypatch, capsys):
    def boom(manifest):
        raise InternalInvariantError("forced")
    monkeypatch.setitem(cli._COMMANDS, "report", boom)
    assert cli.main(["report", "--snail", "1"]) == 4
    assert "internal invariant" in capsys.readouterr().err


def test_argparse_rejects_bad_usage():
    with pytest.raises(SystemExit) as exc:
        cli.main(["report"])  # no source flag
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["family", "--range", "3..one"])
    with pytest.raises(SystemExit):
        cli.main(["report", "--gauss", "v1+ v1+", "--snail", "1"])


# ---------------------------------------------------------------------------
# Report content


def test_report_json_schema(capsys):
    assert cli.main(["report", "--snail", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == [
        "divide", "basis", "seifert_matrix", "invariants", "g4top",
        "certificates",
    ]
    assert doc["divide"]["gauss"] == "v2+ v1+ v1+ v2+"
    assert doc["divide"]["snail"] == 2
    assert doc["seifert_matrix"] == [
        [1, 0, 0, 0], [1, 1, 0, 1], [1, 0, 1, 0], [2, 0, 0, 1]]
    assert doc["invariants"]["alexander"] == [[0, 1], [1, 1], [2, -3], [3, 1], [4, 1]]
    assert doc["invariants"]["alexander_pretty"] == "t^4 + t^3 - 3t^2 + t + 1"
    assert doc["invariants"]["determinant"] == 3
    assert doc["invariants"]["signature"] == 2
    assert doc["g4top"] == {"lower": 1, "upper": 1, "exact": True}
    assert doc["certificates"] == [{
        "rank": 2,
        "vectors": [[1, 0, 0, -1], [0, 0, 1, 0]],
        "restricted_matrix": [[0, 0], [1, 1]],
        "unit": {"sign": 1, "exponent": 1},
        "upper_bound": 1,
    }]


def test_report_json_matches_library_layer(capsys):
    assert cli.main(["report", "--snail", "3", "--json"]) == 0
    cli_text = capsys.readouterr().out
    assert cli_text == to_json(report_document(snail(3)))


def test_report_output_is_reproducible(capsys):
    cli.main(["report", "--gauss", "v2+ v1+ v1+ v2+", "--json"])
    first = capsys.readouterr().out
    cli.main(["report", "--gauss", "v2+ v1+ v1+ v2+", "--json"])
    second = capsys.readouterr().out
    assert first == second
    json.loads(first)  # and it parses


def test_report_out_file_matches_stdout(tmp_path, capsys):
    cli.main(["report", "--snail", "2", "--json"])
    stdout_text = capsys.readouterr().out
    target = tmp_path / "report.json"
    assert cli.main(["report", "--snail", "2", "--json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == stdout_text


def test_report_from_file_source(tmp_path, capsys):
    path = tmp_path / "loop.divide"
    path.write_text("# loop\ngauss: v1+ v1+\nblack: r2\n", encoding="utf-8")
    assert cli.main(["report", "--file", str(path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["invariants"]["genus"] == 1
    assert doc["invariants"]["alexander_pretty"] == "t^2 - t + 1"


def test_report_text_mode(capsys):
    assert cli.main(["report", "--snail", "1"]) == 0
    out = capsys.readouterr().out
    assert "alexander: t^2 - t + 1" in out
    assert "topological g4 in [1, 1] (exact)" in out


def test_report_no_search_leaves_gap_open(capsys):
    assert cli.main(["report", "--gauss", "v2+ v1+ v1+ v2+",
                     "--no-search", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["g4top"] == {"lower": 1, "upper": 2, "exact": False}
    assert doc["certificates"] == []


def test_report_swap_colours_transposes_matrix(capsys):
    cli.main(["report", "--snail", "2", "--json"])
    plain = json.loads(capsys.readouterr().out)
    cli.main(["report", "--snail", "2", "--swap-colours", "--json"])
    swapped = json.loads(capsys.readouterr().out)
    a = plain["seifert_matrix"]
    b = swapped["seifert_matrix"]
    n = len(a)
    assert all(b[i][j] == a[j][i] for i in range(n) for j in range(n))
    assert swapped["invariants"] == plain["invariants"]


# ---------------------------------------------------------------------------
# Family command


def test_family_json(capsys):
    assert cli.main(["family", "--range", "1..3", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["n"] for r in rows] == [1, 2, 3]
    assert [r["ratio"] for r in rows] == ["1", "1/2", "1/3"]
    for r in rows:
        assert r["genus"] == r["n"]
        assert r["smooth_g4"] == r["n"]
        assert r["signature"] == 2
        assert r["g4top"] == {"lower": 1, "upper": 1, "exact": True}


def test_family_text(capsys):
    assert cli.main(["family", "--range", "1..2"]) == 0
    out = capsys.readouterr().out
    assert "ratio" in out
    assert "[1, 1]" in out
    assert "1/2" in out


def test_family_range_parsing():
    assert cli._parse_range("1..10") == (1, 10)
    assert cli._parse_range("4..4") == (4, 4)
    import argparse
    for bad in ("", "5", "2..1", "0..3", "a..b"):
        with pytest.raises(argparse.ArgumentTypeError):
            cli._parse_range(bad)


# ---------------------------------------------------------------------------
# Module entry point


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "divideknots.cli", "report", "--snail", "1", "--json"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["invariants"]["determinant"] == 3
