import json
from pathlib import Path

import pytest

from weylstrata.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("t", ["G2", "F4", "E6", "E7", "E8"])
def test_tables_match_golden(capsys, t):
    code, out, _ = run(capsys, "tables", "--type", t)
    assert code == 0
    assert out.encode("utf-8") == (GOLDEN / f"table_{t}.txt").read_bytes()


def test_list_strata_e6(capsys):
    code, out, _ = run(capsys, "list-strata", "--type", "E6", "--format", "text")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 21
    assert any(line.startswith("[A5+A1],[A5] ↔ 15_4") for line in lines)


def test_distinguished_e8(capsys):
    code, out, _ = run(capsys, "distinguished", "--type", "E8")
    assert code == 0 and len(out.splitlines()) == 14


def test_ws_map_g2(capsys):
    code, out, _ = run(capsys, "ws-map", "--type", "G2")
    lines = out.splitlines()
    assert len(lines) == 3 and lines[-1].endswith("[A1+Ã1] ↦ 2A1 (not parabolic)")


def test_classical_selectors(capsys):
    code, out, _ = run(capsys, "list-classes", "--type", "B", "--rank", "3")
    assert code == 0 and len(out.splitlines()) == 10
    code, out, _ = run(capsys, "list-classes", "--type", "D4", "--format", "json")
    assert len(json.loads(out)["classes"]) == 13


def test_graph_formats(capsys, tmp_path):
    target = tmp_path / "f4.dot"
    code, out, _ = run(capsys, "graph", "--type", "F4", "--format", "dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith('digraph "F4"')
    code, out, _ = run(capsys, "graph", "--type", "E6", "--format", "json", "--stratum", "5")
    assert json.loads(out)["strata"][0]["members"] == ["A5+A1", "A5"]


def test_edges(capsys):
    code, out, _ = run(capsys, "edges", "--type", "F4")
    assert "D4 -> B3  via F4" in out.splitlines()


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "tables")[0] == 2
    assert run(capsys, "tables", "--type", "B4")[0] == 2
    assert run(capsys, "list-classes", "--type", "E9")[0] == 2
    assert run(capsys, "tables", "--type", "E6", "--format", "dot")[0] == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--type", "G2")
    assert code == 0 and out.splitlines()[-1].endswith("0 failed")
    code, out, _ = run(capsys, "verify", "--type", "F4", "--format", "json")
    reports = json.loads(out)
    assert code == (0 if all(r["status"] == "pass" for r in reports) else 1)
