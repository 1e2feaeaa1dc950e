import json
import subprocess
import sys
from pathlib import Path

import pytest

from hassepaths import closedforms, order
from hassepaths.cli import main
from reference import TABLE1

GOLDEN = Path(__file__).parent / "data" / "table1.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "10")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_golden_fixture_holds_published_values():
    rows = {line.split()[0]: [int(v) for v in line.split()[1:]] for line in GOLDEN.read_text().splitlines()[1:]}
    names = {"F": "FF", "GF": "GF", "D": "DD", "GD": "GD", "M": "MM", "GM": "GM", "S": "SS", "GS": "GS"}
    assert {names[k]: v for k, v in rows.items()} == TABLE1


def test_table_zero_and_formats(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "0")
    assert [line.split()[1] for line in out.splitlines()[1:]] == ["0"] * 8
    _, out, _ = run(capsys, "table", "--max-n", "3", "--format", "json")
    rows = json.loads(out)
    assert [r["row"] for r in rows] == ["F", "GF", "D", "GD", "M", "GM", "S", "GS"]
    assert rows[7]["values"] == ["0", "2", "16", "114"]
    _, out, _ = run(capsys, "table", "--max-n", "2", "--format", "csv")
    assert out.splitlines()[0] == "n,0,1,2"
    assert out.splitlines()[4] == "GD,0,1,6"


def test_series_verbs(capsys):
    _, out, _ = run(capsys, "series", "edge", "--class", "GM", "-N", "6")
    assert out.split() == ["0", "0", "2", "8", "30", "104", "350"]
    _, out2, _ = run(capsys, "series", "edge-via-delta", "--class", "GM", "-N", "6")
    assert out2 == out
    _, out, _ = run(capsys, "series", "base:C", "-N", "4")
    assert out.split() == ["1", "1", "2", "5", "14"]
    _, out, _ = run(capsys, "series", "delta", "--class", "DD", "-N", "3")
    assert out.splitlines() == ["1", "1", "1 + q", "1 + 3q + q^2"]
    _, out, _ = run(capsys, "series", "base:r", "-N", "3", "--format", "json")
    assert json.loads(out) == ["1", "2", "6", "22"]


def test_young_verb(capsys):
    assert run(capsys, "young", "--partition", "2,1")[1] == "5\n"
    code, out, _ = run(capsys, "young", "--partition", "12,10,10,8,6,6,6,2,1", "--full")
    assert code == 0 and json.loads(out)["edges"] == "403148"


def test_index_and_distribution(capsys):
    assert run(capsys, "index", "--class", "GD", "-n", "9")[1] == "9/2 (Boolean)\n"
    assert run(capsys, "index", "--class", "DD", "-n", "9")[1] == "4 (asymptotically Boolean)\n"
    code, out, _ = run(capsys, "index", "--class", "FF", "-n", "80", "--asymptotic")
    assert code == 0 and "not quasi-Boolean" in out and "tamed: false" in out
    _, out, _ = run(capsys, "distribution", "--class", "DD", "-n", "3")
    assert out.splitlines() == ["delta: 1 + 3q + q^2", "nabla: 1 + 3q + q^2"]
    _, out, _ = run(capsys, "distribution", "--class", "GD", "-n", "2", "--format", "json")
    assert json.loads(out) == {"class": "GD", "n": 2, "delta": "1 + 4q + q^2", "nabla": "1 + 4q + q^2"}


def test_verify_agrees(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "6")
    assert code == 0 and "MISMATCH" not in out
    code, out, _ = run(capsys, "verify", "DD", "--max-n", "10", "--routes", "enum,formula")
    assert code == 0 and "DD 10 75582 75582 ok" in out
    code, _, _ = run(capsys, "verify", "GS", "--max-n", "4", "--routes", "order,enum,series,formula")
    assert code == 0


def test_verify_fault_injection(capsys, monkeypatch):
    real = closedforms.edge_count_formula

    def off_by_one(cls, n):
        v = real(cls, n)
        return v + 1 if (str(cls), n) == ("MM", 3) else v

    monkeypatch.setattr(closedforms, "edge_count_formula", off_by_one)
    code, out, err = run(capsys, "verify", "all", "--max-n", "5")
    assert code == 1
    assert "mismatch at class MM, n = 3" in err
    assert out.splitlines()[-1].startswith("MM 3 4 4 5 MISMATCH")


def test_verify_enum_imbalance_is_a_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(order, "delta_nabla_totals", lambda cls, n, force=False: (1, 2))
    code, _, err = run(capsys, "verify", "DD", "--max-n", "1")
    assert code == 1 and "sum|Delta|" in err


def test_exit_codes(capsys, monkeypatch):
    monkeypatch.delenv(order.MAX_CELLS_ENV, raising=False)
    assert run(capsys, "verify", "GS", "--max-n", "9")[0] == 3
    assert run(capsys, "verify", "GD", "--max-n", "6", "--routes", "order")[0] == 3
    assert run(capsys, "distribution", "--class", "GS", "-n", "9")[0] == 3
    assert run(capsys, "verify", "GD", "--max-n", "6", "--routes", "order", "--force")[0] == 0
    for argv in (
        ["bogus"],
        ["table", "--max-n", "-1"],
        ["table", "--wide"],
        ["verify", "XX"],
        ["verify", "--routes", "enum,psychic"],
        ["series", "edge"],
        ["series", "base:Q"],
        ["series", "nonsense"],
        ["young", "--partition", "1,2"],
        ["young", "--partition", "a"],
        ["index", "--class", "ZZ", "-n", "3"],
        ["index", "--class", "DD", "-n", "0"],
        [],
    ):
        assert run(capsys, *argv)[0] == 2, argv
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "hassepaths", "table", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
    bad = subprocess.run([sys.executable, "-m", "hassepaths", "young", "--partition", "x"], capture_output=True)
    assert bad.returncode == 2
