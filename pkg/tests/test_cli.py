"""Golden tests for the command line; every expected value comes from the library."""

import json
import subprocess
import sys

import pytest

from rrweights import cli, harness
from rrweights import identities as ids
from rrweights.harness import Case, TheoremId, verify
from rrweights.weights import WeightKind, weight


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_t1(capsys):
    code, out, _ = run(capsys, "verify", "T1", "--max-n", "10")
    assert code == 0
    assert out.strip() == verify(TheoremId.T1, 10).to_text()
    assert out.count(" ok") == 11


def test_verify_json_matches_text(capsys):
    _, text, _ = run(capsys, "verify", "T5", "--max-n", "6")
    code, js, _ = run(capsys, "--format", "json", "verify", "T5", "--max-n", "6")
    data = json.loads(js)
    assert code == 0 and data["passed"] and data["bound"] == 6
    for case in data["cases"]:
        assert f"[{case['index']}] {case['lhs']} | {case['rhs']}  ok" in text


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(harness.CHECKS, TheoremId.THM_B, lambda bound: [Case(0, "1", "2", False)])
    code, out, _ = run(capsys, "verify", "THM_B", "--max-n", "0")
    assert code == cli.EXIT_MISMATCH == 1
    assert "FAILED" in out


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "7,4,2", "--kind", "OMEGA4")
    assert code == 0 and out.strip() == str(weight((7, 4, 2), WeightKind.OMEGA4))


def test_weights_symbolic_json(capsys):
    code, out, _ = run(capsys, "weights", "3", "--kind", "omega_symbolic", "--format", "json")
    assert code == 0
    assert json.loads(out)["weight"] == str(weight((3,), WeightKind.OMEGA_SYMBOLIC))


def test_table_a61(capsys):
    code, out, _ = run(capsys, "table", "A_6_1", "--max-n", "4", "--format", "tsv")
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert code == 0 and rows[0] == ["n", "value"]
    assert [(int(n), int(v)) for n, v in rows[1:]] == [(n, ids.modular_count(n, 6, 1)) for n in range(5)]
    assert [int(v) for _, v in rows[1:]] == [1, 0, 1, 1, 2]


@pytest.mark.parametrize(
    "family,oracle",
    [
        ("Q_7_3", lambda n: ids.rank_count(n, 7, 3)),
        ("A_6_3", lambda n: ids.signed_unrestricted(n)),
        ("D", lambda n: ids.count(n, ids.DISTINCT)),
        ("OMEGA6", lambda n: ids.weighted_rr_sum(n, WeightKind.OMEGA6)),
        ("OMEGA1", lambda n: ids.rr_weight_sum(n, WeightKind.OMEGA1)),
    ],
)
def test_table_families(capsys, family, oracle):
    code, out, _ = run(capsys, "--format", "json", "table", family, "--max-n", "8")
    data = json.loads(out)
    assert code == 0 and data["name"] == family
    assert [int(r["value"]) for r in data["rows"]] == [oracle(n) for n in range(9)]


def test_series(capsys):
    code, out, _ = run(capsys, "series", "lebesgue_rhs", "--order", "6", "--format", "tsv")
    _, rhs = ids.lebesgue_sides(6)
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert code == 0 and [v for _, v in rows] == [str(x) for x in rhs]


def test_series_modular(capsys):
    code, out, _ = run(capsys, "series", "A_7_2", "--order", "10", "--format", "json")
    assert code == 0
    assert [int(r["coefficient"]) for r in json.loads(out)["rows"]] == ids.modular_gf_ints(7, 2, 10)


def test_output_file(capsys, tmp_path):
    target = tmp_path / "t.txt"
    code, out, _ = run(capsys, "table", "D", "--max-n", "3", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[-1].split() == ["3", "2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["weights", "4,7", "--kind", "OMEGA4"],
        ["weights", "4,x", "--kind", "OMEGA4"],
        ["weights", "4,0", "--kind", "OMEGA4"],
        ["weights", "4,1", "--kind", "OMEGA2"],
        ["weights", "4", "--kind", "OMEGA9"],
        ["verify", "T9"],
        ["verify", "T1", "--max-n", "-3"],
        ["table", "E", "--max-n", "3"],
        ["table", "Q_6_5", "--max-n", "3"],
        ["series", "nope", "--order", "3"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == cli.EXIT_USAGE == 2
    assert out == "" and err.startswith("rrweights: error:")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rrweights", "weights", "3", "--kind", "OMEGA5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
