import csv
import io
import json
import subprocess
import sys

import pytest

from alphadet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_alpha_one(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--l", "2", "--alpha", "1")
    assert code == 0
    data = json.loads(out)
    mults = {tuple(c["lambda"]): c["mult"] for c in data["components"] if c["mult"]}
    assert mults == {(6,): 1, (4, 2): 1}


def test_decompose_alpha_zero_and_minus_one(capsys):
    _, out, _ = run(capsys, "decompose", "--n", "2", "--l", "2", "--alpha", "0")
    assert all(c["mult"] == c["kostka"] for c in json.loads(out)["components"])
    _, out, _ = run(capsys, "decompose", "--n", "2", "--l", "3", "--alpha", "-1")
    assert [c["lambda"] for c in json.loads(out)["components"] if c["mult"]] == [[3, 3]]


def test_transition(capsys):
    code, out, _ = run(capsys, "transition", "--n", "3", "--l", "2", "--lambda", "4,1,1")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[["1", "0", "-7/2", "0", "5/2"]]]
    _, out, _ = run(capsys, "transition", "--n", "2", "--l", "1", "--lambda", "1,1")
    assert json.loads(out)["matrix"] == [[["1", "-1"]]]
    _, out, _ = run(capsys, "transition", "--n", "2", "--l", "4", "--lambda", "5,3", "--alpha", "1")
    data = json.loads(out)
    assert data["rank_at_alpha"] == 0


def test_transition_matches_closed_form(capsys):
    from alphadet.exactalg import AlphaPoly
    from alphadet.jacobi import transition_closed_form

    _, out, _ = run(capsys, "transition", "--n", "2", "--l", "4", "--lambda", "5,3")
    entry = AlphaPoly.from_json(json.loads(out)["matrix"][0][0])
    assert entry == transition_closed_form(4, 3)


def test_small_commands(capsys):
    _, out, _ = run(capsys, "kostka", "--lambda", "4,2", "--mu", "2,2,2")
    assert json.loads(out)["kostka"] == 3
    _, out, _ = run(capsys, "content-poly", "--lambda", "2,1")
    assert json.loads(out)["content_poly"] == ["1", "0", "-1"]
    _, out, _ = run(capsys, "jacobi-G", "--s", "1", "--l", "1")
    assert json.loads(out)["G"] == ["1", "-1"]
    _, out, _ = run(capsys, "multiplicity", "--n", "3", "--l", "2", "--lambda", "4,2", "--alpha", "1")
    assert json.loads(out)["mult"] == 1
    _, out, _ = run(capsys, "gcp", "--n", "3", "--l", "1", "--lambda", "2,1")
    assert json.loads(out)["gcp"] == ["2", "0", "-2"]


def test_checks(capsys):
    assert run(capsys, "heun-check", "--l-max", "4")[0] == 0
    assert run(capsys, "heun-check", "--l-max", "3", "--printed")[0] == 1
    assert run(capsys, "unitarity-check", "--l-max", "5")[0] == 0
    code, out, _ = run(capsys, "hahn-check", "--l", "4")
    assert code == 0 and json.loads(out)["winner"] == "(-l-1,-l-1,l)"
    assert run(capsys, "trace-check", "--n", "2", "--l", "3")[0] == 0
    assert run(capsys, "conjecture-check", "--n", "3", "--l", "2")[0] == 0


@pytest.mark.parametrize("suite", ["heun", "unitarity", "trace", "conjecture", "hahn", "frobenius",
                                   "paper-table-corrected"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_conjecture_single_case(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--n", "3", "--l", "2")
    assert code == 0 and len(json.loads(out)["checks"]) == 1


def test_verify_printed_table_flags_two_rows(capsys):
    code, out, _ = run(capsys, "verify", "paper-table")
    failing = [c["name"] for c in json.loads(out)["checks"] if not c["ok"]]
    assert code == 1
    assert failing == ["F^(4, 2)_(3,2) char poly", "F^(3, 3)_(3,2) char poly"]


def test_bad_input_exit_codes(capsys):
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "decompose", "--n", "2", "--l", "2", "--alpha", "sqrt2")[0] == 2
    assert run(capsys, "kostka", "--lambda", "3", "--mu", "2,2")[0] == 2
    assert run(capsys, "transition", "--n", "2", "--l", "2", "--lambda", "1,3")[0] == 2
    assert run(capsys, "jacobi-G", "--s", "4", "--l", "2")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_guard_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("ALPHADET_GUARD_MAX", "5")
    code, _, err = run(capsys, "decompose", "--n", "3", "--l", "2")
    assert code == 2 and "size guard" in err


def test_formats(capsys, tmp_path):
    _, out, _ = run(capsys, "--format", "csv", "decompose", "--n", "2", "--l", "2", "--alpha", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["lambda"] for r in rows] == ["4", "3 1", "2 2"]
    assert [r["mult"] for r in rows] == ["1", "0", "1"]
    _, out, _ = run(capsys, "--format", "pretty", "decompose", "--n", "2", "--l", "2")
    assert out.startswith("U(gl_2)")
    target = tmp_path / "out.json"
    assert run(capsys, "-o", str(target), "gcp", "--n", "2", "--l", "2", "--lambda", "2,2")[0] == 0
    assert json.loads(target.read_text())["lambda"] == [2, 2]


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "alphadet", "decompose", "--n", "3", "--l", "2", "--alpha", "1/7"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
