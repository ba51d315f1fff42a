"""Test `padic_lattice_tool.scripts.padic_lattice` command line interface.

Authors
-------
    - Mees Fix
"""

import json

import pytest

from padic_lattice_tool.constants import (
    ESCAPE_EXAMPLE_FILE,
    EXIT_INPUT_ERROR,
    EXIT_PRECONDITION_ERROR,
    EXIT_SUCCESS,
    EXIT_VERIFICATION_ERROR,
    ORACLE_BUDGET_ENV,
    ZETA5_CVP_STEP_FILE,
    ZETA5_EXAMPLE_FILE,
    ZETA5_REORDERED_FILE,
)
from padic_lattice_tool.instance_parser import instanceFile
from padic_lattice_tool.scripts.padic_lattice import check_instance, main, runReport


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_orthogonalize(capsys):
    code, lines, _ = run(capsys, "orthogonalize", ZETA5_EXAMPLE_FILE)
    digest = instanceFile(ZETA5_EXAMPLE_FILE).digest()

    assert code == EXIT_SUCCESS
    assert lines == [
        "command: orthogonalize",
        f"instance: {digest}",
        "row 1: [1, 0, 0, 0]",
        "row 2: [0, 2, 0, 0]",
        "row 3: [0, 0, 16, 16]",
        "norms: 2^0 2^-1 2^-4",
        "permutation: 1 2 3 4",
    ]


def test_orthogonalize_reordered(capsys):
    code, lines, _ = run(capsys, "orthogonalize", ZETA5_REORDERED_FILE)
    assert code == EXIT_SUCCESS
    assert lines[2:5] == ["row 1: [1, 2, 0, 0]", "row 2: [0, -2, 0, 0]", "row 3: [0, 0, 16, 16]"]
    assert lines[5] == "norms: 2^0 2^-1 2^-4"


def test_orthogonalize_via_cvp(capsys):
    code, lines, _ = run(capsys, "orthogonalize", ZETA5_EXAMPLE_FILE, "--via-cvp")
    assert code == EXIT_SUCCESS
    assert lines[0] == "command: orthogonalize --via-cvp"
    assert lines[-2:] == ["norms: 2^0 2^-1 2^-4", "oracle calls: 3"]


def test_cvp(capsys):
    code, lines, _ = run(capsys, "cvp", ZETA5_CVP_STEP_FILE, "--verify")
    assert code == EXIT_SUCCESS
    assert lines[2:] == [
        "vector: [1, 0, 0, 0]",
        "coefficients: [1]",
        "distance: 2^-1",
        "verify: PASS",
    ]

    code, lines, _ = run(capsys, "cvp", ZETA5_EXAMPLE_FILE)
    assert code == EXIT_SUCCESS
    assert lines[-1] == "distance: 0"


def test_cvp_without_target(capsys):
    code, lines, err = run(capsys, "cvp", ZETA5_REORDERED_FILE)
    assert code == EXIT_INPUT_ERROR
    assert lines == []
    assert "HAS NO TARGET" in err


def test_lvp(capsys):
    code, lines, _ = run(capsys, "lvp", ZETA5_EXAMPLE_FILE, "--verify")
    assert code == EXIT_SUCCESS
    assert lines[2:] == ["vector: [0, 2, 0, 0]", "norm: 2^-1", "verify: PASS"]


def test_invariants(capsys):
    code, lines, _ = run(capsys, "invariants", ZETA5_EXAMPLE_FILE)
    assert code == EXIT_SUCCESS
    assert lines[0] == "command: invariants --ladder 5"
    assert lines[2:] == [
        "lambda~: 2^0 2^-1 2^-4",
        "mu: undefined: not full rank",
        "ladder: 2^0 2^-1 2^-2 2^-3 2^-4",
    ]

    code, lines, _ = run(capsys, "invariants", ESCAPE_EXAMPLE_FILE, "--ladder", 2)
    assert lines[2:] == ["lambda~: 2^0", "mu: 2^1", "ladder: 2^0 2^-1"]


def test_invariants_json(capsys):
    code, lines, _ = run(capsys, "invariants", ESCAPE_EXAMPLE_FILE, "--format", "json")
    report = json.loads("\n".join(lines))
    assert code == EXIT_SUCCESS
    assert report["command"] == "invariants --ladder 5"
    assert report["instance"] == instanceFile(ESCAPE_EXAMPLE_FILE).digest()
    assert report["result"] == {
        "maxima": ["2^0"],
        "escape": "2^1",
        "ladder": ["2^0", "2^-1", "2^-2", "2^-3", "2^-4"],
    }


def test_invariants_plot(capsys, tmp_path):
    code, lines, _ = run(capsys, "invariants", ZETA5_EXAMPLE_FILE, "--plot", tmp_path)
    assert code == EXIT_SUCCESS
    assert (tmp_path / "zeta5_lattice_invariants.png").exists()
    assert lines[0].startswith("WRITING FIGURE TO")


def test_invariants_plot_json(capsys, tmp_path):
    code, lines, err = run(
        capsys, "invariants", ZETA5_EXAMPLE_FILE, "--plot", tmp_path, "--format", "json"
    )
    assert code == EXIT_SUCCESS
    assert json.loads("\n".join(lines))["result"]["escape"] is None
    assert err.startswith("WRITING FIGURE TO")
    assert (tmp_path / "zeta5_lattice_invariants.png").exists()


def test_invalid_ladder(capsys):
    code, _, err = run(capsys, "invariants", ZETA5_EXAMPLE_FILE, "--ladder", 0)
    assert code == EXIT_INPUT_ERROR
    assert "LADDER LENGTH" in err


def test_input_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "orthogonalize", tmp_path / "missing.json")
    assert code == EXIT_INPUT_ERROR

    broken = tmp_path / "broken.json"
    broken.write_text('{\n  "p": 2,\n  "dim": 1\n  "basis": [["1"]]\n}\n')
    code, _, err = run(capsys, "orthogonalize", broken)
    assert code == EXIT_INPUT_ERROR
    assert "(line 4, column 3)" in err


def test_invalid_utf8(capsys, tmp_path):
    broken = tmp_path / "latin1.json"
    broken.write_bytes(b'{"p": 2, "dim": 1, "basis": [["\xff"]]}')
    code, lines, err = run(capsys, "invariants", broken)
    assert code == EXIT_INPUT_ERROR
    assert lines == []
    assert "INVALID UTF-8 BYTE 0xFF" in err
    assert "(line 1, column 32)" in err


def test_precondition_error(capsys, tmp_path):
    dependent = tmp_path / "dependent.json"
    dependent.write_text('{"p": 2, "dim": 2, "basis": [["1", "1"], ["2", "2"]]}\n')
    code, _, err = run(capsys, "invariants", dependent)
    assert code == EXIT_PRECONDITION_ERROR
    assert "NOT LINEARLY INDEPENDENT" in err


def test_oracle_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv(ORACLE_BUDGET_ENV, "1")
    code, lines, err = run(capsys, "cvp", ZETA5_CVP_STEP_FILE, "--verify")
    assert code == EXIT_VERIFICATION_ERROR
    assert lines == []
    assert "ORACLE BUDGET OF 1 TUPLES EXCEEDED" in err


def test_failed_verification_exit(capsys, monkeypatch):
    monkeypatch.setattr(
        "padic_lattice_tool.scripts.padic_lattice.verify_lvp", lambda *args, **kwargs: False
    )
    code, lines, _ = run(capsys, "lvp", ZETA5_EXAMPLE_FILE, "--verify")
    assert code == EXIT_VERIFICATION_ERROR
    assert lines[-1] == "verify: FAIL"

    code, lines, _ = run(capsys, "check", "--seed", 0, "--count", 2)
    assert code == EXIT_VERIFICATION_ERROR
    assert lines[-2:] == ["failed: 2 of 2", "verify: FAIL"]


def test_missing_subcommand_argument():
    with pytest.raises(SystemExit):
        main(["cvp"])


def test_gen(capsys, tmp_path):
    out = tmp_path / "instance.json"
    argv = ["gen", "--p", 3, "--dim", 3, "--rank", 2, "--seed", 11, "--weights", "half"]
    argv += ["--out", out]

    code, lines, _ = run(capsys, *argv)
    assert code == EXIT_SUCCESS
    assert lines[2] == f"WROTE INSTANCE TO {out}"
    assert lines[3] == f"WROTE GROUND TRUTH TO {tmp_path / 'instance.truth.json'}"
    first = out.read_text()

    truth = json.loads((tmp_path / "instance.truth.json").read_text())
    assert truth["seed"] == 11
    assert truth["p"] == 3

    code, lines, _ = run(capsys, "invariants", out, "--format", "json")
    assert json.loads("\n".join(lines))["result"] == truth["invariants"]

    run(capsys, *argv)
    assert out.read_text() == first


def test_gen_rejects_rank(capsys, tmp_path):
    code, _, _ = run(
        capsys, "gen", "--p", 2, "--dim", 2, "--rank", 3, "--out", tmp_path / "bad.json"
    )
    assert code == EXIT_INPUT_ERROR
    assert not (tmp_path / "bad.json").exists()


def test_check(capsys):
    code, lines, _ = run(capsys, "check", "--seed", 0, "--count", 3)
    assert code == EXIT_SUCCESS
    assert lines[0] == "command: check --seed 0 --count 3"
    assert lines[-2:] == ["failed: 0 of 3", "verify: PASS"]


@pytest.mark.parametrize("seed", range(12))
def test_check_instance(seed):
    row = check_instance(seed)
    assert row["seed"] == seed
    assert row["result"] == "PASS"


def test_run_report():
    report = runReport("lvp", "abc", ["norm: 2^-1"], {"norm": "2^-1"}, verdict="FAIL")
    assert report.failed
    assert report.render("text").splitlines() == [
        "command: lvp",
        "instance: abc",
        "norm: 2^-1",
        "verify: FAIL",
    ]
    assert json.loads(report.render("json"))["verify"] == "FAIL"
