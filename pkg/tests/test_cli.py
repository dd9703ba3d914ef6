import json

import numpy as np
import pytest

from symstab import catalog
from symstab.cli import RunConfig, UsageError, main, run
from symstab.io import format_state


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ghz_file(tmp_path):
    path = tmp_path / "ghz3.txt"
    path.write_text(format_state(catalog.ghz(3)))
    return path


def test_classify_ghz_file(capsys, ghz_file):
    code, out, _ = call(capsys, "classify", "--input", str(ghz_file), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["type"] == "GeneralizedGHZ" and abs(data["t"] - 1) < 1e-9 and data["schema"] == 1


def test_file_spec_equivalent(capsys, ghz_file):
    code, out, _ = call(capsys, "classify", f"file:{ghz_file}")
    assert code == 0 and "GeneralizedGHZ" in out


def test_stab_group_tau(capsys):
    code, out, _ = call(capsys, "stab-group", "tau", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 24 and data["label"] == "octahedral"


def test_cdc_m4(capsys):
    code, out, _ = call(capsys, "cdc", "m4", "--json")
    data = json.loads(out)
    assert code == 0 and data["residual"] < 1e-9 and data["in_span"]
    assert {c["partition"] for c in data["coefficients"]} == {"1-2,3-4", "1-4,2-3"}
    code, out, _ = call(capsys, "cdc", "m4")
    assert "1-4,2-3 0.408248290464" in out


def test_cdc_cap(capsys):
    code, _, err = call(capsys, "cdc", "dicke:4,2", "--max-m", "1")
    assert code == 2 and "--max-m" in err


def test_text_outputs(capsys):
    code, out, _ = call(capsys, "majorana", "dicke:3,1")
    rows = sorted(out.split("\n")[:-1])
    assert code == 0 and rows == ["0 0 -1 1", "0 0 1 2"]
    code, out, _ = call(capsys, "stab-algebra", "singlet")
    assert code == 0 and "dim: 3" in out and "su(2) blocks: {1,2}" in out
    code, out, _ = call(capsys, "pauli", "ghz:3")
    assert code == 0 and out.startswith("size: 8")
    code, out, _ = call(capsys, "classify", "dicke:5,3")
    assert code == 0 and "k: 2" in out


def test_symmetrize(capsys):
    code, out, _ = call(capsys, "symmetrize", "a", "b", "c", "--format", "dicke")
    assert code == 0 and out.splitlines()[:2] == ["n=3", "format=dicke"]
    code, out, _ = call(capsys, "symmetrize", "1,1j", "0,1", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 2
    code, _, err = call(capsys, "symmetrize", "q")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "nope"],
        ["classify", "--input", "/nonexistent/state.txt"],
        ["classify", "dicke:40,1"],
        ["classify"],
        ["classify", "ghz:3", "--tol", "-1"],
        ["classify", "ghz:3", "--input", "x"],
        ["classify", "ghz:3", "--max-n", "2"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert call(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "m4"],
        ["cdc", "dicke:3,1"],
        ["stab-group", "ghz:3"],
        ["majorana", "m4"],
        ["pauli", "ghz:9"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_malformed_file_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("n=2\nformat=dense\n00 1 0\n00 1 0\n")
    assert call(capsys, "classify", "--input", str(path))[0] == 2


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("explode", "ghz:3")
    with pytest.raises(UsageError):
        RunConfig("symmetrize")


def test_run_returns_exit_code(capsys):
    assert run(RunConfig("classify", "product:3")) == 0
    assert "Product" in capsys.readouterr().out
