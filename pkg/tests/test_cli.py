import json
import subprocess
import sys

import pytest

from extvanish.cli import main


def test_report_json(capsys):
    assert main(["report", "--n", "4", "--q", "7", "--r", "5"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert set(obj) == {"params", "restricted", "verdicts", "facts", "warnings"}


def test_report_text_and_out(tmp_path):
    out = tmp_path / "r.txt"
    assert main(["report", "--n", "6", "--q", "3", "--r", "13", "--format", "text", "--out", str(out)]) == 0
    assert out.read_text().startswith("G = GL_6(3), r = 13, l = 3")


@pytest.mark.parametrize(
    "partition, q, r, code",
    [("3,3", 3, 13, 1), ("4,2", 3, 13, 0), ("2^2", 7, 5, 0), ("2,1,1", 7, 5, 2)],
)
def test_james_exit_codes(partition, q, r, code, capsys):
    assert main(["james", "--partition", partition, "--q", str(q), "--r", str(r)]) == code
    assert "hook graph" in capsys.readouterr().out


def test_james_output(capsys):
    main(["james", "--partition", "3,3", "--q", "3", "--r", "13"])
    out = capsys.readouterr().out
    assert "inf 0 inf" in out and "4 3 2" in out


def test_oracle_agreement(capsys):
    assert main(["oracle", "--partition", "3,3", "--q", "3", "--r", "13", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "dim: 5" in out and "agreement: yes" in out


def test_oracle_non_two_part(capsys):
    assert main(["oracle", "--partition", "2,1,1", "--q", "7", "--r", "5"]) == 0
    assert "james" not in capsys.readouterr().out


def test_oracle_disagreement_exit(monkeypatch, capsys):
    import extvanish.oracle.meataxe as mx

    monkeypatch.setattr(mx, "meataxe_irreducible", lambda rep, seed=0: True)
    assert main(["oracle", "--partition", "3,3", "--q", "3", "--r", "13"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "--n", "5", "--q", "8", "--r", "7"],
        ["report", "--n", "3", "--q", "9", "--r", "3"],
        ["james", "--partition", "x", "--q", "3", "--r", "13"],
        ["oracle", "--partition", "5,3", "--q", "3", "--r", "13"],
    ],
)
def test_bad_input_exit_64(argv, capsys):
    assert main(argv) == 64
    assert "error:" in capsys.readouterr().err


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "extvanish.cli", "james", "--partition", "5,1", "--q", "3", "--r", "13"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert "verdict: reducible" in proc.stdout
