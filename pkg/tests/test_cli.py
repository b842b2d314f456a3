import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from conequot import FIXTURE_NAMES, fixture_text
from conequot.cli import main
from conequot.errors import InternalError

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_classify_matches_golden(capsys, name):
    code, out, err = run(capsys, "classify", f"fixture:{name}")
    assert code == 0
    assert out == (GOLDEN / f"{name}.classify.json").read_text()


def test_classify_text_matches_golden(capsys):
    code, out, _ = run(
        capsys, "classify", "fixture:hyperbolic", "--output", "text"
    )
    assert code == 0
    assert out == (GOLDEN / "hyperbolic.classify.txt").read_text()


def test_dot_matches_golden(capsys):
    code, out, _ = run(capsys, "dot", "fixture:smoothemb")
    assert code == 0
    assert out == (GOLDEN / "smoothemb.dot").read_text()
    # dot ignores --output
    code2, out2, _ = run(capsys, "dot", "fixture:smoothemb", "--output", "text")
    assert (code2, out2) == (code, out)


def test_classify_deterministic(capsys):
    _, first, _ = run(capsys, "classify", "fixture:nosmoothemb")
    _, second, _ = run(capsys, "classify", "fixture:nosmoothemb")
    assert first == second


def test_classify_echo_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "classify", "fixture:smoothemb")
    echo = json.loads(out)["input"]
    path = tmp_path / "echo.json"
    path.write_text(json.dumps(echo))
    code, out2, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert out2 == out


def test_validate_ok_and_failing(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "fixture:hyperbolic")
    assert code == 0
    payload = json.loads(out)
    assert payload["validation"]["ok"] is True
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "lattice_rank": 2,
        "mode": "suitable",
        "generators": [
            {"name": "x", "degree": [1, 0]},
            {"name": "y", "degree": [0, 1]},
        ],
    }))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 2
    payload = json.loads(out)
    assert payload["validation"]["ok"] is False
    assert payload["validation"]["facet_failures"]


def test_partial_verbs(capsys):
    code, out, _ = run(capsys, "orbit-cones", "fixture:hyperbolic")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["orbit_cones"]["cones"]) == 4
    code, out, _ = run(capsys, "git-fan", "fixture:hyperbolic")
    assert code == 0
    assert len(json.loads(out)["git_fan"]["cones"]) == 3
    code, out, _ = run(capsys, "collections", "fixture:hyperbolic")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["collections"]) == 3
    assert "embeddings" not in payload


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(fixture_text("hyperbolic")))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0
    assert out == (GOLDEN / "hyperbolic.classify.json").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "/no/such/file.json"),
        ("classify", "fixture:unknown-name"),
        ("classify", "-"),  # stdin is empty below
        ("classify", "fixture:hyperbolic", "--max-omega", "0"),
    ],
)
def test_input_errors_exit_2(capsys, monkeypatch, argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(""))
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_strict_mode(capsys, tmp_path):
    doc = json.loads(fixture_text("hyperbolic"))
    doc["surprise"] = 1
    path = tmp_path / "extra.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "classify", str(path))
    assert code == 0
    assert "unknown field(s): surprise" in err
    code, out, err = run(capsys, "classify", str(path), "--strict")
    assert code == 2
    assert out == ""


def test_cap_flag_and_env(capsys, monkeypatch):
    code, _, err = run(capsys, "collections", "fixture:smoothemb",
                       "--max-omega", "3")
    assert code == 3
    assert "exceeds" in err
    monkeypatch.setenv("CONEQUOT_MAX_OMEGA", "3")
    code, _, _ = run(capsys, "classify", "fixture:smoothemb")
    assert code == 3
    # explicit flag wins over the environment
    code, _, _ = run(capsys, "classify", "fixture:smoothemb",
                     "--max-omega", "64")
    assert code == 0
    # the cap only applies to collection enumeration
    code, _, _ = run(capsys, "git-fan", "fixture:smoothemb")
    assert code == 0
    monkeypatch.setenv("CONEQUOT_MAX_OMEGA", "many")
    code, _, err = run(capsys, "classify", "fixture:smoothemb")
    assert code == 2
    assert "CONEQUOT_MAX_OMEGA" in err


def test_internal_error_exit_4(capsys, monkeypatch):
    import conequot.cli as cli

    def boom(gi, max_omega=None):
        raise InternalError("synthetic invariant failure")

    monkeypatch.setattr(cli, "classify", boom)
    code, out, err = run(capsys, "classify", "fixture:hyperbolic")
    assert code == 4
    assert out == ""
    assert "internal error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "conequot.cli", "classify", "fixture:hyperbolic"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "hyperbolic.classify.json").read_text()
