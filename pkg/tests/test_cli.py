import io
import json
import sys

import pytest

from qtrace3d import cli
from qtrace3d.fixture import FIGURE_EIGHT_JSON


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "f41.json"
    path.write_text(FIGURE_EIGHT_JSON)
    return str(path)


def run_cli(argv, stdin_text=None, capsys=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_fixture_pipes_into_quantum_trace(capsys, monkeypatch):
    code, out, _ = run_cli(["fixture", "41"], capsys=capsys)
    assert code == 0
    code, out, _ = run_cli(
        ["trace", "quantum", "-", "meridian"],
        stdin_text=out, capsys=capsys, monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out.strip() == "z0 w1^-1 + z0^-1 w1"


def test_tri_info_plain_and_json(tri_file, capsys):
    code, out, _ = run_cli(["tri", "info", tri_file], capsys=capsys)
    assert code == 0
    assert out.strip() == "N=2, edges: [6, 6], cusps: 1"
    code, out, _ = run_cli(["tri", "info", tri_file, "--json"], capsys=capsys)
    assert code == 0
    info = json.loads(out)
    assert info["num_cusps"] == 1


def test_output_is_deterministic(tri_file, capsys):
    outputs = set()
    for _ in range(3):
        code, out, _ = run_cli(["trace", "quantum", tri_file, "longitude"],
                               capsys=capsys)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_curve_resolve_word(tri_file, capsys):
    code, out, _ = run_cli(
        ["curve", "resolve", tri_file, "L0:C0:S0=Aa", "--json"], capsys=capsys
    )
    assert code == 0
    arcs = json.loads(out)
    assert len(arcs) == 2 and all(a["kind"] == "alpha" for a in arcs)


def test_frobenius_check_json_report(tri_file, capsys):
    code, out, _ = run_cli(
        ["frobenius", "check", tri_file, "meridian", "--N", "2", "--bound", "6"],
        capsys=capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "equal-with-certificate"
    assert report["N"] == 2


def test_usage_errors_exit_two(tri_file, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()
    code, _, err = run_cli(["trace", "quantum", tri_file, "badcurve"],
                           capsys=capsys)
    assert code == 2
    assert "curve" in err


def test_computation_errors_exit_one(tri_file, capsys):
    # a malformed word is a computation (curve) failure
    code, _, err = run_cli(["trace", "quantum", tri_file, "L0:C0:S0=agga"],
                           capsys=capsys)
    assert code == 1
    assert err.strip()


def test_missing_file_exits_one(capsys):
    code, _, err = run_cli(["tri", "info", "/nonexistent.json"], capsys=capsys)
    assert code == 1
