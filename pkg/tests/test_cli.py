import json
import shutil
import subprocess
import sys

from garding.cli import main
from garding.fixtures import fixture_root


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_poly_parse_and_eval(capsys):
    code, out, _ = run(capsys, "poly", "parse", "--poly", "x1*x2 - 1")
    assert code == 0 and out.strip() == "x1*x2 - 1"
    code, data = run_json(capsys, "poly", "eval", "--poly", "x1*x2 - 1", "--at", "2,3")
    assert code == 0 and data == {"value": "5"}


def test_poly_transforms(capsys):
    code, out, _ = run(capsys, "poly", "ttau", "--poly", "x^4 + 4*x^3 + 6*x^2", "--kappa", "4")
    assert code == 0 and out.strip() == "6*x^2 - 4*x + 1"


def test_roots_json(capsys):
    code, data = run_json(capsys, "roots", "--poly", "x^2 - 2")
    assert code == 0
    assert data["real_rooted"] is True
    assert len(data["roots"]) == 2


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "garding", "--poly", "x1*x2 + x1 + x2")[0] == 0
    assert run(capsys, "check", "mrs", "--poly", "x^3 + 9*x^2 + 24*x + 21")[0] == 1
    assert run(capsys, "check", "garding", "--poly", "x1*x2*x3 + x1*x2 + x2*x3 + x1*x3")[0] == 2
    assert run(capsys, "check", "ulc", "--seq", "1,3,1")[0] == 0
    assert run(capsys, "check", "lorentzian", "--poly", "x1^2 + x2^2")[0] == 1


def test_check_json_is_deterministic(capsys):
    argv = ("check", "rays", "--poly", "fixture:fano_basis_ray", "--seed", "5")
    code1, a = run_json(capsys, *argv)
    code2, b = run_json(capsys, *argv)
    assert code1 == code2 == 1
    assert a == b
    assert a["status"] == "Refuted"


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 64
    assert run(capsys)[0] == 64
    assert run(capsys, "poly", "parse", "--poly", "x1 +* 2")[0] == 64
    assert run(capsys, "check", "rayleigh", "--poly", "x^3 + x")[0] == 64
    assert run(capsys, "--probes", "0", "check", "garding", "--poly", "x1")[0] == 64


def test_matroid_commands(capsys):
    code, out, _ = run(capsys, "matroid", "genfun", "--named", "u24", "--which", "bsgf")
    assert code == 0
    assert out.strip() == "w1*w2 + w1*w3 + w1*w4 + w2*w3 + w2*w4 + w3*w4"
    code, data = run_json(capsys, "matroid", "op", "--named", "u24", "--dual")
    assert code == 0 and data["rank"] == 2 and len(data["bases"]) == 6
    code, data = run_json(capsys, "matroid", "genfun", "--named", "fano", "--which", "bsgf", "--method", "mobius")
    assert code == 0


def test_matroid_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run(capsys, "matroid", "genfun", "--matroid", str(path), "--which", "bsgf")
    assert code == 0 and out.strip() == "w1*w2 + w1*w3 + w2*w3"


def test_matrix_commands(capsys):
    code, out, _ = run(capsys, "matrix", "classify", "--matrix", "[[2,-1],[-1,2]]")
    assert code == 0 and out.strip() == "M_matrix"
    code, out, _ = run(capsys, "matrix", "genpoly", "--matrix", "[[2,-1],[-1,2]]")
    assert code == 0 and out.strip() == "3*x1*x2 - x1 - x2"


def test_fixture_listing_and_dump(capsys):
    code, data = run_json(capsys, "fixtures", "list")
    assert code == 0
    assert "fano" in data["matroids"]
    code, data = run_json(capsys, "fixtures", "dump", "mk4")
    assert code == 0 and len(data["bases"]) == 16
    assert run(capsys, "fixtures", "dump", "missing")[0] == 64


def test_fixture_override(tmp_path, monkeypatch, capsys):
    shutil.copytree(fixture_root(), tmp_path / "data")
    (tmp_path / "data" / "polynomials" / "mine.txt").write_text("# comment\nx^2 - 1\n")
    monkeypatch.setenv("GARDING_FIXTURES", str(tmp_path / "data"))
    code, data = run_json(capsys, "fixtures", "list")
    assert "mine" in data["polynomials"]
    code, out, _ = run(capsys, "poly", "parse", "--poly", "fixture:mine")
    assert code == 0 and out.strip() == "x^2 - 1"


def test_console_script_and_module():
    exe = shutil.which("garding")
    cmd = [exe] if exe else [sys.executable, "-m", "garding"]
    proc = subprocess.run(cmd + ["check", "mrs", "--poly", "x^3 + x^2"], capture_output=True, text=True)
    assert proc.returncode == 0
    proc = subprocess.run([sys.executable, "-m", "garding", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 64


def test_report_command(capsys):
    code, out, _ = run(capsys, "paper-report")
    lines = out.splitlines()
    assert lines[-1] == "10/11 criteria pass"
    assert any(ln.startswith("AC4") and "FAIL" in ln for ln in lines)
    assert code == 1
