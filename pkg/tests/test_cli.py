import json
import shutil
import subprocess
import sys

import pytest

from orbitlab.cli import main
from orbitlab.orbits import SubgroupSpec
from orbitlab.fields import QQ
from orbitlab.serialize import tuple_to_json
from orbitlab.zoo import gl2_pair


@pytest.fixture
def files(tmp_path):
    x, y = gl2_pair(2)
    px, py = tmp_path / "x.json", tmp_path / "y.json"
    px.write_text(json.dumps(tuple_to_json(x)))
    py.write_text(json.dumps(tuple_to_json(y)))
    ps = tmp_path / "h.json"
    ps.write_text(json.dumps(SubgroupSpec("DiagonalTorus", 2, QQ).to_json()))
    return tmp_path, px, py, ps


def run(args, capsys):
    code = main([str(a) for a in args])
    return code, capsys.readouterr()


def test_closed_and_verify(files, capsys):
    tmp, px, py, _ = files
    out = tmp / "c.json"
    code, _ = run(["--out", out, "closed", px], capsys)
    assert code == 0 and json.loads(out.read_text())["verdict"] == "NotClosed"
    code, res = run(["verify", out], capsys)
    assert code == 0 and json.loads(res.out)["valid"]
    code, res = run(["closed", py], capsys)
    assert code == 0 and json.loads(res.out)["verdict"] == "Closed"


def test_mutated_certificate_exit_3(files, capsys):
    tmp, px, _, _ = files
    out = tmp / "c.json"
    run(["--out", out, "closed", px], capsys)
    d = json.loads(out.read_text())
    d["limit_value"]["entries"][0]["entries"][1][1] = "5"
    out.write_text(json.dumps(d))
    code, res = run(["verify", out], capsys)
    assert code == 3 and not json.loads(res.out)["valid"]


def test_destab_with_subgroup(files, capsys):
    _, px, _, ps = files
    code, res = run(["destab", px, "--subgroup", ps, "--bound", "2"], capsys)
    d = json.loads(res.out)
    assert code == 0 and d["verdict"] == "NotClosed" and d["lattice_weights"] == [1, -1]


def test_gcr(files, capsys):
    _, px, py, _ = files
    code, res = run(["gcr", px], capsys)
    assert code == 0 and json.loads(res.out)["verdict"] == "NotClosed"
    code, res = run(["gcr", py], capsys)
    assert json.loads(res.out)["verdict"] == "Closed"


def test_torus_command(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"rank": 1, "weights": [[1], [2]]}))
    code, res = run(["torus", p], capsys)
    assert code == 0 and json.loads(res.out)["normal"] == [1]


def test_precondition_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"entries": [{"field": {"kind": "Q"}, "rows": 2, "cols": 2, "entries": [["0", "0"], ["0", "0"]]}]}))
    code, _ = run(["gcr", p], capsys)
    assert code == 2
    code, _ = run(["closed", tmp_path / "missing.json"], capsys)
    assert code == 2


def test_zoo_list_and_run(capsys):
    code, res = run(["zoo", "list"], capsys)
    d = json.loads(res.out)
    assert code == 0 and "gl2" in d["suites"] and len(d["instances"]) >= 35
    code, res = run(["zoo", "run", "--suite", "gl2"], capsys)
    assert code == 0 and json.loads(res.out)["passed"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "orbitlab.cli", "zoo", "list"], capture_output=True, text=True)
    assert res.returncode == 0


def test_console_script_installed():
    exe = shutil.which("orbitlab")
    if exe is None:
        pytest.skip("package not installed with its console script")
    res = subprocess.run([exe, "zoo", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "twovarieties" not in res.stderr
