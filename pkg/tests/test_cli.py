import json
import subprocess
import sys

import pytest

from easyqg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["v"] == 1
    return data


def test_enumerate(capsys):
    data = run_json(capsys, "enumerate", "--family", "NC2", "--legs", "6")
    assert data["count"] == 5 and len(data["partitions"]) == 5


def test_integrate_examples(capsys):
    data = run_json(capsys, "integrate", "--family", "P", "--N", "4", "--i", "1,1", "--j", "1,2")
    assert (data["num"], data["den"]) == ("0", "1")
    data = run_json(capsys, "integrate", "--family", "P2", "--N", "2", "--i", "1,1,1,1", "--j", "1,1,1,1")
    assert (data["num"], data["den"]) == ("3", "8")
    data = run_json(capsys, "integrate", "--family", "MatchP2", "--N", "3", "--word", "oo*", "--i", "1,1", "--j", "1,1")
    assert (data["num"], data["den"]) == ("1", "3")


def test_integrate_twisted_and_partial_isometry(capsys):
    args = ("integrate", "--family", "P2", "--N", "2", "--i", "1,2,1,2", "--j", "1,2,2,1")
    plain = run_json(capsys, *args)
    twisted = run_json(capsys, *args, "--twisted")
    assert (plain["num"], plain["den"]) == ("-1", "8")
    assert (twisted["num"], twisted["den"]) == ("1", "8")
    data = run_json(capsys, "integrate", "--family", "P2", "--N", "4", "--L", "1", "--M", "1", "--i", "1,1", "--j", "1,1")
    assert (data["num"], data["den"]) == ("1", "4")


def test_fusion(capsys):
    data = run_json(capsys, "fusion", "--family", "OPlus", "--k", "4")
    assert {k: v for k, v in data.items() if k != "v"} == {"r4": 1, "r2": 3, "r0": 2}
    data = run_json(capsys, "fusion", "--family", "UPlus", "--word", "ob")
    assert data["r_ob"] == 1 and data["r_e"] == 1


def test_gram_formats(capsys):
    code, out, _ = run(capsys, "gram", "--family", "P", "--N", "3", "--k", "2", "--format", "csv")
    assert code == 0 and out.split() == ["9,3", "3,3"]
    data = run_json(capsys, "weingarten", "--family", "P2", "--N", "3", "--k", "4")
    assert data["matrix"][0][0] == {"num": "2", "den": "15"}


def test_laws(capsys):
    data = run_json(capsys, "law", "--kind", "Semicircle", "--kmax", "6")
    assert [m["num"] for m in data["moments"]] == ["0", "1", "0", "2", "0", "5"]
    data = run_json(capsys, "cumulants", "--kind", "Poisson", "--t", "1/2", "--kmax", "3", "--mode", "classical")
    assert [(c["num"], c["den"]) for c in data["cumulants"]] == [("1", "2")] * 3
    data = run_json(capsys, "bp-check", "--classical", "P2", "--free", "NC2", "--kmax", "6")
    assert data["passed"] and len(data["rows"]) == 6


def test_generate(capsys):
    data = run_json(capsys, "generate", "--bound", "4")
    cells = {c["cell"]: c["count"] for c in data["cells"]}
    assert cells["/----"] == 2 and cells["--/--"] == 2


def test_growth(capsys):
    data = run_json(capsys, "growth", "--family", "OPlus", "--N", "2", "--kmax", "3")
    assert data["b"] == [1, 5, 14, 30]


def test_model_commands(capsys, tmp_path):
    data = run_json(capsys, "model", "check", "--fourier", "3", "--pmax", "2")
    assert data["passed"] and data["tol"] == 1e-9
    data = run_json(capsys, "model", "moments", "--weyl", "z2", "--group", "su2", "--pmax", "3")
    assert [row["moment"] for row in data["moments"]] == [1, 2, 5]
    path = tmp_path / "h.json"
    path.write_text(json.dumps([["1", "1"], ["1", "-1"]]))
    data = run_json(capsys, "model", "check", "--input", str(path), "--pmax", "2")
    assert data["passed"]


def test_output_file(capsys, tmp_path):
    out = tmp_path / "out.json"
    code, stdout, _ = run(capsys, "fusion", "--family", "SPlus", "--k", "2", "--out", str(out))
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["r2"] == 1


def test_deterministic_output(capsys):
    args = ("model", "moments", "--weyl", "z2", "--group", "su2", "--pmax", "2", "--mode", "mc",
            "--samples", "2000", "--seed", "5")
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a == b


@pytest.mark.parametrize(
    "argv,code",
    [
        (["enumerate", "--family", "Q", "--legs", "2"], 2),
        (["enumerate", "--family", "P", "--legs", "13"], 3),
        (["integrate", "--family", "P", "--N", "2", "--i", "1", "--j", "1,1"], 2),
        (["integrate", "--family", "MatchP2", "--N", "2", "--word", "ox", "--i", "1,1", "--j", "1,1"], 2),
        (["law", "--kind", "Gaussian", "--kmax", "3", "--format", "csv"], 2),
        (["model", "check", "--input", "/nonexistent.json"], 2),
        ([], 2),
        (["bogus"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "easyqg", "fusion", "--family", "OPlus", "--k", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"v": 1, "r2": 1, "r0": 1}
