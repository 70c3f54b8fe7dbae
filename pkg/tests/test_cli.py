import json
import subprocess
import sys

import pytest

from quantmat.cli import main
from quantmat.minors import quantum_determinant
from quantmat.pbw import MatElement, Shape
from quantmat.serialize import dumps, from_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_primitivity(capsys):
    code, out, _ = run(capsys, "primitivity", "--m", "2", "--n", "3")
    assert code == 0 and "primitive: true" in out
    code, out, _ = run(capsys, "primitivity", "--m", "2", "--n", "2", "--json")
    assert code == 0 and json.loads(out)["primitive"] is False


def test_stratum_dim(capsys):
    assert run(capsys, "stratum-dim", "--m", "2", "--n", "2")[:2] == (0, "2\n")


def test_hprime_rejects_variable(capsys):
    code, out, err = run(capsys, "hprime", "--m", "1", "--n", "3", "--poly", "X1")
    assert code == 2 and out == ""
    assert "V != X_i" in err


def test_hprime_parse_error(capsys):
    code, _, err = run(capsys, "hprime", "--m", "1", "--n", "3", "--poly", "X1 + * 1")
    assert code == 2 and "position 5" in err


def test_hprime_det_shift(capsys):
    code, out, _ = run(capsys, "hprime", "--m", "2", "--n", "2", "--poly", "X2 - 1")
    doc = json.loads(out)
    assert code == 0 and doc["q_normal"]
    assert from_document(doc["u"]) == quantum_determinant(2) - MatElement.one(Shape(2, 2))


def test_minor_then_normal_check(capsys, tmp_path):
    code, out, _ = run(capsys, "minor", "--m", "2", "--n", "2", "--rows", "1,2", "--cols", "1,2")
    assert code == 0 and from_document(json.loads(out)) == quantum_determinant(2)
    f = tmp_path / "det.json"
    f.write_text(out)
    code, out, _ = run(capsys, "normal-check", "--in", str(f))
    ratios = json.loads(out)["ratios"]
    assert code == 0 and all(r["ratio"]["text"] == "1" for r in ratios)


def test_normal_check_failure(capsys, tmp_path):
    s = Shape(2, 2)
    f = tmp_path / "x.json"
    f.write_text(dumps(MatElement.gen(s, 1, 1) + MatElement.gen(s, 2, 2)))
    code, out, _ = run(capsys, "normal-check", "--in", str(f))
    assert code == 1 and out.strip() == "not q-normal"


def test_mul(capsys, tmp_path):
    s = Shape(2, 2)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(dumps(MatElement.gen(s, 2, 2)))
    b.write_text(dumps(MatElement.gen(s, 1, 1)))
    code, out, _ = run(capsys, "mul", "--lhs", str(a), "--rhs", str(b))
    assert code == 0
    assert from_document(json.loads(out)) == MatElement.gen(s, 2, 2) * MatElement.gen(s, 1, 1)
    code, _, err = run(capsys, "mul", "--lhs", str(a), "--rhs", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_restore_center_bgens(capsys):
    code, out, _ = run(capsys, "restore", "--m", "2", "--n", "3", "--verify")
    doc = json.loads(out)
    assert code == 0 and doc["embedding"] and doc["normalT"]
    code, out, _ = run(capsys, "center", "--m", "1", "--n", "3")
    assert code == 0 and json.loads(out)["vectors"] == [[1, -1, 1]]
    code, out, _ = run(capsys, "b-gens", "--m", "2", "--n", "3")
    doc = json.loads(out)
    assert code == 0 and doc["complete"] and len(doc["generators"]) == 4


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-size", "12")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("cases passed")


@pytest.mark.parametrize("argv", [
    ["primitivity", "--m", "2"],
    ["nonsense"],
    ["minor", "--m", "2", "--n", "2", "--rows", "1,x", "--cols", "1,2"],
    ["minor", "--m", "2", "--n", "2", "--rows", "1,3", "--cols", "1,2"],
    ["stratum-dim", "--m", "0", "--n", "2"],
    ["verify", "--suite", "bogus"],
])
def test_invalid_input_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quantmat", "stratum-dim", "--m", "2", "--n", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
