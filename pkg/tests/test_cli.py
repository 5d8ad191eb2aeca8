import json
import subprocess
import sys

import pytest

from seifertkit.braid import BraidWord
from seifertkit.cli import main
from seifertkit.diagram import closure_to_diagram


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_braid(capsys):
    code, out, _ = run(capsys, "invariants", "--braid", "1 1 1")
    assert code == 0
    data = json.loads(out)
    assert data["alexander"] == "1 - t + t^2"
    assert data["conway"] == "1 + w^2"
    assert data["genus"]["g"] == 1
    assert data["fibrability"] == "fibred-by-homogeneity"
    assert list(data) == sorted(data)


def test_invariants_output_is_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["invariants", "--name", "figure-eight", "--out", str(out1)]) == 0
    assert main(["invariants", "--name", "figure-eight", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_invariants_from_pd_files(capsys, tmp_path):
    oriented = tmp_path / "fig8.json"
    oriented.write_text(closure_to_diagram(BraidWord(3, (1, -2, 1, -2))).to_json())
    code, out, _ = run(capsys, "invariants", "--pd", str(oriented))
    assert code == 0 and json.loads(out)["alexander"] == "1 - 3*t + t^2"
    table = tmp_path / "trefoil.json"
    table.write_text("[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]")
    code, out, _ = run(capsys, "invariants", "--pd", str(table))
    assert code == 0 and json.loads(out)["alexander"] == "1 - t + t^2"


@pytest.mark.parametrize("argv,needle", [
    (["invariants", "--braid", "1 x"], "bad braid token 'x'"),
    (["invariants"], "exactly one"),
    (["invariants", "--braid", "1", "--name", "unknot"], "exactly one"),
    (["invariants", "--name", "granny"], "no catalog entry"),
    (["invariants", "--pd", "/nonexistent/x.json"], "cannot read"),
    (["framing", "--braid", "1 1 1", "--convention", "explicit"], "needs --twist"),
    (["fiber", "--alpha", "2"], "go together"),
    (["fiber", "--base", "1,0"], "needs 3 numbers"),
])
def test_usage_errors_exit_2(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert needle in err


def test_bad_pd_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    code, _, err = run(capsys, "invariants", "--pd", str(p))
    assert code == 2 and "invalid JSON" in err


def test_seifert(capsys):
    code, out, _ = run(capsys, "seifert", "--braid", "1 -2 1 -2")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[-1, -1], [0, 1]]
    assert (data["s"], data["c"], data["mu"], data["chi"], data["g"]) == (3, 4, 1, -1, 1)
    code, out, _ = run(capsys, "seifert", "--braid", "1 1 1", "--no-matrix")
    assert json.loads(out)["matrix"] is None


def test_seifert_split_braid_fails(capsys):
    code, _, err = run(capsys, "seifert", "--braid", "n=3 1 1")
    assert code == 1 and "check failed" in err


def test_framing(capsys):
    code, out, _ = run(capsys, "framing", "--braid", "1 1 1")
    assert json.loads(out) == {"convention": "vertical", "preferred_n": 3, "self_linking": 6,
                               "twist": 3, "writhe": 3}
    code, out, _ = run(capsys, "framing", "--name", "figure-eight", "--convention", "explicit", "--twist", "2")
    assert json.loads(out)["self_linking"] == 2
    code, _, _ = run(capsys, "framing", "--braid", "1 1")
    assert code == 1


def test_fibration_check(capsys):
    code, out, _ = run(capsys, "fibration-check", "--name", "knot-5-2")
    assert code == 0 and json.loads(out)["verdict"] == "not-fibred"
    code, _, err = run(capsys, "fibration-check", "--name", "kt-11n42")
    assert code == 0
    code, _, _ = run(capsys, "fibration-check", "--braid", "1 1")
    assert code == 1


def test_fiber_and_linking(capsys, tmp_path):
    a, b, k = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "k.csv"
    assert main(["fiber", "--base", "1,0,0", "--out", str(a)]) == 0
    assert main(["fiber", "--base", "0,1,0", "--out", str(b)]) == 0
    assert main(["fiber", "--alpha", "2", "--beta", "3", "--samples", "1000", "--out", str(k)]) == 0
    assert a.read_text().splitlines()[0] == "t,x,y,z"
    code, out, _ = run(capsys, "linking", str(a), str(b))
    assert code == 0 and json.loads(out)["nearest_integer"] == 1
    code, _, err = run(capsys, "linking", str(a), str(a))
    assert code == 1 and "intersect" in err


def test_fiber_4d_to_stdout(capsys):
    code, out, _ = run(capsys, "fiber", "--alpha", "2", "--beta", "3", "--samples", "8", "--dim", "4")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "t,x1,x2,x3,x4" and len(lines) == 9


def test_fiber_non_coprime(capsys):
    code, _, err = run(capsys, "fiber", "--alpha", "2", "--beta", "4")
    assert code == 1 and "gcd" in err
    code, _, _ = run(capsys, "fiber", "--alpha", "2", "--beta", "4", "--allow-link", "--samples", "16")
    assert code == 0


def test_field(capsys):
    code, out, err = run(capsys, "field", "--grid", "3", "--extent", "1.0")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,y,z,Bx,By,Bz,Ex,Ey,Ez"
    skipped = int(err.split()[1]) if err else 0
    assert len(lines) - 1 + skipped == 27


def test_catalog_listing_and_verify(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "trefoil-right" in {e["name"] for e in json.loads(out)}
    code, out, _ = run(capsys, "catalog", "--verify", "--include-optional")
    assert code == 0 and out.rstrip().endswith("rows passed")
    code, out, _ = run(capsys, "catalog", "--verify", "--name", "kt-11n42")
    assert code == 0 and "kt-11n42" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "seifertkit", "invariants", "--braid", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["alexander"] == "1"
