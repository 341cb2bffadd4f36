from __future__ import annotations

import json
from importlib import resources

import pytest

from schurbound.cli import main
from schurbound.fixtures import TABLE1

DATA = resources.files("schurbound") / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_intro(capsys):
    code, out, _ = run(capsys, "analyze", "--input", DATA / "intro_g.json", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["invariants"] == {"p": 3, "n": 10, "d": 6, "delta": 5, "k": 4, "kprime": 4}
    assert doc["exact"] == {"schur": 23, "h2": 29}
    assert doc["capability"] == "Capable" and doc["chain_ok"]
    names = {b["name"]: b["effective"] for b in doc["bounds"]}
    assert names["thm33"] == 25
    assert names["thm33"] >= names["ew_chain"] >= 23


def test_analyze_text_and_order(capsys):
    code, out, _ = run(capsys, "analyze", "--input", DATA / "example1.json")
    assert code == 0
    assert "pair basis: {1,2} {1,3} {2,4} {2,5}" in out
    code, out, _ = run(capsys, "analyze", "--input", DATA / "example1.json", "--order", "5,4,3,2,1", "--json")
    assert code == 0 and json.loads(out)["input"]["order"] == [5, 4, 3, 2, 1]
    code, _, err = run(capsys, "analyze", "--input", DATA / "example1.json", "--order", "1,1,2,3,4")
    assert code == 2 and "error" in err


def test_analyze_deterministic(capsys):
    docs = []
    for _ in range(2):
        code, out, _ = run(capsys, "analyze", "--input", DATA / "special.json", "--json")
        doc = json.loads(out)
        doc.pop("timing_seconds")
        docs.append(doc)
    assert docs[0] == docs[1]
    assert docs[0]["exact"]["schur"] == 14


@pytest.mark.parametrize(
    "body, field",
    [
        ('{"p": 3, "dimU": 3, "entries": []}', "dimV"),
        ('{"p": 4, "dimU": 3, "dimV": 1, "entries": []}', "p"),
        ('{"p": 3, "dimU": 3, "dimV": 1, "entries": [{"i": 2, "j": 1, "value": [1]}]}', "i"),
        ('{"p": 3, "dimU": 3, "dimV": 1, "entries": [{"i": 1, "j": 2, "value": [1, 0]}]}', "value"),
    ],
)
def test_analyze_malformed(capsys, tmp_path, body, field):
    f = tmp_path / "bad.json"
    f.write_text(body)
    code, _, err = run(capsys, "analyze", "--input", f)
    assert code == 2
    assert field in err


def test_analyze_not_json(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert run(capsys, "analyze", "--input", f)[0] == 2
    assert run(capsys, "analyze", "--input", tmp_path / "missing.json")[0] == 2


@pytest.mark.parametrize("row", TABLE1)
def test_bounds_table(capsys, row):
    (p, n, d, delta, k, kp), general, comparison = row
    code, out, _ = run(
        capsys, "bounds", "--p", p, "--n", n, "--d", d, "--delta", delta, "--k", k, "--kprime", kp, "--json"
    )
    assert code == 0
    eff = {b["name"]: b["effective"] for b in json.loads(out)["bounds"]}
    assert eff["thm33"] == general and eff["rai_ineq4"] == comparison


def test_bounds_invalid(capsys):
    code, _, err = run(capsys, "bounds", "--p", 3, "--n", 5, "--d", 3, "--delta", 4, "--k", 2, "--kprime", 2)
    assert code == 2 and "error" in err
    assert run(capsys, "bounds", "--p", 4, "--n", 6, "--d", 3, "--delta", 3, "--k", 3, "--kprime", 3)[0] == 2


def test_construct(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, text, _ = run(capsys, "construct", "--p", 3, "--d", 6, "--delta", 6, "--k", 11, "--out", out, "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["schur_exponent"] == 51 and doc["capability"] == "Capable"
    assert out.exists() and (tmp_path / "g.presentation.txt").exists()
    code, text, _ = run(capsys, "analyze", "--input", out, "--json")
    assert code == 0 and json.loads(text)["exact"]["schur"] == 51


def test_construct_infeasible(capsys, tmp_path):
    code, _, err = run(capsys, "construct", "--p", 3, "--d", 5, "--delta", 4, "--k", 2, "--out", tmp_path / "x.json")
    assert code == 2 and "error" in err
    assert not (tmp_path / "x.json").exists()


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--grid", "sharpness:p=3;delta=2..4;a=0", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == 0 and doc["cases"] == 1 + 2 + 4
    code, out2, _ = run(capsys, "sweep", "--grid", "sharpness:p=3;delta=2..4;a=0", "--json", "--parallel", 2)
    assert code == 0 and json.loads(out2) == doc


def test_sweep_empty_and_bad(capsys):
    code, out, _ = run(capsys, "sweep", "--grid", "lemma37:delta=5..4", "--json")
    assert code == 0 and json.loads(out)["cases"] == 0
    assert run(capsys, "sweep", "--grid", "nosuch")[0] == 2
    assert run(capsys, "sweep", "--grid", "lemma37:delta=a..b")[0] == 2
    assert run(capsys, "sweep", "--grid", "lemma37:zeta=3")[0] == 2
    assert run(capsys, "sweep", "--grid", "lemma37", "--parallel", 0)[0] == 2


def test_triangles(capsys):
    code, out, _ = run(capsys, "triangles", "--edges", 10, "--json")
    assert code == 0 and json.loads(out)["max_triangles"] == 10
    code, out, _ = run(capsys, "triangles", "--edges", 8, "--oracle", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["max_triangles"] == 5 and doc["oracle"]["agrees"]
    code, out, _ = run(capsys, "triangles", "--edges", 0, "--json")
    assert code == 0 and json.loads(out)["max_triangles"] == 0
    assert run(capsys, "triangles", "--edges", -1)[0] == 2
    code, _, err = run(capsys, "triangles", "--edges", 10, "--oracle", "--work-cap", 10)
    assert code == 2 and "error" in err


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["counts"]["fail"] == 0 and doc["counts"]["pass"] >= 30
    assert doc["counts"]["documented-mismatch"] == 3
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0 and "documented-mismatch" in out


def test_verify_paper_corrupt(capsys, tmp_path):
    f = tmp_path / "store.json"
    f.write_text('[{"id": "x", "check": "rt_decompose"')
    assert run(capsys, "verify-paper", "--fixtures", f)[0] == 2
    f.write_text('[{"id": "x", "check": "nosuch", "args": {}, "expected": 1}]')
    assert run(capsys, "verify-paper", "--fixtures", f)[0] == 2
    f.write_text('[{"id": "x", "check": "rt_decompose", "args": {"value": 5}}]')
    assert run(capsys, "verify-paper", "--fixtures", f)[0] == 2


def test_verify_paper_wrong_value(capsys, tmp_path):
    f = tmp_path / "store.json"
    f.write_text(json.dumps([
        {"id": "ok", "check": "rt_decompose", "args": {"value": 5}, "expected": [3, 2]},
        {"id": "bad", "check": "rt_decompose", "args": {"value": 5}, "expected": [3, 1]},
    ]))
    code, out, _ = run(capsys, "verify-paper", "--fixtures", f)
    assert code == 3 and "fail" in out and "bad" in out


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "schurbound", "triangles", "--edges", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and "max triangles: 1" in r.stdout
