import json
import subprocess
import sys
from pathlib import Path

import pytest

from immvar.bposet import Poset, build
from immvar.character import trivial_character
from immvar.cli import main
from immvar.permgrp import alternating_group

INST = Path(__file__).resolve().parent.parent / "instances"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_witt(capsys):
    code, out, _ = run(capsys, "witt", 6, 2)
    assert code == 0 and out["count"] == 9


def test_dim_s3_standard(capsys):
    code, out, _ = run(capsys, "dim", INST / "s3_standard.json")
    assert code == 0 and out == {"dim_formula": 4, "rank_of_image": 4, "agree": True}


def test_matroid_check_sign_3412(capsys):
    code, out, _ = run(capsys, "matroid-check", INST / "sign_3412.json", "--factors", INST / "sign_3412_factors.json")
    assert code == 0
    assert out["is_chi_matroid"] is False
    assert out["witness"] == "123"
    assert out["maxima"] == [[2, 3, 3, 3], [3, 2, 3, 3]]


def test_matroid_check_subset(capsys, tmp_path):
    subset = tmp_path / "x.json"
    subset.write_text(json.dumps([[1, 1, 3], [1, 2, 3], [1, 3, 2], [1, 3, 3]]))
    code, out, _ = run(capsys, "matroid-check", INST / "a3_trivial.json", "--subset", subset)
    assert code == 0 and out["witness"] == "132" and out["maxima"] == [[1, 2, 3], [1, 3, 2]]
    subset.write_text(json.dumps([[3, 1, 1]]))
    code, _, err = run(capsys, "matroid-check", INST / "a3_trivial.json", "--subset", subset)
    assert code == 2 and "not an element" in err


def test_poset_exports_round_trip(capsys, tmp_path):
    dot, js = tmp_path / "a3.dot", tmp_path / "a3.json"
    code, out, _ = run(capsys, "poset", INST / "a3_trivial.json", "--dot", dot, "--json", js)
    assert code == 0
    assert out["size"] == 11 and out["graded"] and out["rank_coefficients"] == [1, 1, 2, 3, 2, 1, 1]
    assert out["lattice"] is False and out["lattice_witness"]["pair"] == [[1, 2, 3], [1, 3, 2]]
    data = json.loads(js.read_text())
    P = build(trivial_character(alternating_group(3)), 3)
    assert Poset.from_dict(data).structure() == P.structure()
    assert data["ranks"] == [P.rank[x] for x in P.elements]
    first = js.read_bytes()
    run(capsys, "poset", INST / "a3_trivial.json", "--json", js)
    assert js.read_bytes() == first
    assert dot.read_text() == P.to_dot()


def test_polya_chow_and_mobius(capsys):
    code, out, _ = run(capsys, "polya", INST / "young_211.json")
    assert out["coefficients"] == [1, 3, 4, 3, 1]
    code, out, _ = run(capsys, "chow", INST / "s2_trivial.json")
    assert out["hp_upper_bound"] == "1 + q + 2*q^2 + q^3 + q^4"
    assert {"index": [2, 3], "dimension": 3} in out["generators"]
    assert out["generators_note"] == "generators, possibly redundant"
    code, out, _ = run(capsys, "mobius", INST / "s2_trivial.json", "--x", "11", "--y", "33")
    assert out["mobius"] == 0
    code, _, _ = run(capsys, "mobius", INST / "s2_trivial.json", "--x", "13", "--y", "22")
    assert code == 2


def test_equations(capsys):
    code, out, _ = run(capsys, "equations", INST / "s3_standard.json")
    eqs = {tuple(e["index"]): e["polynomial"] for e in out["equations"]}
    assert eqs[(1, 1, 1)] == "0" and eqs[(2, 2, 2)] == "0"
    assert eqs[(1, 1, 2)] == "2*a_1_1*a_1_2*a_2_3 - a_1_1*a_1_3*a_2_2 - a_1_2*a_1_3*a_2_1"
    code, out, _ = run(capsys, "equations", INST / "s2_trivial.json", "--stratum", "23")
    eqs = {tuple(e["index"]): e["polynomial"] for e in out["equations"]}
    assert out["dimension"] == 3 and eqs[(3, 3)] == "0"
    code, _, err = run(capsys, "equations", INST / "sign_3412.json", "--stratum", "2233")
    assert code == 2


def test_immanant_numeric_and_symbolic(capsys, tmp_path):
    M = tmp_path / "m.json"
    M.write_text(json.dumps([["1/2", 3, 0], [1, -1, "2/3"]]))
    code, out, _ = run(capsys, "immanant", INST / "s2_trivial.json", "--matrix", M, "--x", "12", "--y", "13")
    # 1/2 * 2/3 + 1 * 0
    assert code == 0 and out["value"] == "1/3"
    code, out, _ = run(capsys, "immanant", INST / "s2_trivial.json", "--x", "22", "--y", "12")
    assert out["value"] == "2*a_2_1*a_2_2"


def test_support_and_shell(capsys):
    code, out, _ = run(capsys, "support", INST / "sign_3412.json", "--factors", INST / "sign_3412_factors.json")
    assert out["support"] == [[2, 2, 3, 3], [2, 3, 3, 3], [3, 2, 3, 3]]
    code, out, _ = run(capsys, "shell", INST / "a3_trivial.json", "--interval", "113", "133")
    assert out["shelling"]["status"] == "yes" and out["reduced_euler_characteristic"] == 0


def test_exploratory_reversal_scenario(capsys):
    code, out, _ = run(capsys, "shell", INST / "reversal_4321.json")
    assert code == 0
    assert out["facets"] == 528 and out["pure"]
    assert out["shelling"]["status"] == "unknown"


def test_malformed_specs(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 3, "n": 2, "generators": ["112"]}')
    code, _, err = run(capsys, "dim", bad)
    assert code == 2 and "generators[0]" in err
    bad.write_text('{"k": 3, "n": 2,\n "generators": [}')
    code, _, err = run(capsys, "dim", bad)
    assert code == 2 and "line 2" in err
    bad.write_text('{"k": 3, "n": 2, "generators": ["213"], "character": {"type": "table", "values": [2, 0, 1]}}')
    code, _, err = run(capsys, "dim", bad)
    assert code == 2 and "character" in err
    bad.write_text('{"k": 3, "n": 2, "character": {"type": "nope"}}')
    code, _, err = run(capsys, "dim", bad)
    assert code == 2 and "character.type" in err
    code, _, _ = run(capsys, "dim", tmp_path / "missing.json")
    assert code == 2


def test_bound_exceeded(capsys, tmp_path):
    spec = tmp_path / "big.json"
    spec.write_text('{"k": 3, "n": 3, "generators": ["213", "132"], "bounds": {"work": 5}}')
    code, _, err = run(capsys, "poset", spec)
    assert code == 3 and "bound" in err


def test_verify(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    code, out, err = run(capsys, "verify", "--suite", "gale", "--seed", "3")
    assert code == 0 and out["ok"] and out["seed"] == 3
    assert "PASS gale" in err and "\033[" not in err
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from immvar import suites

    def broken(seed):
        r = suites.SuiteResult("broken")
        r.check(False, "deliberate")
        return r

    monkeypatch.setitem(suites.SUITES, "broken", broken)
    code, out, err = run(capsys, "verify", "--suite", "broken")
    assert code == 1 and not out["ok"] and "deliberate" in err


@pytest.mark.slow
def test_verify_all_parallel_deterministic():
    cmd = [sys.executable, "-m", "immvar", "--parallel", "verify", "--seed", "11"]
    a = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    b = subprocess.run([sys.executable, "-m", "immvar", "verify", "--seed", "11"], capture_output=True, text=True, timeout=600)
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
