import json
import subprocess
import sys
from pathlib import Path

import pytest

import fpfposet.cli as cli
from fpfposet.export import poset_from_dict, read_enumeration_csv
from fpfposet.involution import count_fpf, enumerate_fpf
from fpfposet.rises import fpf_poset

DATA = Path(__file__).parent / "data"


def fpf(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("N", "FORMAT", "DIRECTION", "WORKERS", "OUT", "ENUMERATION_CAP", "CHAIN_CAP",
                 "RIDGE_MEM_CAP"):
        monkeypatch.delenv("FPF_" + name, raising=False)


def test_enumerate_csv_round_trip(capsys):
    code, out, _ = fpf(capsys, "enumerate", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "index,cycle,brackets,word,length"
    assert read_enumeration_csv(out) == enumerate_fpf(4)


def test_enumerate_json_and_text(capsys):
    _, out, _ = fpf(capsys, "enumerate", "--n", "3", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 15 and rows[0]["cycle"] == "(1,2)(3,4)(5,6)" and rows[-1]["length"] == 6
    _, out, _ = fpf(capsys, "enumerate", "--n", "2", "--format", "text")
    assert out == "(1,2)(3,4)\t0\n(1,3)(2,4)\t1\n(1,4)(2,3)\t2\n"


def test_hasse_n2(capsys):
    code, out, _ = fpf(capsys, "hasse", "--n", "2")
    assert code == 0
    assert out.count(" -> ") == 2
    assert out.count("rank=same") == 3


def test_hasse_matches_golden(capsys):
    _, out, _ = fpf(capsys, "hasse", "--n", "3")
    assert out == (DATA / "f6_hasse.dot").read_text()


def test_hasse_json_round_trip(capsys):
    _, out, _ = fpf(capsys, "hasse", "--n", "3", "--format", "json")
    P = poset_from_dict(json.loads(out))
    F = fpf_poset(3)
    assert P.edge_set() == F.edge_set()
    assert {(P.elements[i], P.elements[j]): l for (i, j), l in P.labels.items()} == \
        {(F.elements[i], F.elements[j]): l for (i, j), l in F.labels.items()}


def test_hasse_ds_has_one_edge_fewer(capsys):
    _, full, _ = fpf(capsys, "hasse", "--n", "3")
    _, ds, _ = fpf(capsys, "hasse", "--n", "3", "--poset", "ds", "--unlabeled")
    assert ds.count(" -> ") == full.count(" -> ") - 1 == 25
    assert "label=" not in ds


def test_deterministic_output(capsys):
    for argv in (["hasse", "--n", "3"], ["verify-el", "--n", "3", "--direction", "both"],
                 ["compare-ds", "--n", "3", "--format", "dot"]):
        first = fpf(capsys, *argv)[1]
        assert fpf(capsys, *argv)[1] == first


def test_verify_el(capsys):
    code, out, _ = fpf(capsys, "verify-el", "--n", "3", "--direction", "both")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == {"reversed", "standard"}
    assert rep["reversed"]["failures"] == [] and rep["reversed"]["timing"] is None
    assert rep["reversed"]["intervals_checked"] == 86


def test_verify_el_failure_exit(capsys, monkeypatch):
    from fpfposet.el import ELFailure, ELReport

    def fake(P, direction, *a, **k):
        return ELReport(n=3, direction=direction, intervals_checked=1,
                        failures=[ELFailure("a", "b", 2, True)])

    monkeypatch.setattr("fpfposet.el.verify_el", fake)
    code, _, _ = fpf(capsys, "verify-el", "--n", "3", "--format", "text")
    assert code == 1


def test_genfun(capsys):
    code, out, _ = fpf(capsys, "genfun", "--n", "3", "--format", "text")
    assert (code, out) == (0, "1 + 2q + 3q^2 + 3q^3 + 3q^4 + 2q^5 + q^6\n")
    rep = json.loads(fpf(capsys, "genfun", "--n", "4")[1])
    assert rep["equal"] and sum(rep["coefficients"]) == count_fpf(4)


def test_genfun_mismatch_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "q_double_factorial", lambda n: [1])
    assert fpf(capsys, "genfun", "--n", "2")[0] == 1


def test_compare_ds(capsys):
    code, out, _ = fpf(capsys, "compare-ds", "--n", "3")
    rep = json.loads(out)
    assert code == 0
    assert rep["edges_in_f_not_ds"] == [["(1,2)(3,6)(4,5)", "(1,4)(2,5)(3,6)"]]
    _, dot, _ = fpf(capsys, "compare-ds", "--n", "3", "--format", "dot")
    red = [l for l in dot.splitlines() if "color=red" in l]
    assert red == ['  "(1,2)(3,6)(4,5)" -> "(1,4)(2,5)(3,6)" [label="(1,5)", color=red];']


def test_mobius(capsys):
    assert json.loads(fpf(capsys, "mobius", "--n", "3")[1])["mobius"] == 0
    code, out, _ = fpf(capsys, "mobius", "(1,2)(3,4)", "(1,3)(2,4)", "--format", "text")
    assert (code, out) == (0, "-1\n")


def test_interval(capsys):
    code, out, _ = fpf(capsys, "interval", "(1,2)(3,4)(5,6)", "(1,4)(2,3)(5,6)")
    assert code == 0 and out.count(" -> ") == 2


def test_interval_not_comparable(capsys):
    code, _, err = fpf(capsys, "interval", "(1,3)(2,4)(5,6)", "(1,2)(3,6)(4,5)")
    assert code == 2 and "not" in err


def test_rises(capsys):
    code, out, _ = fpf(capsys, "rises", "(1,2)(3,4)", "--format", "text")
    assert code == 0
    assert "(1,4)\ted\tfree\tsuitable" in out
    assert "(1,3)\tee_crossing\tfree\n" in out


def test_shelling(capsys):
    code, out, _ = fpf(capsys, "shelling", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and rep["facets"] == 34
    assert rep["order"][0]["labels"] == ["(3,6)", "(3,4)", "(1,6)", "(1,5)", "(1,3)", "(1,2)"]


def test_topology(capsys):
    code, out, _ = fpf(capsys, "topology", "--n", "3")
    cert = json.loads(out)
    assert code == 0
    assert cert["verdict"] == "ball_consistent" and cert["complex_dimension"] == 4
    assert json.loads(fpf(capsys, "topology", "--n", "1")[1])["verdict"] == "degenerate"


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "e.csv"
    code, out, _ = fpf(capsys, "enumerate", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert len(read_enumeration_csv(target.read_text())) == 15


@pytest.mark.parametrize("argv", [
    ["enumerate"],
    ["enumerate", "--n", "0"],
    ["enumerate", "--n", "3", "--format", "dot"],
    ["hasse", "--n", "3", "--format", "xml"],
    ["mobius", "(1,2)(3,4)", "(1,2,3)"],
    ["mobius", "--n", "3", "(1,2)(3,4)", "(1,3)(2,4)"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    assert fpf(capsys, *argv)[0] == 2


def test_resource_caps(capsys):
    code, _, err = fpf(capsys, "enumerate", "--n", "8")
    assert code == 3 and "cap" in err
    assert fpf(capsys, "verify-el", "--n", "4", "--chain-cap", "100")[0] == 3
    assert fpf(capsys, "topology", "--n", "3", "--ridge-mem-cap", "10")[0] == 3


def test_environment_and_precedence(capsys, monkeypatch):
    monkeypatch.setenv("FPF_N", "2")
    monkeypatch.setenv("FPF_FORMAT", "text")
    assert fpf(capsys, "enumerate")[1].count("\n") == 3
    assert fpf(capsys, "enumerate", "--n", "3")[1].count("\n") == 15
    assert fpf(capsys, "enumerate", "--format", "csv")[1].startswith("index,")
    monkeypatch.setenv("FPF_ENUMERATION_CAP", "2")
    assert fpf(capsys, "enumerate", "--n", "3")[0] == 3
    assert fpf(capsys, "enumerate", "--n", "3", "--enumeration-cap", "3")[0] == 0
    monkeypatch.setenv("FPF_WORKERS", "abc")
    assert fpf(capsys, "enumerate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fpfposet", "enumerate", "--n", "2", "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[0] == "(1,2)(3,4)\t0"
