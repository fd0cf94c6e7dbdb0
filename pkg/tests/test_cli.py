import json
from importlib.resources import files

import jsonschema
import pytest

from kpq.cli import run

SCHEMA = json.loads(files("kpq").joinpath("schemas/cli_output.schema.json").read_text())

JSON_INVOCATIONS = [
    ["check", "--p", "5", "--q", "3", "--n", "3"],
    ["check", "--p", "5", "--q", "7", "--n", "3"],
    ["table", "--n", "3", "--pmax", "11", "--format", "json"],
    ["table", "--n", "5", "--pmax", "7", "--range", "paper", "--format", "json"],
    ["order", "--p", "5", "--q", "3", "--n", "3"],
    ["prop2", "--p", "17", "--q", "7", "--n", "3"],
    ["prop2", "--p", "7", "--q", "3", "--n", "9"],
    ["prop1", "--dmin", "-200", "--dmax", "-3", "--abmax", "5", "--ells", "3,5"],
    ["bs", "--lambda2", "1", "--d1", "2", "--d2", "1", "--p", "3", "--ymax", "20"],
    ["bs-sweep", "--d1max", "2", "--d2max", "1", "--pmax", "13", "--ymax", "20"],
    ["cohn", "--kmax", "60"],
    ["ljunggren", "--xmax", "50", "--nmax", "9"],
    ["theorem4", "--pnmax", "300"],
    ["scan-t2", "--q", "5", "--n", "5", "--pmax", "50"],
]


def invoke(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", JSON_INVOCATIONS, ids=lambda a: a[0])
def test_json_output_validates(capsys, argv):
    code, out, _ = invoke(capsys, argv + ([] if "--format" in argv else ["--format", "json"]))
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


@pytest.mark.parametrize("argv", JSON_INVOCATIONS, ids=lambda a: a[0])
def test_deterministic_output(capsys, argv):
    first = invoke(capsys, argv)
    assert invoke(capsys, argv) == first


@pytest.mark.parametrize("argv", [a for a in JSON_INVOCATIONS if a[0] != "table"], ids=lambda a: a[0])
def test_human_format(capsys, argv):
    code, out, _ = invoke(capsys, argv + ["--format", "human"])
    assert code == 0 and out.strip() and not out.lstrip().startswith("{")


def test_check_example(capsys):
    code, out, _ = invoke(capsys, ["check", "--p", "5", "--q", "3", "--n", "3"])
    data = json.loads(out)
    assert code == 0
    assert data["case"]["d"] == -29 and data["verification"]["h"] == 6
    assert data["conditions"]["verdict"] == "PASS" and data["verification"]["order_p"] == 3


def test_size_violation_is_usage_error(capsys):
    code, out, err = invoke(capsys, ["check", "--p", "11", "--q", "37", "--n", "3"])
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and "size violation: q² ≥ pⁿ" in err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["check", "--p", "5", "--q", "3"],
    ["check", "--p", "5", "--q", "3", "--n", "3", "--bogus"],
    ["check", "--p", "6", "--q", "3", "--n", "3"],
    ["table", "--n", "3", "--pmax", "5", "--format", "human"],
    ["bs", "--lambda2", "3", "--d1", "1", "--d2", "1", "--p", "3"],
    ["bs", "--lambda2", "1", "--d1", "2", "--d2", "4", "--p", "3"],
    ["prop1", "--dmin", "-10", "--dmax", "-3", "--abmax", "3", "--ells", "x"],
    ["prop2", "--p", "5", "--q", "3", "--n", "3", "--ell", "5"],
    ["scan-t2", "--q", "5", "--n", "9", "--pmax", "20"],
])
def test_usage_errors(capsys, argv):
    code, _, err = invoke(capsys, argv)
    assert code == 2 and err


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "t1.csv"
    code, out, _ = invoke(capsys, ["table", "--n", "3", "--pmax", "19", "--range", "paper", "--out", str(target)])
    assert code == 0 and out == ""
    data = target.read_bytes()
    assert data.startswith(b"p,q,n,v,m,d,h,marker,order_p,verdict\n") and b"\r" not in data
    assert data.count(b"\n") == 67


def test_theorem4_flags_exception(capsys):
    code, out, _ = invoke(capsys, ["theorem4", "--pnmax", "300"])
    data = json.loads(out)
    assert code == 0 and data["non_divisible"] == [[3, 5]] and data["count"] == 3


def test_prop2_reports_verified_root(capsys):
    code, out, _ = invoke(capsys, ["prop2", "--p", "5", "--q", "7", "--n", "3"])
    res = json.loads(out)["results"]
    assert code == 0
    assert res == [{"ell": 3, "root": {"a": -1, "b": -1, "halved": True}, "verified": True}]


def test_bs_sweep_reports_unlisted_instance(capsys):
    # x^2 + 2 = 2 * 3^y has x = 2, 4, 22 but (sqrt 2, 1, 2, 3) is in none of the printed sets
    code, out, _ = invoke(capsys, ["bs-sweep", "--d1max", "1", "--d2max", "2", "--pmax", "3", "--ymax", "20"])
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    bad = [(e["lambda2"], e["D1"], e["D2"], e["p"]) for e in data["instances"] if e["verdict"] != "OK"]
    assert code == 1 and bad == [(2, 1, 2, 3)]


def test_contradiction_exit_code(capsys, monkeypatch):
    from kpq import diokit
    monkeypatch.setattr(diokit, "cohn_scan", lambda k: [(1, 1), (3, 4), (5, 11)])
    code, _, _ = invoke(capsys, ["cohn", "--kmax", "10"])
    assert code == 1


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "kpq", "cohn", "--kmax", "10"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["squares"] == [[1, 1], [3, 4]]
