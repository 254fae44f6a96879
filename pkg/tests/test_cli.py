import json
import subprocess
import sys

import pytest

from dbmw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "coxeter", "--n", "3", "--workers", "1")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"schema_version", "command", "ledger_sha256", "conventions", "status", "result"}
    assert doc["status"] == "pass" and doc["command"] == "verify coxeter"
    assert doc["result"]["image_size"] == 24


def test_dims_tables(capsys):
    for algebra, total in (("HD", 24), ("HB", 48), ("BD", 60)):
        code, out, _ = run(capsys, "dims", "--algebra", algebra, "--n", "3")
        doc = json.loads(out)
        assert code == 0 and doc["result"]["total"] == total


def test_gram_value(capsys):
    code, out, _ = run(capsys, "gram", "--n", "2", "--points", "3", "--workers", "1")
    assert code == 0
    assert json.loads(out)["result"]["det_at_points"][0]["value"] == "7/27"


def test_gram_size_guard(capsys):
    code, _, err = run(capsys, "gram", "--n", "5", "--workers", "1")
    assert code == 3 and "--allow-large" in err


def test_prove_exit_codes(capsys):
    code, out, _ = run(capsys, "prove", "--algebra", "BBprime", "--lhs", "X1 e1", "--rhs", "(l) e1")
    assert code == 0 and json.loads(out)["result"]["steps"] == 1
    code, _, _ = run(capsys, "prove", "--algebra", "BBprime", "--lhs", "(l^2) Y e1 Y X2 Y e1 Y",
                     "--rhs", "Y e1 Y", "--budget-states", "3")
    assert code == 2
    code, _, _ = run(capsys, "prove", "--lhs", "Q1", "--rhs", "X1")
    assert code == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3
    code, _, _ = run(capsys, "verify", "coxeter", "--n", "1")
    assert code == 3
    assert run(capsys)[0] == 3


def test_csv_and_text(capsys):
    code, out, _ = run(capsys, "branch", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "m,label,size,dim"
    code, out, _ = run(capsys, "branch", "--n", "3", "--format", "text")
    assert out.startswith("# Bratteli diagram")
    code, out, _ = run(capsys, "trace", "--n", "3", "--format", "text")
    assert code == 0 and out.startswith("status: pass")


def test_ledger(capsys):
    code, out, _ = run(capsys, "--ledger")
    assert code == 0 and "odd-loop" in out


def test_output_is_deterministic_across_workers(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "hecke", "--n", "3", "--workers", "1", "--out", str(a)])
    main(["verify", "hecke", "--n", "3", "--workers", "2", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "dbmw.cli", "verify", "coxeter", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"
