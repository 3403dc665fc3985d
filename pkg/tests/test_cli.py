import io
import json
import subprocess
import sys

import pytest

from antiseq.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


def test_expand_quarter_probability():
    data = run_json("expand", "--model", "er", "--p", "1/4", "--m", "1", "--n", "20", "--order", "4")
    assert data["coefficients"] == ["1", "-1", "2/3", "-10/27", "8/729"]
    assert data["rho"] == "1/3"


def test_expand_decimal_probability_is_exact():
    a = run_json("expand", "--model", "er", "--p-decimal", "0.25", "--n", "20", "--order", "4")
    b = run_json("expand", "--model", "er", "--p", "1/4", "--n", "20", "--order", "4")
    assert a == b


def test_expand_order_zero():
    data = run_json("expand", "--model", "simple_graphs", "--m", "1", "--n", "10", "--order", "0")
    assert data["partial_sums"] == ["1"]


def test_expand_triangulations_by_size():
    data = run_json("expand", "--model", "triangulations", "--m", "1", "--size", "20", "--order", "2")
    assert data["connectivity_coefficients"] == ["15", "9045"]


def test_expand_range_reports_convergence():
    data = run_json("expand", "--model", "simple_graphs", "--n", "10..25", "--order", "3")
    assert len(data["evaluations"]) == 16
    assert data["convergence"]["verdict"] == "bounded"


def test_expand_csv_has_row_per_order():
    code, text = run("--format", "csv", "expand", "--model", "simple_graphs", "--n", "10..11", "--order", "1")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,order,coefficient,term,partial_sum,residual"
    assert len(lines) == 5
    assert lines[2].startswith("10,1,-1,")


def test_expand_warns_on_probe_failure(capsys):
    code, _ = run("expand", "--model", "constant_test", "--n", "6", "--order", "2")
    assert code == 0
    assert "warning" in capsys.readouterr().err


def test_global_flags_after_subcommand():
    code, text = run("expand", "--model", "simple_graphs", "--n", "10", "--order", "1", "--digits", "6", "--format", "text")
    assert code == 0
    assert "0.980469" in text


def test_exact():
    data = run_json("exact", "--model", "simple_graphs", "--m", "1", "--n", "4")
    assert data == {"model": "simple_graphs", "n": 4, "m": 1, "probability": "19/32"}
    rows = run_json("exact", "--model", "er", "--rho", "1", "--n", "3")
    assert [r["probability"] for r in rows] == ["0", "1/2", "3/8", "1/8"]


def test_verify_tables():
    data = run_json("verify", "--suite", "tables")
    assert data["passed"] == 50 and data["failed"] == 0


def test_verify_identities_and_oracle():
    assert run_json("verify", "--suite", "identities", "--order", "12")["failed"] == 0
    assert run_json("verify", "--suite", "oracle", "--kmax", "4")["failed"] == 0


def test_verify_reports_mismatch(monkeypatch):
    from antiseq import golden

    monkeypatch.setitem(golden.ER_TABLE, 3, ["0", "0", "1", "3rho-2", "4rho^3+15rho^2-18rho+6"])
    code, text = run("--format", "text", "verify", "--suite", "tables")
    assert code == 1
    assert "FAIL  tables  P[k=3,m=3]" in text
    assert "expected: 3rho-2" in text and "got:      3rho-3" in text


def test_oracle_golden_outputs():
    assert run_json("oracle", "graphs", "--k", "3")["buckets"] == {"1": "rho^3+3rho^2", "2": "3rho", "3": "1"}
    assert run_json("oracle", "ties", "--k", "2")["buckets"] == {"1": "rho-1", "2": "2"}
    assert run_json("oracle", "graphs", "--k", "1")["buckets"] == {"1": "1"}


def test_oracle_output_independent_of_threads():
    _, serial = run("oracle", "graphs", "--k", "5")
    _, parallel = run("--threads", "3", "oracle", "graphs", "--k", "5")
    assert serial == parallel


def test_probe():
    assert run_json("probe", "--model", "simple_graphs", "--nmax", "40")["verdict"] == "pass"
    assert run_json("probe", "--model", "constant_test", "--nmax", "10")["verdict"] == "fail"
    assert run_json("probe", "--model", "gem", "--D", "3", "--nmax", "30")["verdict"] == "pass"


def test_models_listing():
    ids = [m["id"] for m in run_json("models")]
    assert "simple_graphs" in ids and "p_angulations" in ids


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["expand", "--model", "nope", "--n", "5"],
        ["expand", "--model", "triangulations", "--n", "21"],
        ["expand", "--model", "er", "--n", "10"],
        ["expand", "--model", "er", "--p", "3/2", "--n", "10"],
        ["expand", "--model", "er", "--p-decimal", "1/4", "--n", "10"],
        ["expand", "--model", "qss", "--rho", "2", "--n", "10"],
        ["expand", "--model", "simple_graphs", "--n", "ten"],
        ["oracle", "graphs", "--k", "9"],
        ["--digits", "0", "models"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_json_is_deterministic():
    argv = ["expand", "--model", "qss", "--m", "2", "--n", "12", "--order", "3"]
    assert run(*argv) == run(*argv)
    text = run(*argv)[1]
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "antiseq", "oracle", "ties", "--k", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["buckets"]["1"] == "rho-1"
