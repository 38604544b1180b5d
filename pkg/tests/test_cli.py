import json
import subprocess
import sys

import pytest

from twozero.cli import main

EXAMPLE = ["--p", "7", "--s", "1", "--m", "2", "--h", "3", "--e", "3"]
EXAMPLE_COUNTS = {"0": 1, "12": 72, "16": 72, "18": 264, "20": 864, "22": 864, "24": 264}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def assert_one_line_error(err):
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error:"), err


# -- enumerate / predict ------------------------------------------------------------

def test_enumerate_example(capsys):
    rep = run_json(capsys, "enumerate", *EXAMPLE)
    assert rep["counts"] == EXAMPLE_COUNTS
    assert (rep["n"], rep["k"], rep["min_distance"], rep["dimension"]) == (24, 4, 12, 4)
    assert rep["dimension_is_2m"] is True


def test_enumerate_bad_h(capsys):
    code, out, err = run(capsys, "enumerate", "--p", "7", "--s", "1", "--m", "2", "--h", "4", "--e", "3")
    assert code == 2 and out == ""
    assert_one_line_error(err)
    assert "e does not divide h" in err


def test_enumerate_13_matches_predict(capsys):
    args = ["--p", "13", "--m", "2", "--h", "3", "--e", "3"]
    assert run_json(capsys, "enumerate", *args)["counts"] == run_json(capsys, "predict", *args)["counts"]


def test_predict_example(capsys):
    rep = run_json(capsys, "predict", *EXAMPLE)
    assert rep["counts"] == EXAMPLE_COUNTS
    assert len(rep["table1_rows"]) == 7 and len(rep["table2_rows"]) == 7
    assert rep["partition"]["C0STAR"] == 72


def test_predict_refuses_gcd_3(capsys):
    code, _, err = run(capsys, "predict", "--p", "7", "--s", "1", "--m", "3", "--h", "3", "--e", "3")
    assert code == 2
    assert_one_line_error(err)
    assert "gcd(m, e(q-1)/h) = 3, theorem requires 2" in err


def test_predict_13_h6_is_valid(capsys):
    rep = run_json(capsys, "predict", "--p", "13", "--s", "1", "--m", "2", "--h", "6", "--e", "3")
    assert sum(rep["counts"].values()) == 169 ** 2


# -- verify --------------------------------------------------------------------------

@pytest.mark.parametrize("pmh", [(7, 2, 3), (13, 2, 3), (13, 2, 6), (19, 2, 3), (19, 2, 9)])
def test_verify_sweep(capsys, pmh):
    p, m, h = pmh
    rep = run_json(capsys, "verify", "--p", str(p), "--m", str(m), "--h", str(h), "--e", "3")
    assert rep["all_pass"] and rep["theorem_regime"]
    assert len(rep["checks"]) == 17


def test_verify_perturbed_fails(capsys):
    code, out, _ = run(capsys, "verify", *EXAMPLE, "--perturb-table1", "freq:3:1")
    assert code == 1
    rep = json.loads(out)
    failed = [c["name"] for c in rep["checks"] if not c["pass"]]
    assert failed == ["weight_distribution_vs_table1"]


def test_verify_outside_regime_runs_general_checks(capsys):
    rep = run_json(capsys, "verify", "--p", "7", "--m", "2", "--h", "6", "--e", "3")
    assert rep["theorem_regime"] is False
    assert [c["name"] for c in rep["checks"]] == ["total_count", "dimension_2m",
                                                  "zero_count_formula_vs_direct"]


def test_bad_perturbation(capsys):
    code, _, err = run(capsys, "verify", *EXAMPLE, "--perturb-table1", "weight:9:1")
    assert code == 2
    assert_one_line_error(err)


# -- gauss ---------------------------------------------------------------------------

def test_gauss_N2(capsys):
    rep = run_json(capsys, "gauss", "--p", "7", "--s", "1", "--m", "2", "--N", "2")
    assert [x["value"] for x in rep["periods"]] == [3, -4]
    assert rep["closed_form"]["agrees"] is True
    assert rep["sum_is_minus_1"] is True


def test_gauss_N1(capsys):
    rep = run_json(capsys, "gauss", "--p", "7", "--m", "2", "--N", "1")
    assert rep["periods"][0]["value"] == -1


def test_gauss_N3_is_histogram_only(capsys):
    rep = run_json(capsys, "gauss", "--p", "7", "--s", "1", "--m", "2", "--N", "3")
    assert "closed_form" not in rep
    assert all(len(x["exact"]["coeffs"]) == 7 for x in rep["periods"])


def test_gauss_odd_degree_reports_no_closed_form(capsys):
    rep = run_json(capsys, "gauss", "--p", "7", "--m", "1", "--N", "2")
    assert rep["closed_form"]["available"] is False
    assert "non-real" in rep["closed_form"]["reason"]


def test_gauss_bad_N(capsys):
    code, _, err = run(capsys, "gauss", "--p", "7", "--m", "2", "--N", "5")
    assert code == 2
    assert_one_line_error(err)


# -- curves / explore ----------------------------------------------------------------

def test_curves_example(capsys):
    rep = run_json(capsys, "curves", *EXAMPLE)
    totals = {c["curve"]: c["total"] for c in rep["curves"]}
    assert (totals["J0"], totals["J3"]) == (48, 52)
    assert rep["J0_plus_J3"] == rep["two_r_plus_2"] == 100
    assert rep["twist_sum"] == 100
    assert (rep["S0"], rep["S3"]) == (4, 6)
    assert all(c["hasse_ok"] for c in rep["curves"])


def test_explore_trivial(capsys):
    rep = run_json(capsys, "explore", "--p", "7", "--m", "2", "--e", "1", "--f", "1")
    assert rep["count"] == 49


def test_explore_tokens(capsys):
    base = ["explore", "--p", "7", "--m", "2", "--e", "3", "--f", "2", "--shifts", "1,b^1,b^2"]
    assert run_json(capsys, *base, "--units", "1,1,1")["count"] == 44
    assert run_json(capsys, *base, "--units", "a^1,a^1,a^1")["count"] == 48


def test_explore_length_mismatch(capsys):
    code, _, err = run(capsys, "explore", "--p", "7", "--m", "2", "--e", "3", "--f", "2",
                       "--shifts", "1,2")
    assert code == 2
    assert_one_line_error(err)


# -- errors, formats, determinism ----------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["enumerate", "--p", "6", "--h", "1", "--e", "1"],
    ["enumerate", "--p", "7", "--m", "2"],
    ["enumerate", "--p", "seven"],
    ["frobnicate", "--p", "7"],
    ["enumerate", "--p", "7", "--m", "2", "--h", "3", "--e", "3", "--modulus", "6,0,1"],
    ["curves", "--p", "7", "--m", "2", "--h", "6", "--e", "3"],
])
def test_parameter_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert_one_line_error(err)


def test_work_cap_exit_3(capsys, monkeypatch):
    code, _, err = run(capsys, "enumerate", *EXAMPLE, "--work-cap", "100")
    assert code == 3
    assert_one_line_error(err)
    monkeypatch.setenv("TWOZERO_WORK_CAP", "100")
    assert run(capsys, "enumerate", *EXAMPLE)[0] == 3
    assert run(capsys, "enumerate", *EXAMPLE, "--work-cap", "100000")[0] == 0


def test_supplied_modulus(capsys):
    rep = run_json(capsys, "enumerate", *EXAMPLE, "--modulus", "5,2,1")
    assert rep["field"]["modulus"] == "5,2,1"
    assert rep["counts"] == EXAMPLE_COUNTS


def test_csv_and_pretty(capsys):
    _, out, _ = run(capsys, "enumerate", *EXAMPLE, "--format", "csv")
    assert out.splitlines() == ["weight,frequency", "0,1", "12,72", "16,72", "18,264", "20,864",
                                "22,864", "24,264"]
    _, out, _ = run(capsys, "curves", *EXAMPLE, "--format", "csv")
    assert out.splitlines()[0] == "key,value"
    assert "field.modulus,\"3,1,1\"" in out.splitlines()
    code, out, _ = run(capsys, "predict", *EXAMPLE, "--format", "pretty")
    assert code == 0 and "min_distance: 12" in out


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "predict", *EXAMPLE, "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["counts"] == EXAMPLE_COUNTS


@pytest.mark.parametrize("cmd", ["enumerate", "verify", "curves"])
@pytest.mark.parametrize("fmt", ["json", "csv", "pretty"])
def test_output_is_byte_identical(capsys, cmd, fmt):
    args = [cmd, "--p", "19", "--m", "2", "--h", "9", "--e", "3", "--format", fmt]
    _, a, _ = run(capsys, *args, "--jobs", "1")
    _, b, _ = run(capsys, *args, "--jobs", "4")
    _, c, _ = run(capsys, *args, "--jobs", "4")
    assert a == b == c


def test_console_script_and_module_entry():
    for cmd in (["twozero"], [sys.executable, "-m", "twozero"]):
        proc = subprocess.run(cmd + ["predict", *EXAMPLE], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert json.loads(proc.stdout)["counts"] == EXAMPLE_COUNTS
    proc = subprocess.run([sys.executable, "-m", "twozero", "predict", "--p", "7", "--m", "3",
                           "--h", "3", "--e", "3"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr.startswith("error:")
