"""End-to-end tests of the command-line interface via main(argv)."""

import json

import pytest

from gfrec.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert err == "", err
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# expsum

def test_expsum_basic(capsys):
    code, rec = run_json(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "3..6"
    )
    assert code == 0
    assert rec["schema_version"] == 1
    assert rec["command"]["name"] == "expsum"
    payload = rec["payload"]
    assert payload["field"] == "2"
    assert [v["n"] for v in payload["values"]] == [3, 4, 5, 6]
    assert [v["integer"] for v in payload["values"]] == ["6", "12", "20", "36"]


def test_expsum_single_n(capsys):
    code, rec = run_json(
        capsys, "expsum", "--expr", "R(2)", "--field", "3", "--n", "4"
    )
    assert code == 0
    assert len(rec["payload"]["values"]) == 1


def test_expsum_methods_give_identical_payloads(capsys):
    _code, brute = run_json(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "3..9"
    )
    _code, fast = run_json(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "3..9",
        "--method", "transfer",
    )
    assert brute["payload"]["values"] == fast["payload"]["values"]


def test_expsum_repeat_is_byte_identical(capsys):
    argv = ("expsum", "--expr", "sigma(2)", "--field", "5", "--n", "2..5")
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_expsum_irrational_values(capsys):
    code, rec = run_json(
        capsys, "expsum", "--expr", "sigma(2)", "--field", "3", "--n", "3..3"
    )
    assert code == 0
    v = rec["payload"]["values"][0]
    assert v["integer"] is None
    assert len(v["coeffs"]) == 2


def test_expsum_usage_errors(capsys):
    code, _out, err = run_cli(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "6..3"
    )
    assert code == 2
    assert "usage error" in err
    code, _out, _err = run_cli(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "1..4"
    )
    assert code == 2
    code, _out, _err = run_cli(
        capsys, "expsum", "--expr", "Q(3)", "--field", "2", "--n", "3..4"
    )
    assert code == 2
    code, _out, _err = run_cli(
        capsys, "expsum", "--expr", "tau(3)", "--field", "6", "--n", "3..4"
    )
    assert code == 2


def test_expsum_budget_exhausted(capsys):
    code, _out, err = run_cli(
        capsys, "expsum", "--expr", "tau(2)", "--field", "3", "--n", "2..12",
        "--budget", "100",
    )
    assert code == 3
    assert "resource limit" in err


def test_expsum_csv(capsys):
    code, out, err = run_cli(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "3..6",
        "--format", "csv",
    )
    assert code == 0
    assert err == ""
    assert out == "n,c0\n3,6\n4,12\n5,20\n6,36\n"


def test_expsum_csv_cyclotomic_width(capsys):
    code, out, _err = run_cli(
        capsys, "expsum", "--expr", "R(2)", "--field", "3", "--n", "2..4",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "n,c0,c1"


def test_expsum_pretty(capsys):
    code, out, _err = run_cli(
        capsys, "expsum", "--expr", "tau(3)", "--field", "2", "--n", "3..4",
        "--pretty",
    )
    assert code == 0
    assert "expsum" in out
    assert "n=3" in out and "6" in out


def test_expsum_explicit_modulus(capsys):
    code, rec = run_json(
        capsys, "expsum", "--expr", "sigma(2)", "--field", "3^2",
        "--modulus", "1,0,1", "--n", "2..3",
    )
    assert code == 0
    assert rec["payload"]["field"] == "3^2"
    code, _out, _err = run_cli(
        capsys, "expsum", "--expr", "sigma(2)", "--field", "3^2",
        "--modulus", "1,1", "--n", "2..3",
    )
    assert code == 2


# ---------------------------------------------------------------------------
# verify / discover / annihilator

def test_verify_pass_and_fail(capsys):
    code, rec = run_json(
        capsys, "verify", "--expr", "tau(3)", "--field", "2",
        "--poly=-2,-2,0,1", "--n-max", "10",
    )
    assert code == 0
    assert rec["payload"]["holds"] is True
    assert rec["payload"]["windows"] == 5
    code, rec = run_json(
        capsys, "verify", "--expr", "tau(3)", "--field", "2",
        "--poly=-1,-1,1", "--n-max", "10",
    )
    assert code == 1
    assert rec["payload"]["holds"] is False


def test_verify_needs_enough_terms(capsys):
    code, _out, err = run_cli(
        capsys, "verify", "--expr", "tau(3)", "--field", "2",
        "--poly=-2,-2,0,1", "--n-max", "4",
    )
    assert code == 2
    assert "degree-3" in err


def test_verify_csv_rejected(capsys):
    code, _out, err = run_cli(
        capsys, "verify", "--expr", "tau(3)", "--field", "2",
        "--poly=-2,-2,0,1", "--n-max", "10", "--format", "csv",
    )
    assert code == 2
    assert "sequence payloads" in err


def test_discover(capsys):
    code, rec = run_json(
        capsys, "discover", "--expr", "tau(3)", "--field", "2",
        "--n-max", "14", "--max-order", "3",
    )
    assert code == 0
    assert rec["payload"]["poly"] == ["-2", "-2", "0", "1"]
    assert rec["payload"]["degree"] == 3
    assert rec["payload"]["pretty"] == "X^3 - 2*X - 2"


def test_discover_insufficient_data(capsys):
    code, _out, err = run_cli(
        capsys, "discover", "--expr", "tau(3)", "--field", "2", "--n-max", "6"
    )
    assert code == 2
    assert "terms" in err


def test_discover_no_recurrence_at_order(capsys):
    code, _out, err = run_cli(
        capsys, "discover", "--expr", "tau(3)", "--field", "2",
        "--n-max", "8", "--max-order", "1",
    )
    assert code == 1
    assert "check failed" in err


def test_annihilator_trapezoid(capsys):
    code, rec = run_json(
        capsys, "annihilator", "--expr", "tau(3)", "--field", "2"
    )
    assert code == 0
    assert rec["payload"]["poly"] == ["-2", "-2", "0", "1"]
    assert rec["payload"]["dim"] == 3
    assert rec["payload"]["system"].startswith("trapezoid(2..3)")


def test_annihilator_quadratic_symmetric(capsys):
    code, rec = run_json(
        capsys, "annihilator", "--expr", "sigma(2)", "--field", "3"
    )
    assert code == 0
    assert rec["payload"]["poly"] == ["9", "-9", "6", "-3", "1"]


def test_annihilator_unsupported_expression(capsys):
    code, _out, _err = run_cli(
        capsys, "annihilator", "--expr", "R(2)+T(2)", "--field", "2"
    )
    assert code == 2


# ---------------------------------------------------------------------------
# conjecture

def test_conjecture_trapezoid_proved_case(capsys):
    code, rec = run_json(
        capsys, "conjecture", "--which", "trapezoid", "--k", "3",
        "--field", "2", "--n-max", "12",
    )
    assert code == 0
    assert rec["payload"]["status"] == "proved-case"
    assert rec["payload"]["first_disagreement"] is None
    assert rec["payload"]["agreements"] == 10


def test_conjecture_rotation(capsys):
    code, rec = run_json(
        capsys, "conjecture", "--which", "rotation", "--k", "3",
        "--field", "2", "--n-max", "12",
    )
    assert code == 0
    assert rec["payload"]["status"] == "verified-on-range"


def test_conjecture_rotation_needs_field_two(capsys):
    code, _out, _err = run_cli(
        capsys, "conjecture", "--which", "rotation", "--k", "3",
        "--field", "3", "--n-max", "10",
    )
    assert code == 2


def test_conjecture_validation(capsys):
    code, _out, _err = run_cli(
        capsys, "conjecture", "--which", "trapezoid", "--k", "1",
        "--field", "2", "--n-max", "10",
    )
    assert code == 2
    code, _out, _err = run_cli(
        capsys, "conjecture", "--which", "trapezoid", "--k", "4",
        "--field", "2", "--n-max", "3",
    )
    assert code == 2


# ---------------------------------------------------------------------------
# numtheory

def test_numtheory_gauss_sum(capsys):
    code, rec = run_json(capsys, "numtheory", "gauss-sum", "--p", "5")
    assert code == 0
    assert rec["payload"]["coeffs"] == ["-1", "0", "-2", "-2"]
    code, _out, _err = run_cli(capsys, "numtheory", "gauss-sum", "--p", "4")
    assert code == 2
    code, _out, _err = run_cli(capsys, "numtheory", "gauss-sum")
    assert code == 2


def test_numtheory_eigen_check(capsys):
    code, rec = run_json(capsys, "numtheory", "eigen-check", "--p", "7")
    assert code == 0
    assert rec["payload"]["ok"] is True
    assert len(rec["payload"]["predicted"]) == 4


def test_numtheory_eisenstein(capsys):
    code, rec = run_json(
        capsys, "numtheory", "eisenstein", "--poly=-2,-2,0,1", "--p", "2"
    )
    assert code == 0
    assert rec["payload"]["verdict"] == "irreducible"
    code, rec = run_json(
        capsys, "numtheory", "eisenstein", "--poly=-9,0,0,0,1", "--p", "3"
    )
    assert code == 0
    assert rec["payload"]["verdict"] == "criterion-not-applicable"
    code, _out, _err = run_cli(capsys, "numtheory", "eisenstein", "--p", "2")
    assert code == 2


# ---------------------------------------------------------------------------
# bench and accept

def test_bench(capsys):
    code, out, err = run_cli(
        capsys, "bench", "--expr", "tau(3)", "--field", "2", "--n", "3..10"
    )
    assert code == 0, err
    rec = json.loads(out)
    assert rec["payload"]["agree"] is True
    assert set(rec["timings"]) == {"brute_millis", "transfer_millis"}
    # payloads stay deterministic even though timings vary
    code2, out2, _err = run_cli(
        capsys, "bench", "--expr", "tau(3)", "--field", "2", "--n", "3..10"
    )
    rec2 = json.loads(out2)
    rec.pop("timings")
    rec2.pop("timings")
    assert rec == rec2


def test_accept_quick(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, err = run_cli(
        capsys, "accept", "--profile", "quick", "--out", str(out_file)
    )
    assert code == 0, err
    rec = json.loads(out)
    items = rec["payload"]
    assert [i["id"] for i in items] == ["C%d" % i for i in range(1, 16)]
    assert all(i["status"] == "pass" for i in items)
    on_disk = json.loads(out_file.read_text())
    assert on_disk["payload"] == items


# ---------------------------------------------------------------------------
# top-level parsing

def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_flag_is_usage_error(capsys):
    assert main(["expsum", "--nope"]) == 2
    capsys.readouterr()
