"""Tests for the command-line front end, exercised in process through
``main(argv)`` so exit codes and output routing are covered directly."""

import json

import pytest

from charmod.anomaly import VerificationReport
from charmod.cli import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_PRECISION,
    EXIT_USAGE,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def test_verify_single_id_text(capsys):
    code, out, err = run_cli(capsys, "verify", "--id", "wfh_main", "--order", "2")
    assert code == EXIT_PASS
    assert "wfh_main" in out
    assert "1/1 pass" in out
    assert err == ""


def test_verify_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--id", "o1", "--id", "o2", "--order", "2", "--format", "json"
    )
    assert code == EXIT_PASS
    payload = json.loads(out)
    reports = [VerificationReport.from_dict(entry) for entry in payload]
    assert [r.id for r in reports] == ["o1", "o2"]
    assert all(r.passed for r in reports)


def test_verify_unknown_id(capsys):
    code, out, err = run_cli(capsys, "verify", "--id", "nope")
    assert code == EXIT_USAGE
    assert "unknown id" in err


def test_verify_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--id",
        "bundle_xi_plus",
        "--order",
        "1",
        "--format",
        "json",
        "--output",
        str(target),
    )
    assert code == EXIT_PASS
    assert out == ""
    assert json.loads(target.read_text())[0]["id"] == "bundle_xi_plus"


# ----------------------------------------------------------------------
# expand
# ----------------------------------------------------------------------


def test_expand_polynomial_class(capsys):
    code, out, _ = run_cli(capsys, "expand", "--class", "Ahat", "--cap", "8")
    assert code == EXIT_PASS
    assert "p1" in out


def test_expand_q_series(capsys):
    code, out, _ = run_cli(capsys, "expand", "--class", "Wc", "--order", "1")
    assert code == EXIT_PASS
    assert "q^0" in out and "q^1" in out


def test_expand_unknown_class(capsys):
    with pytest.raises(SystemExit) as info:
        main(["expand", "--class", "nope"])
    assert info.value.code == 2
    capsys.readouterr()


# ----------------------------------------------------------------------
# lattice
# ----------------------------------------------------------------------


def write_lattice(tmp_path, payload, name="lat.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_lattice_pass(capsys, tmp_path):
    path = write_lattice(
        tmp_path, {"rank": 1, "trilinear": [[[1]]], "a": [2], "seed": 3}
    )
    code, out, _ = run_cli(capsys, "lattice", "--file", path, "--samples", "50")
    assert code == EXIT_PASS
    assert "bhat: [4]" in out
    assert "passed: True" in out


def test_lattice_json_report(capsys, tmp_path):
    path = write_lattice(tmp_path, {"rank": 1, "trilinear": [[[1]]], "a": [0]})
    code, out, _ = run_cli(
        capsys, "lattice", "--file", path, "--samples", "50", "--format", "json"
    )
    assert code == EXIT_PASS
    report = json.loads(out)
    assert report["bhat"] == [4]
    assert report["characteristic"] is True
    assert report["relations"]["passed"] is True


def test_lattice_no_solution(capsys, tmp_path):
    path = write_lattice(tmp_path, {"rank": 1, "trilinear": [[[1]]], "a": [1]})
    code, out, _ = run_cli(
        capsys, "lattice", "--file", path, "--samples", "50", "--format", "json"
    )
    assert code == EXIT_FAIL
    report = json.loads(out)
    assert report["bhat"] is None
    assert "defect" in report["no_solution"]
    assert any("not characteristic" in w for w in report.get("warnings", []))


def test_lattice_bad_file(capsys, tmp_path):
    missing = str(tmp_path / "missing.json")
    code, out, err = run_cli(capsys, "lattice", "--file", missing)
    assert code == EXIT_USAGE
    assert "cannot load" in err

    invalid = write_lattice(tmp_path, {"rank": 1}, name="bad.json")
    code, out, err = run_cli(capsys, "lattice", "--file", invalid)
    assert code == EXIT_USAGE


# ----------------------------------------------------------------------
# e8
# ----------------------------------------------------------------------


def test_e8_comparison(capsys):
    code, out, _ = run_cli(capsys, "e8", "--order", "3")
    assert code == EXIT_PASS
    assert "[1, 240, 2160, 6720]" in out
    assert "[1, 248, 4124, 34752]" in out
    assert "equal: true" in out


# ----------------------------------------------------------------------
# theta-check
# ----------------------------------------------------------------------


def test_theta_check_text(capsys):
    code, out, _ = run_cli(
        capsys, "theta-check", "--kind", "theta", "--tau", "2i", "--v", "0.3+0.1i"
    )
    assert code == EXIT_PASS
    assert "passed: True" in out


def test_theta_check_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "theta-check",
        "--kind",
        "E2",
        "--tau",
        "0.5+1.5i",
        "--format",
        "json",
    )
    assert code == EXIT_PASS
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["kind"] == "E2"


def test_theta_check_bad_tau(capsys):
    # lower half plane is rejected as a usage problem
    code, out, err = run_cli(capsys, "theta-check", "--kind", "theta", "--tau=0-2i")
    assert code == EXIT_USAGE
    assert "tau" in err


def test_theta_check_unparseable_tau(capsys):
    code, out, err = run_cli(capsys, "theta-check", "--kind", "theta", "--tau", "abc")
    assert code == EXIT_USAGE
    assert "cannot parse" in err


def test_theta_check_precision_exit(capsys):
    code, out, err = run_cli(
        capsys, "theta-check", "--kind", "theta", "--tau", "0.02i", "--terms", "6"
    )
    assert code == EXIT_PRECISION
    assert "precision" in err
