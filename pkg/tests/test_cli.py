import json
import subprocess
import sys
from pathlib import Path

import pytest

from classicalseq.cli import main

GOLDEN = Path(__file__).parent / "golden"
FAMILIES = ("hermite", "laguerre", "legendre", "bessel")


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestGen:
    def test_laguerre_csv(self, capsys):
        code, out, _ = run(["gen", "--family", "laguerre", "--n", "2"], capsys)
        assert code == 0
        assert out.splitlines()[1] == "mu,1,1,2,6,24"

    def test_hermite_json(self, capsys):
        code, out, _ = run(["gen", "--family", "hermite", "--n", "1", "--format", "json",
                            "--no-timing"], capsys)
        assert code == 0
        assert json.loads(out)["moments"] == ["1", "0", "1/2"]

    def test_sigma_levels(self, capsys):
        code, out, _ = run(["gen", "--family", "legendre", "--n", "1", "--k", "2",
                            "--format", "json", "--no-timing"], capsys)
        rep = json.loads(out)
        assert rep["sigma"]["1"] == ["4/3", "0", "4/15"]
        assert rep["sigma"]["2"][0] == "16/15"

    def test_explicit_coefficients(self, capsys):
        code, out, _ = run(["gen", "--a", "0", "--b", "0", "--c", "1", "--d", "-2", "--e", "0",
                            "--n", "1"], capsys)
        assert code == 0
        assert "mu,1,0,1/2" in out


class TestInputErrors:
    @pytest.mark.parametrize("argv, needle", [
        (["verify", "--a", "1", "--b", "0", "--c", "0", "--d", "-3", "--e", "2", "--n", "3"],
         "DegenerateRecurrence at n=3"),
        (["verify", "--a", "0", "--b", "0", "--c", "0", "--d", "1", "--e", "1", "--n", "3"],
         "InvalidPhi"),
        (["gen", "--family", "hermite", "--mu0", "0", "--n", "2"], "ZeroMu0"),
        (["gen", "--n", "2"], "Pearson data missing"),
        (["gen", "--family", "hermite", "--a", "1", "--n", "2"], "not both"),
        (["gen", "--family", "hermite", "--n", "0"], "--n"),
        (["verify", "--family", "hermite", "--n", "2", "--checks", "bogus"], "unknown checks"),
        (["gen", "--family", "nope", "--n", "2"], "invalid choice"),
        (["gen", "--family", "hermite", "--n", "x"], "invalid int"),
        (["gen", "--a", "1.5.2", "--b", "0", "--c", "1", "--d", "1", "--e", "0", "--n", "2"],
         "not a rational"),
        ([], "required"),
    ])
    def test_exit_two(self, argv, needle, capsys):
        code, _, err = run(argv, capsys)
        assert code == 2
        assert needle in err


class TestVerify:
    def test_legendre_pass(self, capsys):
        code, out, _ = run(["verify", "--family", "legendre", "--n", "6", "--k", "2",
                            "--format", "json", "--no-timing"], capsys)
        rep = json.loads(out)
        assert code == 0
        assert rep["varpi"] == ["2", "12"]
        assert rep["status"] == "pass"
        assert all(c["pass"] for c in rep["checks"].values())

    def test_delta_fails(self, capsys):
        code, out, _ = run(["verify", "--family", "delta", "--n", "3", "--format", "json",
                            "--no-timing"], capsys)
        rep = json.loads(out)
        assert code == 1
        chol = rep["checks"]["cholesky"]
        assert chol["pass"] is False
        assert chol["first_failing_index"] == 1
        assert "QuasiDefiniteViolation at order 1" in chol["message"]
        assert rep["checks"]["bochner"]["status"] == "skipped"

    def test_hermite_bochner(self, capsys):
        code, out, _ = run(["verify", "--family", "hermite", "--n", "4", "--checks", "bochner",
                            "--format", "json", "--no-timing"], capsys)
        rep = json.loads(out)
        assert rep["lambda"] == ["0", "-2", "-4", "-6", "-8"]
        assert list(rep["checks"]) == ["bochner"]

    def test_check_order_is_fixed(self, capsys):
        _, out, _ = run(["verify", "--family", "hermite", "--n", "3",
                         "--checks", "ngn,recurrence,bochner", "--format", "json",
                         "--no-timing"], capsys)
        assert list(json.loads(out)["checks"]) == ["recurrence", "bochner", "ngn"]

    def test_text(self, capsys):
        code, out, _ = run(["verify", "--family", "laguerre", "--n", "3", "--no-timing"], capsys)
        assert code == 0
        assert out.rstrip().endswith("overall: pass")

    def test_timing_present_by_default(self, capsys):
        _, out, _ = run(["verify", "--family", "hermite", "--n", "2", "--format", "json"], capsys)
        assert "seconds" in json.loads(out)["timing"]


class TestPolysAndFactor:
    def test_polys(self, capsys):
        code, out, _ = run(["polys", "--family", "legendre", "--n", "3"], capsys)
        assert code == 0
        assert "P_3 = x^3 - 3/5 x" in out

    def test_polys_derived(self, capsys):
        _, out, _ = run(["polys", "--family", "legendre", "--n", "2", "--k", "1"], capsys)
        assert "Q^(1)_2 = x^2 - 1/5" in out

    def test_factor(self, capsys):
        code, out, _ = run(["factor", "--family", "legendre", "--n", "2", "--format", "json",
                            "--no-timing"], capsys)
        rep = json.loads(out)
        assert code == 0
        assert rep["h"] == ["2", "2/3", "8/45"]
        assert rep["s"][0] == ["1", "0", "-1/3"]

    def test_factor_delta(self, capsys):
        code, _, err = run(["factor", "--family", "delta", "--n", "2"], capsys)
        assert code == 1
        assert "QuasiDefiniteViolation at order 1" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["report", "--family", "hermite", "--n", "3", "--no-timing",
                        "--out", str(target)], capsys)
    assert code == 0
    assert out == "overall: pass\n"
    assert json.loads(target.read_text())["status"] == "pass"


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_golden(family, fmt, capsys):
    argv = ["report", "--family", family, "--n", "6", "--no-timing", "--format", fmt]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second
    assert first[0] == 0
    assert first[1].encode("utf-8") == (GOLDEN / f"{family}_n6.{fmt}").read_bytes()


def test_json_schema_keys(capsys):
    _, out, _ = run(["report", "--family", "bessel", "--n", "4", "--no-timing"], capsys)
    rep = json.loads(out)
    assert set(rep) == {"config", "moments", "sigma", "h", "lambda", "checks", "polynomials",
                        "varpi", "status"}
    for c in rep["checks"].values():
        assert {"pass", "status", "first_failing_index"} <= set(c)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "classicalseq", "report", "--family", "legendre", "--n", "6",
         "--no-timing", "--format", "csv"], capture_output=True)
    assert proc.returncode == 0
    assert b"\r\n" not in proc.stdout
    assert proc.stdout == (GOLDEN / "legendre_n6.csv").read_bytes()
