import json
import math

import pytest

from twistsum.cli import main
from twistsum.exact import CyclotomicNumber, parse_rational


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestSumCommand:
    def test_headline_example(self, capsys):
        obj = run_json(
            capsys,
            "sum", "--weights", "3,1", "--limits", "100,150",
            "--x", "0", "--s", "2", "--k", "2", "--t", "1", "--method", "both",
        )
        assert obj["closed"] == "79275"
        assert obj["brute"] == "79275"
        assert obj["equal"] is True

    def test_trace_decomposition(self, capsys):
        obj = run_json(
            capsys,
            "sum", "--weights", "3,1", "--limits", "100,150",
            "--x", "0", "--s", "2", "--k", "2", "--t", "1", "--trace",
        )
        assert len(obj["trace"]) == 4
        assert sorted(row["argument"] for row in obj["trace"]) == ["0", "151", "303", "454"]

    def test_single_method(self, capsys):
        obj = run_json(
            capsys,
            "sum", "--weights", "1", "--limits", "3",
            "--x", "0", "--s", "1", "--k", "2", "--t", "1", "--method", "closed",
        )
        assert obj["closed"] == "-2"
        assert "brute" not in obj

    def test_computational_error_exit_code(self, capsys):
        code, out, err = run_cli(
            capsys,
            "sum", "--weights", "2", "--limits", "3",
            "--x", "0", "--s", "1", "--k", "2", "--t", "1",
        )
        assert code == 1
        payload = json.loads(err)
        assert payload["type"] == "SingularTwistError"
        assert "singular twist" in payload["error"]

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["sum", "--weights", "1"])
        assert info.value.code == 2


class TestEulerGenCommand:
    def test_classical_numbers(self, capsys):
        obj = run_json(capsys, "euler-gen", "--k", "2", "--t", "1", "--weights", "1", "--order", "3")
        assert obj["values"] == ["1", "-1/2", "0", "1/4"]

    def test_polynomial(self, capsys):
        obj = run_json(
            capsys, "euler-gen", "--k", "2", "--t", "1", "--weights", "1,3", "--order", "2", "--poly"
        )
        assert obj["poly"] == ["3/2", "-4", "1"]

    def test_values_roundtrip(self, capsys):
        obj = run_json(capsys, "euler-gen", "--k", "3", "--t", "1", "--weights", "1,2", "--order", "2")
        for item in obj["values"]:
            if isinstance(item, str):
                parse_rational(item)
            else:
                CyclotomicNumber.from_json_obj(item)


class TestCValuesCommand:
    def test_polynomial_coefficients(self, capsys):
        obj = run_json(capsys, "c-values", "--n", "2", "--k", "2", "--a", "1")
        assert obj["c_poly"] == ["-3/4", "1"]

    def test_periodic_value(self, capsys):
        obj = run_json(capsys, "c-values", "--n", "1", "--k", "2", "--a", "1", "--x", "1/4")
        assert obj["c_tilde"] == "-1/2"

    def test_star_and_multi(self, capsys):
        obj = run_json(capsys, "c-values", "--n", "2", "--k", "2", "--a", "3", "--star")
        assert obj["c_star"] == "3/4"
        obj = run_json(capsys, "c-values", "--n", "2", "--k", "2", "--multi", "1,1")
        assert obj["c_star_multi"] == "1/2"

    def test_numeric_mode(self, capsys):
        obj = run_json(capsys, "c-values", "--n", "1", "--k", "3", "--a", "1", "--star", "--numeric")
        assert obj["c_star"]["re"] == pytest.approx(-0.5)


class TestEmSumCommand:
    def test_quadratic_example(self, capsys):
        obj = run_json(
            capsys,
            "em-sum", "--preset", "poly:0,0,1", "--m", "0", "--n", "1",
            "--k", "2", "--a", "1", "--q", "2",
        )
        assert obj["main_terms"]["re"] == pytest.approx(0.75)
        assert obj["direct"]["re"] == pytest.approx(0.75)
        assert obj["abs_error"] < 1e-10

    def test_scaled_exp(self, capsys):
        obj = run_json(
            capsys,
            "em-sum", "--preset", "exp:0.3", "--m", "0", "--n", "2",
            "--k", "3", "--a", "1", "--q", "4", "--scaled",
        )
        assert obj["abs_error"] < 1e-8

    def test_rational_poly_preset(self, capsys):
        obj = run_json(
            capsys,
            "em-sum", "--preset", "poly:1/2,0,1/3", "--m", "-1", "--n", "2",
            "--k", "2", "--a", "1", "--q", "3",
        )
        assert obj["abs_error"] < 1e-10


class TestZetaCommand:
    def test_accelerated_eta(self, capsys):
        obj = run_json(
            capsys, "zeta", "--s", "2", "--x", "1", "--k", "2", "--t", "1", "--weights", "1"
        )
        assert obj["value"]["re"] == pytest.approx(math.pi**2 / 6, abs=1e-9)

    def test_asymptotic_method(self, capsys):
        obj = run_json(
            capsys,
            "zeta", "--s", "-2", "--x", "10", "--k", "2", "--t", "1",
            "--weights", "1", "--q", "3", "--method", "asym",
        )
        assert obj["value"]["re"] == pytest.approx(90.0, abs=1e-8)

    def test_finite_method(self, capsys):
        obj = run_json(
            capsys,
            "zeta", "--s", "-2", "--x", "0", "--k", "2", "--t", "1",
            "--weights", "1", "--q", "2", "--method", "finite", "--limits", "20",
        )
        assert obj["value"]["re"] == pytest.approx(210.0, abs=1e-6)


class TestProbeCommand:
    def test_shift_probe(self, capsys):
        obj = run_json(
            capsys,
            "probe", "--target", "t4", "--scales", "10,20,40,80",
            "--s", "0.5", "--x", "10", "--k", "2", "--t", "1", "--weights", "1", "--q", "2",
        )
        assert obj["monotone_decreasing"] is True
        assert obj["predicted"] == pytest.approx(-0.5)
        errs = [e for _, e in obj["points"]]
        assert errs == sorted(errs, reverse=True)


class TestVerifyCommand:
    def test_exact_suite_passes(self, capsys):
        obj = run_json(capsys, "verify", "--suite", "exact", "--seed", "7")
        assert obj["failures"] == 0
        names = [r["name"] for r in obj["reports"][0]["results"]]
        assert any("field axioms" in n for n in names)


class TestOutputModes:
    def test_byte_determinism(self, capsys):
        argv = [
            "probe", "--target", "t4", "--scales", "10,20,40",
            "--s", "0.5", "--x", "10", "--k", "2", "--t", "1", "--weights", "1", "--q", "1",
        ]
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run_cli(
            capsys,
            "--out", str(target),
            "sum", "--weights", "1", "--limits", "2",
            "--x", "0", "--s", "2", "--k", "2", "--t", "1", "--method", "closed",
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["closed"] == "3"

    def test_text_mode(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "--text",
            "sum", "--weights", "1", "--limits", "2",
            "--x", "0", "--s", "2", "--k", "2", "--t", "1", "--method", "closed",
        )
        assert code == 0
        assert "closed = 3" in out
