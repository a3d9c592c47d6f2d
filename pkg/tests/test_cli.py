"""Test della riga di comando: uscite golden, codici di uscita, coerenza testo/JSON."""

import io
import json
from pathlib import Path

import pandas as pd
import pytest

from app.cli.main import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, run
from app.parsing import (
    parse_fourier_text,
    parse_polynomial,
    parse_rational,
    parse_zeta_text,
    polynomial_from_json,
    rational_from_json,
)
from app.zeta import ZetaValue

GOLDEN = Path(__file__).parent / "golden"


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "name,argv",
    [
        ("number_6", ["number", "6"]),
        ("number_6_json", ["number", "6", "--format", "json"]),
        ("number_12", ["number", "12"]),
        ("poly_3", ["poly", "3"]),
        ("poly_3_latex", ["poly", "3", "--format", "latex"]),
        ("powersum_2", ["powersum", "2"]),
        ("powersum_2_eval_11", ["powersum", "2", "--eval", "11"]),
        ("zeta_2", ["zeta", "2"]),
        ("zeta_4", ["zeta", "4"]),
        ("zeta_4_latex", ["zeta", "4", "--format", "latex"]),
        ("zeta_2_digits_20", ["zeta", "2", "--digits", "20"]),
        ("zeta_neg1", ["zeta", "-1"]),
        ("zeta_neg1_json", ["zeta", "-1", "--format", "json"]),
        ("fourier_2_3", ["fourier", "2", "3"]),
        ("fourier_2_3_json", ["fourier", "2", "3", "--format", "json"]),
        ("fourier_3_0", ["fourier", "3", "0"]),
        ("innerproduct_1_3", ["innerproduct", "1", "3"]),
        ("innerproduct_2_2", ["innerproduct", "2", "2"]),
        ("pi_50", ["pi", "--digits", "50"]),
    ],
)
def test_golden(name, argv):
    code, out, err = _run(*argv)
    assert code == EXIT_OK, err
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_output_is_deterministic():
    assert _run("zeta", "12", "--format", "json") == _run("zeta", "12", "--format", "json")


class TestExitCodes:
    @pytest.mark.parametrize("argv", [["zeta", "3"], ["zeta", "1"], ["zeta", "0"], ["number", "-1"],
                                      ["fourier", "0", "2"], ["innerproduct", "0", "1"],
                                      ["powersum", "2", "--eval", "0"]])
    def test_domain_errors(self, argv):
        code, out, err = _run(*argv)
        assert code == EXIT_DOMAIN
        assert out == ""
        assert err.startswith("error: ")

    def test_odd_zeta_message(self):
        _, _, err = _run("zeta", "3")
        assert "no exact closed form" in err
        assert "no one knows the exact values" in err

    @pytest.mark.parametrize("argv", [["zeta"], ["zeta", "two"], ["number", "6", "--bogus"],
                                      ["frobnicate"], ["pi"], ["pi", "--digits", "0"],
                                      ["pi", "--digits", "10001"], ["zeta", "2", "--format", "xml"],
                                      ["verify", "--terms", "0"], []])
    def test_usage_errors(self, argv):
        code, out, _ = _run(*argv)
        assert code == EXIT_USAGE
        assert out == ""

    def test_help(self):
        code, _, _ = _run("--help")
        assert code == EXIT_OK


class TestTextJsonAgreement:
    def test_number(self):
        for j in (0, 1, 6, 12, 30):
            _, text, _ = _run("number", str(j))
            _, payload, _ = _run("number", str(j), "--format", "json")
            assert parse_rational(text) == rational_from_json(json.loads(payload)["value"])

    def test_poly(self):
        for p in (0, 1, 5, 9):
            _, text, _ = _run("poly", str(p))
            _, payload, _ = _run("poly", str(p), "--format", "json")
            assert parse_polynomial(text) == polynomial_from_json(json.loads(payload)["coeffs"])

    def test_zeta(self):
        for s in (2, 8, 20, -1, -7, -6):
            _, text, _ = _run("zeta", str(s))
            _, payload, _ = _run("zeta", str(s), "--format", "json")
            value = json.loads(payload)["value"]
            parsed = parse_zeta_text(text)
            if isinstance(parsed, ZetaValue):
                assert parsed.coeff == rational_from_json(value["coeff"])
                assert parsed.pi_power == value["pi_power"]
            else:
                assert parsed == rational_from_json(value)

    def test_fourier(self):
        for k, n in ((1, 1), (3, -2), (6, 5)):
            _, text, _ = _run("fourier", str(k), str(n))
            _, payload, _ = _run("fourier", str(k), str(n), "--format", "json")
            terms = {t["m"]: rational_from_json(t["q"]) for t in json.loads(payload)["terms"]}
            assert dict(parse_fourier_text(text, n).terms) == terms


class TestVerifyCommand:
    def test_default_run_passes(self):
        code, out, _ = _run("verify", "--max-k", "5", "--terms", "10000")
        assert code == EXIT_OK
        assert out.rstrip().endswith("all checks passed")

    def test_single_term_passes(self):
        code, _, _ = _run("verify", "--max-k", "1", "--terms", "1")
        assert code == EXIT_OK

    def test_json_summary(self):
        code, out, _ = _run("verify", "--max-k", "2", "--terms", "100", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["pass"] is True
        assert payload["failed"] == []
        assert [s["suite"] for s in payload["suites"]] == ["exact_core", "bernoulli", "fourier", "zeta"]

    def test_export_csv(self, tmp_path):
        path = tmp_path / "verifica.csv"
        code, _, _ = _run("verify", "--max-k", "1", "--terms", "50", "--export", str(path))
        assert code == EXIT_OK
        df = pd.read_csv(path)
        assert list(df.columns) == ["suite", "check", "passed", "detail"]
        assert df["passed"].all()

    def test_failure_exit_code(self, monkeypatch):
        from app.cli import main as cli_main

        def failing(max_k, terms, digits):
            return pd.DataFrame([{"suite": "zeta", "check": "forced", "passed": False, "detail": "x"}]), []

        monkeypatch.setattr(cli_main, "verify_report", failing)
        code, out, _ = _run("verify")
        assert code == EXIT_VERIFY_FAILED
        assert "FAILED zeta.forced" in out

    def test_json_parseval_reports(self):
        code, out, _ = _run("verify", "--max-k", "1", "--terms", "1", "--format", "json")
        assert code == EXIT_OK
        reports = json.loads(out)["parseval"]
        assert len(reports) == 1
        report = reports[0]
        assert set(report) == {"k", "terms", "lhs", "partial", "residual", "tail_bound", "pass"}
        assert (report["k"], report["terms"], report["lhs"], report["pass"]) == (1, 1, "1/12", True)

    def test_export_xlsx_has_parseval_sheet(self, tmp_path):
        path = tmp_path / "verifica.xlsx"
        code, _, _ = _run("verify", "--max-k", "2", "--terms", "20", "--export", str(path))
        assert code == EXIT_OK
        sheet = pd.read_excel(path, sheet_name="Parseval", engine="openpyxl")
        assert sheet["k"].tolist() == [1, 2]
        assert sheet["N"].tolist() == [20, 20]


class TestGlobalOptions:
    def test_format_before_subcommand(self):
        code, out, err = _run("--format", "json", "number", "6")
        assert code == EXIT_OK, err
        assert out == (GOLDEN / "number_6_json.out").read_text()

    def test_format_before_and_after_agree(self):
        assert _run("--format", "latex", "poly", "3") == _run("poly", "3", "--format", "latex")

    def test_subcommand_format_wins(self):
        _, out, _ = _run("--format", "latex", "number", "6", "--format", "json")
        assert out == (GOLDEN / "number_6_json.out").read_text()

    def test_verbose_before_subcommand(self):
        code, _, err = _run("--verbose", "number", "6")
        assert code == EXIT_OK
        assert "command number" in err

    def test_bad_format_before_subcommand(self):
        code, out, _ = _run("--format", "xml", "number", "6")
        assert code == EXIT_USAGE
        assert out == ""


def test_truncated_negative_decimal_has_no_sign():
    code, out, _ = _run("zeta", "-1", "--digits", "0")
    assert code == EXIT_OK
    assert out == "-1/12\n0\n"


def test_verbose_logs_to_stderr():
    code, out, err = _run("number", "40", "--verbose")
    assert code == EXIT_OK
    assert out == "-261082718496449122051/13530\n"
    assert "command number" in err
