"""Controlli incrociati fra le costruzioni indipendenti di ogni modulo.

``verify_all`` esegue tutti gli oracoli del pacchetto e restituisce un
DataFrame con una riga per controllo (colonne ``suite``, ``check``,
``passed``, ``detail``), come base per il riepilogo a riga di comando e per
l'esportazione in Excel/CSV. ``verify_report`` restituisce anche i
``ParsevalReport`` completi (somma parziale, residuo, coda) per ogni ``k``.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Iterable, List, Tuple

import pandas as pd

from app.bernoulli import (
    bernoulli_gf_is_even,
    bernoulli_number,
    bernoulli_numbers_via_gf,
    bernoulli_poly_gf,
    bernoulli_polynomial,
    hockey_stick_holds,
    power_sum_binomial,
    power_sum_bruteforce,
    power_sum_polynomial,
    power_sum_recursive,
)
from app.exact_core import (
    Polynomial,
    Series,
    UsageError,
    binomial,
    exp_series,
    poly_derivative,
    poly_eval,
    poly_integral,
    series_mul,
    series_reciprocal,
    series_truncate,
)
from app.fourier import (
    FourierExact,
    bernoulli_ibp_integral,
    fourier_coeff_closed,
    fourier_coeff_ibp,
    fourier_modulus_squared,
)
from app.zeta import (
    DEFAULT_WORKING_DIGITS,
    ParsevalReport,
    inner_product_closed,
    inner_product_exact,
    inner_product_recursive,
    parseval_verify,
    pi_cross_check,
    zeta_even,
    zeta_even_decimal,
    zeta_even_via_monomials,
    zeta_even_via_parseval,
    zeta_negative,
)

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_MAX_K = 5
DEFAULT_VERIFY_TERMS = 10000

Check = Tuple[str, str, Callable[[], Tuple[bool, str]]]

_FREQUENCIES = [n for n in range(-20, 21) if n != 0]


def _first_failure(cases: Iterable, predicate: Callable) -> Tuple[bool, str]:
    """Restituisce ``(True, "")`` oppure il primo caso che non soddisfa il predicato."""
    count = 0
    for case in cases:
        count += 1
        if not predicate(*case):
            return False, f"fails at {case}"
    return True, f"{count} cases"


def _exact_core_checks() -> List[Check]:
    bernoulli_series = Series(tuple(bernoulli_number(j) for j in range(16)))

    def reciprocal_cases():
        for order in (1, 4, 9, 16):
            yield (exp_series(order),)
            yield (exp_series(order, Fraction(-3, 2)),)
            yield (series_truncate(bernoulli_series, order),)

    def is_identity(a):
        product = series_mul(a, series_reciprocal(a))
        return list(product.coeffs) == [1] + [0] * (a.order - 1)

    def derivative_integral(p):
        a, b = Fraction(-1, 3), Fraction(5, 2)
        return poly_integral(poly_derivative(p), a, b) == poly_eval(p, b) - poly_eval(p, a)

    return [
        ("exact_core", "pascal_rule", lambda: _first_failure(
            ((n, k) for n in range(1, 31) for k in range(1, n + 1)),
            lambda n, k: binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k),
        )),
        ("exact_core", "hockey_stick", lambda: _first_failure(
            ((p, m) for p in range(11) for m in range(1, 31)), hockey_stick_holds,
        )),
        ("exact_core", "series_reciprocal", lambda: _first_failure(reciprocal_cases(), is_identity)),
        ("exact_core", "integral_of_derivative", lambda: _first_failure(
            ((bernoulli_polynomial(p),) for p in range(11)), derivative_integral,
        )),
    ]


def _bernoulli_checks() -> List[Check]:
    printed = [Fraction(1), Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42), 0]
    gf = bernoulli_numbers_via_gf(61)
    poly_gf = bernoulli_poly_gf(16)
    sample_m = (1, 2, 10, 100, 1000)

    def power_sum_derivative(p):
        return poly_derivative(power_sum_polynomial(p)) == bernoulli_polynomial(p)

    def telescoping(p):
        expected = (bernoulli_polynomial(p + 1) - bernoulli_number(p + 1)) / (p + 1)
        return power_sum_polynomial(p) == expected

    return [
        ("bernoulli", "printed_values", lambda: (
            [bernoulli_number(j) for j in range(8)] == printed, "B_0..B_7",
        )),
        ("bernoulli", "recursion_vs_generating_function", lambda: _first_failure(
            ((j,) for j in range(61)), lambda j: bernoulli_number(j) == gf[j],
        )),
        ("bernoulli", "odd_vanishing", lambda: _first_failure(
            ((k,) for k in range(1, 31)), lambda k: bernoulli_number(2 * k + 1) == 0,
        )),
        ("bernoulli", "generating_function_even_part", lambda: (bernoulli_gf_is_even(40), "order 40")),
        ("bernoulli", "boundary_values", lambda: _first_failure(
            ((p,) for p in range(2, 31)),
            lambda p: bernoulli_polynomial(p)(0) == bernoulli_polynomial(p)(1) == bernoulli_number(p),
        )),
        ("bernoulli", "derivative_ladder", lambda: _first_failure(
            ((p,) for p in range(1, 31)),
            lambda p: poly_derivative(bernoulli_polynomial(p)) == p * bernoulli_polynomial(p - 1),
        )),
        ("bernoulli", "power_sum_derivative", lambda: _first_failure(
            ((p,) for p in range(21)), power_sum_derivative,
        )),
        ("bernoulli", "faulhaber_vs_bruteforce", lambda: _first_failure(
            ((p, m) for p in range(13) for m in sample_m),
            lambda p, m: power_sum_polynomial(p)(m) == power_sum_bruteforce(p, m),
        )),
        ("bernoulli", "faulhaber_vs_recursion", lambda: _first_failure(
            ((p,) for p in range(21)), lambda p: power_sum_polynomial(p) == power_sum_recursive(p),
        )),
        ("bernoulli", "faulhaber_vs_binomial", lambda: _first_failure(
            ((p,) for p in range(21)), lambda p: power_sum_polynomial(p) == power_sum_binomial(p),
        )),
        ("bernoulli", "telescoping_form", lambda: _first_failure(((p,) for p in range(1, 21)), telescoping)),
        ("bernoulli", "root_at_one", lambda: _first_failure(
            ((p,) for p in range(1, 21)), lambda p: power_sum_polynomial(p)(1) == 0,
        )),
        ("bernoulli", "mean_zero", lambda: _first_failure(
            ((k,) for k in range(1, 21)),
            lambda k: poly_integral(bernoulli_polynomial(k), Fraction(0), Fraction(1)) == 0,
        )),
        ("bernoulli", "polynomial_generating_function", lambda: _first_failure(
            ((p,) for p in range(16)),
            lambda p: poly_gf[p] * math.factorial(p) == bernoulli_polynomial(p),
        )),
    ]


def _fourier_checks() -> List[Check]:
    samples = [bernoulli_polynomial(k) for k in range(9)] + [Polynomial.monomial(k) for k in range(9)]
    samples.append(Polynomial((Fraction(1, 3), -2, 0, Fraction(7, 5), 1)))

    def reflected(p, n):
        forward = fourier_coeff_ibp(p, n)
        expected = FourierExact(n, {m: (-1) ** m * q for m, q in forward.terms.items()})
        return fourier_coeff_ibp(p, -n).flip_frequency() == expected

    def modulus_invariant(p, n):
        return fourier_modulus_squared(fourier_coeff_ibp(p, n)) == fourier_modulus_squared(fourier_coeff_ibp(p, -n))

    def degree_recursion(k, n):
        return fourier_coeff_closed(k, n) == fourier_coeff_closed(k - 1, n).shift(k)

    def linear(i, n):
        p, q = samples[i], samples[-1 - i]
        return fourier_coeff_ibp(p + q, n) == fourier_coeff_ibp(p, n) + fourier_coeff_ibp(q, n)

    def ibp_identity(k, j):
        f = Polynomial.monomial(j) + bernoulli_polynomial(j)
        direct = poly_integral(bernoulli_polynomial(k) * f.derivative(), Fraction(0), Fraction(1))
        return bernoulli_ibp_integral(k, f) == direct

    return [
        ("fourier", "closed_form_vs_integration_by_parts", lambda: _first_failure(
            ((k, n) for k in range(1, 11) for n in _FREQUENCIES),
            lambda k, n: fourier_coeff_ibp(bernoulli_polynomial(k), n) == fourier_coeff_closed(k, n),
        )),
        ("fourier", "zero_frequency", lambda: _first_failure(
            ((k,) for k in range(1, 21)),
            lambda k: fourier_coeff_closed(k, 0) == 0 == fourier_coeff_ibp(bernoulli_polynomial(k), 0),
        )),
        ("fourier", "conjugate_symmetry", lambda: _first_failure(
            ((p, n) for p in samples for n in (1, 2, 7)), reflected,
        )),
        ("fourier", "modulus_invariance", lambda: _first_failure(
            ((p, n) for p in samples for n in (1, 3, 11)), modulus_invariant,
        )),
        ("fourier", "linearity", lambda: _first_failure(
            ((i, n) for i in range(len(samples)) for n in (1, -4)), linear,
        )),
        ("fourier", "degree_recursion", lambda: _first_failure(
            ((k, n) for k in range(2, 11) for n in (1, -2, 5)), degree_recursion,
        )),
        ("fourier", "integration_by_parts_identity", lambda: _first_failure(
            ((k, j) for k in range(1, 9) for j in range(6)), ibp_identity,
        )),
        ("fourier", "monomial_coefficient", lambda: (
            fourier_coeff_ibp(Polynomial.monomial(1), 3) == FourierExact(3, {1: -1}), "c_n(t)",
        )),
    ]


def _zeta_checks(reports: List[ParsevalReport], digits: int) -> List[Check]:
    known = {1: Fraction(1, 6), 2: Fraction(1, 90), 3: Fraction(1, 945), 4: Fraction(1, 9450)}
    pairs = [(k, l) for l in range(1, 13) for k in range(1, l + 1)]

    checks: List[Check] = [
        ("zeta", "inner_product_closed_vs_exact", lambda: _first_failure(
            pairs, lambda k, l: inner_product_closed(k, l) == inner_product_exact(k, l),
        )),
        ("zeta", "inner_product_closed_vs_recursion", lambda: _first_failure(
            pairs, lambda k, l: inner_product_closed(k, l) == inner_product_recursive(k, l),
        )),
        ("zeta", "known_even_values", lambda: _first_failure(
            known.items(), lambda k, c: zeta_even(k).coeff == c and zeta_even(k).pi_power == 2 * k,
        )),
        ("zeta", "positivity", lambda: _first_failure(((k,) for k in range(1, 31)), lambda k: zeta_even(k).coeff > 0)),
        ("zeta", "parseval_consistency", lambda: _first_failure(
            ((k,) for k in range(1, 16)), lambda k: zeta_even_via_parseval(k) == zeta_even(k).coeff,
        )),
        ("zeta", "monomial_family", lambda: _first_failure(
            ((k,) for k in range(1, 9)), lambda k: zeta_even_via_monomials(k) == zeta_even(k).coeff,
        )),
        ("zeta", "negative_values", lambda: _first_failure(
            ((k,) for k in range(1, 31)),
            lambda k: zeta_negative(2 * k - 1) == -bernoulli_number(2 * k) / (2 * k) and zeta_negative(2 * k) == 0,
        )),
        ("zeta", "pi_cross_check", lambda: (pi_cross_check(digits), f"{digits} digits")),
        ("zeta", "zeta_two_decimal", lambda: (
            zeta_even_decimal(1, 15) == "1.644934066848226", "zeta(2) to 15 digits",
        )),
    ]
    for report in reports:
        checks.append((
            "zeta",
            f"parseval_k{report.k}_N{report.terms}",
            lambda r=report: (r.passed, f"residual={r.residual:f} tail_bound={r.tail_bound:f}"),
        ))
    return checks


def parseval_reports(max_k: int, terms: int, digits: int = DEFAULT_WORKING_DIGITS) -> List[ParsevalReport]:
    """Un ``ParsevalReport`` per ogni ``k`` da 1 a ``max_k``, tutti con ``N = terms``."""
    return [parseval_verify(k, terms, digits) for k in range(1, max_k + 1)]


def verify_report(
    max_k: int = DEFAULT_VERIFY_MAX_K,
    terms: int = DEFAULT_VERIFY_TERMS,
    digits: int = DEFAULT_WORKING_DIGITS,
) -> Tuple[pd.DataFrame, List[ParsevalReport]]:
    """Esegue tutti i controlli incrociati e conserva i report di Parseval.

    Args:
        max_k: Indice massimo dei polinomi di Bernoulli nelle verifiche di Parseval.
        terms: Numero ``N`` di frequenze positive delle somme parziali.
        digits: Cifre di lavoro per i controlli decimali.

    Returns:
        La coppia ``(df, reports)``: il DataFrame con colonne ``suite``,
        ``check``, ``passed``, ``detail`` e la lista dei ``ParsevalReport``.
    """
    if max_k < 1 or terms < 1:
        raise UsageError(f"verify: --max-k and --terms must be >= 1, got {max_k} and {terms}")
    reports = parseval_reports(max_k, terms, digits)
    checks = _exact_core_checks() + _bernoulli_checks() + _fourier_checks() + _zeta_checks(reports, digits)
    rows = []
    for suite, name, run in checks:
        passed, detail = run()
        logger.debug("%s.%s: %s (%s)", suite, name, passed, detail)
        if not passed:
            logger.warning("check %s.%s failed: %s", suite, name, detail)
        rows.append({"suite": suite, "check": name, "passed": bool(passed), "detail": detail})
    df = pd.DataFrame(rows, columns=["suite", "check", "passed", "detail"])
    logger.info("verify: %s of %s checks passed", int(df["passed"].sum()), len(df))
    return df, reports


def verify_all(
    max_k: int = DEFAULT_VERIFY_MAX_K,
    terms: int = DEFAULT_VERIFY_TERMS,
    digits: int = DEFAULT_WORKING_DIGITS,
) -> pd.DataFrame:
    """Come ``verify_report`` ma restituisce solo il DataFrame dei controlli."""
    df, _ = verify_report(max_k, terms, digits)
    return df


def all_passed(df: pd.DataFrame) -> bool:
    return bool(df["passed"].all())


def summarize_checks(df: pd.DataFrame) -> pd.DataFrame:
    """Riepilogo per modulo: numero di controlli, superati e falliti."""
    if df.empty:
        return pd.DataFrame({"suite": [], "checks": [], "passed": [], "failed": []})
    summary = (
        df.groupby("suite", sort=False)
        .agg(checks=("passed", "count"), passed=("passed", "sum"))
        .reset_index()
    )
    summary["passed"] = summary["passed"].astype(int)
    summary["failed"] = summary["checks"] - summary["passed"]
    return summary
