from fractions import Fraction

import pytest

from app.bernoulli import bernoulli_polynomial, power_sum_polynomial
from app.exact_core import Polynomial, UsageError
from app.fourier import FourierExact, fourier_coeff_ibp
from app.parsing import (
    parse_fourier_text,
    parse_polynomial,
    parse_rational,
    parse_zeta_text,
    polynomial_from_json,
    rational_from_json,
)
from app.reporting import polynomial_json, rational_json
from app.zeta import ZetaValue, zeta_even


def test_parse_rational():
    assert parse_rational("-691/2730") == Fraction(-691, 2730)
    assert parse_rational(" 7 ") == 7
    for bad in ("1/", "a/2", "1.5", ""):
        with pytest.raises(UsageError):
            parse_rational(bad)


def test_rational_json_inverse():
    for q in (Fraction(0), Fraction(-1, 2), Fraction(10**40, 3)):
        assert rational_from_json(rational_json(q)) == q


@pytest.mark.parametrize("p", range(0, 12))
def test_polynomial_text_and_json(p):
    for poly in (bernoulli_polynomial(p), power_sum_polynomial(p)):
        assert parse_polynomial(str(poly)) == poly
        assert polynomial_from_json(polynomial_json(poly)) == poly


def test_polynomial_edge_forms():
    assert parse_polynomial("0") == Polynomial()
    assert parse_polynomial("-t") == Polynomial((0, -1))
    assert parse_polynomial("-3/2*t^2 + 1") == Polynomial((1, 0, Fraction(-3, 2)))
    with pytest.raises(UsageError):
        parse_polynomial("t^2 + x")


def test_zeta_text():
    assert parse_zeta_text("pi^2/6") == ZetaValue(Fraction(1, 6), 2)
    assert parse_zeta_text("-1/12") == Fraction(-1, 12)
    for k in range(1, 12):
        assert parse_zeta_text(str(zeta_even(k))) == zeta_even(k)


def test_fourier_text():
    coeff = fourier_coeff_ibp(Polynomial((Fraction(1, 3), -2, 0, Fraction(7, 5), 1)), 4)
    assert parse_fourier_text(str(coeff), 4) == coeff
    assert parse_fourier_text("0", 2) == FourierExact(2, {})
    assert parse_fourier_text("1/3", 0) == Fraction(1, 3)
    with pytest.raises(UsageError):
        parse_fourier_text("2/(pi*n)^2", 1)
