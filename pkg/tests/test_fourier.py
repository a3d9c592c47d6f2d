"""Test dei coefficienti di Fourier esatti."""

import cmath
import math
from fractions import Fraction

import mpmath
import pytest

from app.bernoulli import bernoulli_number, bernoulli_polynomial
from app.exact_core import DomainError, Polynomial, poly_integral
from app.fourier import (
    FourierExact,
    PiLaurent,
    bernoulli_ibp_integral,
    fourier_coeff_closed,
    fourier_coeff_ibp,
    fourier_modulus_squared,
)

FREQUENCIES = [n for n in range(-12, 13) if n != 0]


class TestFourierExact:
    def test_zero_frequency_rejected(self):
        with pytest.raises(DomainError):
            FourierExact(0, {1: 1})
        with pytest.raises(DomainError):
            FourierExact(1, {0: 1})

    def test_zero_terms_dropped(self):
        f = FourierExact(2, {1: 0, 3: Fraction(1, 2)})
        assert dict(f.terms) == {3: Fraction(1, 2)}
        assert FourierExact(2, {1: 0}).is_zero()
        assert str(FourierExact(2, {})) == "0"

    def test_arithmetic(self):
        a = FourierExact(3, {1: 1, 2: -2})
        b = FourierExact(3, {2: 2, 4: 5})
        assert a + b == FourierExact(3, {1: 1, 4: 5})
        assert -a == FourierExact(3, {1: -1, 2: 2})
        assert Fraction(1, 2) * a == FourierExact(3, {1: Fraction(1, 2), 2: -1})
        assert a.shift(3) == FourierExact(3, {2: 3, 3: -6})
        with pytest.raises(DomainError):
            a + FourierExact(4, {1: 1})

    def test_text_form(self):
        assert str(FourierExact(5, {2: -2})) == "-2/(2*pi*i*n)^2"
        assert str(FourierExact(5, {1: Fraction(-1, 2), 3: 6})) == "-(1/2)/(2*pi*i*n)^1 + 6/(2*pi*i*n)^3"

    def test_to_complex(self):
        f = FourierExact(3, {2: -2})
        assert cmath.isclose(f.to_complex(), -2 / (2j * math.pi * 3) ** 2)


class TestClosedForm:
    def test_examples(self):
        assert fourier_coeff_closed(1, 1) == FourierExact(1, {1: -1})
        assert fourier_coeff_closed(2, 5) == FourierExact(5, {2: -2})
        assert fourier_coeff_closed(4, 3) == FourierExact(3, {4: -24})
        assert fourier_coeff_closed(7, 0) == 0

    def test_domain(self):
        with pytest.raises(DomainError):
            fourier_coeff_closed(0, 1)

    @pytest.mark.parametrize("k", range(1, 11))
    def test_matches_integration_by_parts(self, k):
        for n in FREQUENCIES:
            assert fourier_coeff_ibp(bernoulli_polynomial(k), n) == fourier_coeff_closed(k, n)
        assert fourier_coeff_ibp(bernoulli_polynomial(k), 0) == 0

    @pytest.mark.parametrize("k", range(2, 11))
    def test_recursion_in_k(self, k):
        for n in (1, -3, 8):
            assert fourier_coeff_closed(k, n) == fourier_coeff_closed(k - 1, n).shift(k)

    @pytest.mark.parametrize("k,n", [(1, 1), (2, 3), (3, -2), (5, 1)])
    def test_matches_quadrature(self, k, n):
        poly = bernoulli_polynomial(k)
        with mpmath.workdps(30):
            def integrand(t):
                value = mpmath.polyval([mpmath.mpf(c.numerator) / c.denominator for c in reversed(poly.coeffs)], t)
                return value * mpmath.expj(-2 * mpmath.pi * n * t)

            numeric = mpmath.quad(integrand, [0, 1])
            exact = -mpmath.factorial(k) / (2j * mpmath.pi * n) ** k
            assert abs(numeric - exact) < mpmath.mpf(10) ** -20


class TestIntegrationByParts:
    def test_monomials(self):
        # c_n(t) = -1/(2 pi i n), c_n(t^2) = -1/(2 pi i n) - 2/(2 pi i n)^2
        assert fourier_coeff_ibp(Polynomial.monomial(1), 4) == FourierExact(4, {1: -1})
        assert fourier_coeff_ibp(Polynomial.monomial(2), 4) == FourierExact(4, {1: -1, 2: -2})
        assert fourier_coeff_ibp(Polynomial.monomial(3), 0) == Fraction(1, 4)

    def test_constant_has_no_oscillating_part(self):
        assert fourier_coeff_ibp(Polynomial.constant(7), 2).is_zero()

    def test_linearity(self):
        p = Polynomial((Fraction(1, 3), -2, 0, Fraction(7, 5), 1))
        q = bernoulli_polynomial(6)
        for n in (1, -4, 9):
            assert fourier_coeff_ibp(p + q, n) == fourier_coeff_ibp(p, n) + fourier_coeff_ibp(q, n)
            assert fourier_coeff_ibp(3 * p, n) == 3 * fourier_coeff_ibp(p, n)

    def test_conjugate_symmetry(self):
        p = Polynomial((Fraction(1, 3), -2, 0, Fraction(7, 5), 1))
        for n in (1, 2, 7):
            forward = fourier_coeff_ibp(p, n)
            backward = fourier_coeff_ibp(p, -n)
            assert backward.to_complex() == pytest.approx(forward.to_complex().conjugate())
            assert fourier_modulus_squared(forward) == fourier_modulus_squared(backward)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_bernoulli_ibp_identity(self, k):
        for j in range(6):
            f = Polynomial.monomial(j) + bernoulli_polynomial(j)
            direct = poly_integral(bernoulli_polynomial(k) * f.derivative(), Fraction(0), Fraction(1))
            assert bernoulli_ibp_integral(k, f) == direct

    def test_bernoulli_ibp_rejects_zero(self):
        with pytest.raises(DomainError):
            bernoulli_ibp_integral(0, Polynomial.monomial(1))


class TestModulusSquared:
    def test_bernoulli(self):
        # |c_n(B_k)|^2 = (k!)^2 / (2 pi n)^(2k)
        assert fourier_modulus_squared(fourier_coeff_closed(1, 1)) == PiLaurent({-2: Fraction(1, 4)})
        assert fourier_modulus_squared(fourier_coeff_closed(2, 3)) == PiLaurent({-4: Fraction(4, 1296)})

    def test_mixed_powers(self):
        # |c_n(t^2)|^2 = 1/(2 pi n)^2 + 4/(2 pi n)^4
        value = fourier_modulus_squared(fourier_coeff_ibp(Polynomial.monomial(2), 1))
        assert value == PiLaurent({-2: Fraction(1, 4), -4: Fraction(1, 4)})
        assert str(value) == "1/(4*pi^2) + 1/(4*pi^4)"

    def test_numeric_agreement(self):
        p = Polynomial((Fraction(1, 3), -2, 0, Fraction(7, 5), 1))
        for n in (1, -2, 5):
            coeff = fourier_coeff_ibp(p, n)
            assert fourier_modulus_squared(coeff).evaluate() == pytest.approx(abs(coeff.to_complex()) ** 2, rel=1e-12)

    def test_laurent_arithmetic(self):
        a = PiLaurent({-2: 1, 0: Fraction(1, 2)})
        b = PiLaurent({-2: -1, 2: 3})
        assert a + b == PiLaurent({0: Fraction(1, 2), 2: 3})
        assert (a * 2).coefficient(-2) == 2
        assert a.coefficient(5) == 0
        assert str(PiLaurent({2: Fraction(1, 6)})) == "pi^2/6"


def test_bernoulli_number_sign_alternates():
    for k in range(1, 20):
        assert (-1) ** (k - 1) * bernoulli_number(2 * k) > 0
