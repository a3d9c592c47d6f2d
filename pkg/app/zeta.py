"""Valori della zeta di Riemann agli interi pari e negativi, identità di Parseval.

Principi del calcolo:

* **Prodotti scalari di Bernoulli**: ``int_0^1 B_k B_l`` in forma chiusa
  ``(-1)^(k-1) l! k! B_{l+k} / (l+k)!``, confrontata con l'integrazione
  diretta dei polinomi e con la ricorrenza ``A_{k,l} = -k/(l+1) A_{k-1,l+1}``.
* **zeta(2k)**: ``(-1)^(k-1) 2^(2k-1) B_{2k} / (2k)! * pi^(2k)``, tenuto in
  forma esatta (coefficiente razionale e potenza di ``pi``). Lo stesso
  coefficiente si ricava anche da Parseval su ``B_k`` e, senza numeri di
  Bernoulli, da Parseval sui monomi ``t^k``.
* **zeta(-m)**: ``-B_{2k} / (2k)`` per ``m = 2k - 1``, zero per ``m`` pari.
* **pi**: formule di tipo Machin in aritmetica intera con cifre di guardia;
  tutte le rappresentazioni decimali sono troncate, non arrotondate.
* **Verifica di Parseval**: somma parziale di ``|c_n(B_k)|^2`` per
  ``0 < |n| <= N`` con stima rigorosa della coda per confronto con l'integrale
  ``sum_{n>N} n^-2k <= N^(1-2k) / (2k-1)``.

Gli zeta agli interi dispari ``s >= 3``, ``s = 1`` e ``s = 0`` non sono esposti:
si solleva ``DomainError`` con il motivo.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, List, Tuple, Union

from app.bernoulli import bernoulli_number, bernoulli_polynomial
from app.exact_core import DomainError, Polynomial, UsageError, format_rational, poly_integral
from app.fourier import fourier_coeff_closed, fourier_coeff_ibp, fourier_modulus_squared

logger = logging.getLogger(__name__)

# Cifre extra usate in tutti i calcoli decimali, poi scartate per troncamento.
GUARD_DIGITS = 10
MAX_DIGITS = 10000
DEFAULT_WORKING_DIGITS = 30

_PI_FORMULAS: Dict[str, Tuple[Tuple[int, int], ...]] = {
    # pi = 16 atan(1/5) - 4 atan(1/239)
    "machin": ((16, 5), (-4, 239)),
    # pi = 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)
    "gauss": ((48, 18), (32, 57), (-20, 239)),
}


@dataclass(frozen=True)
class ZetaValue:
    """Valore esatto ``coeff * pi^pi_power``."""

    coeff: Fraction
    pi_power: int

    def decimal(self, digits: int) -> str:
        return pi_power_decimal(self.coeff, self.pi_power, digits)

    def __str__(self) -> str:
        num, den = self.coeff.numerator, self.coeff.denominator
        if self.pi_power == 0:
            return format_rational(self.coeff)
        body = f"pi^{self.pi_power}"
        if abs(num) != 1:
            body = f"{abs(num)}*{body}"
        if den != 1:
            body = f"{body}/{den}"
        return f"-{body}" if num < 0 else body


@dataclass(frozen=True)
class ParsevalReport:
    """Esito della verifica numerica di Parseval per ``B_k``.

    Attributes:
        k: Indice del polinomio di Bernoulli.
        terms: Numero ``N`` di frequenze positive sommate.
        lhs: ``int_0^1 B_k^2`` esatto.
        partial: ``sum_{0<|n|<=N} |c_n(B_k)|^2``.
        residual: ``lhs - partial``.
        tail_bound: Maggiorazione della coda per confronto con l'integrale.
        passed: ``True`` se ``0 < residual <= tail_bound``.
    """

    k: int
    terms: int
    lhs: Fraction
    partial: Decimal
    residual: Decimal
    tail_bound: Decimal
    passed: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "terms": self.terms,
            "lhs": format_rational(self.lhs),
            "partial": f"{self.partial:f}",
            "residual": f"{self.residual:f}",
            "tail_bound": f"{self.tail_bound:f}",
            "pass": self.passed,
        }


def _check_index(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise DomainError(f"{name}: argument must be >= {minimum}, got {value}")


def inner_product_closed(k: int, l: int) -> Fraction:
    """``int_0^1 B_k(t) B_l(t) dt = (-1)^(k-1) l! k! B_{l+k} / (l+k)!``.

    Gli argomenti vengono scambiati se ``k > l`` (l'integrando è simmetrico).

    Raises:
        DomainError: se ``k`` o ``l`` è nullo.
    """
    if k < 1 or l < 1:
        raise DomainError(f"inner_product_closed({k}, {l}): requires 1 <= k <= l")
    if k > l:
        k, l = l, k
    sign = (-1) ** (k - 1)
    return Fraction(sign * math.factorial(l) * math.factorial(k), math.factorial(l + k)) * bernoulli_number(l + k)


def inner_product_exact(k: int, l: int) -> Fraction:
    """Stesso integrale calcolato direttamente sui coefficienti dei polinomi."""
    product = bernoulli_polynomial(k) * bernoulli_polynomial(l)
    return poly_integral(product, Fraction(0), Fraction(1))


def inner_product_recursive(k: int, l: int) -> Fraction:
    """Integrale via ``A_{k,l} = -k/(l+1) A_{k-1,l+1}`` e ``A_{1,l} = B_{l+1}/(l+1)``."""
    if k < 1 or l < 1:
        raise DomainError(f"inner_product_recursive({k}, {l}): requires 1 <= k <= l")
    if k > l:
        k, l = l, k
    factor = Fraction(1)
    while k > 1:
        factor *= Fraction(-k, l + 1)
        k, l = k - 1, l + 1
    return factor * bernoulli_number(l + 1) / (l + 1)


def zeta_even(k: int) -> ZetaValue:
    """``zeta(2k) = (-1)^(k-1) 2^(2k-1) B_{2k} / (2k)! * pi^(2k)``."""
    _check_index("zeta_even", k)
    coeff = Fraction((-1) ** (k - 1) * 2 ** (2 * k - 1), math.factorial(2 * k)) * bernoulli_number(2 * k)
    return ZetaValue(coeff, 2 * k)


def zeta_negative(m: int) -> Fraction:
    """``zeta(-m)``: ``-B_{2k}/(2k)`` per ``m = 2k - 1``, zero per ``m`` pari."""
    _check_index("zeta_negative", m)
    if m % 2 == 0:
        return Fraction(0)
    k = (m + 1) // 2
    return -bernoulli_number(2 * k) / (2 * k)


def zeta(s: int) -> Union[ZetaValue, Fraction]:
    """Valore esatto di ``zeta(s)`` per gli interi dove è noto in forma chiusa.

    Raises:
        DomainError: per ``s = 1`` (polo), ``s = 0`` e ``s`` dispari ``>= 3``.
    """
    if s < 0:
        return zeta_negative(-s)
    if s == 0:
        raise DomainError(
            "zeta(0): not exposed; exact values are provided only for zeta(2k), k >= 1, and zeta(-m), m >= 1"
        )
    if s == 1:
        raise DomainError("zeta(1): the zeta function has a simple pole at s=1")
    if s % 2 == 1:
        raise DomainError(
            f"zeta({s}): no exact closed form is known at odd integers s >= 3 (no one knows the exact values)"
        )
    return zeta_even(s // 2)


def zeta_even_via_parseval(k: int) -> Fraction:
    """Coefficiente di ``pi^(2k)`` in ``zeta(2k)`` ricavato da Parseval su ``B_k``.

    ``int_0^1 B_k^2 = sum_{n != 0} |c_n(B_k)|^2 = 2 r pi^-2k zeta(2k)``, dove
    ``r`` è il coefficiente di ``pi^-2k`` in ``|c_1(B_k)|^2``.
    """
    _check_index("zeta_even_via_parseval", k)
    r = fourier_modulus_squared(fourier_coeff_closed(k, 1)).coefficient(-2 * k)
    return inner_product_closed(k, k) / (2 * r)


def zeta_even_via_monomials(k: int) -> Fraction:
    """Coefficiente di ``pi^(2k)`` in ``zeta(2k)`` da Parseval sui monomi ``t^j``.

    Per ``f = t^j`` si ha ``int_0^1 f^2 = 1/(2j+1)``, ``c_0 = 1/(j+1)`` e
    ``|c_n(f)|^2 = sum_i r_i pi^-2i n^-2i``; sommando su ``n != 0`` ogni termine
    diventa ``2 r_i zeta(2i) pi^-2i``. Noti i valori per ``i < j`` resta
    un'equazione lineare nel coefficiente di ``zeta(2j)``.
    """
    _check_index("zeta_even_via_monomials", k)
    known: List[Fraction] = [Fraction(0)]
    for j in range(1, k + 1):
        coeff = fourier_coeff_ibp(Polynomial.monomial(j), 1)
        moduli = fourier_modulus_squared(coeff)
        rhs = Fraction(1, 2 * j + 1) - Fraction(1, j + 1) ** 2
        for i in range(1, j):
            rhs -= 2 * moduli.coefficient(-2 * i) * known[i]
        known.append(rhs / (2 * moduli.coefficient(-2 * j)))
    return known[k]


# Aritmetica decimale in virgola fissa


def _arctan_inverse(x: int, one: int) -> int:
    """``atan(1/x) * one`` con la serie alternata in aritmetica intera."""
    total = term = one // x
    x_squared = x * x
    n = 0
    while term:
        n += 1
        term //= -x_squared
        total += term // (2 * n + 1)
    return total


def pi_fixed(precision: int, formula: str = "machin") -> int:
    """``floor(pi * 10^precision)`` calcolato con cifre di guardia.

    Args:
        precision: Cifre decimali dopo la virgola.
        formula: ``"machin"`` oppure ``"gauss"``.
    """
    if formula not in _PI_FORMULAS:
        raise UsageError(f"unknown pi formula {formula!r}; choose one of {sorted(_PI_FORMULAS)}")
    if precision < 0:
        raise UsageError(f"precision must be nonnegative, got {precision}")
    one = 10 ** (precision + GUARD_DIGITS)
    value = sum(c * _arctan_inverse(x, one) for c, x in _PI_FORMULAS[formula])
    return value // 10**GUARD_DIGITS


def format_fixed(value: int, precision: int, digits: int) -> str:
    """Rende ``value / 10^precision`` troncato a ``digits`` cifre decimali."""
    if digits > precision:
        value *= 10 ** (digits - precision)
        precision = digits
    scaled = abs(value) // 10 ** (precision - digits)
    # niente "-0" quando il troncamento azzera il valore
    sign = "-" if value < 0 and scaled else ""
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _check_digits(digits: int, minimum: int = 1) -> None:
    if not minimum <= digits <= MAX_DIGITS:
        raise UsageError(f"digits must be between {minimum} and {MAX_DIGITS}, got {digits}")


def pi_digits(digits: int, formula: str = "machin") -> str:
    """``pi`` troncato a ``digits`` cifre dopo la virgola (1..10000)."""
    _check_digits(digits)
    return format_fixed(pi_fixed(digits, formula), digits, digits)


def pi_cross_check(digits: int) -> bool:
    """Controlla che le due formule concordino su tutte le cifre richieste."""
    return pi_digits(digits, "machin") == pi_digits(digits, "gauss")


def pi_power_decimal(coeff: Fraction, power: int, digits: int) -> str:
    """``coeff * pi^power`` troncato a ``digits`` cifre decimali."""
    _check_digits(digits, minimum=0)
    if power < 0:
        raise DomainError(f"pi power must be nonnegative, got {power}")
    precision = digits + GUARD_DIGITS + len(str(power))
    pi = pi_fixed(precision)
    scale = 10 ** (precision * max(power - 1, 0))
    if power == 0:
        value = coeff.numerator * 10**precision // coeff.denominator
    else:
        value = coeff.numerator * pi**power // (coeff.denominator * scale)
    return format_fixed(value, precision, digits)


def zeta_even_decimal(k: int, digits: int) -> str:
    """``zeta(2k)`` troncato a ``digits`` cifre decimali."""
    return zeta_even(k).decimal(digits)


def _inverse_power_chunk(args: Tuple[int, int, int, int]) -> int:
    start, end, exponent, precision = args
    one = 10**precision
    return sum(one // n**exponent for n in range(start, end))


def _make_ranges(start: int, end: int, count: int) -> List[Tuple[int, int]]:
    # intervalli contigui: la fine di uno è l'inizio del successivo
    step = max((end - start) // count, 1)
    bounds = list(range(start, end, step))[:count] + [end]
    return list(zip(bounds[:-1], bounds[1:]))


def inverse_power_sum(exponent: int, terms: int, precision: int, workers: int = 1) -> int:
    """``sum_{n=1}^{terms} floor(10^precision / n^exponent)``.

    L'accumulo è intero, quindi il risultato non dipende dall'ordine né dalla
    suddivisione fra processi.
    """
    ranges = _make_ranges(1, terms + 1, max(workers, 1))
    jobs = [(a, b, exponent, precision) for a, b in ranges]
    logger.debug("inverse power sum: exponent=%s terms=%s ranges=%s", exponent, terms, ranges)
    if workers <= 1 or len(jobs) == 1:
        return sum(_inverse_power_chunk(job) for job in jobs)
    with Pool(workers) as pool:
        return sum(pool.map(_inverse_power_chunk, jobs))


def parseval_verify(
    k: int,
    terms: int,
    digits: int = DEFAULT_WORKING_DIGITS,
    workers: int = 1,
) -> ParsevalReport:
    """Verifica numerica dell'identità di Parseval per ``B_k``.

    La precisione di lavoro è ``digits`` più le cifre di guardia, aumentata
    dell'ordine di grandezza della coda ``N^(1-2k)`` così che il residuo resti
    risolubile. I decimali del report mostrano ``digits`` cifre oltre gli zeri
    iniziali della coda.

    Args:
        k: Indice del polinomio di Bernoulli (``k >= 1``).
        terms: Numero ``N`` di frequenze positive (``N >= 1``).
        digits: Cifre significative richieste per il residuo.
        workers: Processi usati per la somma parziale.

    Returns:
        Il ``ParsevalReport`` con somma parziale, residuo, coda e esito.
    """
    _check_index("parseval_verify k", k)
    _check_index("parseval_verify terms", terms)
    _check_digits(digits)
    two_k = 2 * k
    # zeri iniziali della coda, circa N^(1-2k) / pi^2k
    magnitude = (two_k - 1) * len(str(terms)) + two_k
    shown = digits + magnitude
    precision = shown + GUARD_DIGITS + len(str(terms))

    # |c_n(B_k)|^2 = (k!)^2 / (4^k pi^2k n^2k), la coppia n, -n dà il fattore 2;
    # pi_fixed vale pi * 10^P e il 10^(2kP) al numeratore compensa la scala
    pi_power = pi_fixed(precision) ** two_k
    constant_num = 2 * math.factorial(k) ** 2 * 10 ** (two_k * precision)
    constant_den = 4**k * pi_power

    lhs = inner_product_closed(k, k)
    lhs_fixed = lhs.numerator * 10**precision // lhs.denominator
    inverse_sum = inverse_power_sum(two_k, terms, precision, workers)
    # inverse_sum è già scalata di 10^P, quindi anche partial_fixed
    partial_fixed = constant_num * inverse_sum // constant_den
    residual_fixed = lhs_fixed - partial_fixed
    # coda: sum_{n>N} n^-2k <= N^(1-2k) / (2k-1)
    tail_fixed = constant_num * 10**precision // (constant_den * terms ** (two_k - 1) * (two_k - 1))

    passed = 0 < residual_fixed <= tail_fixed
    if not passed:
        logger.warning("parseval check failed for k=%s N=%s", k, terms)
    logger.debug("parseval k=%s N=%s precision=%s passed=%s", k, terms, precision, passed)
    return ParsevalReport(
        k=k,
        terms=terms,
        lhs=lhs,
        partial=Decimal(format_fixed(partial_fixed, precision, shown)),
        residual=Decimal(format_fixed(residual_fixed, precision, shown)),
        tail_bound=Decimal(format_fixed(tail_fixed, precision, shown)),
        passed=passed,
    )
