"""Coefficienti di Fourier esatti di polinomi su ``[0, 1]``.

Il coefficiente ``c_n(f) = int_0^1 f(t) e^{-2 pi i n t} dt`` di un polinomio,
per ``n != 0``, è un elemento di ``Q[(2 pi i n)^-1]``: lo rappresentiamo con
``FourierExact``, una mappa sparsa ``m -> q_m`` che vale
``sum_m q_m (2 pi i n)^-m``. I coefficienti ``q_m`` non dipendono da ``n``.

* ``fourier_coeff_ibp`` integra per parti ripetutamente e vale per qualunque
  polinomio (anche i monomi ``t^k``).
* ``fourier_coeff_closed`` restituisce la forma chiusa per ``B_k``:
  ``c_n(B_k) = -k! / (2 pi i n)^k`` e ``c_0(B_k) = 0``.
* ``fourier_modulus_squared`` calcola ``|c_n|^2`` come combinazione esatta di
  potenze negative pari di ``pi`` (``PiLaurent``).

Per ``n = 0`` il risultato è un razionale (integrale del polinomio), tenuto
distinto per non dover rappresentare ``0^-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Union

from app.bernoulli import bernoulli_number, bernoulli_polynomial
from app.exact_core import DomainError, Polynomial, format_rational, poly_integral

Number = Union[int, float, Decimal]


def _clean_terms(terms: Mapping[int, Fraction]) -> Mapping[int, Fraction]:
    clean: Dict[int, Fraction] = {}
    for key, value in sorted(terms.items()):
        value = Fraction(value)
        if value != 0:
            clean[int(key)] = value
    return MappingProxyType(clean)


def _magnitude(q: Fraction) -> str:
    q = abs(q)
    text = format_rational(q)
    return text if q.denominator == 1 else f"({text})"


@dataclass(frozen=True, eq=False)
class FourierExact:
    """Valore esatto ``sum_m q_m (2 pi i n)^-m`` con ``n != 0``.

    Attributes:
        n: Frequenza (intero non nullo).
        terms: Mappa ``m -> q_m`` con ``m >= 1`` e soli coefficienti non nulli.
    """

    n: int
    terms: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        if self.n == 0:
            raise DomainError("FourierExact: frequency must be nonzero")
        clean = _clean_terms(self.terms)
        if any(m < 1 for m in clean):
            raise DomainError("FourierExact: powers of (2*pi*i*n)^-1 must be positive")
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourierExact):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: object) -> "FourierExact":
        if not isinstance(other, FourierExact):
            return NotImplemented
        if other.n != self.n:
            raise DomainError(f"cannot add coefficients at frequencies {self.n} and {other.n}")
        merged = dict(self.terms)
        for m, q in other.terms.items():
            merged[m] = merged.get(m, Fraction(0)) + q
        return FourierExact(self.n, merged)

    def __neg__(self) -> "FourierExact":
        return FourierExact(self.n, {m: -q for m, q in self.terms.items()})

    def __mul__(self, other: object) -> "FourierExact":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return FourierExact(self.n, {m: q * other for m, q in self.terms.items()})

    __rmul__ = __mul__

    def shift(self, scale: Union[int, Fraction] = 1) -> "FourierExact":
        """Moltiplica per ``scale / (2 pi i n)``."""
        return FourierExact(self.n, {m + 1: q * scale for m, q in self.terms.items()})

    def flip_frequency(self) -> "FourierExact":
        """Stesso valore espresso sulla frequenza ``-n``."""
        return FourierExact(-self.n, {m: q * (-1) ** m for m, q in self.terms.items()})

    def to_complex(self, pi: float = math.pi) -> complex:
        """Valore numerico approssimato, solo per la visualizzazione."""
        base = 2 * float(pi) * 1j * self.n
        return sum((float(q) * base ** (-m) for m, q in self.terms.items()), 0j)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, q in self.terms.items():
            body = f"{_magnitude(q)}/(2*pi*i*n)^{m}"
            if not parts:
                parts.append(f"-{body}" if q < 0 else body)
            else:
                parts.append(f"- {body}" if q < 0 else f"+ {body}")
        return " ".join(parts)


@dataclass(frozen=True, eq=False)
class PiLaurent:
    """Combinazione ``sum_e r_e pi^e`` con coefficienti razionali non nulli."""

    terms: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean_terms(self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiLaurent):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def __add__(self, other: object) -> "PiLaurent":
        if not isinstance(other, PiLaurent):
            return NotImplemented
        merged = dict(self.terms)
        for e, r in other.terms.items():
            merged[e] = merged.get(e, Fraction(0)) + r
        return PiLaurent(merged)

    def __mul__(self, other: object) -> "PiLaurent":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return PiLaurent({e: r * other for e, r in self.terms.items()})

    __rmul__ = __mul__

    def evaluate(self, pi: Number = math.pi) -> Number:
        """Valore numerico con il ``pi`` fornito (float o ``Decimal``)."""
        if isinstance(pi, Decimal):
            return sum(
                (Decimal(r.numerator) / Decimal(r.denominator) * pi**e for e, r in self.terms.items()),
                Decimal(0),
            )
        return sum((float(r) * float(pi) ** e for e, r in self.terms.items()), 0.0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, r in sorted(self.terms.items(), reverse=True):
            num, den = abs(r.numerator), r.denominator
            if e == 0:
                body = format_rational(abs(r))
            elif e > 0:
                power = f"pi^{e}"
                body = power if num == 1 else f"{num}*{power}"
                if den != 1:
                    body = f"{body}/{den}"
            else:
                power = f"pi^{-e}"
                body = f"{num}/{power}" if den == 1 else f"{num}/({den}*{power})"
            if not parts:
                parts.append(f"-{body}" if r < 0 else body)
            else:
                parts.append(f"- {body}" if r < 0 else f"+ {body}")
        return " ".join(parts)


FourierResult = Union[FourierExact, Fraction]


def fourier_coeff_closed(k: int, n: int) -> FourierResult:
    """Forma chiusa di ``c_n(B_k)`` per ``k >= 1``.

    Returns:
        ``FourierExact`` con l'unico termine ``{k: -k!}`` se ``n != 0``,
        altrimenti lo zero razionale.

    Raises:
        DomainError: se ``k < 1``.
    """
    if k < 1:
        raise DomainError(f"fourier_coeff_closed: k must be >= 1, got {k}")
    if n == 0:
        return Fraction(0)
    return FourierExact(n, {k: -math.factorial(k)})


def fourier_coeff_ibp(p: Polynomial, n: int) -> FourierResult:
    """Coefficiente di Fourier esatto di un polinomio qualsiasi.

    Integrando per parti ``deg p + 1`` volte e usando ``e^{-2 pi i n} = 1`` si
    ottiene ``c_n(p) = sum_j -Delta_j (2 pi i n)^-(j+1)`` con
    ``Delta_j = p^(j)(1) - p^(j)(0)``.

    Args:
        p: Polinomio da trasformare.
        n: Frequenza; per ``n = 0`` si restituisce ``int_0^1 p``.
    """
    if n == 0:
        return poly_integral(p, Fraction(0), Fraction(1))
    terms: Dict[int, Fraction] = {}
    d = p
    j = 0
    while not d.is_zero():
        delta = d(1) - d(0)
        if delta != 0:
            terms[j + 1] = -delta
        d = d.derivative()
        j += 1
    return FourierExact(n, terms)


def fourier_modulus_squared(f: FourierExact) -> PiLaurent:
    """``|c_n|^2`` esatto come combinazione di potenze negative pari di ``pi``.

    Si separano parte reale e immaginaria con ``i^-m in {1, -i, -1, i}``;
    posto ``x = 1 / (2 pi n)``, il quadrato del modulo è un polinomio in ``x``
    con soli esponenti pari e ``x^e = pi^-e / (2n)^e``.
    """
    real: Dict[int, Fraction] = {}
    imag: Dict[int, Fraction] = {}
    for m, q in f.terms.items():
        if m % 2 == 0:
            # i^-m = (-1)^(m/2)
            real[m] = q * (-1) ** (m // 2)
        else:
            # i^-m = -i (-1)^((m-1)/2)
            imag[m] = -q * (-1) ** ((m - 1) // 2)
    # |re|^2 + |im|^2 come polinomio in x
    powers: Dict[int, Fraction] = {}
    for part in (real, imag):
        for a, qa in part.items():
            for b, qb in part.items():
                powers[a + b] = powers.get(a + b, Fraction(0)) + qa * qb
    two_n = 2 * f.n
    return PiLaurent({-e: c / Fraction(two_n) ** e for e, c in powers.items()})


def bernoulli_ibp_integral(k: int, f: Polynomial) -> Fraction:
    """``int_0^1 B_k(t) f'(t) dt`` tramite l'identità di integrazione per parti.

    Per ``k >= 2`` vale ``(f(1) - f(0)) B_k - k int_0^1 B_{k-1} f``; per
    ``k = 1`` il termine di bordo è ``B_1(1) f(1) - B_1(0) f(0)``, cioè
    ``(f(1) + f(0)) / 2``.
    """
    if k < 1:
        raise DomainError(f"bernoulli_ibp_integral: k must be >= 1, got {k}")
    zero, one = Fraction(0), Fraction(1)
    if k == 1:
        return (f(1) + f(0)) / 2 - poly_integral(f, zero, one)
    rest = poly_integral(bernoulli_polynomial(k - 1) * f, zero, one)
    return (f(1) - f(0)) * bernoulli_number(k) - k * rest
