"""Aritmetica esatta: razionali, polinomi densi e serie formali troncate.

Questo modulo contiene i tipi di base su cui si appoggiano tutti gli altri
calcoli del pacchetto. Nessuna operazione usa la virgola mobile:

* **Rational**: frazione ridotta a precisione arbitraria (``fractions.Fraction``),
  con denominatore sempre positivo e zero rappresentato come ``0/1``.
* **Polynomial**: lista densa di coefficienti razionali, l'indice ``i`` è il
  coefficiente di ``t^i``. Il polinomio nullo è la tupla vuota.
* **Series**: serie formale troncata a un ordine esplicito (esclusivo). I
  coefficienti possono essere razionali oppure polinomi, così da rappresentare
  anche funzioni generatrici in due variabili come ``x e^{tx} / (e^x - 1)``.

Le eccezioni del pacchetto sono definite qui perché ogni modulo dipende da
``exact_core``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class ExactError(Exception):
    """Errore base del pacchetto."""


class DomainError(ExactError, ValueError):
    """Argomento fuori dal dominio matematico dell'operazione."""


class UsageError(ExactError, ValueError):
    """Parametro di presentazione fuori intervallo (ad esempio le cifre)."""


def binomial(n: int, k: int) -> int:
    """Coefficiente binomiale ``C(n, k)``, zero quando ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial({n}, {k}): arguments must be nonnegative")
    return math.comb(n, k)


def _strip(coeffs: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Polinomio denso a coefficienti razionali nella variabile ``t``.

    Attributes:
        coeffs: Coefficienti in ordine di grado crescente; l'ultimo è sempre
            diverso da zero (il polinomio nullo è la tupla vuota).
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        """Restituisce ``c * t^k``."""
        if k < 0:
            raise DomainError(f"monomial degree must be nonnegative, got {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Grado del polinomio; ``-1`` per il polinomio nullo."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def _coerce(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        size = max(len(self.coeffs), len(q.coeffs))
        return Polynomial(tuple(self.coefficient(i) + q.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise DomainError("polynomial division by zero")
        return Polynomial(tuple(c / other for c in self.coeffs))

    def __call__(self, t: Scalar) -> Fraction:
        return poly_eval(self, Fraction(t))

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def antiderivative(self) -> "Polynomial":
        """Primitiva con costante nulla."""
        return Polynomial((0,) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_eval(p: Polynomial, t: Fraction) -> Fraction:
    """Valuta ``p`` in ``t`` con lo schema di Horner, in aritmetica esatta."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_integral(p: Polynomial, a: Fraction, b: Fraction) -> Fraction:
    """Integrale esatto di ``p`` fra ``a`` e ``b`` tramite la primitiva."""
    prim = p.antiderivative()
    return poly_eval(prim, Fraction(b)) - poly_eval(prim, Fraction(a))


def falling_binomial_polynomial(k: int) -> Polynomial:
    """``C(t, k) = t (t-1) ... (t-k+1) / k!`` come polinomio in ``t``."""
    if k < 0:
        raise DomainError(f"falling_binomial_polynomial: k must be nonnegative, got {k}")
    acc = Polynomial.constant(1)
    for i in range(k):
        acc = acc * Polynomial((-i, 1))
    return acc / math.factorial(k)


def format_rational(q: Fraction) -> str:
    """Forma testuale canonica ``num/den`` (denominatore omesso se 1)."""
    return str(Fraction(q))


def format_polynomial(p: Polynomial, var: str = "t") -> str:
    """Forma testuale canonica a potenze decrescenti, es. ``t^2 - t + 1/6``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


# Serie formali troncate


Coefficient = Union[Fraction, Polynomial]


@dataclass(frozen=True)
class Series:
    """Serie formale troncata ``sum coeffs[j] x^j + O(x^order)``.

    Attributes:
        coeffs: Coefficienti (razionali o polinomi); la lunghezza coincide
            con l'ordine di troncamento.
    """

    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "coeffs",
            tuple(c if isinstance(c, Polynomial) else Fraction(c) for c in self.coeffs),
        )

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> Coefficient:
        return self.coeffs[j]

    def __mul__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return series_mul(self, other)

    def __add__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(tuple(self.coeffs[j] + other.coeffs[j] for j in range(order)))


def series_truncate(a: Series, order: int) -> Series:
    return Series(a.coeffs[: max(order, 0)])


def series_mul(a: Series, b: Series) -> Series:
    """Prodotto di Cauchy troncato al minimo dei due ordini."""
    order = min(a.order, b.order)
    out = []
    for j in range(order):
        acc = a.coeffs[0] * b.coeffs[j]
        for i in range(1, j + 1):
            acc = acc + a.coeffs[i] * b.coeffs[j - i]
        out.append(acc)
    return Series(tuple(out))


def series_reciprocal(a: Series) -> Series:
    """Inverso moltiplicativo di una serie a coefficienti razionali.

    Raises:
        DomainError: se il termine noto è nullo (o non razionale).
    """
    if a.order == 0:
        return Series(())
    c0 = a.coeffs[0]
    if not isinstance(c0, Fraction) or c0 == 0:
        raise DomainError("series_reciprocal: constant term must be a nonzero rational")
    inv = [1 / c0]
    for j in range(1, a.order):
        acc = sum((a.coeffs[i] * inv[j - i] for i in range(1, j + 1)), Fraction(0))
        inv.append(-acc / c0)
    return Series(tuple(inv))


def exp_series(order: int, scale: Coefficient = Fraction(1)) -> Series:
    """Serie ``sum scale^j x^j / j!``; con ``scale = t`` si ottiene ``e^{tx}``."""
    if order < 0:
        raise DomainError(f"exp_series: order must be nonnegative, got {order}")
    coeffs = []
    power: Coefficient = Polynomial.constant(1) if isinstance(scale, Polynomial) else Fraction(1)
    for j in range(order):
        coeffs.append(power / math.factorial(j))
        power = power * scale
    return Series(tuple(coeffs))
