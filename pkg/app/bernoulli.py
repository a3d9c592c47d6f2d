"""Numeri e polinomi di Bernoulli, polinomi delle somme di potenze.

Principi del calcolo:

* **Numeri di Bernoulli**: ottenuti dalla ricorrenza
  ``B_j = -1/(j+1) * sum_{l<j} C(j+1, l) B_l`` con ``B_0 = 1`` e memorizzati in
  una cache condivisa. Si usa la convenzione ``B_1 = -1/2``.
* **Funzione generatrice**: ``x / (e^x - 1)`` come reciproco della serie
  ``sum x^j / (j+1)!``; fornisce un oracolo indipendente dalla ricorrenza.
* **Polinomi di Bernoulli**: ``B_p(t) = sum_k B_k C(p, k) t^(p-k)``, monici di
  grado ``p``; la loro funzione generatrice è ``x e^{tx} / (e^x - 1)``.
* **Somme di potenze**: ``S_p(m) = sum_{n=1}^{m-1} n^p`` per ``m >= 1``,
  ricavata in tre modi (forma chiusa, ricorrenza, coefficienti binomiali)
  più la somma letterale usata come riferimento.
"""

from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import List

from app.exact_core import (
    DomainError,
    Polynomial,
    Series,
    binomial,
    exp_series,
    falling_binomial_polynomial,
    series_mul,
    series_reciprocal,
)

logger = logging.getLogger(__name__)


class BernoulliCache:
    """Cache crescente dei numeri di Bernoulli.

    ``values[j]`` contiene ``B_j``. Il riempimento calcola in un'unica passata
    tutti gli indici mancanti fino a quello richiesto ed è protetto da un lock,
    quindi la cache può essere condivisa fra thread.
    """

    def __init__(self) -> None:
        self.values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, j: int) -> Fraction:
        if j < 0:
            raise DomainError(f"bernoulli_number: index must be nonnegative, got {j}")
        if j >= len(self.values):
            self._fill(j)
        return self.values[j]

    def _fill(self, j: int) -> None:
        with self._lock:
            start = len(self.values)
            if j < start:
                return
            # copia: i lettori senza lock vedono sempre una lista completa
            values = list(self.values)
            for n in range(start, j + 1):
                # sum_{l<=n} C(n+1, l) B_l = 0, risolta rispetto a B_n
                acc = sum((binomial(n + 1, l) * values[l] for l in range(n)), Fraction(0))
                values.append(-acc / (n + 1))
            self.values = values
            logger.debug("bernoulli cache filled from %s to %s", start, j)


_CACHE = BernoulliCache()


def bernoulli_number(j: int) -> Fraction:
    """Restituisce il numero di Bernoulli ``B_j`` (con ``B_1 = -1/2``)."""
    return _CACHE.get(j)


def bernoulli_numbers(count: int) -> List[Fraction]:
    """Restituisce ``[B_0, ..., B_{count-1}]``."""
    if count <= 0:
        return []
    _CACHE.get(count - 1)
    return list(_CACHE.values[:count])


def _shifted_exp_series(order: int) -> Series:
    # (e^x - 1) / x = sum x^j / (j+1)!
    return Series(tuple(Fraction(1, math.factorial(j + 1)) for j in range(order)))


def bernoulli_numbers_via_gf(order: int) -> List[Fraction]:
    """Numeri di Bernoulli dalla funzione generatrice ``x / (e^x - 1)``.

    Args:
        order: Numero di coefficienti richiesti (almeno 1).

    Returns:
        La lista ``[B_0, ..., B_{order-1}]``, ricavata come ``j!`` per il
        coefficiente di ``x^j`` del reciproco di ``sum x^j / (j+1)!``.
    """
    if order < 1:
        raise DomainError(f"bernoulli_numbers_via_gf: order must be >= 1, got {order}")
    g = series_reciprocal(_shifted_exp_series(order))
    return [c * math.factorial(j) for j, c in enumerate(g.coeffs)]


def bernoulli_gf_is_even(order: int) -> bool:
    """Verifica che ``G(x) + x/2`` abbia coefficienti dispari nulli."""
    g = series_reciprocal(_shifted_exp_series(order))
    half_x = Series(tuple(Fraction(1, 2) if j == 1 else 0 for j in range(order)))
    shifted = g + half_x
    return all(c == 0 for j, c in enumerate(shifted.coeffs) if j % 2 == 1)


@lru_cache(maxsize=None)
def bernoulli_polynomial(p: int) -> Polynomial:
    """Polinomio di Bernoulli ``B_p(t) = sum_k B_k C(p, k) t^(p-k)``."""
    if p < 0:
        raise DomainError(f"bernoulli_polynomial: degree must be nonnegative, got {p}")
    coeffs = [Fraction(0)] * (p + 1)
    for k in range(p + 1):
        coeffs[p - k] = bernoulli_number(k) * binomial(p, k)
    return Polynomial(tuple(coeffs))


@lru_cache(maxsize=None)
def power_sum_polynomial(p: int) -> Polynomial:
    """Polinomio ``S_p(t)`` con ``S_p(m) = sum_{n=1}^{m-1} n^p``.

    Per ``p >= 1`` si usa la forma chiusa
    ``S_p(t) = 1/(p+1) sum_{j=0}^{p} B_j C(p+1, j) t^(p-j+1)``. La stessa
    formula per ``p = 0`` darebbe ``t``, mentre ``S_0(m) = m - 1``: il caso è
    trattato a parte.
    """
    if p < 0:
        raise DomainError(f"power_sum_polynomial: p must be nonnegative, got {p}")
    if p == 0:
        return Polynomial((-1, 1))
    coeffs = [Fraction(0)] * (p + 2)
    for j in range(p + 1):
        coeffs[p - j + 1] = bernoulli_number(j) * binomial(p + 1, j) / (p + 1)
    return Polynomial(tuple(coeffs))


@lru_cache(maxsize=None)
def power_sum_recursive(p: int) -> Polynomial:
    """``S_p`` dalla ricorrenza sulle somme di potenze, senza numeri di Bernoulli.

    ``S_p(t) = 1/(p+1) * (t^(p+1) - 1 - sum_{k<p} C(p+1, k) S_k(t))`` con
    ``S_0(t) = t - 1``.
    """
    if p < 0:
        raise DomainError(f"power_sum_recursive: p must be nonnegative, got {p}")
    if p == 0:
        return Polynomial((-1, 1))
    acc = Polynomial.monomial(p + 1) - 1
    for k in range(p):
        acc = acc - binomial(p + 1, k) * power_sum_recursive(k)
    return acc / (p + 1)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Numeri di Stirling di seconda specie ``S(n, k)``."""
    if n < 0 or k < 0:
        raise DomainError(f"stirling2({n}, {k}): arguments must be nonnegative")
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def hockey_stick_holds(p: int, m: int) -> bool:
    """Controlla ``sum_{n=0}^{m-1} C(n, p) = C(m, p+1)``."""
    return sum(binomial(n, p) for n in range(m)) == binomial(m, p + 1)


@lru_cache(maxsize=None)
def power_sum_binomial(p: int) -> Polynomial:
    """``S_p`` passando per la base binomiale.

    Si scrive ``n^p = sum_k S(p, k) k! C(n, k)`` e si somma ciascun termine con
    l'identità ``sum_{n<m} C(n, k) = C(m, k+1)``.
    """
    if p < 0:
        raise DomainError(f"power_sum_binomial: p must be nonnegative, got {p}")
    if p == 0:
        return Polynomial((-1, 1))
    acc = Polynomial()
    for k in range(1, p + 1):
        acc = acc + stirling2(p, k) * math.factorial(k) * falling_binomial_polynomial(k + 1)
    return acc


def power_sum_bruteforce(p: int, m: int) -> Fraction:
    """Somma letterale ``sum_{n=1}^{m-1} n^p`` (zero per ``m = 1``)."""
    if p < 0:
        raise DomainError(f"power_sum_bruteforce: p must be nonnegative, got {p}")
    if m < 1:
        raise DomainError(f"power_sum_bruteforce: m must be >= 1, got {m}")
    return Fraction(sum(n**p for n in range(1, m)))


def bernoulli_poly_gf(order: int) -> Series:
    """Funzione generatrice troncata ``x e^{tx} / (e^x - 1)``.

    Returns:
        Serie a coefficienti polinomiali; il coefficiente di ``x^p`` è
        ``B_p(t) / p!``.
    """
    if order < 1:
        raise DomainError(f"bernoulli_poly_gf: order must be >= 1, got {order}")
    etx = exp_series(order, Polynomial.monomial(1))
    g = series_reciprocal(_shifted_exp_series(order))
    return series_mul(etx, g)
