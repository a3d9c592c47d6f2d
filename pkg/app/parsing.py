"""Lettura delle forme testuali e JSON canoniche.

Le uscite della riga di comando (testo e JSON) sono un contratto: questo
modulo contiene le funzioni inverse che ricostruiscono i valori esatti, usate
dai test sui file golden per controllare che testo e JSON descrivano lo stesso
valore.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

from app.exact_core import Polynomial, UsageError
from app.fourier import FourierExact
from app.zeta import ZetaValue

_RATIONAL = r"-?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^\s*({_RATIONAL})\s*$")
_POLY_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?t(?:\^(\d+))?$")
_ZETA_RE = re.compile(r"^(-)?(?:(\d+)\*)?pi\^(\d+)(?:/(\d+))?$")
_FOURIER_TERM_RE = re.compile(r"^\(?(\d+(?:/\d+)?)\)?/\(2\*pi\*i\*n\)\^(\d+)$")
# separa i termini di una somma: " + " oppure " - "
_SIGN_SPLIT_RE = re.compile(r"\s+([+-])\s+")


def parse_rational(text: str) -> Fraction:
    """Converte ``"num/den"`` (o un intero) in ``Fraction``.

    Raises:
        UsageError: se il testo non è nella forma canonica.
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise UsageError(f"not a rational number: {text!r}")
    return Fraction(match.group(1))


def rational_from_json(obj: Mapping[str, str]) -> Fraction:
    """Inverso di ``{"num": "...", "den": "..."}``."""
    return Fraction(int(obj["num"]), int(obj["den"]))


def polynomial_from_json(coeffs: Iterable[Mapping[str, str]]) -> Polynomial:
    """Inverso della lista di coefficienti in ordine di grado crescente."""
    return Polynomial(tuple(rational_from_json(c) for c in coeffs))


def _signed_terms(text: str) -> Iterable[tuple]:
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    pieces = _SIGN_SPLIT_RE.split(text)
    yield sign, pieces[0]
    for op, body in zip(pieces[1::2], pieces[2::2]):
        yield (-1 if op == "-" else 1), body


def parse_polynomial(text: str) -> Polynomial:
    """Inverso di ``format_polynomial``, es. ``"t^3 - 3/2*t^2 + 1/2*t"``."""
    if text.strip() == "0":
        return Polynomial()
    coeffs: Dict[int, Fraction] = {}
    for sign, body in _signed_terms(text):
        term = _POLY_TERM_RE.match(body)
        if term:
            coeff = Fraction(term.group(1)) if term.group(1) else Fraction(1)
            power = int(term.group(2)) if term.group(2) else 1
        elif _RATIONAL_RE.match(body):
            coeff, power = Fraction(body), 0
        else:
            raise UsageError(f"not a polynomial term: {body!r}")
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coeff
    degree = max(coeffs)
    return Polynomial(tuple(coeffs.get(i, Fraction(0)) for i in range(degree + 1)))


def parse_zeta_text(text: str) -> Union[ZetaValue, Fraction]:
    """Inverso della forma testuale di ``zeta``: ``"pi^2/6"`` oppure ``"-1/12"``."""
    text = text.strip()
    match = _ZETA_RE.match(text)
    if not match:
        return parse_rational(text)
    sign, num, power, den = match.groups()
    coeff = Fraction(int(num or 1), int(den or 1))
    return ZetaValue(-coeff if sign else coeff, int(power))


def parse_fourier_text(text: str, n: int) -> Union[FourierExact, Fraction]:
    """Inverso della forma ``"q/(2*pi*i*n)^m"`` alla frequenza ``n``."""
    if n == 0:
        return parse_rational(text)
    if text.strip() == "0":
        return FourierExact(n, {})
    terms: Dict[int, Fraction] = {}
    for sign, body in _signed_terms(text):
        match = _FOURIER_TERM_RE.match(body)
        if not match:
            raise UsageError(f"not a Fourier term: {body!r}")
        terms[int(match.group(2))] = sign * Fraction(match.group(1))
    return FourierExact(n, terms)
