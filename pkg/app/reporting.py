"""Rappresentazioni testuali, JSON e LaTeX; esportazione dei report di verifica.

Questo modulo raccoglie:

* le forme JSON dei valori esatti (razionali come ``{"num", "den"}`` in
  stringa, per non perdere precisione);
* le forme LaTeX con la tipografia usata nella documentazione
  (es. ``\\frac{\\pi^2}{6}``);
* l'esportazione in Excel e CSV dei controlli eseguiti da ``verify_all`` e la
  tabella delle verifiche di Parseval.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

import pandas as pd

from app.exact_core import Polynomial, UsageError, format_polynomial, format_rational
from app.fourier import FourierExact, PiLaurent
from app.verify import summarize_checks
from app.zeta import DEFAULT_WORKING_DIGITS, ParsevalReport, ZetaValue, parseval_verify

FORMATS = ("text", "json", "latex")

Renderable = Union[Fraction, int, Polynomial, FourierExact, PiLaurent, ZetaValue, ParsevalReport]

# Intestazioni dei fogli esportati
_COLUMN_LABELS = {
    "suite": "Modulo",
    "check": "Controllo",
    "passed": "Superato",
    "detail": "Dettaglio",
    "checks": "Numero controlli",
    "failed": "Falliti",
}

_PARSEVAL_COLUMNS = ["k", "terms", "lhs", "partial", "residual", "tail_bound", "pass"]
_PARSEVAL_LABELS = {
    "terms": "N",
    "lhs": "Norma esatta",
    "partial": "Somma parziale",
    "residual": "Residuo",
    "tail_bound": "Stima coda",
    "pass": "Superato",
}


def to_json(payload: Any) -> str:
    """JSON compatto e deterministico (nessuno spazio dopo i separatori)."""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def rational_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def polynomial_json(p: Polynomial) -> List[dict]:
    return [rational_json(c) for c in p.coeffs]


def fourier_json(f: Union[FourierExact, Fraction]) -> List[dict]:
    if not isinstance(f, FourierExact):
        return []
    return [{"m": m, "q": rational_json(q)} for m, q in f.terms.items()]


def pi_laurent_json(value: PiLaurent) -> List[dict]:
    return [{"e": e, "r": rational_json(r)} for e, r in value.terms.items()]


def zeta_json(value: Union[ZetaValue, Fraction]) -> dict:
    if isinstance(value, ZetaValue):
        return {"coeff": rational_json(value.coeff), "pi_power": value.pi_power}
    return rational_json(value)


def latex_escape(text: str) -> str:
    return text.replace("_", "\\_")


def latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_power(base: str, e: int) -> str:
    if e == 1:
        return base
    return f"{base}^{e}" if e < 10 else f"{base}^{{{e}}}"


def latex_polynomial(p: Polynomial, var: str = "t") -> str:
    """Es. ``t^3 - \\frac{3}{2}t^2 + \\frac{1}{2}t``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = latex_rational(mag)
        else:
            body = _latex_power(var, i)
            if mag != 1:
                body = latex_rational(mag) + body
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def latex_zeta(value: Union[ZetaValue, Fraction]) -> str:
    """Es. ``\\frac{\\pi^2}{6}``; per i valori razionali la frazione semplice."""
    if not isinstance(value, ZetaValue):
        return latex_rational(value)
    num, den = value.coeff.numerator, value.coeff.denominator
    top = _latex_power("\\pi", value.pi_power)
    if abs(num) != 1:
        top = f"{abs(num)}{top}"
    sign = "-" if num < 0 else ""
    if den == 1:
        return f"{sign}{top}"
    return f"{sign}\\frac{{{top}}}{{{den}}}"


def latex_fourier(f: Union[FourierExact, Fraction]) -> str:
    """Es. ``\\frac{-2}{(2\\pi i n)^2}``, un termine per potenza."""
    if not isinstance(f, FourierExact):
        return latex_rational(f)
    if f.is_zero():
        return "0"
    parts = []
    for m, q in f.terms.items():
        denominator = _latex_power("(2\\pi i n)", m)
        if q.denominator != 1:
            denominator = f"{q.denominator}{denominator}"
        body = f"\\frac{{{q.numerator}}}{{{denominator}}}"
        parts.append(body if not parts else f"+ {body}")
    return " ".join(parts)


def latex_pi_laurent(value: PiLaurent) -> str:
    if value.is_zero():
        return "0"
    parts = []
    for e, r in sorted(value.terms.items(), reverse=True):
        power = _latex_power("\\pi", abs(e)) if e else ""
        if e < 0:
            body = f"\\frac{{{abs(r.numerator)}}}{{{r.denominator if r.denominator != 1 else ''}{power}}}"
        elif e == 0:
            body = latex_rational(abs(r))
        else:
            body = latex_zeta(ZetaValue(abs(r), e))
        if not parts:
            parts.append(f"-{body}" if r < 0 else body)
        else:
            parts.append(f"- {body}" if r < 0 else f"+ {body}")
    return " ".join(parts)


def _parseval_text(report: ParsevalReport) -> str:
    verdict = "pass" if report.passed else "FAIL"
    return (
        f"k={report.k} N={report.terms} lhs={format_rational(report.lhs)} "
        f"residual={report.residual:f} tail_bound={report.tail_bound:f} {verdict}"
    )


def _parseval_latex(report: ParsevalReport) -> str:
    return (
        f"{report.k} & {report.terms} & {latex_rational(report.lhs)} & "
        f"{report.residual:f} & {report.tail_bound:f} \\\\"
    )


def render(value: Renderable, fmt: str = "text") -> str:
    """Rende un valore esatto nel formato richiesto.

    Args:
        value: ``Fraction``, ``Polynomial``, ``FourierExact``, ``PiLaurent``,
            ``ZetaValue`` oppure ``ParsevalReport``.
        fmt: Uno fra ``text``, ``json`` e ``latex``.

    Raises:
        UsageError: se il formato non è supportato.
    """
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    if isinstance(value, ParsevalReport):
        handlers = (_parseval_text, lambda r: to_json(r.to_dict()), _parseval_latex)
    elif isinstance(value, Polynomial):
        handlers = (format_polynomial, lambda p: to_json(polynomial_json(p)), latex_polynomial)
    elif isinstance(value, FourierExact):
        handlers = (str, lambda f: to_json(fourier_json(f)), latex_fourier)
    elif isinstance(value, PiLaurent):
        handlers = (str, lambda v: to_json(pi_laurent_json(v)), latex_pi_laurent)
    elif isinstance(value, ZetaValue):
        handlers = (str, lambda z: to_json(zeta_json(z)), latex_zeta)
    else:
        handlers = (format_rational, lambda q: to_json(rational_json(q)), latex_rational)
    text, as_json, latex = handlers
    if fmt == "json":
        return as_json(value)
    if fmt == "latex":
        return latex(value)
    return text(value)


# Report di verifica


def generate_verify_xlsx(
    df: pd.DataFrame,
    output_path: str,
    parseval: Optional[Sequence[ParsevalReport]] = None,
) -> str:
    """Esporta un workbook Excel con il dettaglio dei controlli.

    Vengono creati i fogli:

    * ``Riepilogo``: numero di controlli superati e falliti per modulo.
    * ``Dettaglio_controlli``: tutte le righe prodotte da ``verify_all``.
    * ``Falliti``: solo i controlli non superati.
    * ``Parseval``: un report per riga, solo se ``parseval`` è fornito.

    Args:
        df: DataFrame risultante da ``verify_all``.
        parseval: Report di Parseval da ``verify_report``.
        output_path: Percorso del file, sovrascritto se esiste.

    Returns:
        Il percorso del file generato.
    """
    path = Path(output_path)
    with pd.ExcelWriter(path, engine="openpyxl") as writer:
        summary = summarize_checks(df).rename(columns=_COLUMN_LABELS)
        summary.to_excel(writer, sheet_name="Riepilogo", index=False)
        df.rename(columns=_COLUMN_LABELS).to_excel(writer, sheet_name="Dettaglio_controlli", index=False)
        failed = df[~df["passed"]] if not df.empty else df
        failed.rename(columns=_COLUMN_LABELS).to_excel(writer, sheet_name="Falliti", index=False)
        if parseval:
            # decimali come testo: Excel li taglierebbe a 15 cifre
            parseval_frame(parseval).rename(columns=_PARSEVAL_LABELS).to_excel(
                writer, sheet_name="Parseval", index=False
            )
    return str(path)


def generate_verify_csv(df: pd.DataFrame, output_path: str) -> str:
    """Esporta il dettaglio dei controlli in CSV (colonne con i nomi interni)."""
    path = Path(output_path)
    df.to_csv(path, index=False)
    return str(path)


def parseval_table(
    max_k: int,
    terms_grid: Iterable[int],
    digits: int = DEFAULT_WORKING_DIGITS,
) -> pd.DataFrame:
    """Tabella delle verifiche di Parseval per ``k <= max_k`` e ogni ``N``.

    Returns:
        DataFrame con una riga per coppia ``(k, N)`` e le colonne del report.
    """
    reports = [parseval_verify(k, n, digits) for k in range(1, max_k + 1) for n in terms_grid]
    return parseval_frame(reports)


def parseval_frame(reports: Iterable[ParsevalReport]) -> pd.DataFrame:
    """Un report per riga, con le chiavi di ``ParsevalReport.to_dict``."""
    return pd.DataFrame([r.to_dict() for r in reports], columns=_PARSEVAL_COLUMNS)
