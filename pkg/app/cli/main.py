"""Interfaccia a riga di comando: ``python -m app <comando> ...``.

Ogni sottocomando espone un'operazione del pacchetto e stampa il risultato in
uno dei formati ``text``, ``json`` o ``latex`` (opzione ``--format``, valida
prima o dopo il sottocomando). L'uscita su stdout è deterministica; i log vanno su
stderr.

Codici di uscita:

* ``0``: successo;
* ``1``: errore d'uso (opzione sconosciuta, argomento non valido);
* ``2``: errore di dominio (es. ``zeta 3``, ``zeta 1``);
* ``3``: ``verify`` terminato con almeno un controllo fallito (estensione dei
  codici 0/1/2, per distinguere un controllo fallito da un errore d'uso).
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, TextIO

from app import reporting
from app.bernoulli import bernoulli_number, bernoulli_polynomial, power_sum_polynomial
from app.exact_core import DomainError, UsageError
from app.fourier import FourierExact, fourier_coeff_closed, fourier_modulus_squared
from app.verify import (
    DEFAULT_VERIFY_MAX_K,
    DEFAULT_VERIFY_TERMS,
    all_passed,
    summarize_checks,
    verify_report,
)
from app.zeta import DEFAULT_WORKING_DIGITS, ZetaValue, inner_product_closed, pi_digits, pi_power_decimal, zeta

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAILED = 3


@dataclass
class Output:
    """Risultato di un sottocomando nelle tre rappresentazioni."""

    text: str
    payload: Dict[str, Any]
    latex: str
    exit_code: int = EXIT_OK


class CommandParser(argparse.ArgumentParser):
    """Parser che segnala gli errori con ``UsageError`` invece di uscire."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _cmd_number(args: argparse.Namespace) -> Output:
    value = bernoulli_number(args.j)
    return Output(
        text=reporting.render(value),
        payload={"j": args.j, "value": reporting.rational_json(value)},
        latex=reporting.render(value, "latex"),
    )


def _cmd_poly(args: argparse.Namespace) -> Output:
    poly = bernoulli_polynomial(args.p)
    return Output(
        text=reporting.render(poly),
        payload={"p": args.p, "coeffs": reporting.polynomial_json(poly)},
        latex=reporting.render(poly, "latex"),
    )


def _cmd_powersum(args: argparse.Namespace) -> Output:
    poly = power_sum_polynomial(args.p)
    payload: Dict[str, Any] = {"p": args.p, "coeffs": reporting.polynomial_json(poly)}
    if args.eval is None:
        return Output(text=reporting.render(poly), payload=payload, latex=reporting.render(poly, "latex"))
    if args.eval < 1:
        raise DomainError(f"powersum: S_p(m) is defined for m >= 1, got {args.eval}")
    value = poly(args.eval)
    payload.update({"m": args.eval, "value": reporting.rational_json(value)})
    return Output(text=reporting.render(value), payload=payload, latex=reporting.render(value, "latex"))


def _cmd_zeta(args: argparse.Namespace) -> Output:
    value = zeta(args.s)
    payload: Dict[str, Any] = {"s": args.s, "value": reporting.zeta_json(value)}
    text = reporting.render(value)
    latex = reporting.render(value, "latex")
    if args.digits is not None:
        if isinstance(value, ZetaValue):
            decimal = value.decimal(args.digits)
        else:
            decimal = pi_power_decimal(value, 0, args.digits)
        payload["decimal"] = decimal
        text = f"{text}\n{decimal}"
        latex = f"{latex} \\approx {decimal}"
    return Output(text=text, payload=payload, latex=latex)


def _cmd_fourier(args: argparse.Namespace) -> Output:
    coeff = fourier_coeff_closed(args.k, args.n)
    payload: Dict[str, Any] = {"k": args.k, "n": args.n, "terms": reporting.fourier_json(coeff)}
    if isinstance(coeff, FourierExact):
        payload["modulus_squared"] = reporting.pi_laurent_json(fourier_modulus_squared(coeff))
    else:
        payload["modulus_squared"] = []
    return Output(text=reporting.render(coeff), payload=payload, latex=reporting.render(coeff, "latex"))


def _cmd_innerproduct(args: argparse.Namespace) -> Output:
    value = inner_product_closed(args.k, args.l)
    return Output(
        text=reporting.render(value),
        payload={"k": args.k, "l": args.l, "value": reporting.rational_json(value)},
        latex=reporting.render(value, "latex"),
    )


def _cmd_pi(args: argparse.Namespace) -> Output:
    value = pi_digits(args.digits)
    return Output(text=value, payload={"digits": args.digits, "pi": value}, latex=value)


def _cmd_verify(args: argparse.Namespace) -> Output:
    df, reports = verify_report(args.max_k, args.terms, args.digits)
    summary = summarize_checks(df)
    ok = all_passed(df)
    if args.export:
        if args.export.lower().endswith(".xlsx"):
            reporting.generate_verify_xlsx(df, args.export, parseval=reports)
        else:
            reporting.generate_verify_csv(df, args.export)
    failed = df.loc[~df["passed"], ["suite", "check", "detail"]]
    lines = [
        f"{row.suite}: {row.passed}/{row.checks} passed"
        for row in summary.itertuples(index=False)
    ]
    lines += [f"FAILED {row.suite}.{row.check}: {row.detail}" for row in failed.itertuples(index=False)]
    verdict = "all checks passed" if ok else "some checks failed"
    lines.append(f"verify: {int(df['passed'].sum())}/{len(df)} {verdict}")
    payload = {
        "max_k": args.max_k,
        "terms": args.terms,
        "pass": ok,
        "checks": len(df),
        "suites": [
            {"suite": row.suite, "checks": int(row.checks), "passed": int(row.passed)}
            for row in summary.itertuples(index=False)
        ],
        "failed": [f"{row.suite}.{row.check}" for row in failed.itertuples(index=False)],
        "parseval": [r.to_dict() for r in reports],
    }
    rows = [
        f"{reporting.latex_escape(row.suite)} & {row.passed} & {row.checks} \\\\"
        for row in summary.itertuples(index=False)
    ]
    latex = "\n".join(["\\begin{tabular}{lrr}", *rows, "\\end{tabular}"])
    return Output(
        text="\n".join(lines),
        payload=payload,
        latex=latex,
        exit_code=EXIT_OK if ok else EXIT_VERIFY_FAILED,
    )


def _add_output_options(parser: argparse.ArgumentParser, fmt: Any, verbose: Any) -> None:
    parser.add_argument("--format", choices=reporting.FORMATS, default=fmt, help="Formato di uscita")
    parser.add_argument("--verbose", action="store_true", default=verbose, help="Log di debug su stderr")


def build_parser() -> CommandParser:
    """Costruisce il parser con tutti i sottocomandi."""
    # le opzioni globali valgono prima o dopo il sottocomando; le copie sui
    # sottocomandi non hanno default, così non sovrascrivono quelle globali
    common = CommandParser(add_help=False)
    _add_output_options(common, fmt=argparse.SUPPRESS, verbose=argparse.SUPPRESS)

    parser = CommandParser(
        prog="python -m app",
        description="Numeri di Bernoulli, somme di potenze e valori esatti della zeta di Riemann.",
    )
    _add_output_options(parser, fmt="text", verbose=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    def add(name: str, handler: Callable[[argparse.Namespace], Output], help_text: str) -> CommandParser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = add("number", _cmd_number, "Numero di Bernoulli B_j")
    cmd.add_argument("j", type=int)

    cmd = add("poly", _cmd_poly, "Polinomio di Bernoulli B_p(t)")
    cmd.add_argument("p", type=int)

    cmd = add("powersum", _cmd_powersum, "Polinomio delle somme di potenze S_p(t)")
    cmd.add_argument("p", type=int)
    cmd.add_argument("--eval", type=int, metavar="M", help="Valuta S_p(M) = 1^p + ... + (M-1)^p")

    cmd = add("zeta", _cmd_zeta, "Valore esatto di zeta(s) per s intero")
    cmd.add_argument("s", type=int)
    cmd.add_argument("--digits", type=int, metavar="D", help="Aggiunge il valore decimale troncato a D cifre")

    cmd = add("fourier", _cmd_fourier, "Coefficiente di Fourier c_n(B_k)")
    cmd.add_argument("k", type=int)
    cmd.add_argument("n", type=int)

    cmd = add("innerproduct", _cmd_innerproduct, "Integrale di B_k(t) B_l(t) su [0, 1]")
    cmd.add_argument("k", type=int)
    cmd.add_argument("l", type=int)

    cmd = add("pi", _cmd_pi, "Cifre decimali di pi")
    cmd.add_argument("--digits", type=int, required=True, metavar="D")

    cmd = add("verify", _cmd_verify, "Esegue tutti i controlli incrociati")
    cmd.add_argument("--max-k", type=int, default=DEFAULT_VERIFY_MAX_K, metavar="K")
    cmd.add_argument("--terms", type=int, default=DEFAULT_VERIFY_TERMS, metavar="N")
    cmd.add_argument("--digits", type=int, default=DEFAULT_WORKING_DIGITS, metavar="D")
    cmd.add_argument("--export", metavar="PATH", help="Salva il dettaglio in .xlsx oppure .csv")
    return parser


def _render(output: Output, fmt: str) -> str:
    if fmt == "json":
        return reporting.to_json(output.payload)
    if fmt == "latex":
        return output.latex
    return output.text


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Esegue un comando e restituisce il codice di uscita.

    Args:
        argv: Argomenti senza il nome del programma.
        stdout: Flusso per i risultati (default ``sys.stdout``).
        stderr: Flusso per errori e log (default ``sys.stderr``).
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    logger.debug("command %s with %s", args.command, argv)
    try:
        output = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    print(_render(output, args.format), file=stdout)
    return output.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
