"""Command-line front end.

Subcommands: generate, dual, verify, fit, solve-f, phi, convolve.  Exit
codes: 0 for success (a no-fit analysis is a success), 1 for a mathematical
verification failure or a failed precondition, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .dynsys import (
    convolve_fibonomial,
    fit_banded,
    phi_from_step_matrix,
    solve_step_matrix,
)
from .exact import Polynomial
from .misprints import format_ledger
from .output import OutputDocument
from .sequences import RootSequence
from .triads import (
    Triangle,
    banded_for_family,
    canonical_family,
    dual_polynomials,
    generate_named,
    lah_from_roots,
    persistent_root_polys,
    verify_triad,
)

DEFAULT_ROW_CAP = 512

FAMILIES = (
    "pascal",
    "q-gaussian",
    "catalan-shifted",
    "catalan-triad",
    "fibonomial",
    "stirling1",
    "eulerian",
    "lah",
)
BANDED_FAMILIES = ("pascal", "q-gaussian", "catalan-triad")


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 2."""


def parse_roots(text: str) -> RootSequence:
    """Parse --roots: a comma list of exact values, optionally ending in an
    ellipsis that continues an arithmetic or geometric pattern."""
    items = [t.strip() for t in text.split(",")]
    continued = bool(items) and items[-1] in ("…", "...")
    if continued:
        items = items[:-1]
    if not items or any(not t for t in items):
        raise UsageError(f"cannot parse roots {text!r}")
    try:
        values = [Fraction(t) for t in items]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse roots {text!r}") from None
    if not continued:
        return RootSequence.explicit(values)
    if len(values) == 1:
        return RootSequence.constant(values[0])
    steps = {values[i + 1] - values[i] for i in range(len(values) - 1)}
    if len(steps) == 1:
        return RootSequence.arithmetic(values[0], steps.pop())
    if all(v != 0 for v in values):
        ratios = {values[i + 1] / values[i] for i in range(len(values) - 1)}
        if len(ratios) == 1:
            return RootSequence.geometric(ratios.pop(), first=values[0])
    raise UsageError(
        f"roots {text!r}: the ellipsis continues only arithmetic or geometric patterns"
    )


def _parse_q(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse q value {text!r}") from None
    if q == 0:
        raise UsageError("q must be nonzero")
    return q


def _checked_rows(args: argparse.Namespace) -> int:
    rows = args.rows
    if rows < 0:
        raise UsageError("--rows must be nonnegative")
    cap = args.max_rows
    if cap < 0:
        raise UsageError("--max-rows must be nonnegative")
    if rows > cap:
        raise UsageError(f"--rows {rows} exceeds the cap {cap}; raise it with --max-rows")
    return rows


def _family_inputs(args: argparse.Namespace) -> tuple[str, Optional[Fraction], Optional[RootSequence]]:
    family = canonical_family(args.family)
    q = _parse_q(args.q) if args.q is not None else None
    roots = parse_roots(args.roots) if args.roots is not None else None
    if family == "q-gaussian" and q is None:
        raise UsageError("family q-gaussian needs --q")
    if family != "q-gaussian" and q is not None:
        raise UsageError("--q only applies to family q-gaussian")
    if family == "lah" and roots is None:
        raise UsageError("family lah needs --roots")
    if family != "lah" and roots is not None:
        raise UsageError("--roots only applies to family lah")
    return family, q, roots


def _build_triangle(args: argparse.Namespace, rows: int) -> Triangle:
    family, q, roots = _family_inputs(args)
    if family == "lah":
        return lah_from_roots(roots, rows, params=(("roots", args.roots),))
    return generate_named(family, rows, q=q)


def _emit(doc: OutputDocument, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(doc.to_json() + "\n")
    elif fmt == "csv":
        sys.stdout.write(doc.to_csv())
    else:
        sys.stdout.write(doc.to_pretty())


def _poly_rows(polys: Sequence[Polynomial]) -> list[tuple[Fraction, ...]]:
    return [p.coeffs if p.coeffs else (Fraction(0),) for p in polys]


def cmd_generate(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    tri = _build_triangle(args, rows)
    doc = OutputDocument.from_values(tri.family, tri.params_dict(), tri.rows)
    _emit(doc, args.format)
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    family, q, roots = _family_inputs(args)
    if family in BANDED_FAMILIES or family == "catalan-shifted":
        # The shifted Catalan triangle shares the Catalan polynomial dual.
        source = "catalan-triad" if family == "catalan-shifted" else family
        rec = banded_for_family(source, max(rows - 1, 0), q)
        phis = dual_polynomials(rec, rows)
    elif family == "lah":
        phis = persistent_root_polys(roots, rows)
    else:
        raise UsageError(
            f"family {family} has no banded dual recurrence; "
            "use the phi command for the step-matrix sequence"
        )
    params = {} if q is None else {"q": str(q)}
    if roots is not None:
        params["roots"] = args.roots
    doc = OutputDocument.from_values(family, params, _poly_rows(phis))
    _emit(doc, args.format)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    family, q, roots = _family_inputs(args)
    if family in BANDED_FAMILIES:
        tri = _build_triangle(args, rows)
        phis = dual_polynomials(banded_for_family(family, max(rows - 1, 0), q), rows)
        route = "banded dual recurrence"
    elif family == "catalan-shifted":
        # Checked against the Catalan polynomials on purpose: the printed
        # indexing does not complete the triad (see --ledger), so this route
        # reports the exact failure instead of hiding it.
        tri = _build_triangle(args, rows)
        phis = dual_polynomials(banded_for_family("catalan-triad", max(rows - 1, 0)), rows)
        route = "banded dual recurrence (catalan polynomials)"
    elif family == "lah":
        tri = _build_triangle(args, rows)
        phis = persistent_root_polys(roots, rows)
        route = "persistent-root polynomials"
    elif family in ("fibonomial", "stirling1"):
        tri = _build_triangle(args, rows)
        if rows == 0:
            phis = [Polynomial((1,))]
        else:
            phis = phi_from_step_matrix(solve_step_matrix(tri), rows)
        route = "step-matrix polynomials"
    else:
        raise UsageError(
            f"family {family} admits no dual construction "
            "(not unipotent and no banded recurrence)"
        )
    report = verify_triad(tri, phis)
    print(f"route: {route}")
    if report.holds:
        print(f"holds up to n={report.verified_up_to}")
        return 0
    n, residual = report.first_failure
    print(f"fails at n={n}; residual = {residual}")
    return 1


def cmd_fit(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    if rows < 5:
        raise UsageError("fit needs --rows of at least 5")
    tri = _build_triangle(args, rows)
    result = fit_banded(tri)
    if result.fits:
        rec = result.recurrence
        print("fit: banded time-independent recurrence found")
        print("k\ti_k\tq_k\td_k")
        for k in range(rec.depth + 1):
            print(f"{k}\t{rec.up[k]}\t{rec.stay[k]}\t{rec.down[k]}")
    else:
        print("fit: no banded time-independent recurrence")
        print(f"inconsistent column: k={result.column}")
        pairs = " ".join(f"({n},{k})" for n, k in result.witness)
        print(f"witness equations (n,k): {pairs}")
    return 0


def cmd_solve_f(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    tri = _build_triangle(args, rows + 1)
    sm = solve_step_matrix(tri)
    params = tri.params_dict()
    doc = OutputDocument.from_values(tri.family, params, sm.rows)
    _emit(doc, args.format)
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    tri = _build_triangle(args, rows)
    if rows == 0:
        phis = [Polynomial((1,))]
    else:
        phis = phi_from_step_matrix(solve_step_matrix(tri), rows)
    doc = OutputDocument.from_values(tri.family, tri.params_dict(), _poly_rows(phis))
    _emit(doc, args.format)
    return 0


def _parse_sequence(text: str, length: int, flag: str) -> list[Fraction]:
    if text == "ones":
        return [Fraction(1)] * length
    try:
        values = [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {flag} value {text!r}") from None
    if len(values) > length:
        raise UsageError(f"{flag} has {len(values)} entries, more than rows+1 = {length}")
    return values + [Fraction(0)] * (length - len(values))


def cmd_convolve(args: argparse.Namespace) -> int:
    rows = _checked_rows(args)
    a = _parse_sequence(args.a, rows + 1, "--a")
    b = _parse_sequence(args.b, rows + 1, "--b")
    values = convolve_fibonomial(a, b, rows)
    doc = OutputDocument.from_values(
        "fibonomial", {"a": args.a, "b": args.b}, [values]
    )
    _emit(doc, args.format)
    return 0


def _add_common(sub: argparse.ArgumentParser, families: Sequence[str]) -> None:
    sub.add_argument("--family", required=True, choices=families)
    sub.add_argument("--q", help="q parameter for the q-gaussian family (exact, e.g. 2 or 1/2)")
    sub.add_argument("--roots", help="roots for the lah family: comma list, optionally ending in ...")
    sub.add_argument("--rows", type=int, required=True, help="largest row index N (rows 0..N)")
    sub.add_argument("--max-rows", type=int, default=DEFAULT_ROW_CAP,
                     help=f"row cap guarding against runaway exact computation (default {DEFAULT_ROW_CAP})")


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv", "pretty"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualtriad",
        description="Exact Pascal-like triangles, dual polynomial sequences, "
        "and banded-recurrence analysis.",
    )
    parser.add_argument("--ledger", action="store_true",
                        help="print the ledger of known published-value discrepancies and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("generate", help="emit a triangle")
    _add_common(p, FAMILIES)
    _add_format(p)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("dual", help="emit the dual polynomial sequence of a banded or root family")
    _add_common(p, FAMILIES)
    _add_format(p)
    p.set_defaults(handler=cmd_dual)

    p = sub.add_parser("verify", help="check x^n = sum_k c[n][k] phi_k(x) exactly")
    _add_common(p, FAMILIES)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("fit", help="decide whether banded time-independent weights reproduce the triangle")
    _add_common(p, FAMILIES)
    p.set_defaults(handler=cmd_fit)

    p = sub.add_parser("solve-f", help="emit rows 0..N of the one-step transition matrix")
    _add_common(p, FAMILIES)
    _add_format(p)
    p.set_defaults(handler=cmd_solve_f)

    p = sub.add_parser("phi", help="emit the step-matrix polynomial sequence of a unipotent family")
    _add_common(p, FAMILIES)
    _add_format(p)
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("convolve", help="convolve two sequences with fibonomial weights")
    _add_common(p, ("fibonomial",))
    _add_format(p)
    p.add_argument("--a", required=True, help="'ones' or a comma list of exact values")
    p.add_argument("--b", required=True, help="'ones' or a comma list of exact values")
    p.set_defaults(handler=cmd_convolve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    if args.ledger:
        sys.stdout.write(format_ledger())
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("error: a subcommand is required (or --ledger)", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
