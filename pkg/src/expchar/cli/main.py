"""Command-line front end.

Exit status is 0 on success, 1 on a usage error and 2 on a domain error;
domain errors are reported on stderr as ``ErrorName: message``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from expchar.characters import (
    CharacterArray,
    character_array,
    character_array_via_semiinvariants,
    weight_of_cell,
)
from expchar.errors import ExpCharError, RouteMismatch
from expchar.exppoly import char_poly, recurrence_solve
from expchar.numbers import ramanujan_sum
from expchar.polynomial import PolynomialQ
from expchar.semiinvariants import GradedDims, brute_force_component, tensor_component_series
from expchar.cli.expr import free_to_ast, parse_canonical, render


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",")] if text.strip() else []


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _fmt(x: Fraction) -> str:
    return str(x)


# -- array rendering -------------------------------------------------------------


def format_text(arr: CharacterArray) -> str:
    width = max(len(str(v)) for row in arr.rows for v in row)
    lines = [" ".join(str(v).rjust(width) for v in row) for row in arr.rows]
    return "\n".join(lines) + "\n"


def format_csv(arr: CharacterArray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k"] + [f"n={n}" for n in range(arr.r)])
    for k, row in enumerate(arr.rows):
        writer.writerow([k, *row])
    return buf.getvalue()


def format_json(arr: CharacterArray) -> str:
    alpha, _ = weight_of_cell(arr, 0, 0)
    doc = {
        "phi0": _fmt(arr.phi0),
        "r": arr.r,
        "rows": [list(row) for row in arr.rows],
        "weights": {"alpha_coeff_at_k0": _fmt(alpha)},
    }
    return json.dumps(doc) + "\n"


FORMATTERS = {"text": format_text, "csv": format_csv, "json": format_json}


# -- subcommands -----------------------------------------------------------------


def cmd_char(args, out) -> int:
    phi = parse_canonical(args.expr)
    K = args.rows - 1
    arr = character_array(phi, K)
    if args.cross_check:
        other = character_array_via_semiinvariants(phi, K)
        if other != arr:
            diffs = [
                (k, n)
                for k in range(K + 1)
                for n in range(arr.r)
                if arr.rows[k][n] != other.rows[k][n]
            ]
            raise RouteMismatch(f"routes disagree at cells {diffs[:10]}")
    out.write(FORMATTERS[args.format](arr))
    return 0


def cmd_charpoly(args, out) -> int:
    phi = parse_canonical(args.expr)
    out.write(char_poly(phi).render("t") + "\n")
    return 0


def cmd_eval(args, out) -> int:
    phi = parse_canonical(args.expr)
    if args.at is not None:
        out.write(_fmt(phi(args.at)) + "\n")
    else:
        lo, hi = args.window
        for m in range(lo, hi + 1):
            out.write(f"{m} {_fmt(phi(m))}\n")
    return 0


def cmd_ramanujan(args, out) -> int:
    if args.d < 1:
        raise ValueError(f"d must be positive, got {args.d}")
    out.write(f"{ramanujan_sum(args.d, args.n)}\n")
    return 0


def cmd_poincare(args, out) -> int:
    V = GradedDims(args.dims)
    if args.oracle:
        series = brute_force_component(V, args.r, args.n, args.K)
    else:
        series = tensor_component_series(V.poincare_series(args.K), args.r, args.n)
    out.write(" ".join(str(c) for c in series.as_ints()) + "\n")
    return 0


def cmd_solve_recurrence(args, out) -> int:
    c = PolynomialQ(args.char_poly)
    solution = recurrence_solve(c, args.init)
    out.write(render(free_to_ast(solution)) + "\n")
    return 0
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="expchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("char", help="weight-multiplicity array")
    p.add_argument("--expr", required=True)
    p.add_argument("--rows", type=int, default=12, help="number of rows k = 0..rows-1")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="text")
    p.add_argument("--cross-check", action="store_true",
                   help="also compute through semi-invariants and compare")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("charpoly", help="characteristic polynomial in t")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("eval", help="exact values")
    p.add_argument("--expr", required=True)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--at", type=int)
    where.add_argument("--window", type=int, nargs=2, metavar=("A", "B"))
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ramanujan", help="Ramanujan sum c_D(N)")
    p.add_argument("d", type=int, metavar="D")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("poincare", help="series of a rotation eigenspace of V^r")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-K", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="count orbits by brute force")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("solve-recurrence", help="closed form of a recurrence solution")
    p.add_argument("--char-poly", type=_rational_list, required=True,
                   help="coefficients c0,c1,...,1 (constant term first)")
    p.add_argument("--init", type=_rational_list, required=True)
    p.set_defaults(func=cmd_solve_recurrence)
    return parser


def _join_dash_values(argv: list[str]) -> list[str]:
    # argparse reads "--expr -delta(4)*..." as two options; glue the value on
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--expr", "--char-poly", "--init", "--dims"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _join_dash_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "rows", 1) < 1:
            raise UsageError("--rows must be at least 1")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    except (ExpCharError, ValueError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
