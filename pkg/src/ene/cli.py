"""Command line front end: ``ene <command> ...``.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or parse
error, 3 ring-contract error, 4 universal-polynomial cap exceeded, 5 root
finder did not converge.  Every error is reported as one line on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .analytic import ene_radius, poly_roots, verify_zero_products
from .errors import EneError, NonConvergence, QCapExceeded
from .parse import ParseError, eval_expr, parse_expr, parse_poly, evaluate
from .rational import RationalPair, ene_rational, ene_shifted, parse_shifted
from .rings import parse_ring
from .series import Series
from .transforms import FractionalSeries
from .universal import DEFAULT_CAP, default_cache
from .verify import SIZES, SUITES, run_suite

GRAMMAR_HELP = """\
expression grammar (loosest first):
  a + b, a - b      coefficientwise sum / difference
  a * b, a / b      series product / quotient
  a @ b             eñe product
  -a                negation
  a ^ k             integer power, or exp(k log a) for k like (1/2)
  a.T(n) a.Te(N)    Hecke operator, exponential truncation
  a.D a.INV         logarithmic derivative, eñe inverse
atoms: numbers (3, 1.5, 2j), X, E(N), I(N), AH(p), EXP(expr), KOEBE, UNIT,
ZERO, variables of a polynomial ring such as --ring 'Q[a,b]'."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p, ring=True, order=True):
    if ring:
        p.add_argument("--ring", default="Q", help="Q, Qi, Z, Zmod:m, C or C:eps, optionally with [vars]")
    if order:
        p.add_argument("--order", type=int, default=16, help="truncation order N (series mod X^(N+1))")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")


def build_parser():
    ap = _Parser(
        prog="ene",
        description="Eñe product of power series: evaluation, universal polynomials and identity checks.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a series expression", epilog=GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("qpoly", help="print the universal polynomial Q_p")
    p.add_argument("p", type=int)
    p.add_argument("--qcap", type=int, default=DEFAULT_CAP, help="largest index that may be generated")
    _common(p, ring=False, order=False)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", help=" | ".join(list(SUITES) + ["all"]))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", default="small", help=" | ".join(SIZES))
    _common(p, ring=False, order=False)

    p = sub.add_parser("roots", help="zeros of a polynomial")
    p.add_argument("poly")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--seed", type=int, default=0)
    _common(p, order=False)

    p = sub.add_parser("radius", help="smallest zero modulus / radius of convergence")
    p.add_argument("expr")
    p.add_argument("--series", action="store_true", help="treat the input as a power series, not a polynomial")
    _common(p)

    p = sub.add_parser("zero-products", help="match zeros of P @ Q against products of zeros")
    p.add_argument("P")
    p.add_argument("Q")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    _common(p, order=False)

    p = sub.add_parser("rational", help="eñe product of two rational functions 'P / Q'")
    p.add_argument("R1")
    p.add_argument("R2")
    _common(p, order=False)

    p = sub.add_parser("shifted", help="eñe product of two polynomials 'X^n * (P0)'")
    p.add_argument("P")
    p.add_argument("Q")
    _common(p, order=False)
    return ap


# ---------------------------------------------------------------------------
# output helpers


def _dump(obj):
    return json.dumps(obj, sort_keys=True)


def _num(x):
    if math.isinf(x):
        return "infinite"
    return repr(float(f"{x:.12g}"))


def _complex_text(z, tol=1e-12):
    if abs(z.imag) <= tol * max(1.0, abs(z)):
        return _num(z.real)
    return f"({float(f'{z.real:.12g}')!r}{'+' if z.imag >= 0 else '-'}{float(f'{abs(z.imag):.12g}')!r}j)"


def _series_obj(value):
    if isinstance(value, FractionalSeries):
        value = value.canonical()
        if value.denom != 1:
            return {"denom": value.denom, "body": value.body.to_json_obj()}
        value = value.body
    return value.to_json_obj()


def _poly_text(s):
    return s.pretty().rsplit(" + O(", 1)[0]


def _ring(text):
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_rational(text, ring):
    node = parse_expr(text)
    if node[0] == "div":
        num = _poly_from_node(node[2], text, ring)
        den = _poly_from_node(node[3], text, ring)
    else:
        num = _poly_from_node(node, text, ring)
        den = Series.one(ring, 0)
    return RationalPair(num, den)


def _poly_from_node(node, text, ring):
    from .parse import _poly_order
    from .rational import as_poly

    s = evaluate(node, ring, _poly_order(text))
    if isinstance(s, FractionalSeries):
        s = s.to_series()
    return as_poly(s)


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args, out):
    ring = _ring(args.ring)
    value = eval_expr(args.expr, ring, args.order)
    if args.format == "json":
        out.write(_dump(_series_obj(value)) + "\n")
    else:
        out.write(str(value) + "\n")
    return 0


def cmd_qpoly(args, out):
    q = default_cache.get(args.p, cap=args.qcap)
    if args.format == "json":
        out.write(_dump({"p": q.p, "poly": str(q), "terms": len(q.poly.terms)}) + "\n")
    else:
        out.write(str(q) + "\n")
    return 0


def cmd_verify(args, out):
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    if args.size not in SIZES:
        raise UsageError(f"unknown size {args.size!r}; choose from {', '.join(SIZES)}")
    report = run_suite(args.suite, seed=args.seed, size=args.size)
    if args.format == "json":
        out.write(_dump(report) + "\n")
    else:
        reports = report["suites"] if "suites" in report else [report]
        for r in reports:
            for c in r["checks"]:
                line = f"{'PASS' if c['pass'] else 'FAIL'} {r['suite']}/{c['name']} ({c['cases']} cases)"
                if not c["pass"]:
                    line += f": {c['failure']}"
                out.write(line + "\n")
        out.write(f"{'PASS' if report['pass'] else 'FAIL'} {report['suite']}\n")
    return 0 if report["pass"] else 1


def cmd_roots(args, out):
    ring = _ring(args.ring)
    P = parse_poly(args.poly, ring)
    zs = poly_roots(P, tol=args.tol, seed=args.seed)
    if args.format == "json":
        out.write(_dump({"zeros": zs.to_json_obj()}) + "\n")
    else:
        flat = sorted(zs.zeros, key=lambda z: (-abs(z), z.real, z.imag))
        out.write("[" + ", ".join(_complex_text(z) for z in flat) + "]\n")
    return 0


def cmd_radius(args, out):
    ring = _ring(args.ring)
    if args.series:
        f = eval_expr(args.expr, ring, args.order)
        r = ene_radius(f, polynomial=False)
    else:
        r = ene_radius(parse_poly(args.expr, ring))
    if args.format == "json":
        out.write(_dump({"radius": None if math.isinf(r) else r, "infinite": math.isinf(r)}) + "\n")
    else:
        out.write(_num(r) + "\n")
    return 0


def cmd_zero_products(args, out):
    ring = _ring(args.ring)
    P, Q = parse_poly(args.P, ring), parse_poly(args.Q, ring)
    report = verify_zero_products(P, Q, tol=args.tol, seed=args.seed)
    if args.format == "json":
        out.write(_dump(report) + "\n")
    else:
        verdict = "pass" if report["pass"] else "fail"
        out.write(f"{verdict} max_mismatch={report['max_mismatch']:.3g} pairs={len(report['pairs'])}\n")
    return 0 if report["pass"] else 1


def cmd_rational(args, out):
    ring = _ring(args.ring)
    R = ene_rational(_parse_rational(args.R1, ring), _parse_rational(args.R2, ring))
    if args.format == "json":
        out.write(_dump({"num": R.num.to_json_obj(), "den": R.den.to_json_obj(), "degree": R.degree}) + "\n")
    else:
        out.write(str(R) + "\n")
    return 0


def cmd_shifted(args, out):
    ring = _ring(args.ring)
    P = parse_shifted(args.P, ring, parse_poly)
    Q = parse_shifted(args.Q, ring, parse_poly)
    S = ene_shifted(P, Q)
    if args.format == "json":
        out.write(_dump({"shift": S.shift, "unit_part": S.unit_part.to_json_obj()}) + "\n")
    else:
        out.write(str(S) + "\n")
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "qpoly": cmd_qpoly,
    "verify": cmd_verify,
    "roots": cmd_roots,
    "radius": cmd_radius,
    "zero-products": cmd_zero_products,
    "rational": cmd_rational,
    "shifted": cmd_shifted,
}


def _one_line(text):
    return " ".join(str(text).split())


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command; try 'ene --help'")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: usage: {_one_line(exc)}\n")
        return 2
    except ParseError as exc:
        err.write(f"error: parse: {_one_line(exc)}\n")
        return 2
    except QCapExceeded as exc:
        err.write(f"error: cap: {_one_line(exc)}\n")
        return 4
    except NonConvergence as exc:
        err.write(f"error: convergence: {_one_line(exc)}\n")
        return 5
    except (EneError, ZeroDivisionError, ValueError, TypeError) as exc:
        err.write(f"error: ring: {type(exc).__name__}: {_one_line(exc)}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
