"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
3 numeric diagnostic failure (imaginary residue of a Hermite value).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from pqrs import poly, pqcore
from pqrs.errors import ImaginaryResidueTooLarge, PqrsError
from pqrs.scalar import Scalar, format_scalar
from pqrs.suite import SUITES, SuiteConfig, run_suites

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

_RATIONAL = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")

FAMILIES = {
    "rs": poly.rs_poly,
    "pqrs": poly.pq_rs_poly,
    "sw": poly.sw_poly,
    "qinv": poly.special_rs_qinv_q,
}


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """``"a/b"`` or an integer; decimals and exponents are rejected."""
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an integer or a/b rational, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _render(value: Scalar, fmt: str | None) -> str:
    if fmt == "json":
        return json.dumps(value.to_json())
    if value.is_constant:
        return str(value.constant_value())
    return format_scalar(value)


def cmd_number(args) -> str:
    return _render(pqcore.pq_number(args.n).subs(p=args.p, q=args.q), args.format)


def cmd_binom(args) -> str:
    return _render(pqcore.pq_binomial(args.n, args.k).subs(p=args.p, q=args.q), args.format)


def cmd_poly(args) -> str:
    f = FAMILIES[args.family](args.n).subs(p=args.p, q=args.q)
    if args.x is not None:
        value = sum((c * args.x**k for k, c in enumerate(f.coeffs)), Scalar())
        if not value.is_constant:
            raise UsageError(f"evaluation still depends on p or q: {value}; pass --p/--q")
        return _render(value, args.format)
    if args.format == "json":
        return json.dumps(f.to_json())
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "coeff"])
        writer.writerows([k, format_scalar(c)] for k, c in enumerate(f.coeffs))
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"x^{k}: {format_scalar(c)}" for k, c in enumerate(f.coeffs))


def cmd_hermite(args) -> tuple[str, int]:
    real, imag = poly.hermite_components(args.n, args.theta, args.p, args.q)
    if args.format == "json":
        text = json.dumps({"value": real, "imagResidue": abs(imag)})
    else:
        text = f"{real!r}\nimag_residue: {abs(imag)!r}"
    if abs(imag) > poly.IMAG_TOLERANCE:
        raise ImaginaryResidueTooLarge(text)
    return text, EXIT_OK


def cmd_check(args) -> tuple[str, int]:
    suites = []
    for item in args.suites or SUITES:
        suites.extend(s for s in item.split(",") if s)
    try:
        cfg = SuiteConfig(
            nmax=args.nmax, fock_nmax=args.fock_nmax, p=args.p, q=args.q,
            format=args.format, suites=tuple(suites),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = run_suites(cfg)
    ok = all(r.passed for r in rows)
    if args.format == "json":
        text = json.dumps({"pass": ok, "results": [r.to_json() for r in rows]}, indent=1)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "name", "indices", "pass", "detail"])
        for r in rows:
            writer.writerow([r.suite, r.name, " ".join(map(str, r.indices)), int(r.passed), r.detail])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = []
        for r in rows:
            idx = " ".join(map(str, r.indices))
            line = f"{'PASS' if r.passed else 'FAIL'} {r.suite} {r.name}" + (f" [{idx}]" if idx else "")
            if not r.passed or (r.detail and r.name.startswith("no_rescaling")):
                line += f" :: {r.detail}"
            lines.append(line)
        failed = sum(not r.passed for r in rows)
        lines.append(f"{len(rows) - failed}/{len(rows)} passed")
        text = "\n".join(lines)
    return text, EXIT_OK if ok else EXIT_FAILED


def cmd_table(args) -> str:
    fmt = args.format or "csv"
    nmax = args.nmax
    if args.kind == "numbers":
        values = [pqcore.pq_number(n) for n in range(nmax + 1)]
        if fmt == "json":
            return json.dumps([v.to_json() for v in values])
        rows = [["n", "value"]] + [[n, format_scalar(v)] for n, v in enumerate(values)]
    elif args.kind == "binomials":
        if fmt == "json":
            return json.dumps(
                [[pqcore.pq_binomial(n, k).to_json() for k in range(n + 1)] for n in range(nmax + 1)]
            )
        rows = [["n", "k", "value"]] + [
            [n, k, format_scalar(pqcore.pq_binomial(n, k))] for n in range(nmax + 1) for k in range(n + 1)
        ]
    else:
        polys = [poly.pq_rs_poly(n) for n in range(nmax + 1)]
        if fmt == "json":
            return json.dumps([f.to_json() for f in polys])
        rows = [["n"] + [f"c{k}" for k in range(nmax + 1)]] + [
            [n] + [format_scalar(c) for c in f.coeffs] for n, f in enumerate(polys)
        ]
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqrs", description="Exact (p,q)-calculus toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "csv")):
        sp.add_argument("--format", choices=formats, default=None)
        sp.add_argument("--out", metavar="FILE", default=None)

    def pq(sp):
        sp.add_argument("--p", type=parse_rational, default=None)
        sp.add_argument("--q", type=parse_rational, default=None)

    sp = sub.add_parser("number", help="(p,q)-number [n]")
    sp.add_argument("--n", type=_nonneg, required=True)
    pq(sp)
    common(sp, ("json",))
    sp.set_defaults(func=cmd_number)

    sp = sub.add_parser("binom", help="(p,q)-binomial coefficient [n k]")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--k", type=int, required=True)
    pq(sp)
    common(sp, ("json",))
    sp.set_defaults(func=cmd_binom)

    sp = sub.add_parser("poly", help="coefficients or value of a polynomial family")
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--x", type=parse_rational, default=None)
    pq(sp)
    common(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("hermite", help="continuous (p,q)-Hermite value")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--p", type=parse_rational, required=True)
    sp.add_argument("--q", type=parse_rational, required=True)
    common(sp, ("json",))
    sp.set_defaults(func=cmd_hermite)

    sp = sub.add_parser("check", help="run the identity and algebra suites")
    sp.add_argument("--suites", nargs="+", default=None, help=f"subset of {', '.join(SUITES)}")
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--fock-nmax", type=int, default=8)
    pq(sp)
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("table", help="tabulate numbers, binomials or polynomial coefficients")
    sp.add_argument("kind", choices=["numbers", "binomials", "rs-coeffs"])
    sp.add_argument("--nmax", type=_nonneg, default=10)
    common(sp)
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ImaginaryResidueTooLarge as exc:
        print(exc, file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, PqrsError) as exc:
        print(f"pqrs {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
