"""Command-line front end.

Usage:
    stirgamma bernoulli --max 12 --format csv
    stirgamma coeffs --max 10
    stirgamma eval --z 0.5
    stirgamma eval --z=2,-3 --terms 6 --format csv
    stirgamma cestimate --n 5,10,20,40 --terms 0 --format csv
    stirgamma error-profile --z 2 --max 20 --output profile.csv
    stirgamma table --from 0.5 --to 5 --step 0.5 --format csv

Exit codes: 0 success, 1 usage or argument error, 2 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from fractions import Fraction

from . import __version__
from .bernoulli import build_table
from .errors import DomainError, PreconditionError, RangeError
from .exactnum import format_rational
from .gamma import EvalConfig, gamma, log_gamma, log_gamma_many
from .stirling import DEFAULT_CAP, TruncationPolicy, default_series, error_estimate, eval_log_gamma_raw
from .verify import c_deviation, estimate_C, reference_log_gamma

__all__ = ["main", "format_float", "format_complex", "parse_complex"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_float(x: float, plain: bool = False) -> str:
    """Shortest round-trip repr for CSV; 15 significant digits for plain text."""
    x = float(x)
    if plain and math.isfinite(x):
        return f"{x:.15g}"
    return repr(x)


def format_complex(z, plain: bool = False) -> str:
    """``RE+IMi`` / ``RE-IMi`` with an explicit sign; reals print bare."""
    if not isinstance(z, complex):
        return format_float(z, plain)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{format_float(z.real, plain)}{sign}{format_float(abs(z.imag), plain)}i"


def parse_complex(text: str):
    """Parse ``RE`` or ``RE,IM``; a bare ``RE`` gives a float."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"cannot parse z={text!r}; expected RE or RE,IM")


def _parse_terms(text: str) -> int | None:
    if text == "auto":
        return None
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"--terms must be an integer or 'auto', got {text!r}") from None
    if not 0 <= n <= DEFAULT_CAP:
        raise UsageError(f"--terms must lie in 0..{DEFAULT_CAP} (series cap)")
    return n


def _config(args) -> EvalConfig:
    terms = _parse_terms(args.terms)
    policy = TruncationPolicy.smallest_term() if terms is None else TruncationPolicy.fixed(terms)
    if not args.shift_threshold >= 1:
        raise UsageError("--shift-threshold must be at least 1")
    return EvalConfig(shift_threshold=args.shift_threshold, policy=policy)


def _emit(out, header, rows, fmt):
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    table = [list(header)] + [list(r) for r in rows]
    widths = [max(len(str(r[i])) for r in table) for i in range(len(header))]
    for r in table:
        out.write("  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_bernoulli(args, out):
    if args.max < 0:
        raise UsageError("--max must be nonnegative")
    t = build_table(args.max)
    rows = [(j, format_rational(t.c[j]), format_rational(t.B[j])) for j in range(args.max + 1)]
    _emit(out, ("j", "c", "B"), rows, args.format)


def cmd_coeffs(args, out):
    if not 1 <= args.max <= DEFAULT_CAP + 1:
        raise UsageError(f"--max must lie in 1..{DEFAULT_CAP + 1}")
    s = default_series()
    plain = args.format == "plain"
    rows = [(n, format_rational(s.a(n)), format_float(s.floats[n - 1], plain)) for n in range(1, args.max + 1)]
    _emit(out, ("n", "a", "a_float"), rows, args.format)


def _gamma_text(z, cfg, plain):
    try:
        return format_complex(gamma(z, cfg).value, plain)
    except RangeError:
        return "inf"


def cmd_eval(args, out):
    z = parse_complex(args.z)
    cfg = _config(args)
    lg = log_gamma(z, cfg)
    plain = args.format == "plain"
    header = ("z", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied")
    row = (
        format_complex(z, plain),
        format_complex(lg.value, plain),
        _gamma_text(z, cfg, plain),
        format_float(lg.error_estimate, plain),
        lg.terms_used,
        lg.shift_applied,
    )
    if plain:
        width = max(map(len, header))
        for k, v in zip(header, row):
            out.write(f"{k.ljust(width)}  {v}\n")
    else:
        _emit(out, header, [row], "csv")


def _parse_n_list(values) -> list[int]:
    ns = []
    for chunk in values or []:
        for piece in chunk.split(","):
            try:
                n = int(piece)
            except ValueError:
                raise UsageError(f"bad --n value {piece!r}") from None
            if n < 1:
                raise UsageError("--n values must be at least 1")
            ns.append(n)
    if not ns:
        raise UsageError("at least one --n is required")
    return ns


def cmd_cestimate(args, out):
    ns = _parse_n_list(args.n)
    if not 0 <= args.terms <= DEFAULT_CAP:
        raise UsageError(f"--terms must lie in 0..{DEFAULT_CAP} (series cap)")
    s = default_series()
    plain = args.format == "plain"
    rows = []
    for n in ns:
        value = estimate_C(n, args.terms, s).value
        rows.append((n, format_float(value, plain), format_float(c_deviation(value), plain)))
    _emit(out, ("n", "C_estimate", "deviation"), rows, args.format)


def cmd_error_profile(args, out):
    if not 0 <= args.max <= DEFAULT_CAP:
        raise UsageError(f"--max must lie in 0..{DEFAULT_CAP} (series cap)")
    try:
        z = Fraction(args.z)
    except ValueError:
        raise UsageError(f"cannot parse z={args.z!r}") from None
    if z <= 0 or z.denominator not in (1, 2):
        raise DomainError(
            f"z={args.z} has no exact reference; error-profile needs a positive integer or half-integer"
        )
    s = default_series()
    ref = reference_log_gamma(z)
    rows = []
    for n in range(args.max + 1):
        approx = eval_log_gamma_raw(s, float(z), n)
        err = float(abs(Fraction(approx) - ref))
        rows.append((n, format_float(err), format_float(error_estimate(s, float(z), n))))
    _emit(out, ("terms", "abs_error", "first_omitted_term_estimate"), rows, "csv")


def cmd_table(args, out):
    start, stop, step = args.start, args.stop, args.step
    if not step > 0 or not math.isfinite(step):
        raise UsageError("--step must be positive")
    if stop < start:
        raise UsageError("--to must not be below --from")
    if not start > 0:
        raise DomainError("table range starts outside supported domain (need x > 0)")
    cfg = _config(args)
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    xs = [start + i * step for i in range(count)]
    values, errs, terms, shifts = log_gamma_many(xs, cfg)
    plain = args.format == "plain"
    rows = []
    for x, v, e, t, m in zip(xs, values, errs, terms, shifts):
        lg = float(v.real)
        try:
            g = format_float(math.exp(lg), plain)
        except OverflowError:
            g = "inf"
        rows.append((format_float(x, plain), format_float(lg, plain), g, format_float(e, plain), int(t), int(m)))
    _emit(out, ("x", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied"), rows, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stirgamma", description="Gamma via the Stirling series with exact coefficients.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("plain", "csv"), default="plain")
        p.add_argument("--output", metavar="PATH", help="write here instead of standard output")

    def evalflags(p):
        p.add_argument("--terms", default="auto", help="series terms, or 'auto' for smallest-term truncation")
        p.add_argument("--shift-threshold", type=float, default=8.0)

    p = sub.add_parser("bernoulli", help="coefficients c_j and Bernoulli numbers B_j")
    p.add_argument("--max", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("coeffs", help="Stirling series coefficients a_n")
    p.add_argument("--max", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("eval", help="log Gamma(z) and Gamma(z)")
    p.add_argument("--z", required=True, help="RE or RE,IM (use --z=-1 for negative values)")
    evalflags(p)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cestimate", help="recover C = sqrt(2 pi) from half-integer values")
    p.add_argument("--n", action="append", help="repeatable or comma-separated list")
    p.add_argument("--terms", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_cestimate)

    p = sub.add_parser("error-profile", help="true error against exact references for 0..max terms")
    p.add_argument("--z", required=True)
    p.add_argument("--max", type=int, default=20)
    common(p, fmt=False)
    p.set_defaults(func=cmd_error_profile)

    p = sub.add_parser("table", help="Gamma over a real grid")
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    evalflags(p)
    common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        args.func(args, buf)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
    except (UsageError, PreconditionError) as exc:
        parser.print_usage(sys.stderr)
        print(f"stirgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"stirgamma: outside supported domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"stirgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
