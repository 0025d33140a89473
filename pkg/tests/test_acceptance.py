"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
import csv
import io
import math
import random
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from stirgamma.bernoulli import bernoulli_oracle, build_table
from stirgamma.cli import main as cli_main
from stirgamma.exactnum import format_rational, sqrt_pi, sqrt_two_pi
from stirgamma.gamma import gamma, recursion_residual
from stirgamma.stirling import default_series, log_C, smallest_term_index
from stirgamma.verify import (
    convergence_study,
    half_integer_exact,
    integer_exact,
    log_decimal,
    truncation_error,
)

CRITERIA = []


def criterion(number, title):
    def register(fn):
        CRITERIA.append((number, title, fn))
        return fn

    return register


def _rel(value, exact: Fraction) -> float:
    return float(abs(Fraction(value) - exact) / abs(exact))


@criterion(1, "Bernoulli correctness")
def bernoulli_correctness():
    t = build_table(60)
    mismatches = [j for j in range(61) if t.B[j] != bernoulli_oracle(j)]
    assert not mismatches, f"table differs from oracle at j={mismatches}"
    nonzero_odd = [j for j in range(3, 61, 2) if t.B[j] != 0]
    assert not nonzero_odd, f"odd Bernoulli numbers nonzero at {nonzero_odd}"
    assert t.c[0] == 1 and t.c[1] == Fraction(-1, 2)
    return "B_0..B_60 equal the double-sum oracle; odd B_j = 0; c_0=1, c_1=-1/2"


@criterion(2, "Normalization Gamma(1/2) = sqrt(pi) and log C")
def normalization():
    err_g = _rel(gamma(0.5).value, sqrt_pi(40).to_fraction())
    assert err_g < 1e-12, f"gamma(0.5) rel err {err_g:.3e}"
    ref_log_c = log_decimal(sqrt_two_pi(40).to_fraction(), 40).to_fraction()
    err_c = float(abs(Fraction(log_C()) - ref_log_c))
    assert err_c < 1e-14, f"log C abs err {err_c:.3e}"
    return f"gamma(0.5) rel err {err_g:.2e} (<1e-12); log C abs err {err_c:.2e} (<1e-14)"


@criterion(3, "Integer anchors Gamma(n) = (n-1)!")
def integer_anchors():
    worst = max(_rel(gamma(n).value, Fraction(integer_exact(n))) for n in range(2, 21))
    assert worst < 1e-12, f"worst rel err {worst:.3e}"
    return f"n=2..20 worst rel err {worst:.2e} (<1e-12)"


@criterion(4, "Half-integer anchors Gamma(n+1/2) = r_n sqrt(pi)")
def half_integer_anchors():
    for n in range(10):
        r, r_next = half_integer_exact(n).r, half_integer_exact(n + 1).r
        assert r_next == r * (n + Fraction(1, 2)), f"r_{n + 1} != r_{n} (n + 1/2)"
    root_pi = sqrt_pi(40).to_fraction()
    worst = max(_rel(gamma(n + 0.5).value, half_integer_exact(n).r * root_pi) for n in range(11))
    assert worst < 1e-12, f"worst rel err {worst:.3e}"
    return f"n=0..10 worst rel err {worst:.2e} (<1e-12); r_(n+1) = r_n (n+1/2) holds"


@criterion(5, "Functional equation Gamma(z+1) = z Gamma(z)")
def functional_equation():
    rng = random.Random(20071126)
    zs = [complex(rng.uniform(0.5, 50), rng.uniform(-20, 20)) for _ in range(200)]
    worst = max(recursion_residual(z) for z in zs)
    assert worst < 1e-10, f"worst residual {worst:.3e}"
    return f"200 random z, worst residual {worst:.2e} (<1e-10)"


@criterion(6, "Asymptotic order of the truncated series")
def asymptotic_order():
    s = default_series()
    zs = [10, 20, 40]
    slopes = []
    for N in (1, 2, 3):
        errs = [truncation_error(s, z, N) for z in zs]
        slope = float(np.polyfit(np.log(zs), np.log(errs), 1)[0])
        slopes.append(slope)
        assert abs(slope + (2 * N + 1)) <= 0.3, f"N={N}: slope {slope:.3f}, expected {-(2 * N + 1)}"
    return "slopes " + ", ".join(f"N={N}: {sl:.3f}" for N, sl in zip((1, 2, 3), slopes)) + " (target -(2N+1) +/- 0.3)"


def _run_cli_inprocess(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = cli_main(argv)
    finally:
        sys.stdout = old
    assert code == 0, f"{argv} exited {code}"
    return buf.getvalue()


@criterion(7, "Divergence visible in the error profile at z=2")
def divergence_visibility():
    out = _run_cli_inprocess(["error-profile", "--z", "2", "--max", "20"])
    errs = [float(r["abs_error"]) for r in csv.DictReader(io.StringIO(out))]
    best = min(range(len(errs)), key=errs.__getitem__)
    k = smallest_term_index(default_series(), 2.0, cap=20)
    assert all(errs[i + 1] < errs[i] for i in range(best)), "error does not decrease up to the minimum"
    assert abs(best - k) <= 1, f"minimum at {best} terms, smallest-term index {k}"
    rising = 0
    for i in range(best, len(errs) - 1):
        if errs[i + 1] <= errs[i]:
            break
        rising += 1
    assert rising >= 3, f"only {rising} increasing steps after the minimum"
    return f"minimum at {best} terms (smallest-term index {k}), then {rising} increasing steps"


@criterion(8, "Recovery of C = sqrt(2 pi)")
def c_recovery():
    s = default_series()
    devs = [d for _, d in convergence_study([5, 10, 20, 40], 0, s)]
    ratios = [b / a for a, b in zip(devs, devs[1:])]
    assert all(b < a for a, b in zip(devs, devs[1:])), f"not decreasing in n: {devs}"
    assert all(0.4 <= q <= 0.6 for q in ratios), f"ratios {ratios}"
    by_terms = [convergence_study([10], t, s)[0][1] for t in range(4)]
    assert all(b < a for a, b in zip(by_terms, by_terms[1:])), f"not decreasing in terms: {by_terms}"
    return "ratios " + ", ".join(f"{q:.3f}" for q in ratios) + "; terms 0..3 at n=10: " + ", ".join(
        f"{d:.2e}" for d in by_terms
    )


_CLI_RUNS = {
    ("bernoulli", "--max", "12", "--format", "csv"): ["j", "c", "B"],
    ("coeffs", "--max", "12", "--format", "csv"): ["n", "a", "a_float"],
    ("eval", "--z=2.5,-1.25", "--format", "csv"): [
        "z", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied",
    ],
    ("cestimate", "--n", "1,5,10,20,40", "--terms", "2", "--format", "csv"): ["n", "C_estimate", "deviation"],
    ("error-profile", "--z", "2", "--max", "20"): ["terms", "abs_error", "first_omitted_term_estimate"],
    ("table", "--from", "0.25", "--to", "12", "--step", "0.25", "--format", "csv"): [
        "x", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied",
    ],
}


def _round_trips(field: str) -> bool:
    if "/" in field or field.lstrip("-").isdigit():
        return format_rational(Fraction(field)) == field
    if field.endswith("i"):
        z = complex(field[:-1] + "j")
        return field == _fmt_complex(z)
    return repr(float(field)) == field


def _fmt_complex(z):
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


@criterion(9, "CLI determinism and CSV round-trip")
def determinism():
    for argv, header in _CLI_RUNS.items():
        cmd = [sys.executable, "-m", "stirgamma", *argv]
        first = subprocess.run(cmd, capture_output=True, check=True).stdout
        second = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert first == second, f"{argv[0]}: output differs between runs"
        assert b"\r" not in first
        table = list(csv.reader(io.StringIO(first.decode("utf-8"))))
        assert table[0] == header, f"{argv[0]}: header {table[0]}"
        assert len(table) > 1 and all(len(r) == len(header) for r in table)
        for r in table[1:]:
            bad = [f for f in r if not _round_trips(f)]
            assert not bad, f"{argv[0]}: fields do not round-trip: {bad}"
    return f"{len(_CLI_RUNS)} subcommands byte-identical across runs; headers stable; fields round-trip"


def _report(number, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, capsys):
    try:
        detail = fn()
    except AssertionError as exc:
        with capsys.disabled():
            print("\n" + _report(number, title, False, exc))
        raise
    with capsys.disabled():
        print("\n" + _report(number, title, True, detail))


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        try:
            print(_report(number, title, True, fn()))
        except AssertionError as exc:
            failed += 1
            print(_report(number, title, False, exc))
    sys.exit(1 if failed else 0)
