"""Exact reference values and convergence studies for the Stirling series.

Half-integer anchors come from

    Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)

which together with Gamma(1/2) = sqrt(pi) gives every Gamma(n + 1/2) as an
exact rational multiple of sqrt(pi). The constant ``C = sqrt(2 pi)`` is
recovered by dividing those exact values by the C-free part of the Stirling
approximation at ``w = n + 1/2``; the classical argument uses Gamma(n)
instead, but half-integers keep the left-hand side exact.

Logarithms needed for reference values are computed here with fixed-point
integer arithmetic (``log x = k log 2 + 2 atanh((y-1)/(y+1))``), so no
reference depends on the floating-point code being checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PreconditionError
from .exactnum import PI, HighPrecisionDecimal, as_rational, factorial, sqrt_two_pi
from .stirling import StirlingSeries

__all__ = [
    "CEstimate",
    "HalfIntegerValue",
    "c_deviation",
    "convergence_study",
    "estimate_C",
    "half_integer_exact",
    "integer_exact",
    "log_decimal",
    "reference_log_gamma",
    "truncation_error",
]


def _atanh_fixed(t: Fraction, scale: int) -> int:
    """atanh(t) * scale, each term floored; needs |t| < 1."""
    neg = t < 0
    p, q = abs(t.numerator), t.denominator
    p2, q2 = p * p, q * q
    x = scale * p // q
    total, k = 0, 0
    while x:
        total += x // (2 * k + 1)
        x = x * p2 // q2
        k += 1
    return -total if neg else total


@lru_cache(maxsize=32)
def _ln2_fixed(guard_digits: int) -> int:
    return 2 * _atanh_fixed(Fraction(1, 3), 10**guard_digits)


def log_decimal(x, digits: int = 40) -> HighPrecisionDecimal:
    """Natural log of a positive rational to ``digits`` decimal places."""
    x = as_rational(x)
    if x <= 0:
        raise DomainError("log requires a positive argument")
    k = x.numerator.bit_length() - x.denominator.bit_length()
    y = x / 2**k if k >= 0 else x * 2**-k
    if y > Fraction(4, 3):
        y, k = y / 2, k + 1
    elif y < Fraction(2, 3):
        y, k = y * 2, k - 1
    work = digits + 10 + len(str(abs(k)))
    scale = 10**work
    total = k * _ln2_fixed(work) + 2 * _atanh_fixed((y - 1) / (y + 1), scale)
    mantissa = _round_div(total, 10 ** (work - digits))
    return HighPrecisionDecimal(mantissa, -digits, len(str(abs(mantissa))))


def _round_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    return q + (2 * r >= b)


def _log(x, digits: int) -> Fraction:
    return log_decimal(x, digits).to_fraction()


@dataclass(frozen=True)
class HalfIntegerValue:
    """Gamma(n + 1/2) = r * sqrt(pi) with r exact."""

    n: int
    r: Fraction


def half_integer_exact(n: int) -> HalfIntegerValue:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return HalfIntegerValue(n, Fraction(factorial(2 * n), 4**n * factorial(n)))


def integer_exact(n: int) -> int:
    """Gamma(n) = (n-1)! for positive integers."""
    if n < 1:
        raise DomainError("Gamma(n) is exact only for integers n >= 1")
    return factorial(n - 1)


def reference_log_gamma(z, digits: int = 40) -> Fraction:
    """log Gamma(z) to ``digits`` decimals for positive integer or half-integer z."""
    z = as_rational(z)
    if z > 0 and z.denominator == 1:
        return _log(integer_exact(z.numerator), digits)
    if z > 0 and z.denominator == 2:
        r = half_integer_exact(int(z - Fraction(1, 2))).r
        return _log(r, digits) + _log(PI, digits) / 2
    raise DomainError(f"no exact reference for z={z}; need a positive integer or half-integer")


def truncation_error(series: StirlingSeries, z, n_terms: int, digits: int = 40) -> float:
    """|log Gamma(z) - S_N(z)| with the truncated series evaluated exactly.

    ``z`` must be a positive integer or half-integer. Everything but the
    logarithms is exact rational arithmetic, so this isolates the
    mathematical truncation error from double-precision rounding.
    """
    z = as_rational(z)
    if not 0 <= n_terms <= series.max_terms:
        raise PreconditionError(f"n_terms must lie in 0..{series.max_terms}")
    ref = reference_log_gamma(z, digits)
    log_c = (_log(2, digits) + _log(PI, digits)) / 2
    s = (z - Fraction(1, 2)) * _log(z, digits) - z + log_c
    for n in range(1, n_terms + 1):
        s += series.a(n) / z ** (2 * n - 1)
    return float(abs(ref - s))


@dataclass(frozen=True)
class CEstimate:
    n: int
    terms: int
    value: float


def estimate_C(n: int, terms: int, series: StirlingSeries) -> CEstimate:
    """Recover C from Gamma(w) ~ C w^(w-1/2) e^(-w) exp(sum a_k / w^(2k-1)), w = n + 1/2.

    The numerator r_n sqrt(pi) is exact (its log taken to 40 digits); the
    C-free Stirling factor is evaluated in double precision, and the two
    meet in a single final exponentiation.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if not 0 <= terms <= series.max_terms:
        raise PreconditionError(f"terms must lie in 0..{series.max_terms}")
    r = half_integer_exact(n).r
    log_num = float(_log(r, 40) + _log(PI, 40) / 2)
    w = n + 0.5
    tail = 0.0
    for k in range(terms, 0, -1):
        tail = tail / (w * w) + float(series.a(k))
    log_den = (w - 0.5) * math.log(w) - w + tail / w
    return CEstimate(n, terms, math.exp(log_num - log_den))


def c_deviation(value: float) -> float:
    """|value - sqrt(2 pi)| with sqrt(2 pi) taken to 40 digits."""
    return float(abs(Fraction(value) - sqrt_two_pi(40).to_fraction()))


def convergence_study(n_values, terms: int, series: StirlingSeries) -> list[tuple[int, float]]:
    """Rows ``(n, |C_est - sqrt(2 pi)|)`` in the order of ``n_values``."""
    n_values = list(n_values)
    if any(n < 1 for n in n_values):
        raise DomainError("all n must be at least 1")
    return [(n, c_deviation(estimate_C(n, terms, series).value)) for n in n_values]
