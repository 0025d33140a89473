"""Exact integer/rational arithmetic and high-precision square roots.

Python's ``int`` is already an arbitrary-precision integer with a canonical
representation, and :class:`fractions.Fraction` keeps numerator and
denominator coprime with a positive denominator after every operation, so
they serve directly as the exact carriers used throughout the package.

The only transcendental constant needed is pi, stored once as a rational
with 100 correct decimals; square roots of rationals are computed with an
exact integer square root on a scaled value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DomainError

__all__ = [
    "ExactInteger",
    "ExactRational",
    "HighPrecisionDecimal",
    "PI",
    "PI_DIGITS",
    "as_rational",
    "factorial",
    "format_rational",
    "rational_arith",
    "sqrt_decimal",
    "sqrt_pi",
    "sqrt_two_pi",
]

ExactInteger = int
ExactRational = Fraction

PI_DIGITS = 100
PI = Fraction(
    int(
        "3"
        "1415926535897932384626433832795028841971"
        "6939937510582097494459230781640628620899"
        "86280348253421170679"
    ),
    10**PI_DIGITS,
)


def as_rational(x) -> Fraction:
    """Convert ints, rationals, floats (exactly) or strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, float, Decimal, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rational_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two exact rationals."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise DomainError("division by zero")
    return fn(a, b)


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("factorial requires an int")
    if n < 0:
        raise DomainError("factorial of a negative integer")
    return math.factorial(n)


def format_rational(q: Fraction) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class HighPrecisionDecimal:
    """A decimal number ``mantissa * 10**exponent``.

    ``digits`` is the number of significant digits the producer guarantees:
    the represented value is less than one unit of the last place
    (``10**exponent``) away from the true value.
    """

    mantissa: int
    exponent: int
    digits: int

    @property
    def digit_string(self) -> str:
        return str(abs(self.mantissa))

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa * 10**self.exponent)
        return Fraction(self.mantissa, 10**-self.exponent)

    def to_decimal(self) -> Decimal:
        sign = 1 if self.mantissa < 0 else 0
        return Decimal((sign, tuple(int(c) for c in self.digit_string), self.exponent))

    def ulp(self) -> Fraction:
        return Fraction(10) ** self.exponent

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __str__(self) -> str:
        return format(self.to_decimal(), "f")


def _floor_sqrt_scaled(x: Fraction, shift: int) -> int:
    """floor(sqrt(x) * 10**shift), exact."""
    if shift >= 0:
        scaled = x * 10 ** (2 * shift)
    else:
        scaled = x / 10 ** (-2 * shift)
    return math.isqrt(scaled.numerator // scaled.denominator)


def sqrt_decimal(x, digits: int) -> HighPrecisionDecimal:
    """Square root of a positive rational, correctly rounded.

    ``digits`` counts the decimals after the leading significant digit, so
    the result carries ``digits + 1`` significant digits and a relative
    error of at most ``0.5 * 10**-digits``. Rounding is to nearest with ties
    away from zero.

    >>> str(sqrt_decimal(2, 15))
    '1.414213562373095'
    """
    x = as_rational(x)
    if x <= 0:
        raise DomainError("square root requires a positive argument")
    if digits < 1:
        raise ValueError("digits must be positive")
    # exponent e of the leading digit: 10**e <= sqrt(x) < 10**(e+1)
    e = (len(str(x.numerator)) - len(str(x.denominator))) // 2
    while True:
        n = _floor_sqrt_scaled(x, digits + 1 - e)
        if n >= 10 ** (digits + 2):
            e += 1
        elif n < 10 ** (digits + 1):
            e -= 1
        else:
            break
    q, last = divmod(n, 10)
    if last >= 5:
        q += 1
    exponent = e - digits
    if q == 10 ** (digits + 1):
        # rounding carried into a new leading digit
        q //= 10
        exponent += 1
    return HighPrecisionDecimal(q, exponent, digits + 1)


def _check_pi_budget(digits: int) -> None:
    if digits > PI_DIGITS - 5:
        raise ValueError(f"at most {PI_DIGITS - 5} digits available from the stored pi")


@lru_cache(maxsize=None)
def sqrt_pi(digits: int = 40) -> HighPrecisionDecimal:
    """sqrt(pi) to ``digits`` decimals after the leading digit."""
    _check_pi_budget(digits)
    return sqrt_decimal(PI, digits)


@lru_cache(maxsize=None)
def sqrt_two_pi(digits: int = 40) -> HighPrecisionDecimal:
    """sqrt(2*pi) to ``digits`` decimals after the leading digit."""
    _check_pi_budget(digits)
    return sqrt_decimal(2 * PI, digits)
