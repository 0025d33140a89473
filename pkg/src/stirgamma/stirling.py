"""Stirling's series for log Gamma and its truncation.

    log Gamma(z) ~ (z - 1/2) log z - z + log C + sum_{n>=1} a_n / z^(2n-1)

with ``a_n = (2n-2)! B_{2n} / (2n)! = B_{2n} / (2n (2n-1))`` and
``C = sqrt(2 pi)``. The series diverges for every fixed ``z``; it is cut
either after a fixed number of terms or just before its smallest term.
Coefficients stay exact until the series is built, after which evaluation
runs in double precision through :mod:`stirgamma.kernels`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Real

import numpy as np

from . import kernels
from .bernoulli import BernoulliTable, build_table
from .errors import DomainError, PreconditionError
from .exactnum import sqrt_two_pi

__all__ = [
    "DEFAULT_CAP",
    "StirlingSeries",
    "TruncationPolicy",
    "build_series",
    "default_series",
    "error_estimate",
    "eval_log_gamma_raw",
    "log_C",
    "smallest_term_index",
]

DEFAULT_CAP = 30


@lru_cache(maxsize=None)
def log_C() -> float:
    """log sqrt(2 pi) rounded to double from a 40-digit square root."""
    return math.log(float(sqrt_two_pi(40)))


@dataclass(frozen=True)
class StirlingSeries:
    """Exact coefficients ``a_1..a_N`` plus ``log C``.

    ``coefficients[n - 1]`` is a_n. The float views used by the kernels are
    derived once at construction and are read-only.
    """

    coefficients: tuple[Fraction, ...]
    log_C: float
    floats: np.ndarray = field(init=False, repr=False, compare=False)
    log_abs: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least one coefficient")
        floats = np.array([float(a) for a in self.coefficients], dtype=np.float64)
        log_abs = np.log(np.abs(floats))
        floats.flags.writeable = False
        log_abs.flags.writeable = False
        object.__setattr__(self, "floats", floats)
        object.__setattr__(self, "log_abs", log_abs)

    @property
    def max_terms(self) -> int:
        return len(self.coefficients)

    def a(self, n: int) -> Fraction:
        """Exact coefficient a_n, 1-based."""
        if not 1 <= n <= self.max_terms:
            raise IndexError(f"term {n} outside 1..{self.max_terms}")
        return self.coefficients[n - 1]


@dataclass(frozen=True)
class TruncationPolicy:
    """How many series terms to sum.

    ``mode`` is ``"smallest_term"`` (stop just before the smallest term,
    scanning at most ``cap`` terms) or ``"fixed"`` (always ``terms``).
    """

    mode: str = "smallest_term"
    terms: int | None = None
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError("cap must be positive")
        if self.mode == "fixed":
            if self.terms is None or not 0 <= self.terms <= self.cap:
                raise ValueError(f"fixed truncation needs 0 <= terms <= cap ({self.cap})")
        elif self.mode == "smallest_term":
            if self.terms is not None:
                raise ValueError("smallest_term policy takes no fixed term count")
        else:
            raise ValueError(f"unknown truncation mode {self.mode!r}")

    @classmethod
    def fixed(cls, terms: int, cap: int = DEFAULT_CAP) -> "TruncationPolicy":
        return cls("fixed", terms, cap)

    @classmethod
    def smallest_term(cls, cap: int = DEFAULT_CAP) -> "TruncationPolicy":
        return cls("smallest_term", None, cap)


def build_series(table: BernoulliTable, N: int) -> StirlingSeries:
    """Series with exact a_1..a_N taken from ``table``.

    Requires ``table.max_index >= 2N``.
    """
    if N < 1:
        raise PreconditionError("N must be positive")
    if table.max_index < 2 * N:
        raise PreconditionError(
            f"table reaches B_{table.max_index}; {N} terms need B_{2 * N}"
        )
    coeffs = tuple(table.B[2 * n] / (2 * n * (2 * n - 1)) for n in range(1, N + 1))
    return StirlingSeries(coeffs, log_C())


@lru_cache(maxsize=None)
def default_series() -> StirlingSeries:
    """Default series: one term past the default cap so the first omitted
    term is always available for the error estimate."""
    N = DEFAULT_CAP + 1
    return build_series(build_table(2 * N), N)


def _on_branch_cut(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0


def eval_log_gamma_raw(series: StirlingSeries, z, N_used: int):
    """Truncated series at ``z`` with no argument reduction.

    Uses the principal branch of log. Real input gives a float, complex
    input a complex.
    """
    if not 0 <= N_used <= series.max_terms:
        raise PreconditionError(f"N_used must lie in 0..{series.max_terms}")
    real = isinstance(z, Real)
    zc = complex(z)
    if _on_branch_cut(zc) or cmath.isnan(zc):
        raise DomainError(f"z={z!r} lies on the branch cut of log")
    v = kernels.raw_log_gamma(zc, series.floats, N_used, series.log_C)
    return v.real if real else v


def smallest_term_index(series: StirlingSeries, z, cap: int | None = None) -> int:
    """Index n in 1..cap of the smallest term ``|a_n| / |z|^(2n-1)``.

    The first local minimum is returned; when the magnitudes keep falling
    up to ``cap`` the answer is ``cap``.
    """
    cap = series.max_terms if cap is None else cap
    if not 1 <= cap <= series.max_terms:
        raise PreconditionError(f"cap must lie in 1..{series.max_terms}")
    r = abs(complex(z))
    if r == 0:
        raise DomainError("z must be nonzero")
    return kernels.smallest_term(math.log(r), series.log_abs, cap)


def error_estimate(series: StirlingSeries, z, N_used: int) -> float:
    """Magnitude of the first omitted term, ``|a_{N+1}| / |z|^(2N+1)``.

    For real ``z > 0`` the remainder is bounded by this quantity; for
    complex ``z`` it is only a heuristic.
    """
    if N_used < 0 or N_used + 1 > series.max_terms:
        raise PreconditionError(f"need 0 <= N_used < {series.max_terms}")
    r = abs(complex(z))
    if r == 0:
        raise DomainError("z must be nonzero")
    return kernels.first_omitted(math.log(r), series.log_abs, N_used)
