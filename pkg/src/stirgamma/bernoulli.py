"""Expansion coefficients of log-gamma and the Bernoulli numbers behind them.

Writing log Gamma(z) as a series in the derivatives of
``f0(z) = z log z - z + log C`` gives coefficients ``c_j`` fixed by

    c_0 = 1,    c_j = -sum_{k=0}^{j-1} c_k / (j - k + 1)!    (j >= 1)

and ``B_j = j! c_j`` are the Bernoulli numbers. This recursion produces the
convention ``B_1 = -1/2``, which is used everywhere in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = ["BernoulliTable", "build_table", "bernoulli_number", "bernoulli_oracle"]


@dataclass(frozen=True)
class BernoulliTable:
    """Exact ``c_0..c_J`` and ``B_0..B_J``. Immutable once built."""

    max_index: int
    c: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.c) != self.max_index + 1 or len(self.B) != self.max_index + 1:
            raise ValueError("table length does not match max_index")


@lru_cache(maxsize=16)
def build_table(J: int) -> BernoulliTable:
    """Run the coefficient recursion up to index ``J`` inclusive."""
    if not isinstance(J, int) or J < 0:
        raise ValueError("J must be a nonnegative integer")
    # 1/(m)! for m = 0..J+1
    inv_fact = [Fraction(1, factorial(m)) for m in range(J + 2)]
    c = [Fraction(1)]
    for j in range(1, J + 1):
        s = Fraction(0)
        for k in range(j):
            s += c[k] * inv_fact[j - k + 1]
        c.append(-s)
    B = [factorial(j) * cj for j, cj in enumerate(c)]
    return BernoulliTable(J, tuple(c), tuple(B))


def bernoulli_number(table: BernoulliTable, j: int) -> Fraction:
    """B_j read from a built table."""
    if not 0 <= j <= table.max_index:
        raise IndexError(f"index {j} outside table range 0..{table.max_index}")
    return table.B[j]


def bernoulli_oracle(m: int) -> Fraction:
    """B_m from the explicit double sum, independent of :func:`build_table`.

        B_m = sum_{k=0}^{m} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k, j) j^m

    Uses ``0**0 == 1``, which gives B_1 = -1/2 like the recursion does.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = Fraction(0)
    for k in range(m + 1):
        inner = sum((-1) ** j * comb(k, j) * j**m for j in range(k + 1))
        total += Fraction(inner, k + 1)
    return total
