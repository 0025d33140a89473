"""Independent reference computations used only by the tests."""
from fractions import Fraction


def repeated_product(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _arctan_inv(x, scale):
    # arctan(1/x) * scale via the alternating Taylor series
    total = term = scale // x
    x2 = x * x
    k, sign = 1, -1
    while term:
        term //= x2
        total += sign * (term // (2 * k + 1))
        sign, k = -sign, k + 1
    return total


def machin_pi(digits):
    guard = 10
    scale = 10 ** (digits + guard)
    pi = 4 * (4 * _arctan_inv(5, scale) - _arctan_inv(239, scale))
    return Fraction(pi // 10**guard, 10**digits)


def stormer_pi(digits):
    guard = 10
    scale = 10 ** (digits + guard)
    pi = 4 * (
        44 * _arctan_inv(57, scale)
        + 7 * _arctan_inv(239, scale)
        - 12 * _arctan_inv(682, scale)
        + 24 * _arctan_inv(12943, scale)
    )
    return Fraction(pi // 10**guard, 10**digits)


def akiyama_tanigawa(m):
    """B_m with B_1 = -1/2 via the Akiyama-Tanigawa triangle."""
    a = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        a[i] = Fraction(1, i + 1)
        for j in range(i, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return -a[0] if m == 1 else a[0]


def first_local_min_scan(terms):
    """1-based index of the first local minimum of a sequence, else its argmin."""
    for n in range(1, len(terms)):
        if terms[n] > terms[n - 1]:
            return n
    return min(range(len(terms)), key=lambda i: (terms[i], i)) + 1
