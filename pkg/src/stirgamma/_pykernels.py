"""Pure-Python evaluation kernels.

Reference twin of the compiled ``_ckernels`` extension, with identical
signatures. ``coeffs[n-1]`` holds the float value of the series coefficient
a_n and ``log_abs_coeffs[n-1]`` holds log|a_n|.
"""
import cmath
import math

import numpy as np

BACKEND = "python"


def raw_log_gamma(z, coeffs, n_terms, log_c):
    z = complex(z)
    lead = (z - 0.5) * cmath.log(z) - z + log_c
    if n_terms <= 0:
        return lead
    inv = 1.0 / z
    u = inv * inv
    s = complex(coeffs[n_terms - 1])
    for n in range(n_terms - 2, -1, -1):
        s = s * u + coeffs[n]
    return lead + s * inv


def smallest_term(log_abs_z, log_abs_coeffs, cap):
    prev = log_abs_coeffs[0] - log_abs_z
    best, best_n = prev, 1
    for n in range(2, cap + 1):
        t = log_abs_coeffs[n - 1] - (2 * n - 1) * log_abs_z
        if t > prev:
            return n - 1
        if t < best:
            best, best_n = t, n
        prev = t
    return best_n


def first_omitted(log_abs_z, log_abs_coeffs, n_terms):
    if n_terms >= len(log_abs_coeffs):
        return math.inf
    return math.exp(log_abs_coeffs[n_terms] - (2 * n_terms + 1) * log_abs_z)


def log_gamma_reduced(z, threshold, coeffs, log_abs_coeffs, log_c, cap, fixed_terms):
    z = complex(z)
    m = 0
    if z.real < threshold:
        m = int(math.ceil(threshold - z.real))
    w = z + m
    log_abs_w = math.log(abs(w))
    if fixed_terms >= 0:
        n = fixed_terms
    else:
        n = smallest_term(log_abs_w, log_abs_coeffs, cap) - 1
    value = raw_log_gamma(w, coeffs, n, log_c)
    if m:
        shift = 0j
        for k in range(m):
            shift += cmath.log(z + k)
        value -= shift
    return value, first_omitted(log_abs_w, log_abs_coeffs, n), n, m


def log_gamma_many(zs, threshold, coeffs, log_abs_coeffs, log_c, cap, fixed_terms):
    zs = np.asarray(zs, dtype=np.complex128)
    values = np.empty(zs.shape, dtype=np.complex128)
    errs = np.empty(zs.shape, dtype=np.float64)
    terms = np.empty(zs.shape, dtype=np.int64)
    shifts = np.empty(zs.shape, dtype=np.int64)
    for i, z in enumerate(zs.flat):
        values.flat[i], errs.flat[i], terms.flat[i], shifts.flat[i] = log_gamma_reduced(
            z, threshold, coeffs, log_abs_coeffs, log_c, cap, fixed_terms
        )
    return values, errs, terms, shifts
