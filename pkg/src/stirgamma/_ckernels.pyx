# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels; same signatures as ``_pykernels``."""
import numpy as np

from libc.math cimport ceil, exp, log, INFINITY

cdef extern from "<complex.h>" nogil:
    double complex clog(double complex z)
    double cabs(double complex z)
    double creal(double complex z)

BACKEND = "cython"


cdef inline double complex _raw(double complex z, const double[:] coeffs,
                                 Py_ssize_t n_terms, double log_c) noexcept nogil:
    cdef double complex lead = (z - 0.5) * clog(z) - z + log_c
    cdef double complex inv, u, s
    cdef Py_ssize_t n
    if n_terms <= 0:
        return lead
    inv = 1.0 / z
    u = inv * inv
    s = coeffs[n_terms - 1]
    for n in range(n_terms - 2, -1, -1):
        s = s * u + coeffs[n]
    return lead + s * inv


cdef inline Py_ssize_t _smallest(double log_abs_z, const double[:] log_abs_coeffs,
                                 Py_ssize_t cap) noexcept nogil:
    cdef double prev = log_abs_coeffs[0] - log_abs_z
    cdef double best = prev
    cdef double t
    cdef Py_ssize_t best_n = 1, n
    for n in range(2, cap + 1):
        t = log_abs_coeffs[n - 1] - (2 * n - 1) * log_abs_z
        if t > prev:
            return n - 1
        if t < best:
            best = t
            best_n = n
        prev = t
    return best_n


cdef inline double _omitted(double log_abs_z, const double[:] log_abs_coeffs,
                            Py_ssize_t n_terms) noexcept nogil:
    if n_terms >= log_abs_coeffs.shape[0]:
        return INFINITY
    return exp(log_abs_coeffs[n_terms] - (2 * n_terms + 1) * log_abs_z)


cdef inline void _reduced(double complex z, double threshold, const double[:] coeffs,
                          const double[:] log_abs_coeffs, double log_c, Py_ssize_t cap,
                          Py_ssize_t fixed_terms, double complex *value, double *err,
                          Py_ssize_t *terms, Py_ssize_t *shift) noexcept nogil:
    cdef Py_ssize_t m = 0, n, k
    cdef double complex w, acc
    cdef double log_abs_w
    if creal(z) < threshold:
        m = <Py_ssize_t>ceil(threshold - creal(z))
    w = z + m
    log_abs_w = log(cabs(w))
    if fixed_terms >= 0:
        n = fixed_terms
    else:
        n = _smallest(log_abs_w, log_abs_coeffs, cap) - 1
    value[0] = _raw(w, coeffs, n, log_c)
    if m:
        acc = 0
        for k in range(m):
            acc = acc + clog(z + k)
        value[0] = value[0] - acc
    err[0] = _omitted(log_abs_w, log_abs_coeffs, n)
    terms[0] = n
    shift[0] = m


def raw_log_gamma(double complex z, const double[:] coeffs, Py_ssize_t n_terms, double log_c):
    return _raw(z, coeffs, n_terms, log_c)


def smallest_term(double log_abs_z, const double[:] log_abs_coeffs, Py_ssize_t cap):
    return _smallest(log_abs_z, log_abs_coeffs, cap)


def first_omitted(double log_abs_z, const double[:] log_abs_coeffs, Py_ssize_t n_terms):
    return _omitted(log_abs_z, log_abs_coeffs, n_terms)


def log_gamma_reduced(double complex z, double threshold, const double[:] coeffs,
                      const double[:] log_abs_coeffs, double log_c, Py_ssize_t cap,
                      Py_ssize_t fixed_terms):
    cdef double complex value
    cdef double err
    cdef Py_ssize_t terms, shift
    _reduced(z, threshold, coeffs, log_abs_coeffs, log_c, cap, fixed_terms,
             &value, &err, &terms, &shift)
    return value, err, terms, shift


def log_gamma_many(zs, double threshold, const double[:] coeffs,
                   const double[:] log_abs_coeffs, double log_c, Py_ssize_t cap,
                   Py_ssize_t fixed_terms):
    zarr = np.ascontiguousarray(zs, dtype=np.complex128)
    shape = zarr.shape
    cdef const double complex[:] zv = zarr.reshape(-1)
    cdef Py_ssize_t size = zv.shape[0], i
    values = np.empty(size, dtype=np.complex128)
    errs = np.empty(size, dtype=np.float64)
    terms = np.empty(size, dtype=np.int64)
    shifts = np.empty(size, dtype=np.int64)
    cdef double complex[:] vv = values
    cdef double[:] ev = errs
    cdef long long[:] tv = terms
    cdef long long[:] sv = shifts
    cdef Py_ssize_t t, s
    with nogil:
        for i in range(size):
            _reduced(zv[i], threshold, coeffs, log_abs_coeffs, log_c, cap, fixed_terms,
                     &vv[i], &ev[i], &t, &s)
            tv[i] = t
            sv[i] = s
    return (values.reshape(shape), errs.reshape(shape),
            terms.reshape(shape), shifts.reshape(shape))
