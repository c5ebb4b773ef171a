# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: truncated convolutions and the batch a2 evaluator.

Mirrors the API of _core_py; the faster of the two is picked in backend.py.
"""

import numpy as np

NAME = "cython"


def mul_trunc(const double complex[::1] a, const double complex[::1] b):
    """Cauchy product of equal-length coefficient arrays, truncated."""
    cdef Py_ssize_t n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] c = out
    cdef Py_ssize_t i, k
    cdef double complex acc
    for i in range(n):
        acc = 0
        for k in range(i + 1):
            acc = acc + a[k] * b[i - k]
        c[i] = acc
    return out


def div_trunc(const double complex[::1] a, const double complex[::1] b):
    """Long division q with q*b == a mod z^n; requires b[0] != 0."""
    cdef Py_ssize_t n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] q = out
    cdef double complex b0 = b[0]
    cdef Py_ssize_t i, k
    cdef double complex acc
    q[0] = a[0] / b0
    for i in range(1, n):
        acc = a[i]
        for k in range(i):
            acc = acc - q[k] * b[i - k]
        q[i] = acc / b0
    return out


def exp_trunc(const double complex[::1] a):
    """exp of a series with zero constant term, via n*e_n = sum k*a_k*e_{n-k}."""
    cdef Py_ssize_t n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] e = out
    cdef Py_ssize_t i, k
    cdef double complex acc
    e[0] = 1
    for i in range(1, n):
        acc = 0
        for k in range(1, i + 1):
            acc = acc + k * a[k] * e[i - k]
        e[i] = acc / i
    return out


def region_eval(double p, const double complex[::1] c1, const double complex[::1] c2):
    """For each Schwarz pair compute a2 = 1/p + p*(c1^2-c2+p^2-2*c1*p)/(1+p^2-2*c1*p),
    the radial excess over the per-pair exact disc, and |a2 - 1/p|.
    """
    cdef Py_ssize_t n = c1.shape[0]
    a2_out = np.empty(n, dtype=np.complex128)
    exc_out = np.empty(n, dtype=np.float64)
    dev_out = np.empty(n, dtype=np.float64)
    cdef double complex[::1] a2 = a2_out
    cdef double[::1] exc = exc_out
    cdef double[::1] dev = dev_out
    cdef double inv_p = 1.0 / p
    cdef double p2 = p * p
    cdef Py_ssize_t i
    cdef double complex d, num, val, center
    cdef double radius
    for i in range(n):
        d = 1 + p2 - 2 * c1[i] * p
        num = c1[i] * c1[i] - c2[i] + p2 - 2 * c1[i] * p
        val = inv_p + p * num / d
        center = inv_p + p * (c1[i] * c1[i] + p2 - 2 * c1[i] * p) / d
        radius = p * (1.0 - abs(c1[i]) ** 2) / abs(d)
        a2[i] = val
        exc[i] = abs(val - center) - radius
        dev[i] = abs(val - inv_p)
    return a2_out, exc_out, dev_out
