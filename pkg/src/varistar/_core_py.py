"""Pure numpy implementations of the hot kernels.

Used when the compiled extension is unavailable or when
VARISTAR_PURE_PYTHON is set; same API and results as _core.pyx.
"""

import numpy as np

NAME = "numpy"


def mul_trunc(a, b):
    """Cauchy product of equal-length coefficient arrays, truncated."""
    n = len(a)
    return np.convolve(a, b)[:n]


def div_trunc(a, b):
    """Long division q with q*b == a mod z^n; requires b[0] != 0."""
    n = len(a)
    q = np.zeros(n, dtype=np.complex128)
    q[0] = a[0] / b[0]
    for i in range(1, n):
        q[i] = (a[i] - np.dot(b[1 : i + 1], q[i - 1 :: -1])) / b[0]
    return q


def exp_trunc(a):
    """exp of a series with zero constant term, via n*e_n = sum k*a_k*e_{n-k}."""
    n = len(a)
    e = np.zeros(n, dtype=np.complex128)
    e[0] = 1.0
    ka = np.arange(n) * np.asarray(a)
    for i in range(1, n):
        e[i] = np.dot(ka[1 : i + 1], e[i - 1 :: -1]) / i
    return e


def region_eval(p, c1, c2):
    """Batch a2 values, radial excess over the per-pair exact disc, |a2 - 1/p|."""
    c1 = np.asarray(c1, dtype=np.complex128)
    c2 = np.asarray(c2, dtype=np.complex128)
    inv_p = 1.0 / p
    d = 1 + p * p - 2 * c1 * p
    base = c1 * c1 + p * p - 2 * c1 * p
    a2 = inv_p + p * (base - c2) / d
    center = inv_p + p * base / d
    radius = p * (1.0 - np.abs(c1) ** 2) / np.abs(d)
    excess = np.abs(a2 - center) - radius
    dev = np.abs(a2 - inv_p)
    return a2, excess, dev
