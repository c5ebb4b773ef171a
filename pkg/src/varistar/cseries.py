"""Truncated complex power-series arithmetic.

A TruncatedSeries holds the coefficients of a Taylor polynomial of fixed
order N; every operation works modulo z^(N+1). This is the kernel that the
function constructors and the numerical certificates are built on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .backend import impl

DEFAULT_ORDER = 16


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c[0..N] of a polynomial in z, arithmetic mod z^(N+1)."""

    coeffs: np.ndarray
    order: int = field(init=False)

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "order", arr.size - 1)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> TruncatedSeries:
        """Build a series from a coefficient list, zero-padding up to `order`."""
        arr = np.asarray(list(coeffs), dtype=np.complex128)
        if order is not None:
            if order + 1 < arr.size:
                raise ValueError(
                    f"{arr.size} coefficients exceed requested order {order}"
                )
            arr = np.concatenate([arr, np.zeros(order + 1 - arr.size)])
        return cls(arr)

    @classmethod
    def constant(cls, value: complex, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([0.0], order)

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_orders(self, other)
            return TruncatedSeries(self.coeffs + other.coeffs)
        return self + TruncatedSeries.constant(other, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_orders(self, other)
            return TruncatedSeries(self.coeffs - other.coeffs)
        return self - TruncatedSeries.constant(other, self.order)

    def __rsub__(self, other):
        return TruncatedSeries.constant(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def shift_up(self) -> TruncatedSeries:
        """Multiply by z, dropping the top coefficient."""
        out = np.zeros(self.order + 1, dtype=np.complex128)
        out[1:] = self.coeffs[:-1]
        return TruncatedSeries(out)

    def eval(self, z):
        """Horner evaluation of the truncated polynomial at point(s) z."""
        z = np.asarray(z, dtype=np.complex128)
        acc = np.full_like(z, self.coeffs[self.order])
        for k in range(self.order - 1, -1, -1):
            acc = acc * z + self.coeffs[k]
        return acc


def _check_orders(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    return TruncatedSeries(impl.mul_trunc(a.coeffs, b.coeffs))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient q with series_mul(q, b) == a up to truncation; b[0] != 0."""
    _check_orders(a, b)
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("divisor series has zero constant term")
    return TruncatedSeries(impl.div_trunc(a.coeffs, b.coeffs))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term (constant term of result is 1)."""
    if a.coeffs[0] != 0:
        raise ValueError("series_exp requires a zero constant term")
    return TruncatedSeries(impl.exp_trunc(a.coeffs))


def series_log_one_minus(zeta: complex, order: int, tol: float = 1e-12) -> TruncatedSeries:
    """log(1 - zeta*z): coefficient k is -zeta^k / k for k >= 1."""
    zeta = complex(zeta)
    if abs(zeta) > 1 + tol:
        raise ValueError(f"|zeta| = {abs(zeta)} exceeds 1")
    k = np.arange(order + 1)
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1:] = -(zeta ** k[1:]) / k[1:]
    return TruncatedSeries(out)


def series_geometric(alpha: complex, order: int) -> TruncatedSeries:
    """1 / (1 - alpha*z): coefficient k is alpha^k."""
    return TruncatedSeries(complex(alpha) ** np.arange(order + 1))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative, padded back to the same order with a zero top coefficient."""
    out = np.zeros(a.order + 1, dtype=np.complex128)
    out[: a.order] = a.coeffs[1:] * np.arange(1, a.order + 1)
    return TruncatedSeries(out)
