"""Truncated formal power series: exact arithmetic modulo z^(order+1).

A series of order N stores exactly N+1 coefficients c_0..c_N.  The
coefficient ring is duck-typed: Fraction for scalar series, Polynomial
for series in z whose coefficients are polynomials in x (z is always the
outer variable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .fibonacci import FibTable
from .polynomials import Polynomial


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coefficients: Iterable) -> None:
        coeffs = tuple(coefficients)
        if not coeffs:
            raise ValueError("a series stores at least the z^0 coefficient")
        self.coeffs = coeffs

    @classmethod
    def one(cls, order: int, one=Fraction(1)) -> TruncatedSeries:
        return cls((one,) + (one * 0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int):
        return self.coeffs[n]

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def _check_order(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: object) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(
                _convolve(self.coeffs, other.coeffs, len(self.coeffs))
            )
        return TruncatedSeries(c * other for c in self.coeffs)

    def __rmul__(self, other: object) -> TruncatedSeries:
        return self * other

    def inverse(self) -> TruncatedSeries:
        """Reciprocal modulo z^(order+1) by the convolution recurrence.

        O(N^2) coefficient operations; plenty at the orders used here.
        The constant term must be invertible in the coefficient ring.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, len(self.coeffs)):
            acc = 0
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return TruncatedSeries(out)

    def inverse_newton(self) -> TruncatedSeries:
        """Reciprocal by Newton doubling: y <- y (2 - a y).

        Same exact result as :meth:`inverse`; fewer big-number operations
        at large orders, so it is the benchmark variant.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        size = len(self.coeffs)
        y = [1 / c0]
        while len(y) < size:
            m = min(2 * len(y), size)
            t = _convolve(self.coeffs[:m], y, m)
            t = [2 - t[0]] + [-c for c in t[1:]]
            y = _convolve(y, t, m)
        return TruncatedSeries(y)


def _convolve(xs, ys, size: int) -> list:
    out = [0] * size
    for i, a in enumerate(xs):
        if i >= size:
            break
        for j, b in enumerate(ys):
            if i + j >= size:
                break
            out[i + j] = out[i + j] + a * b
    return out


def golden_exponential(order: int) -> TruncatedSeries:
    """e_F(z) truncated: the z^n coefficient is 1/F_n!."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    table = FibTable(order)
    return TruncatedSeries(
        Fraction(1, table.factorial(n)) for n in range(order + 1)
    )


def golden_exponential_in_x(order: int) -> TruncatedSeries:
    """e_F(zx) as a series in z: the z^n coefficient is the monomial x^n/F_n!."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    table = FibTable(order)
    return TruncatedSeries(
        Polynomial.monomial(n, Fraction(1, table.factorial(n)))
        for n in range(order + 1)
    )
