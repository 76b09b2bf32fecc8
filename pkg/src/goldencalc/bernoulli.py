"""Bernoulli-Fibonacci numbers and polynomials, plus the classical baseline.

Both families come from one construction.  Writing E for the exponential
of the family (e_F or e), the numbers sit in the expansion of
z/(E(z) - 1) and the polynomials in z*E(zx)/(E(z) - 1).  The division is
realized as multiplication by the inverse of (E(z) - 1)/z, whose constant
term is 1, so nothing ever divides by z in the series ring.

Three independent routes are provided for the Fibonacci family: series
inversion for the numbers, the Fibonomial-sum recursion for the numbers,
and the generating-function extraction for the polynomials.  They are
cross-checked in :mod:`goldencalc.verify`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .fibonacci import FibTable
from .polynomials import Polynomial
from .series import TruncatedSeries, golden_exponential_in_x


def _inverse_shifted_exponential(order: int, factorial: Callable[[int], int]) -> TruncatedSeries:
    # (E(z) - 1)/z has z^n coefficient 1/factorial(n+1); constant term 1.
    shifted = TruncatedSeries(
        Fraction(1, factorial(n + 1)) for n in range(order + 1)
    )
    return shifted.inverse()


def bf_numbers_series(max_n: int) -> list[Fraction]:
    """b^F_0..b^F_max_n read off the inverse of (e_F(z) - 1)/z."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    table = FibTable(max_n + 1)
    inv = _inverse_shifted_exponential(max_n, table.factorial)
    return [inv.coefficient(n) * table.factorial(n) for n in range(max_n + 1)]


def bf_numbers_recursive(max_n: int) -> list[Fraction]:
    """b^F_0..b^F_max_n from the Fibonomial sum rule.

    b^F_0 = 1; for n >= 2 the sum of [n, j] b^F_j over j < n vanishes,
    which pins down b^F_(n-1) once the earlier values are known.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    table = FibTable(max_n + 1)
    numbers: list[Fraction] = [Fraction(1)]
    for n in range(2, max_n + 2):
        acc = sum(table.fibonomial(n, j) * numbers[j] for j in range(n - 1))
        numbers.append(-acc / table.fibonomial(n, n - 1))
    return numbers


def bf_polynomial(
    n: int,
    numbers: Sequence[Fraction] | None = None,
    table: FibTable | None = None,
) -> Polynomial:
    """B^F_n(x) = sum over j of [n, j] b^F_j x^(n-j)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None or table.limit < n:
        table = FibTable(n)
    if numbers is None:
        numbers = bf_numbers_series(n)
    coeffs: list = [0] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = table.fibonomial(n, j) * numbers[j]
    return Polynomial(coeffs)


def bf_polynomial_genfunc(n: int) -> Polynomial:
    """B^F_n(x) extracted from the z-expansion of z*e_F(zx)/(e_F(z) - 1).

    Independent of :func:`bf_polynomial`: no Bernoulli-Fibonacci number is
    computed along the way, only the two series factors at order n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = FibTable(n + 1)
    product = golden_exponential_in_x(n) * _inverse_shifted_exponential(n, table.factorial)
    return product.coefficient(n) * table.factorial(n)


def bf_eval(n: int, point: Fraction | int) -> Fraction:
    """Exact value of B^F_n at an exact rational point."""
    return Fraction(bf_polynomial(n)(Fraction(point)))


def h_polynomial_sum(n: int) -> Polynomial:
    """H_n(x) as the weighted sum of lower polynomials:

        H_n(x) = sum over k of [n, k] B^F_(n-k)(x),

    equal to B^F_n(x) + F_n x^(n-1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    table = FibTable(n)
    numbers = bf_numbers_series(n)
    acc = Polynomial()
    for k in range(n + 1):
        acc = acc + bf_polynomial(n - k, numbers, table) * table.fibonomial(n, k)
    return acc


def h_polynomial_explicit(n: int) -> Polynomial:
    """H_n(x) in closed form: x^n + sum over j >= 2 of [n, j] b^F_j x^(n-j)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = FibTable(n)
    numbers = bf_numbers_series(n)
    coeffs: list = [0] * (n + 1)
    coeffs[n] = Fraction(1)
    for j in range(2, n + 1):
        coeffs[n - j] = table.fibonomial(n, j) * numbers[j]
    return Polynomial(coeffs)


def classical_bernoulli_numbers(max_n: int) -> list[Fraction]:
    """b_0..b_max_n of the ordinary Bernoulli family (b_1 = -1/2)."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    inv = _inverse_shifted_exponential(max_n, math.factorial)
    return [inv.coefficient(n) * math.factorial(n) for n in range(max_n + 1)]


def classical_bernoulli_polynomial(
    n: int, numbers: Sequence[Fraction] | None = None
) -> Polynomial:
    """B_n(x) = sum over j of C(n, j) b_j x^(n-j)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if numbers is None:
        numbers = classical_bernoulli_numbers(n)
    coeffs: list = [0] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = math.comb(n, j) * numbers[j]
    return Polynomial(coeffs)


@dataclass(frozen=True)
class BernoulliFibTable:
    """Numbers b^F_0..b^F_max_n and polynomials B^F_0..B^F_max_n, built once."""

    max_n: int
    numbers: tuple[Fraction, ...]
    polynomials: tuple[Polynomial, ...]

    @classmethod
    def build(cls, max_n: int, method: str = "series") -> BernoulliFibTable:
        if method == "series":
            numbers = bf_numbers_series(max_n)
        elif method == "recursive":
            numbers = bf_numbers_recursive(max_n)
        else:
            raise ValueError(f"unknown method: {method!r}")
        table = FibTable(max_n)
        polys = tuple(bf_polynomial(n, numbers, table) for n in range(max_n + 1))
        return cls(max_n, tuple(numbers), polys)
