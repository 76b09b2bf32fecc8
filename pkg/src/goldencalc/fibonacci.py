"""Fibonacci numbers, their factorials, and Fibonomial coefficients.

Conventions: F_0 = 0, F_1 = F_2 = 1, F_n = F_(n-1) + F_(n-2), and
F_0! = 1 (empty product).  Fibonomials [n, k] = F_n!/(F_(n-k)! F_k!) are
computed as factorial ratios with the exactness of the division asserted,
so any arithmetic slip trips immediately instead of truncating.
"""

from __future__ import annotations

from fractions import Fraction

from .golden import PHI, PHI_CONJUGATE, SQRT5, ExactnessError, GoldenNumber


class FibTable:
    """F_0..F_limit and F_0!..F_limit!, built once and never mutated.

    Confine a table to one computation or share it read-only; either way
    there is no global state.
    """

    __slots__ = ("values", "factorials")

    def __init__(self, limit: int) -> None:
        if limit < 0:
            raise ValueError("limit must be nonnegative")
        values = [0, 1]
        while len(values) <= limit:
            values.append(values[-1] + values[-2])
        factorials = [1]
        for k in range(1, limit + 1):
            factorials.append(factorials[-1] * values[k])
        self.values = tuple(values[: limit + 1])
        self.factorials = tuple(factorials)

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def fib(self, n: int) -> int:
        return self.values[n]

    def factorial(self, n: int) -> int:
        return self.factorials[n]

    def fibonomial(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if k > n:
            raise ValueError(f"k={k} exceeds n={n}")
        quotient, remainder = divmod(
            self.factorials[n], self.factorials[n - k] * self.factorials[k]
        )
        if remainder:
            raise ExactnessError(f"inexact Fibonomial division for n={n}, k={k}")
        return quotient

    def fibonomial_row(self, n: int) -> tuple[int, ...]:
        return tuple(self.fibonomial(n, k) for k in range(n + 1))


def fib(n: int) -> int:
    """F_n by the additive recurrence."""
    _require_nonnegative(n)
    return FibTable(n).fib(n)


def fib_factorial(n: int) -> int:
    """F_n! = F_1 * F_2 * ... * F_n, with F_0! = 1."""
    _require_nonnegative(n)
    return FibTable(n).factorial(n)


def fibonomial(n: int, k: int) -> int:
    """[n, k] as an exact factorial ratio; always an integer."""
    _require_nonnegative(n)
    return FibTable(n).fibonomial(n, k)


def fibonomial_row(n: int) -> tuple[int, ...]:
    _require_nonnegative(n)
    return FibTable(n).fibonomial_row(n)


def binet(n: int) -> Fraction:
    """F_n via (phi^n - phi'^n)/(phi - phi'), carried out in Q(sqrt5).

    The sqrt5 component of the quotient must vanish; a nonzero residue
    raises ExactnessError because it can only mean an arithmetic bug.
    """
    _require_nonnegative(n)
    return ((PHI**n - PHI_CONJUGATE**n) / SQRT5).to_rational()


def fibonomial_rec_a(n: int, k: int) -> GoldenNumber:
    """(-1/phi)^k [n-1, k] + phi^(n-k) [n-1, k-1], exactly in Q(sqrt5)."""
    _require_inner(n, k)
    table = FibTable(n - 1)
    minus_inv_phi = -PHI.inverse()
    return minus_inv_phi**k * table.fibonomial(n - 1, k) + PHI ** (n - k) * table.fibonomial(n - 1, k - 1)


def fibonomial_rec_b(n: int, k: int) -> GoldenNumber:
    """phi^k [n-1, k] + (-1/phi)^(n-k) [n-1, k-1], exactly in Q(sqrt5)."""
    _require_inner(n, k)
    table = FibTable(n - 1)
    minus_inv_phi = -PHI.inverse()
    return PHI**k * table.fibonomial(n - 1, k) + minus_inv_phi ** (n - k) * table.fibonomial(n - 1, k - 1)


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")


def _require_inner(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
