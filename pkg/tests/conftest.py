from fractions import Fraction

import hypothesis.strategies as st

from goldencalc import GoldenNumber, Polynomial

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=200)

golden_numbers = st.builds(GoldenNumber, rationals, rationals)

nonzero_golden_numbers = golden_numbers.filter(bool)

rational_polynomials = st.lists(rationals, min_size=0, max_size=12).map(Polynomial)


def fib_by_addition(n: int) -> int:
    """Independent Fibonacci oracle: plain repeated addition."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_factorial_by_product(n: int) -> int:
    """Independent F-factorial oracle: direct product of oracle values."""
    product = 1
    for k in range(1, n + 1):
        product *= fib_by_addition(k)
    return product


def fibonomial_by_ratio(n: int, k: int) -> Fraction:
    """Independent Fibonomial oracle as an exact fraction of oracle factorials."""
    return Fraction(
        fib_factorial_by_product(n),
        fib_factorial_by_product(n - k) * fib_factorial_by_product(k),
    )
