"""Exhaustive identity verification with structured pass/fail reports.

Each report covers one identity over a contiguous index range.  A failing
report always carries the first counterexample (index plus both unequal
values rendered as text), so a red run is reproducible by hand.

``verify_identities`` checks the Bernoulli layer; ``core_property_reports``
checks the Fibonacci/Golden-calculus layer underneath it.  Index bounds
scale off one degree parameter N: polynomial-level identities run to N,
number-level identities to 2N, and the Binet cross-check to 8N, so the
default N = 32 exercises degrees 32/64/256 respectively.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .bernoulli import (
    bf_numbers_recursive,
    bf_numbers_series,
    bf_polynomial,
    bf_polynomial_genfunc,
    classical_bernoulli_numbers,
    classical_bernoulli_polynomial,
    h_polynomial_explicit,
    h_polynomial_sum,
)
from .fibonacci import FibTable, binet, fibonomial_rec_a, fibonomial_rec_b
from .golden import GoldenNumber
from .polynomials import (
    Polynomial,
    golden_binomial,
    golden_derivative,
    golden_derivative_dilatation,
)
from .rationals import format_rational

RANDOM_POLY_SAMPLES = 200
RANDOM_POLY_SEED = 0x5F1B0
RANDOM_POLY_MAX_DEGREE = 32
RANDOM_POLY_COEFF_BOUND = 10**6


@dataclass(frozen=True)
class Counterexample:
    degree: int
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    degree_min: int
    degree_max: int
    statuses: tuple[bool, ...]
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return all(self.statuses)


def _run(
    identity: str, lo: int, hi: int, items: Iterable[tuple[int, object, object]]
) -> VerificationReport:
    statuses = []
    counterexample = None
    for index, lhs, rhs in items:
        ok = lhs == rhs
        statuses.append(ok)
        if not ok and counterexample is None:
            counterexample = Counterexample(index, str(lhs), str(rhs))
    return VerificationReport(identity, lo, hi, tuple(statuses), counterexample)


def verify_identities(max_degree: int) -> list[VerificationReport]:
    """Run every Bernoulli-layer identity up to the given degree.

    Pure function of ``max_degree``; failures are reported, never raised.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    n_poly = max_degree
    n_num = 2 * max_degree

    fib_table = FibTable(n_num + 1)
    series_numbers = bf_numbers_series(n_num)
    recursive_numbers = bf_numbers_recursive(n_num)
    polys = [bf_polynomial(n, series_numbers, fib_table) for n in range(n_poly + 1)]

    classical_nums = classical_bernoulli_numbers(n_poly)
    classical_polys = [
        classical_bernoulli_polynomial(n, classical_nums) for n in range(n_poly + 1)
    ]

    def number_sum_items():
        for n in range(2, n_num + 1):
            total = sum(
                fib_table.fibonomial(n, j) * series_numbers[j] for j in range(n)
            )
            yield n, format_rational(total), "0"

    def constant_term_items():
        for n in range(n_num + 1):
            constant = bf_polynomial(n, series_numbers, fib_table).constant_term
            yield n, format_rational(Fraction(constant)), format_rational(series_numbers[n])

    def classical_sum_items():
        for n in range(2, n_poly + 1):
            total = sum(math.comb(n, j) * classical_nums[j] for j in range(n))
            yield n, format_rational(total), "0"

    return [
        _run(
            "numbers-cross-method",
            0,
            n_num,
            (
                (
                    n,
                    format_rational(series_numbers[n]),
                    format_rational(recursive_numbers[n]),
                )
                for n in range(n_num + 1)
            ),
        ),
        _run(
            "polynomials-cross-method",
            0,
            n_poly,
            ((n, polys[n], bf_polynomial_genfunc(n)) for n in range(n_poly + 1)),
        ),
        _run(
            "golden-derivative-lowers-degree",
            1,
            n_poly,
            (
                (n, golden_derivative(polys[n]), polys[n - 1] * fib_table.fib(n))
                for n in range(1, n_poly + 1)
            ),
        ),
        _run(
            "fibonomial-sum-recursion",
            1,
            n_poly,
            _summation_items(polys, fib_table, n_poly),
        ),
        _run("number-sum-vanishes", 2, n_num, number_sum_items()),
        _run(
            "value-at-one-equals-number",
            2,
            n_poly,
            (
                (
                    n,
                    format_rational(polys[n](Fraction(1))),
                    format_rational(series_numbers[n]),
                )
                for n in range(2, n_poly + 1)
            ),
        ),
        _run(
            "h-polynomial-two-derivations",
            1,
            n_poly,
            (
                (n, h_polynomial_sum(n), h_polynomial_explicit(n))
                for n in range(1, n_poly + 1)
            ),
        ),
        _run(
            "h-polynomial-closed-form",
            1,
            n_poly,
            (
                (
                    n,
                    h_polynomial_explicit(n),
                    polys[n]
                    + Polynomial.monomial(n - 1, Fraction(fib_table.fib(n))),
                )
                for n in range(1, n_poly + 1)
            ),
        ),
        _run("constant-term-equals-number", 0, n_num, constant_term_items()),
        _run(
            "classical-odd-numbers-vanish",
            3,
            n_poly,
            (
                (n, format_rational(classical_nums[n]), "0")
                for n in range(3, n_poly + 1, 2)
            ),
        ),
        _run("classical-number-sum-vanishes", 2, n_poly, classical_sum_items()),
        _run(
            "classical-value-at-one",
            2,
            n_poly,
            (
                (
                    n,
                    format_rational(classical_polys[n](Fraction(1))),
                    format_rational(classical_nums[n]),
                )
                for n in range(2, n_poly + 1)
            ),
        ),
        _run(
            "classical-derivative-lowers-degree",
            1,
            n_poly,
            (
                (n, classical_polys[n].derivative(), classical_polys[n - 1] * n)
                for n in range(1, n_poly + 1)
            ),
        ),
    ]


def _summation_items(
    polys, fib_table: FibTable, n_poly: int
) -> Iterator[tuple[int, Polynomial, Polynomial]]:
    for n in range(1, n_poly + 1):
        acc = Polynomial()
        for l in range(n):
            acc = acc + polys[l] * fib_table.fibonomial(n, l)
        yield n, acc, Polynomial.monomial(n - 1, Fraction(fib_table.fib(n)))


def core_property_reports(max_degree: int) -> list[VerificationReport]:
    """Fibonacci/Golden-calculus layer checks feeding the CLI verifier."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    n_binet = 8 * max_degree
    n_fibonomial = 2 * max_degree
    table = FibTable(n_binet)

    def binet_items():
        for n in range(n_binet + 1):
            yield n, format_rational(binet(n)), format_rational(Fraction(table.fib(n)))

    def symmetry_items():
        for n in range(n_fibonomial + 1):
            ok = all(
                table.fibonomial(n, k) == table.fibonomial(n, n - k)
                for k in range(n + 1)
            )
            yield n, "symmetric" if ok else "asymmetric", "symmetric"

    def integrality_items():
        for n in range(n_fibonomial + 1):
            ok = all(
                Fraction(
                    table.factorial(n), table.factorial(n - k) * table.factorial(k)
                ).denominator
                == 1
                for k in range(n + 1)
            )
            yield n, "integral" if ok else "fractional", "integral"

    def pascal_items(rule):
        for n in range(2, max_degree + 1):
            bad = None
            for k in range(1, n):
                got = rule(n, k)
                want = GoldenNumber.from_rational(table.fibonomial(n, k))
                if got != want:
                    bad = (k, got, want)
                    break
            if bad is None:
                yield n, "exact", "exact"
            else:
                yield n, f"k={bad[0]}: {bad[1]}", f"k={bad[0]}: {bad[2]}"

    def binomial_sign_items():
        for n in range(n_fibonomial + 1):
            expansion = golden_binomial(n)
            ok = all(
                term.sign == (1 if term.k % 4 in (0, 1) else -1)
                and term.coefficient == table.fibonomial(n, term.k)
                for term in expansion.terms
            )
            yield n, "signed" if ok else "mis-signed", "signed"

    def derivative_oracle_items():
        rng = random.Random(RANDOM_POLY_SEED)
        for index in range(1, RANDOM_POLY_SAMPLES + 1):
            poly = _random_rational_polynomial(rng)
            yield index, golden_derivative_dilatation(poly), golden_derivative(poly)

    return [
        _run("binet-matches-recurrence", 0, n_binet, binet_items()),
        _run("fibonomial-symmetry", 0, n_fibonomial, symmetry_items()),
        _run("fibonomial-integrality", 0, n_fibonomial, integrality_items()),
        _run("pascal-recursion-a", 2, max_degree, pascal_items(fibonomial_rec_a)),
        _run("pascal-recursion-b", 2, max_degree, pascal_items(fibonomial_rec_b)),
        _run("golden-binomial-signs", 0, n_fibonomial, binomial_sign_items()),
        _run(
            "golden-derivative-dilatation-oracle",
            1,
            RANDOM_POLY_SAMPLES,
            derivative_oracle_items(),
        ),
    ]


def _random_rational_polynomial(rng: random.Random) -> Polynomial:
    degree = rng.randint(0, RANDOM_POLY_MAX_DEGREE)
    bound = RANDOM_POLY_COEFF_BOUND
    coeffs = [
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(degree + 1)
    ]
    return Polynomial(coeffs)
