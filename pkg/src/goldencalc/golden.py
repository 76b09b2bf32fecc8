"""Exact arithmetic in the quadratic field Q(sqrt5).

Elements are stored on the basis {1, sqrt5}, so "the sqrt5 part must
vanish" checks are a single field comparison.  The golden ratio
phi = (1 + sqrt5)/2 and its conjugate phi' = (1 - sqrt5)/2 = -1/phi are
the two roots of x^2 - x - 1 and live here exactly.
"""

from __future__ import annotations

from fractions import Fraction


class ExactnessError(ArithmeticError):
    """A computation that must be exact left a nonzero residue behind."""


class GoldenNumber:
    """Immutable element a + b*sqrt5 of Q(sqrt5) with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def from_rational(cls, value: Fraction | int) -> GoldenNumber:
        return cls(value, 0)

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt5"

    def _coerce(self, other: object) -> GoldenNumber | None:
        if isinstance(other, GoldenNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(other, 0)
        return None

    def __eq__(self, other: object) -> bool:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self.a == value.a and self.b == value.b

    def __hash__(self) -> int:
        # Rational elements must hash like their Fraction value.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __add__(self, other: object) -> GoldenNumber:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return GoldenNumber(self.a + value.a, self.b + value.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> GoldenNumber:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return GoldenNumber(self.a - value.a, self.b - value.b)

    def __rsub__(self, other: object) -> GoldenNumber:
        return (-self) + other

    def __mul__(self, other: object) -> GoldenNumber:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return GoldenNumber(
            self.a * value.a + 5 * self.b * value.b,
            self.a * value.b + self.b * value.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GoldenNumber:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self * value.inverse()

    def __rtruediv__(self, other: object) -> GoldenNumber:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return value * self.inverse()

    def __pow__(self, exponent: int) -> GoldenNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GoldenNumber(1, 0)
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GoldenNumber:
        """The field automorphism sqrt5 -> -sqrt5."""
        return GoldenNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        """a^2 - 5*b^2; multiplicative, zero only for zero."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> GoldenNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q(sqrt5)")
        return GoldenNumber(self.a / n, -self.b / n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        """Coerce to Fraction; the sqrt5 part must have cancelled exactly."""
        if self.b != 0:
            raise ExactnessError(f"sqrt5 component did not cancel: {self}")
        return self.a


SQRT5 = GoldenNumber(0, 1)
PHI = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
PHI_CONJUGATE = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))
