"""Exact arithmetic in a real quadratic field Q(sqrt(D)).

Values are stored as (a + b*sqrt(D))/c with arbitrary-precision integers,
so every comparison and every floor is decided by integer arithmetic alone.
This is the substrate for irrational rotation numbers: the index iteration
formulas need certified floors of m*rho for m into the tens of thousands,
and a floating-point fallback could silently round an m*rho that sits close
to an integer onto the wrong side.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering


class FieldMismatchError(ValueError):
    """Raised when combining values from distinct quadratic fields."""


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@total_ordering
class ExactReal:
    """(a + b*sqrt(D))/c in canonical form.

    Canonical means: c > 0, gcd(a, b, c) = 1, and the irrational part is
    genuine -- if D is a perfect square (or b = 0) the value is folded into
    a plain rational with b = 0, D = 0.  Instances are immutable and
    hashable; equal values have identical component tuples.
    """

    __slots__ = ("a", "b", "c", "D")

    def __init__(self, a: int, b: int = 0, c: int = 1, D: int = 0):
        if c == 0:
            raise ZeroDivisionError("denominator c must be nonzero")
        if D < 0:
            raise ValueError("D must be non-negative")
        if b != 0 and _is_perfect_square(D):
            a, b, D = a + b * math.isqrt(D), 0, 0
        if b == 0:
            D = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("ExactReal is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "ExactReal":
        q = Fraction(q)
        return cls(q.numerator, 0, q.denominator, 0)

    @classmethod
    def sqrt_of(cls, D: int) -> "ExactReal":
        return cls(0, 1, 1, D)

    # -- predicates --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_irrational(self) -> bool:
        return self.b != 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    # -- field compatibility ----------------------------------------------

    def _join_field(self, other: "ExactReal") -> int:
        """Common D for self and other, or raise FieldMismatchError."""
        if self.b == 0:
            return other.D
        if other.b == 0:
            return self.D
        if self.D != other.D:
            raise FieldMismatchError(
                f"cannot combine sqrt({self.D}) with sqrt({other.D})"
            )
        return self.D

    @staticmethod
    def _coerce(x) -> "ExactReal":
        if isinstance(x, ExactReal):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactReal.from_fraction(x)
        return NotImplemented

    # -- arithmetic (closed in one field) ---------------------------------

    def __add__(self, other) -> "ExactReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._join_field(other)
        a = self.a * other.c + other.a * self.c
        b = self.b * other.c + other.b * self.c
        return ExactReal(a, b, self.c * other.c, D)

    __radd__ = __add__

    def __neg__(self) -> "ExactReal":
        return ExactReal(-self.a, -self.b, self.c, self.D)

    def __sub__(self, other) -> "ExactReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExactReal":
        return -(self - other)

    def __mul__(self, other) -> "ExactReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._join_field(other)
        a = self.a * other.a + self.b * other.b * D
        b = self.a * other.b + self.b * other.a
        return ExactReal(a, b, self.c * other.c, D)

    __rmul__ = __mul__

    def inverse(self) -> "ExactReal":
        """1/x via the conjugate: c*(a - b*sqrt(D)) / (a^2 - b^2 D)."""
        norm = self.a * self.a - self.b * self.b * self.D
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return ExactReal(self.a * self.c, -self.b * self.c, norm, self.D)

    def __truediv__(self, other) -> "ExactReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "ExactReal":
        return self._coerce(other) * self.inverse()

    def __abs__(self) -> "ExactReal":
        return -self if self.sign() < 0 else self

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Sign of (a + b*sqrt(D))/c, by integer case analysis.

        With c > 0 only the numerator matters.  When a and b agree in sign
        the answer is immediate; otherwise compare a^2 with b^2 D, which
        decides |a| vs |b|*sqrt(D).
        """
        a, b, D = self.a, self.b, self.D
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * D
        if a > 0:  # b < 0: sign of |a| - |b| sqrt(D)
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.c, self.D) == (other.a, other.b, other.c, other.D)

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.D))

    # -- certified floor ---------------------------------------------------

    def floor(self) -> int:
        """Exact floor.  Never ambiguous: irrational values miss the grid."""
        a, b, c, D = self.a, self.b, self.c, self.D
        if b == 0:
            return a // c
        # floor(b*sqrt(D)) via isqrt of b^2 D; D non-square so never exact.
        t = math.isqrt(b * b * D)
        fb = t if b > 0 else -t - 1
        q = (a + fb) // c
        # a + fb <= numerator < a + fb + 2, so q can be off by at most one.
        while (self - (q + 1)).sign() >= 0:
            q += 1
        while (self - q).sign() < 0:
            q -= 1
        return q

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.D)) / self.c

    # -- serialization: "(a+b*sqrt(D))/c" ---------------------------------

    def serialize(self) -> str:
        return f"({self.a}{self.b:+d}*sqrt({self.D}))/{self.c}"

    _PATTERN = re.compile(
        r"^\((-?\d+)([+-]\d+)\*sqrt\((\d+)\)\)/(\d+)$"
    )

    @classmethod
    def parse(cls, text: str) -> "ExactReal":
        m = cls._PATTERN.match(text.strip().replace(" ", ""))
        if m is None:
            raise ValueError(f"not an exact-real literal: {text!r}")
        a, b, D, c = (int(m.group(i)) for i in (1, 2, 3, 4))
        return cls(a, b, c, D)

    def __repr__(self) -> str:
        return f"ExactReal({self.a}, {self.b}, {self.c}, {self.D})"

    def __str__(self) -> str:
        return self.serialize()


def make(a: int, b: int, c: int, D: int) -> ExactReal:
    """Build a canonical value (a + b*sqrt(D))/c."""
    return ExactReal(a, b, c, D)


def is_irrational(x: ExactReal) -> bool:
    return x.is_irrational


def compare(x: ExactReal, y: ExactReal) -> int:
    """Exact trichotomy: -1, 0, or +1 as x <, =, > y."""
    return (x - y).sign()


def floor_scaled(x: ExactReal, m: int) -> int:
    """floor(m * x), exact.  For irrational x, m*x is never an integer."""
    if m <= 0:
        raise ValueError("m must be positive")
    return (x * m).floor()


def fractional_part(x: ExactReal) -> ExactReal:
    return x - x.floor()
