"""Exact arithmetic in real quadratic rings: numbers x + y*sqrt(d).

Rationals are plain ``fractions.Fraction``; a QuadRat carries a rational
part, a radical part and a small square-free discriminant d.  d = 1 means
the number is rational.  All operations are exact, values are immutable
and hashable, so equality of group matrices is decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


class DiscriminantMismatch(ValueError):
    """Raised when combining numbers from different quadratic rings."""


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _to_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QuadRat:
    """Element x + y*sqrt(d) with exact rational x, y."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 1):
        a = _to_rat(a)
        b = _to_rat(b)
        if not isinstance(d, int) or not is_squarefree(d):
            raise ValueError(f"discriminant must be a square-free positive integer, got {d!r}")
        if d == 1:
            a, b = a + b, Fraction(0)
        elif b == 0:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @classmethod
    def sqrt(cls, d: int) -> "QuadRat":
        return cls(0, 1, d)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadRat | None":
        if isinstance(other, QuadRat):
            if self.d == other.d or other.b == 0 or self.b == 0:
                return other
            raise DiscriminantMismatch(f"cannot mix sqrt({self.d}) with sqrt({other.d})")
        if isinstance(other, (int, Fraction)):
            return QuadRat(other)
        return None

    def _common_d(self, other: "QuadRat") -> int:
        return self.d if self.d != 1 else other.d

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a + o.a, self.b + o.b, self._common_d(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.a - o.a, self.b - o.b, self._common_d(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat(o.a - self.a, o.b - self.b, self._common_d(o))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadRat(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """N(x + y*sqrt(d)) = x^2 - d*y^2."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadRat(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = QuadRat(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integral(self) -> tuple[bool, bool]:
        """Componentwise integrality flags (rational part, radical part)."""
        return (self.a.denominator == 1, self.b.denominator == 1)

    def struct_sign(self) -> int:
        """Sign of the leading component: rational part, ties by radical part."""
        key = self.a if self.a != 0 else self.b
        return (key > 0) - (key < 0)

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    __float__ = to_float

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except DiscriminantMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d or o.b == 0)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        mag = abs(self.b)
        if mag == 1:
            rad = f"√{self.d}"
        elif mag.denominator == 1:
            rad = f"{mag}√{self.d}"
        else:
            rad = f"({mag})√{self.d}"
        if self.a == 0:
            return rad if self.b > 0 else "-" + rad
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {rad}"

    def __repr__(self) -> str:
        return f"QuadRat({self.a!r}, {self.b!r}, d={self.d})"


QR_ZERO = QuadRat(0)
QR_ONE = QuadRat(1)
