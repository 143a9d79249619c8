"""Univariate integer polynomials and exact rational maps.

Polynomials live in Z[z] as tuples of coefficients in ascending order.
Everything needed downstream is here: arithmetic, exact evaluation, gcd,
Yun square-free decomposition, rational root extraction, and a RationalMap
type (reduced quotient of two integer polynomials) with exact composition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class PoleError(ZeroDivisionError):
    """Exact evaluation hit a pole."""


class Poly:
    """Dense integer polynomial; coeffs[i] multiplies z**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def z(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        o = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "Poly":
        """Divide out the content; normalize the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return Poly([c // g for c in self.coeffs])

    def evaluate(self, z):
        """Horner evaluation; exact for Fraction input, float for float."""
        acc = Fraction(0) if isinstance(z, (Fraction, int)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def shift_mul_z(self, k: int) -> "Poly":
        return Poly((0,) * k + self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "z" if mag == 1 else f"{mag}z"
            else:
                term = f"z^{i}" if mag == 1 else f"{mag}z^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    __repr__ = __str__


def poly_from_roots(*roots: int) -> Poly:
    out = Poly.const(1)
    for r in roots:
        out = out * Poly((-r, 1))
    return out


# -- gcd and factor structure over Q, kept primitive over Z -----------------


def _frac_divmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) < len(g):
            break
        k = len(f) - len(g)
        coef = f[-1] / g[-1]
        q[k] = coef
        for i in range(len(g)):
            f[k + i] -= coef * g[i]
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return q, f


def _to_frac(p: Poly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_frac(cs: list[Fraction]) -> Poly:
    if not cs:
        return Poly()
    den = math.lcm(*(c.denominator for c in cs))
    return Poly([int(c * den) for c in cs]).primitive()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[z] (computed over Q, then normalized)."""
    fa, fb = _to_frac(a), _to_frac(b)
    while fb:
        _, r = _frac_divmod(fa, fb)
        fa, fb = fb, r
    return _from_frac(fa)


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a / b; raises if the division leaves a remainder."""
    q, r = _frac_divmod(_to_frac(a), _to_frac(b))
    if r:
        raise ValueError("polynomial division is not exact")
    den = math.lcm(*(c.denominator for c in q)) if q else 1
    if den != 1:
        raise ValueError("polynomial quotient is not integral")
    return Poly([int(c) for c in q])


def squarefree_decomposition(f: Poly) -> list[tuple[int, Poly]]:
    """Yun decomposition: list of (multiplicity, primitive square-free factor).

    Stays in Z[z] throughout; primitive factors divide exactly.
    """
    if f.degree < 1:
        return []
    f = f.primitive()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(1, f)]
    c = poly_divexact(f, g)
    d = poly_divexact(f.derivative(), g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((i, a))
            c = poly_divexact(c, a)
        d = poly_divexact(d, a) - c.derivative()
        i += 1
    return out


def rational_roots(f: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """All rational roots with multiplicities, plus the rootless remainder."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    rest = f.primitive()
    # strip powers of z first
    mult0 = 0
    while rest.coeffs and rest.coeffs[0] == 0:
        rest = Poly(rest.coeffs[1:])
        mult0 += 1
    roots: list[tuple[Fraction, int]] = []
    if mult0:
        roots.append((Fraction(0), mult0))
    if rest.degree >= 1:
        candidates = set()
        a0, an = abs(rest.coeffs[0]), abs(rest.leading())
        for p in _divisors(a0):
            for q in _divisors(an):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for r in sorted(candidates):
            m = 0
            while rest.degree >= 1 and rest.evaluate(r) == 0:
                rest = poly_divexact(rest, Poly((-r.numerator, r.denominator)))
                m += 1
            if m:
                roots.append((r, m))
    return roots, rest


def _divisors(n: int) -> list[int]:
    out = []
    for k in range(1, int(math.isqrt(n)) + 1):
        if n % k == 0:
            out.append(k)
            out.append(n // k)
    return sorted(set(out))


# -- rational maps ----------------------------------------------------------


@dataclass(frozen=True)
class RationalMap:
    """Reduced quotient num/den of two integer polynomials."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = poly_divexact(num, g), poly_divexact(den, g)
        if not num.is_zero():
            c = math.gcd(num.content(), den.content())
        else:
            c = den.content()
        if den.leading() < 0:
            c = -c
        if c != 1:
            num = Poly([x // c for x in num.coeffs])
            den = Poly([x // c for x in den.coeffs])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalMap":
        return cls(p, Poly.const(1))

    @property
    def degree(self) -> int:
        """Degree as a map of the sphere: max of numerator/denominator degrees."""
        return max(self.num.degree, self.den.degree)

    def evaluate(self, z):
        """Exact Fraction evaluation (raising PoleError) or float evaluation."""
        dv = self.den.evaluate(z)
        if isinstance(z, (Fraction, int)) and dv == 0:
            raise PoleError(f"pole at z = {z}")
        return self.num.evaluate(z) / dv

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """Exact composition self(inner(z))."""
        u, v = inner.num, inner.den
        m = self.degree
        num = Poly()
        den = Poly()
        for i in range(m + 1):
            w = (u**i) * (v ** (m - i))
            num = num + self.num[i] * w
            den = den + self.den[i] * w
        return RationalMap(num, den)

    def one_minus(self) -> "RationalMap":
        return RationalMap(self.den - self.num, self.den)

    def __str__(self) -> str:
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def eval_map(m: RationalMap, z):
    """Evaluate a rational map exactly (Fraction) or in floating point."""
    return m.evaluate(z)


def map_ramification(m: RationalMap) -> dict[str, list[tuple[int, str]]]:
    """Branching data of the map over the values 0, 1 and inf.

    For each value, a list of (multiplicity, point) pairs; points are exact
    rationals, "inf", or "roots of <poly>" for irrational preimages.
    """
    n = m.degree
    out: dict[str, list[tuple[int, str]]] = {}
    targets = {
        "0": m.num,
        "1": m.num - m.den,
        "inf": m.den,
    }
    for value, f in targets.items():
        entries: list[tuple[int, str]] = []
        if f.is_zero():
            raise ValueError("map is constant")
        roots, rest = rational_roots(f)
        for r, mult in roots:
            entries.append((mult, str(r)))
        if rest.degree >= 1:
            for mult, factor in squarefree_decomposition(rest):
                for _ in range(factor.degree):
                    entries.append((mult, f"root of {factor}"))
        if f.degree < n:
            entries.append((n - f.degree, "inf"))
        entries.sort(key=lambda t: (-t[0], t[1]))
        out[value] = entries
    return out


def ramification_profile(m: RationalMap) -> dict[str, tuple[int, ...]]:
    """Sorted multiplicity multisets of map_ramification."""
    return {
        value: tuple(sorted((mult for mult, _ in entries), reverse=True))
        for value, entries in map_ramification(m).items()
    }
