"""Exact elimination of the curve parameter via Sylvester resultants.

Given the pair of degree-n rational maps (alpha, beta) = (phi(z), psi(z)),
the relation polynomial P(x, y) is the primitive part of
Res_z(num_phi - x*den_phi, num_psi - y*den_psi), computed over Z[x, y] by
fraction-free (Bareiss) elimination of the Sylvester matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polynomials import Poly, RationalMap

Monomial = tuple[int, int]  # (x exponent, y exponent)


class DegenerateInput(ValueError):
    """Resultant input has z-degree below 1 or a vanishing leading row."""


class BivarPoly:
    """Bivariate integer polynomial as a map (i, j) -> coefficient of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                c = int(c)
                if c:
                    clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __add__(self, other):
        o = other if isinstance(other, BivarPoly) else BivarPoly.const(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = other if isinstance(other, BivarPoly) else BivarPoly.const(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BivarPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BivarPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def coeff_of_y(self, j: int) -> Poly:
        """Coefficient of y^j as a polynomial in x."""
        out = [0] * (self.deg_x + 1)
        for (i, jj), c in self.terms.items():
            if jj == j:
                out[i] = c
        return Poly(out)

    def coeff_of_x(self, i: int) -> Poly:
        out = [0] * (self.deg_y + 1)
        for (ii, j), c in self.terms.items():
            if ii == i:
                out[j] = c
        return Poly(out)

    def swap_xy(self) -> "BivarPoly":
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def normalized(self) -> "BivarPoly":
        """Primitive part with a fixed sign: the leading x-coefficient of the
        top y-power is positive."""
        if self.is_zero():
            return self
        c = self.content()
        lead = self.coeff_of_y(self.deg_y)
        if lead.leading() < 0:
            c = -c
        return BivarPoly({m: v // c for m, v in self.terms.items()})

    def evaluate(self, x, y):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for (i, j), c in self.terms.items():
            acc += c * x**i * y**j
        return acc

    def derivative_y(self) -> "BivarPoly":
        return BivarPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j > 0})

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(i, j, coeff) sorted by descending y, then descending x."""
        return [(i, j, self.terms[(i, j)]) for (i, j) in sorted(self.terms, key=lambda m: (-m[1], -m[0]))]

    # lex leading term (x before y), used by exact division
    def _lead(self) -> tuple[Monomial, int]:
        m = max(self.terms)
        return m, self.terms[m]

    def divexact(self, other: "BivarPoly") -> "BivarPoly":
        """Exact quotient; raises ValueError when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        quot: dict[Monomial, int] = {}
        (gi, gj), gc = other._lead()
        while rem:
            (fi, fj) = max(rem)
            fc = rem[(fi, fj)]
            qi, qj = fi - gi, fj - gj
            if qi < 0 or qj < 0 or fc % gc != 0:
                raise ValueError("bivariate division is not exact")
            qc = fc // gc
            quot[(qi, qj)] = qc
            for (i, j), c in other.terms.items():
                m = (i + qi, j + qj)
                nv = rem.get(m, 0) - c * qc
                if nv:
                    rem[m] = nv
                else:
                    rem.pop(m, None)
        return BivarPoly(quot)

    def __str__(self) -> str:
        return format_bivar(self)

    __repr__ = __str__


def format_bivar(p: BivarPoly, x: str = "x", y: str = "y", power: str = "^") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, j, c in p.sorted_terms():
        mono = []
        if i:
            mono.append(x if i == 1 else f"{x}{power}{i}")
        if j:
            mono.append(y if j == 1 else f"{y}{power}{j}")
        mag = abs(c)
        if mag != 1 or not mono:
            mono.insert(0, str(mag))
        term = "*".join(mono) if power != "^" else " ".join(mono)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def bivar_from_xpoly(p: Poly) -> BivarPoly:
    return BivarPoly({(i, 0): c for i, c in enumerate(p.coeffs)})


def bivar_from_ypoly(p: Poly) -> BivarPoly:
    return BivarPoly({(0, j): c for j, c in enumerate(p.coeffs)})


# -- fraction-free determinant ------------------------------------------------


def bareiss_determinant(matrix: list[list[BivarPoly]]) -> BivarPoly:
    """Determinant over Z[x, y] by fraction-free Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return BivarPoly.const(1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = BivarPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return BivarPoly()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = BivarPoly()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_z(f: list[BivarPoly], g: list[BivarPoly]) -> BivarPoly:
    """Resultant in z of two polynomials given by ascending coefficient lists.

    Coefficients live in Z[x, y]; the leading coefficients must be nonzero.
    """
    while f and f[-1].is_zero():
        f = f[:-1]
    while g and g[-1].is_zero():
        g = g[:-1]
    df, dg = len(f) - 1, len(g) - 1
    if df < 1 or dg < 1:
        raise DegenerateInput("resultant needs z-degree >= 1 on both sides")
    size = df + dg
    rows = []
    fd = list(reversed(f))  # descending
    gd = list(reversed(g))
    for r in range(dg):
        rows.append([BivarPoly()] * r + fd + [BivarPoly()] * (size - df - 1 - r))
    for r in range(df):
        rows.append([BivarPoly()] * r + gd + [BivarPoly()] * (size - dg - 1 - r))
    return bareiss_determinant(rows)


# -- elimination --------------------------------------------------------------


@dataclass(frozen=True)
class ElimInput:
    phi: RationalMap
    psi: RationalMap
    expected_degree: int


def _pencil(m: RationalMap, variable: BivarPoly) -> list[BivarPoly]:
    """Coefficients in z of num(z) - variable * den(z)."""
    top = max(m.num.degree, m.den.degree)
    out = []
    for i in range(top + 1):
        out.append(BivarPoly.const(m.num[i]) - variable * m.den[i])
    return out


def eliminate(inp: ElimInput) -> BivarPoly:
    """Relation polynomial between the values of phi and psi.

    Normalized to primitive coefficients with the sign convention of
    BivarPoly.normalized; its bidegree must match the expected map degree.
    """
    n = inp.expected_degree
    if inp.phi.degree != n or inp.psi.degree != n:
        raise DegenerateInput(
            f"map degrees ({inp.phi.degree}, {inp.psi.degree}) do not match expected {n}"
        )
    f = _pencil(inp.phi, BivarPoly.x())
    g = _pencil(inp.psi, BivarPoly.y())
    res = resultant_z(f, g).normalized()
    if res.deg_x != n or res.deg_y != n:
        raise DegenerateInput(
            f"eliminated polynomial has bidegree ({res.deg_x}, {res.deg_y}), expected ({n}, {n})"
        )
    return res


def poly_check(P: BivarPoly, phi: RationalMap, psi: RationalMap) -> bool:
    """Fully symbolic check that P(phi(z), psi(z)) vanishes identically."""
    nx, ny = P.deg_x, P.deg_y
    total = Poly()
    for (i, j), c in P.terms.items():
        term = (
            c
            * phi.num**i
            * phi.den ** (nx - i)
            * psi.num**j
            * psi.den ** (ny - j)
        )
        total = total + term
    return total.is_zero()


@dataclass(frozen=True)
class DegreeReport:
    deg_x: int
    deg_y: int
    content: int
    squarefree_in_y: bool
    lead_y_coeff_nonzero: bool
    lead_x_coeff_nonzero: bool

    def to_json_dict(self) -> dict:
        return {
            "deg_x": self.deg_x,
            "deg_y": self.deg_y,
            "content": self.content,
            "squarefree_in_y": self.squarefree_in_y,
            "lead_y_coeff_nonzero": self.lead_y_coeff_nonzero,
            "lead_x_coeff_nonzero": self.lead_x_coeff_nonzero,
        }


def square_free_and_degree_report(P: BivarPoly) -> DegreeReport:
    """Degrees, content, y-square-freeness and leading-coefficient checks."""
    ny = P.deg_y
    f = [bivar_from_xpoly(P.coeff_of_y(j)) for j in range(ny + 1)]
    dP = P.derivative_y()
    g = [bivar_from_xpoly(dP.coeff_of_y(j)) for j in range(max(dP.deg_y, 0) + 1)]
    try:
        disc = resultant_z(f, g)
        squarefree = not disc.is_zero()
    except DegenerateInput:
        squarefree = False
    return DegreeReport(
        deg_x=P.deg_x,
        deg_y=ny,
        content=P.content(),
        squarefree_in_y=squarefree,
        lead_y_coeff_nonzero=not P.coeff_of_y(ny).is_zero(),
        lead_x_coeff_nonzero=not P.coeff_of_x(P.deg_x).is_zero(),
    )
