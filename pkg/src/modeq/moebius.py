"""PSL(2) matrices over quadratic rings and the triangle-group contexts.

Matrices are kept projectively (A and -A identified) with determinant 1.
Two families are wired in: the classical level-2 congruence group (the
``q = inf`` context, discriminant 1) and the index-2 even subgroup of the
hexagonal Hecke group (``q = 3``, discriminant 3).  Membership in the base
group, its dilation conjugate and their intersection is decided exactly
from integrality and congruence conditions on the entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .qrat import QuadRat

INF = math.inf


class UnsupportedOrder(ValueError):
    """Raised for group orders q outside {3, inf}."""


def _qr(x) -> QuadRat:
    return x if isinstance(x, QuadRat) else QuadRat(x)


class MoebiusMat:
    """2x2 determinant-1 matrix modulo sign, entries in a quadratic ring."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, check_det: bool = True):
        a, b, c, d = _qr(a), _qr(b), _qr(c), _qr(d)
        # canonical sign: first nonzero entry positive (rational part first)
        for e in (a, b, c, d):
            s = e.struct_sign()
            if s < 0:
                a, b, c, d = -a, -b, -c, -d
            if s != 0:
                break
        if check_det and a * d - b * c != 1:
            raise ValueError(f"determinant is not 1: [{a}, {b}; {c}, {d}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("MoebiusMat is immutable")

    @classmethod
    def identity(cls) -> "MoebiusMat":
        return cls(1, 0, 0, 1)

    def entries(self) -> tuple[QuadRat, QuadRat, QuadRat, QuadRat]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "MoebiusMat") -> "MoebiusMat":
        if not isinstance(other, MoebiusMat):
            return NotImplemented
        return MoebiusMat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            check_det=False,
        )

    def inverse(self) -> "MoebiusMat":
        return MoebiusMat(self.d, -self.b, -self.c, self.a, check_det=False)

    def is_identity(self) -> bool:
        return self == MoebiusMat.identity()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusMat):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}; {self.c}, {self.d}]"

    __repr__ = __str__


S_MAT = MoebiusMat(0, -1, 1, 0)


def hecke_lambda(k) -> QuadRat:
    """2*cos(pi/k) as an exact quadratic number, for k in {2, 3, 4, 6, inf}."""
    table = {
        2: QuadRat(0),
        3: QuadRat(1),
        4: QuadRat.sqrt(2),
        6: QuadRat.sqrt(3),
        INF: QuadRat(2),
    }
    if k not in table:
        raise UnsupportedOrder(f"no exact value wired in for 2*cos(pi/{k})")
    return table[k]


def translation(lam) -> MoebiusMat:
    return MoebiusMat(1, lam, 0, 1)


def elliptic_u(k) -> MoebiusMat:
    """Order-k rotation T_k*S with fixed point exp(i*pi/k)."""
    return translation(hecke_lambda(k)) * S_MAT


@dataclass(frozen=True)
class GroupContext:
    """Generators and membership rules for one (q, p) configuration."""

    q: float  # 3 or math.inf
    p: int
    d: int
    T: MoebiusMat = field(compare=False)
    V: MoebiusMat = field(compare=False)

    @property
    def q_label(self) -> str:
        return "inf" if self.q == INF else str(int(self.q))

    @property
    def label(self) -> str:
        return f"{self.q_label}-{self.p}"

    @property
    def hgf_a(self) -> Fraction:
        """Hypergeometric parameter a = (q-1)/(2q), with a = 1/2 at q = inf."""
        if self.q == INF:
            return Fraction(1, 2)
        q = int(self.q)
        return Fraction(q - 1, 2 * q)

    def generators(self) -> dict[str, MoebiusMat]:
        return {
            "T": self.T,
            "V": self.V,
            "T^-1": self.T.inverse(),
            "V^-1": self.V.inverse(),
        }

    def conjugated_generators(self) -> dict[str, MoebiusMat]:
        return {name: conj_into_subgroup(g, self.p) for name, g in self.generators().items()}

    @property
    def W(self) -> MoebiusMat:
        """Parabolic fixing 0, equal to V^-1 * T projectively."""
        return self.V.inverse() * self.T


def parse_q(q) -> float:
    if q in (INF, "inf", "infinity", "oo"):
        return INF
    qi = int(q)
    if qi == 3:
        return 3.0
    raise UnsupportedOrder(f"order q={q!r} not supported (use 3 or inf)")


def context_for(q, p: int) -> GroupContext:
    """Build the group context for order q in {3, inf} and degree p >= 2."""
    qv = parse_q(q)
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"degree p must be an integer >= 2, got {p!r}")
    if qv == INF:
        T = MoebiusMat(1, 2, 0, 1)
        V = MoebiusMat(3, -2, 2, -1)
        return GroupContext(q=INF, p=p, d=1, T=T, V=V)
    r3 = QuadRat.sqrt(3)
    T = MoebiusMat(1, r3, 0, 1)
    V = MoebiusMat(2, -r3, r3, -1)
    return GroupContext(q=3.0, p=p, d=3, T=T, V=V)


# -- dilation conjugation ---------------------------------------------------
#
# The dilation tau -> p*tau conjugates (a, b; c, d) to (a, p*b; c/p, d); the
# inverse direction gives (a, b/p; p*c, d).  Working with the scaled entries
# keeps everything inside Q(sqrt(d)) -- sqrt(p) never appears.


def conj_by_scaling(A: MoebiusMat, p: int) -> MoebiusMat:
    """M_p * A * M_p^-1, computed entrywise."""
    return MoebiusMat(A.a, A.b * p, A.c / p, A.d, check_det=False)


def conj_into_subgroup(A: MoebiusMat, p: int) -> MoebiusMat:
    """M_p^-1 * A * M_p, computed entrywise."""
    return MoebiusMat(A.a, A.b / p, A.c * p, A.d, check_det=False)


# -- membership -------------------------------------------------------------


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def in_G(ctx: GroupContext, A: MoebiusMat) -> bool:
    """Exact membership in the base group of the context."""
    a, b, c, d = A.entries()
    if ctx.q == INF:
        if not all(e.is_rational() for e in (a, b, c, d)):
            return False
        if not all(_is_int(e.a) for e in (a, b, c, d)):
            return False
        return (
            a.a.numerator % 2 == 1
            and d.a.numerator % 2 == 1
            and b.a.numerator % 2 == 0
            and c.a.numerator % 2 == 0
        )
    # q = 3: shape (m, n*sqrt3; k*sqrt3, l) over the integers; the unit
    # determinant condition m*l - 3*n*k = 1 is already enforced projectively.
    if not (a.is_rational() and d.is_rational()):
        return False
    if not (b.a == 0 and c.a == 0):
        return False
    return all(_is_int(x) for x in (a.a, d.a, b.b, c.b))


def in_G_conj(ctx: GroupContext, A: MoebiusMat) -> bool:
    """Membership in the dilation conjugate of the base group."""
    return in_G(ctx, conj_by_scaling(A, ctx.p))


def in_K(ctx: GroupContext, A: MoebiusMat) -> bool:
    """Membership in the intersection subgroup."""
    return in_G(ctx, A) and in_G_conj(ctx, A)


# -- word evaluation --------------------------------------------------------

_BASE_LETTERS = {"T", "V", "S", "W", "I"}


def word_to_matrix(ctx: GroupContext, word: str) -> MoebiusMat:
    """Evaluate a word like "V^-1 T V" or "S V" in the context generators.

    Tokens are separated by whitespace; each is a letter in {T, V, S, W, I}
    with an optional integer exponent after "^".
    """
    letters = {"T": ctx.T, "V": ctx.V, "S": S_MAT, "W": ctx.W, "I": MoebiusMat.identity()}
    out = MoebiusMat.identity()
    for token in word.split():
        name, _, exp = token.partition("^")
        if name not in _BASE_LETTERS:
            raise ValueError(f"unknown generator {name!r} in word {word!r}")
        k = int(exp) if exp else 1
        base = letters[name]
        if k < 0:
            base, k = base.inverse(), -k
        for _ in range(k):
            out = out * base
    return out
