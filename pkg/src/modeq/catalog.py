"""Catalog of the four solved configurations and their verification.

Each case bundles the exact rational parametrization (alpha, beta) =
(phi(z), psi(z)) of the solution curve, the involution omega with
psi = 1 - phi(omega), the relation polynomial, the expected subgroup
index, the side-pairing generator fixtures of the intersection group, and
the radical identity the case satisfies on (0, 1):

  inf-2   sqrt-ratio    beta = ((1-sqrt(1-alpha))/(1+sqrt(1-alpha)))^2
  inf-3   quartic-sum   (alpha*beta)^(1/4) + ((1-alpha)(1-beta))^(1/4) = 1
  3-2     cube-sum      (alpha*beta)^(1/3) + ((1-alpha)(1-beta))^(1/3) = 1
  3-3     cube-ratio    (1-alpha)^(1/3) = (1-beta^(1/3))/(1+2*beta^(1/3))

For inf-3 the quartic-sum identity also has a classical polynomial form in
eighth-root variables; see JACOBI_STYLE_QUARTIC below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cosets import GeneratorFixture
from .elimination import BivarPoly
from .hgf import HGFParams, multiplier
from .moebius import INF, MoebiusMat, context_for
from .polynomials import Poly, RationalMap, ramification_profile
from .qrat import QuadRat

RADICAL_TOL = 1e-12
MULTIPLIER_REL_TOL = 1e-9


@dataclass(frozen=True)
class CaseSpec:
    q: float  # 3 or math.inf
    p: int
    phi: RationalMap
    psi: RationalMap
    omega: RationalMap
    index: int
    poly: BivarPoly
    radical: str
    pairings: tuple[GeneratorFixture, ...]

    @property
    def label(self) -> str:
        return f"{'inf' if self.q == INF else int(self.q)}-{self.p}"

    @property
    def hgf_a(self) -> Fraction:
        return Fraction(1, 2) if self.q == INF else Fraction(int(self.q) - 1, 2 * int(self.q))

    def context(self):
        return context_for("inf" if self.q == INF else int(self.q), self.p)


def _rmap(num, den=(1,)) -> RationalMap:
    return RationalMap(Poly(num), Poly(den))


X = BivarPoly.x()
Y = BivarPoly.y()


def _c(v: int) -> BivarPoly:
    return BivarPoly.const(v)


_R3 = QuadRat.sqrt(3)


def _fixtures_inf_2() -> tuple[GeneratorFixture, ...]:
    return (
        GeneratorFixture("A1", "T", MoebiusMat(1, 2, 0, 1)),
        GeneratorFixture("A2", "V^2", MoebiusMat(5, -4, 4, -3)),
        GeneratorFixture("A3", "V^-1 T V", MoebiusMat(-3, 2, -8, 5)),
    )


def _fixtures_inf_3() -> tuple[GeneratorFixture, ...]:
    return (
        GeneratorFixture("A1", "T", MoebiusMat(1, 2, 0, 1)),
        GeneratorFixture("A2", "V^-1 T^2 V^-1", MoebiusMat(5, -8, 12, -19)),
        GeneratorFixture("A3", "V^-1 T^-1 V^-1", MoebiusMat(-7, 10, -12, 17)),
        GeneratorFixture("A4", "V^-3", MoebiusMat(-5, 6, -6, 7)),
        GeneratorFixture("A5", "V^-1 T V^-1 T^-1 V", MoebiusMat(-5, 2, -18, 7)),
    )


def _fixtures_3_3() -> tuple[GeneratorFixture, ...]:
    return (
        GeneratorFixture("A1", "T", MoebiusMat(1, _R3, 0, 1)),
        GeneratorFixture("A2", "V T V^-1", MoebiusMat(-5, 4 * _R3, -3 * _R3, 7)),
        GeneratorFixture("A3", "V^-1 T V", MoebiusMat(-2, _R3, -3 * _R3, 4)),
    )


def _fixtures_3_2() -> tuple[GeneratorFixture, ...]:
    return (
        GeneratorFixture("A1", "T", MoebiusMat(1, _R3, 0, 1)),
        GeneratorFixture("A2", "V^2 T V^2", MoebiusMat(1, -_R3, 2 * _R3, -5)),
        GeneratorFixture("A3", "V^-1 S^-1 T S V", MoebiusMat(5, -3 * _R3, 4 * _R3, -7)),
    )


# relation polynomials, written in their factored display forms

POLY_INF_2 = X**2 * Y**2 - 2 * (X**2 - 8 * X + _c(8)) * Y + X**2

POLY_INF_3 = (
    X**4
    + Y**4
    - 256 * (X**3 * Y**3 + X * Y)
    + 384 * (X**3 * Y**2 + X**2 * Y**3 + X**2 * Y + X * Y**2)
    - 132 * (X**3 * Y + X * Y**3)
    - 762 * X**2 * Y**2
)

# Classical third-order relation in eighth-root variables u = x^(1/8),
# v = y^(1/8): POLY_INF_3 pulled back along (x, y) = (u^8, v^8) is exactly
# divisible by this quartic (and by its mirror, by symmetry).
JACOBI_STYLE_QUARTIC = Y**4 + 2 * X**3 * Y**3 - 2 * X * Y - X**4

POLY_3_3 = (
    (8 * X - _c(9)) ** 3 * Y**3
    + 3 * (64 * X**3 + 504 * X**2 - 1053 * X + _c(486)) * Y**2
    + 3 * (8 * X**3 - 171 * X**2 + 405 * X - _c(243)) * Y
    + X**3
)

POLY_3_2 = (
    (2 * X - _c(1)) ** 3 * Y**3
    - 3 * X * (4 * X**2 - 13 * X + _c(10)) * Y**2
    + 3 * X * (2 * X**2 - 10 * X + _c(9)) * Y
    - X**3
)


CASES: dict[str, CaseSpec] = {}


def _register(case: CaseSpec):
    CASES[case.label] = case


_register(
    CaseSpec(
        q=INF,
        p=2,
        phi=_rmap((1, 0, -1)),  # 1 - z^2
        psi=_rmap((1, -2, 1), (1, 2, 1)),  # (z-1)^2/(z+1)^2
        omega=_rmap((1, -1), (1, 1)),  # (1-z)/(1+z)
        index=2,
        poly=POLY_INF_2,
        radical="sqrt-ratio",
        pairings=_fixtures_inf_2(),
    )
)

_register(
    CaseSpec(
        q=INF,
        p=3,
        phi=_rmap((0, 8, 12, 6, 1), (1, 6, 12, 8)),  # z(z+2)^3/(2z+1)^3
        psi=_rmap((0, 0, 0, 2, 1), (1, 2)),  # z^3(z+2)/(2z+1)
        omega=_rmap((1, -1), (1, 2)),  # (1-z)/(1+2z)
        index=4,
        poly=POLY_INF_3,
        radical="quartic-sum",
        pairings=_fixtures_inf_3(),
    )
)

_register(
    CaseSpec(
        q=3,
        p=3,
        phi=_rmap((1, 0, 0, -1)),  # 1 - z^3
        psi=_rmap((1, -3, 3, -1), (1, 6, 12, 8)),  # (1-z)^3/(1+2z)^3
        omega=_rmap((1, -1), (1, 2)),
        index=3,
        poly=POLY_3_3,
        radical="cube-ratio",
        pairings=_fixtures_3_3(),
    )
)

_register(
    CaseSpec(
        q=3,
        p=2,
        phi=_rmap((0, 9, 6, 1), (2, 6, 6, 2)),  # z(z+3)^2/(2(z+1)^3)
        psi=_rmap((0, 0, 3, 1), (4,)),  # z^2(z+3)/4
        omega=_rmap((1, -1), (1, 1)),
        index=3,
        poly=POLY_3_2,
        radical="cube-sum",
        pairings=_fixtures_3_2(),
    )
)

CASE_ORDER = ("inf-2", "inf-3", "3-3", "3-2")


def get_case(q, p: int) -> CaseSpec:
    label = f"{'inf' if q in (INF, 'inf') else int(q)}-{p}"
    try:
        return CASES[label]
    except KeyError:
        raise KeyError(f"no catalog case {label!r}; available: {sorted(CASES)}") from None


# -- symbolic structure checks ------------------------------------------------


@dataclass(frozen=True)
class OmegaReport:
    involution_ok: bool
    complement_ok: bool

    @property
    def ok(self) -> bool:
        return self.involution_ok and self.complement_ok


def check_omega(case: CaseSpec) -> OmegaReport:
    """Exact rational-function identities omega(omega(z)) = z and 1 - phi(omega) = psi."""
    oo = case.omega.compose(case.omega)
    involution_ok = oo.num == Poly.z() and oo.den == Poly.const(1)
    complement = case.phi.compose(case.omega).one_minus()
    complement_ok = complement == case.psi
    return OmegaReport(involution_ok, complement_ok)


def ramification(case: CaseSpec) -> dict[str, tuple[int, ...]]:
    """Branching profile of phi over the values 0, 1, inf."""
    return ramification_profile(case.phi)


# -- radical identities -------------------------------------------------------


def radical_residual(case: CaseSpec, alpha: float, one_m_alpha: float, beta: float, one_m_beta: float) -> float:
    """Deviation of the case's radical identity, all inputs already floats."""
    if case.radical == "sqrt-ratio":
        s = math.sqrt(one_m_alpha)
        return abs(beta - ((1.0 - s) / (1.0 + s)) ** 2)
    if case.radical == "quartic-sum":
        return abs((alpha * beta) ** 0.25 + (one_m_alpha * one_m_beta) ** 0.25 - 1.0)
    if case.radical == "cube-sum":
        return abs((alpha * beta) ** (1.0 / 3.0) + (one_m_alpha * one_m_beta) ** (1.0 / 3.0) - 1.0)
    if case.radical == "cube-ratio":
        cb = beta ** (1.0 / 3.0)
        return abs(one_m_alpha ** (1.0 / 3.0) - (1.0 - cb) / (1.0 + 2.0 * cb))
    raise ValueError(f"unknown radical tag {case.radical!r}")


def fraction_cbrt(x: Fraction) -> Fraction | None:
    """Exact rational cube root, or None if x is not a perfect cube."""
    num = round(abs(x.numerator) ** (1 / 3))
    den = round(x.denominator ** (1 / 3))
    for n in (num - 1, num, num + 1):
        for d in (den - 1, den, den + 1):
            if d > 0 and Fraction((-n if x < 0 else n), d) ** 3 == x:
                return Fraction((-n if x < 0 else n), d)
    return None


# -- numeric verification -----------------------------------------------------


@dataclass(frozen=True)
class SampleResult:
    z: Fraction
    alpha: Fraction
    beta: Fraction
    multiplier_rel_residual: float
    radical_residual: float


@dataclass(frozen=True)
class CaseNumericReport:
    label: str
    samples: tuple[SampleResult, ...]
    max_multiplier_rel_residual: float
    max_radical_residual: float
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_case_numeric(case: CaseSpec, samples: int = 97) -> CaseNumericReport:
    """Check the multiplier relation and the radical identity on a z-grid.

    Samples z = k/(samples+1); all map values and complements are computed
    in exact rational arithmetic before conversion to float.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    params = HGFParams(case.hgf_a)
    results = []
    failures = []
    for k in range(1, samples + 1):
        z = Fraction(k, samples + 1)
        alpha = case.phi.evaluate(z)
        beta = case.psi.evaluate(z)
        m_alpha = multiplier(params, alpha)
        m_beta = multiplier(params, beta)
        target = case.p * m_alpha
        rel = abs(m_beta - target) / target
        rad = radical_residual(case, float(alpha), float(1 - alpha), float(beta), float(1 - beta))
        results.append(SampleResult(z, alpha, beta, rel, rad))
        if rel > MULTIPLIER_REL_TOL:
            failures.append(f"z={z}: multiplier relative residual {rel:.3e}")
        if rad > RADICAL_TOL:
            failures.append(f"z={z}: radical residual {rad:.3e}")
    return CaseNumericReport(
        label=case.label,
        samples=tuple(results),
        max_multiplier_rel_residual=max(r.multiplier_rel_residual for r in results),
        max_radical_residual=max(r.radical_residual for r in results),
        failures=tuple(failures),
    )
