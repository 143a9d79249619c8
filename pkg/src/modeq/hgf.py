"""Zero-balanced Gauss hypergeometric evaluation on (0, 1).

Evaluates F_a(x) = 2F1(a, 1-a; 1; x) in binary64: direct series for
x <= 1/2, logarithmic connection formula in powers of 1-x beyond. The
parameter pair (a, 1-a; 1) is zero balanced, so the continuation carries
log(1-x) and digamma terms with prefactor sin(pi*a)/pi.  On top of F_a sit
the multiplier ratio m_a(x) = F_a(1-x)/F_a(x), the complete elliptic
integral K(r) and the ring-modulus function mu(r).

When x is given as a Fraction the complement 1-x is formed exactly before
any float conversion, which keeps the multiplier fully accurate near the
endpoints of (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NonConvergence(ArithmeticError):
    """Series did not meet the tolerance within the term budget."""


@dataclass(frozen=True)
class HGFParams:
    """Evaluation parameters: a in (0, 1/2], series tolerance, term cap."""

    a: Fraction
    eps: float = 1e-15
    max_terms: int = 800

    def __post_init__(self):
        if not (0 < self.a <= Fraction(1, 2)):
            raise ValueError(f"parameter a must lie in (0, 1/2], got {self.a}")
        if self.eps < 2.3e-16:
            raise ValueError("series tolerance below machine epsilon")

    @classmethod
    def for_order(cls, q, **kw) -> "HGFParams":
        """Parameters for the group of order q: a = (q-1)/(2q), a = 1/2 at q = inf."""
        if q == math.inf or q in ("inf", "infinity"):
            return cls(Fraction(1, 2), **kw)
        q = int(q)
        if q < 2:
            raise ValueError("order q must be >= 2 or inf")
        return cls(Fraction(q - 1, 2 * q), **kw)

    @property
    def order_q(self) -> float:
        """q = 1/(1 - 2a); inf when a = 1/2."""
        if self.a == Fraction(1, 2):
            return math.inf
        return float(1 / (1 - 2 * self.a))


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    branch: str  # "direct-series" or "log-connection"


def digamma(x: float) -> float:
    """Digamma for x > 0: shift upward by recurrence, then the asymptotic series."""
    if x <= 0:
        raise ValueError("digamma implemented for positive arguments only")
    acc = 0.0
    while x < 16.0:
        acc -= 1.0 / x
        x += 1.0
    r = 1.0 / (x * x)
    # Bernoulli tail B_2/(2x^2) + B_4/(4x^4) + ...
    tail = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r / 132))))
    return acc + math.log(x) - 0.5 / x - tail


def _split_argument(x) -> tuple[float, float]:
    """(x, 1-x) as floats, with the complement exact for Fraction input."""
    if isinstance(x, Fraction):
        return float(x), float(1 - x)
    x = float(x)
    return x, 1.0 - x


def _direct_series(a: float, x: float, eps: float, max_terms: int) -> tuple[float, int]:
    term = 1.0
    total = 1.0
    for n in range(max_terms):
        term *= (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0)) * x
        total += term
        if abs(term) < eps * abs(total):
            return total, n + 2
    raise NonConvergence(f"direct series at x={x} needs more than {max_terms} terms")


def _log_connection(a: float, y: float, eps: float, max_terms: int) -> tuple[float, int]:
    """Sum in powers of y = 1-x; valid for 0 < y < 1."""
    log_y = math.log(y)
    h = 1.0  # (a)_n (1-a)_n / (n!)^2
    dsum = 2.0 * digamma(1.0) - digamma(a) - digamma(1.0 - a)
    total = 0.0
    yn = 1.0
    for n in range(max_terms):
        term = h * yn * (dsum - log_y)
        total += term
        if abs(term) < eps * abs(total) and n >= 1:
            return math.sin(math.pi * a) / math.pi * total, n + 1
        h *= (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0))
        dsum += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (1.0 - a + n)
        yn *= y
    raise NonConvergence(f"connection series at 1-x={y} needs more than {max_terms} terms")


def _f21_pair(params: HGFParams, x: float, comp: float) -> EvalResult:
    """F_a at x, with comp = 1-x supplied by the caller."""
    a = float(params.a)
    if x == 0.0:
        return EvalResult(1.0, 1, "direct-series")
    if x <= 0.5:
        value, terms = _direct_series(a, x, params.eps, params.max_terms)
        return EvalResult(value, terms, "direct-series")
    value, terms = _log_connection(a, comp, params.eps, params.max_terms)
    return EvalResult(value, terms, "log-connection")


def f21(params: HGFParams, x) -> EvalResult:
    """F_a(x) for x in [0, 1); Fraction input keeps the complement exact."""
    xf, comp = _split_argument(x)
    if not (0.0 <= xf < 1.0):
        raise ValueError(f"argument {x} outside [0, 1)")
    return _f21_pair(params, xf, comp)


def multiplier(params: HGFParams, x) -> float:
    """m_a(x) = F_a(1-x)/F_a(x); strictly decreasing, m_a(1/2) = 1."""
    xf, comp = _split_argument(x)
    if not (0.0 < xf < 1.0):
        raise ValueError(f"argument {x} outside (0, 1)")
    upper = _f21_pair(params, comp, xf).value
    lower = _f21_pair(params, xf, comp).value
    return upper / lower


_HALF = HGFParams(Fraction(1, 2))


def ellK(r: float) -> float:
    """Complete elliptic integral of the first kind, modulus r in (0, 1)."""
    if not (0.0 < r < 1.0):
        raise ValueError(f"modulus {r} outside (0, 1)")
    return math.pi / 2 * f21(_HALF, r * r).value


def mu(r: float) -> float:
    """Ring-domain modulus (pi/2) * K(sqrt(1-r^2)) / K(r) for r in (0, 1)."""
    if not (0.0 < r < 1.0):
        raise ValueError(f"argument {r} outside (0, 1)")
    return math.pi / 2 * multiplier(_HALF, r * r)
