"""Numeric inversion of the multiplier relation m_a(beta) = p * m_a(alpha).

m_a is a strictly decreasing bijection of (0, 1) onto (0, inf), so the
solution is bracketed on [1e-12, 1 - 1e-12] and found by bisection in
log(m), polished with guarded secant steps.  Deterministic for fixed
inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hgf import HGFParams, NonConvergence, multiplier

BRACKET_LO = 1e-12
BRACKET_HI = 1.0 - 1e-12


@dataclass(frozen=True)
class SolveRequest:
    a: Fraction
    p: int
    alpha: object  # float or Fraction in (0, 1)
    eps: float = 1e-11
    max_iter: int = 200

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"degree p must be a positive integer, got {self.p!r}")
        if not (0 < float(self.alpha) < 1):
            raise ValueError(f"alpha must lie strictly inside (0, 1), got {self.alpha!r}")

    @classmethod
    def for_order(cls, q, p: int, alpha, **kw) -> "SolveRequest":
        return cls(a=HGFParams.for_order(q).a, p=p, alpha=alpha, **kw)


def classical_beta(alpha: float) -> float:
    """Closed-form degree-2 solution at a = 1/2: ((1-sqrt(1-alpha))/(1+sqrt(1-alpha)))^2."""
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    s = math.sqrt(1.0 - alpha)
    return ((1.0 - s) / (1.0 + s)) ** 2


def solve_beta(req: SolveRequest) -> float:
    """beta in (0, 1) with m_a(beta) = p * m_a(alpha), to relative tolerance eps."""
    params = HGFParams(req.a)
    m_alpha = multiplier(params, req.alpha)
    if req.p == 1:
        # degenerate identity mode, kept as a solver sanity check
        return float(req.alpha)
    target = req.p * m_alpha
    log_target = math.log(target)

    def g(beta: float) -> float:
        return math.log(multiplier(params, beta)) - log_target

    lo, hi = BRACKET_LO, BRACKET_HI
    g_lo, g_hi = g(lo), g(hi)
    if not (g_lo > 0.0 > g_hi):
        raise NonConvergence("target multiplier escapes the bracketing interval")

    beta = 0.5 * (lo + hi)
    g_beta = g(beta)
    prev, g_prev = lo, g_lo
    for _ in range(req.max_iter):
        m_beta = math.exp(g_beta + log_target)
        if abs(m_beta - target) <= req.eps * target:
            return beta
        if g_beta > 0.0:
            lo, g_lo = beta, g_beta
        else:
            hi, g_hi = beta, g_beta
        # secant proposal in the log-multiplier scale, bisection fallback
        nxt = None
        if g_beta != g_prev:
            cand = beta - g_beta * (beta - prev) / (g_beta - g_prev)
            if lo < cand < hi:
                nxt = cand
        if nxt is None:
            nxt = 0.5 * (lo + hi)
        prev, g_prev = beta, g_beta
        beta, g_beta = nxt, g(nxt)
    raise NonConvergence(f"no convergence within {req.max_iter} iterations")


def solve_residual(req: SolveRequest, beta: float) -> float:
    """|m_a(beta) - p*m_a(alpha)| for a reported solution."""
    params = HGFParams(req.a)
    return abs(multiplier(params, beta) - req.p * multiplier(params, req.alpha))
