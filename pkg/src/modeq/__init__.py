"""Exact workbench for modular-type equations over triangle groups.

Core surface: exact quadratic-ring arithmetic (qrat), projective matrices
and membership (moebius), coset enumeration (cosets), covering invariants
(topology), hypergeometric numerics (hgf), the numeric solver (solver),
the solved-case catalog (catalog), resultant elimination (elimination),
domain geometry (domains), and the verification driver (verify).
"""

__version__ = "0.1.0"

from .catalog import CASE_ORDER, CASES, CaseSpec, check_omega, get_case, verify_case_numeric
from .cosets import CapExceeded, CosetTable, enumerate_cosets, verify_generators
from .elimination import BivarPoly, ElimInput, eliminate, poly_check, resultant_z
from .hgf import EvalResult, HGFParams, NonConvergence, ellK, f21, mu, multiplier
from .moebius import GroupContext, MoebiusMat, context_for, in_G, in_G_conj, in_K
from .polynomials import Poly, RationalMap, eval_map
from .qrat import QuadRat
from .solver import SolveRequest, classical_beta, solve_beta
from .topology import PermutationTriple, SurfaceInvariants, monodromy, surface_invariants

__all__ = [
    "BivarPoly",
    "CASES",
    "CASE_ORDER",
    "CapExceeded",
    "CaseSpec",
    "CosetTable",
    "ElimInput",
    "EvalResult",
    "GroupContext",
    "HGFParams",
    "MoebiusMat",
    "NonConvergence",
    "PermutationTriple",
    "Poly",
    "QuadRat",
    "RationalMap",
    "SolveRequest",
    "SurfaceInvariants",
    "check_omega",
    "classical_beta",
    "context_for",
    "eliminate",
    "ellK",
    "enumerate_cosets",
    "eval_map",
    "f21",
    "get_case",
    "in_G",
    "in_G_conj",
    "in_K",
    "monodromy",
    "mu",
    "multiplier",
    "poly_check",
    "resultant_z",
    "solve_beta",
    "surface_invariants",
    "verify_case_numeric",
    "verify_generators",
]
