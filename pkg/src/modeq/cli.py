"""Command-line workbench.

Subcommands: index, membership, surface, param, solve, eliminate, verify,
domain-svg, f21, mu.  Every subcommand has --json with a stable schema.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.
Defaults honor MODEQ_MAX_COSETS and MODEQ_PRECISION, flags win over both.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .catalog import CASE_ORDER, get_case
from .cosets import DEFAULT_MAX_COSETS, CapExceeded, enumerate_cosets
from .domains import domain_svg, get_domain
from .elimination import ElimInput, eliminate, format_bivar, square_free_and_degree_report
from .hgf import HGFParams, f21, mu
from .moebius import MoebiusMat, UnsupportedOrder, context_for, in_G, in_G_conj, in_K
from .qrat import QuadRat
from .solver import SolveRequest, solve_beta, solve_residual
from .topology import monodromy, surface_invariants

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(human)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


_ENTRY_RE = re.compile(
    r"^\s*(?P<rat>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?:(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*sqrt(?P<d>\d+))?\s*$"
)


def parse_quadrat(text: str) -> QuadRat:
    """Parse entries like "5", "-1/2", "sqrt3", "2*sqrt3", "1/2-3sqrt3"."""
    m = _ENTRY_RE.match(text)
    if not m or (m.group("rat") is None and m.group("d") is None):
        raise ValueError(f"cannot parse quadratic number {text!r}")
    rat = Fraction(m.group("rat")) if m.group("rat") else Fraction(0)
    if m.group("d") is None:
        return QuadRat(rat)
    coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("sign") == "-":
        coef = -coef
    elif m.group("sign") is None and m.group("rat"):
        raise ValueError(f"missing sign between parts in {text!r}")
    return QuadRat(rat, coef, int(m.group("d")))


def _add_qp(sub, p_required=True):
    sub.add_argument("--q", required=True, choices=["3", "inf"], help="group order")
    sub.add_argument("--p", required=p_required, type=int, help="equation degree")


def cmd_index(args) -> int:
    ctx = context_for(args.q, args.p)
    try:
        base = enumerate_cosets(ctx, "base", args.max_cosets)
        conj = enumerate_cosets(ctx, "conjugate", args.max_cosets)
    except CapExceeded as exc:
        _emit(args, {"error": "cap-exceeded", "what": exc.what, "limit": exc.limit}, f"error: {exc}")
        return EXIT_CAP
    payload = {
        "q": args.q,
        "p": args.p,
        "index": base.index,
        "side_index": conj.index,
        "side_check": base.index == conj.index,
    }
    _emit(args, payload, f"index {base.index} (conjugate side {conj.index}, equal: {payload['side_check']})")
    return EXIT_OK if payload["side_check"] else EXIT_VERIFY_FAIL


def cmd_membership(args) -> int:
    ctx = context_for(args.q, args.p)
    entries = [parse_quadrat(part) for part in args.matrix.split(",")]
    if len(entries) != 4:
        raise ValueError("matrix needs four comma-separated entries a,b,c,d")
    mat = MoebiusMat(*entries)
    payload = {
        "q": args.q,
        "p": args.p,
        "matrix": [str(e) for e in mat.entries()],
        "in_G": in_G(ctx, mat),
        "in_G_conj": in_G_conj(ctx, mat),
        "in_K": in_K(ctx, mat),
    }
    _emit(
        args,
        payload,
        f"in_G={payload['in_G']} in_G_conj={payload['in_G_conj']} in_K={payload['in_K']}",
    )
    return EXIT_OK


def cmd_surface(args) -> int:
    ctx = context_for(args.q, args.p)
    try:
        table = enumerate_cosets(ctx, "base", args.max_cosets)
    except CapExceeded as exc:
        _emit(args, {"error": "cap-exceeded", "what": exc.what, "limit": exc.limit}, f"error: {exc}")
        return EXIT_CAP
    inv = surface_invariants(monodromy(table, ctx), ctx)
    payload = {"q": args.q, "p": args.p, "index": table.index, **inv.to_json_dict()}
    human = (
        f"degree {table.index}: genus {inv.genus}, punctures {inv.punctures}, "
        f"cone points {list(inv.cone_points)}, profiles "
        + ", ".join(f"{v}:{list(p)}" for v, p in inv.profiles.items())
    )
    _emit(args, payload, human)
    return EXIT_OK


def cmd_param(args) -> int:
    case = get_case(args.q, args.p)
    z = _parse_fraction(args.z)
    alpha = case.phi.evaluate(z)
    beta = case.psi.evaluate(z)
    payload = {
        "q": args.q,
        "p": args.p,
        "z": str(z),
        "alpha": {"exact": str(alpha), "float": float(alpha)},
        "beta": {"exact": str(beta), "float": float(beta)},
    }
    _emit(
        args,
        payload,
        f"alpha = {alpha} = {float(alpha):.15g}\nbeta  = {beta} = {float(beta):.15g}",
    )
    return EXIT_OK


def cmd_solve(args) -> int:
    req = SolveRequest.for_order(args.q, args.p, _parse_fraction(args.alpha), eps=args.tolerance)
    beta = solve_beta(req)
    residual = solve_residual(req, beta)
    payload = {
        "q": args.q,
        "p": args.p,
        "alpha": float(req.alpha),
        "beta": beta,
        "residual": residual,
    }
    _emit(args, payload, f"beta = {beta:.15g} (residual {residual:.3g})")
    return EXIT_OK


def cmd_eliminate(args) -> int:
    case = get_case(args.q, args.p)
    poly = eliminate(ElimInput(case.phi, case.psi, case.index))
    report = square_free_and_degree_report(poly)
    if args.format == "json" or args.json:
        payload = {
            "q": args.q,
            "p": args.p,
            "deg_x": poly.deg_x,
            "deg_y": poly.deg_y,
            "squarefree_in_y": report.squarefree_in_y,
            "monomials": [[i, j, str(c)] for i, j, c in poly.sorted_terms()],
        }
        print(json.dumps(payload))
    elif args.format == "latex":
        groups = []
        for j in range(poly.deg_y, -1, -1):
            coeff = poly.coeff_of_y(j)
            if coeff.is_zero():
                continue
            body = str(coeff).replace("z", "x")
            ypow = "" if j == 0 else ("y" if j == 1 else f"y^{{{j}}}")
            groups.append(f"\\left({body}\\right){ypow}" if ypow else f"\\left({body}\\right)")
        print("P(x,y) = " + " + ".join(groups))
    else:
        print(format_bivar(poly))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(samples=args.samples)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": all(r.ok for r in results),
                    "criteria": [
                        {"number": r.number, "name": r.name, "ok": r.ok, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
    else:
        for r in results:
            print(f"[{'PASS' if r.ok else 'FAIL'}] {r.number}. {r.name}: {r.detail}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAIL


def cmd_domain_svg(args) -> int:
    polygon = get_domain(args.case)
    svg = domain_svg(polygon)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_f21(args) -> int:
    params = HGFParams(Fraction(args.a), eps=args.tolerance)
    res = f21(params, _parse_fraction(args.x))
    payload = {
        "a": str(params.a),
        "x": float(Fraction(args.x)),
        "value": res.value,
        "terms": res.terms_used,
        "branch": res.branch,
    }
    _emit(args, payload, f"{res.value:.15g} ({res.branch}, {res.terms_used} terms)")
    return EXIT_OK


def cmd_mu(args) -> int:
    value = mu(args.r)
    _emit(args, {"r": args.r, "value": value}, f"{value:.15g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modeq",
        description="exact workbench for modular-type equations over triangle groups",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    max_cosets_default = _env_int("MODEQ_MAX_COSETS", DEFAULT_MAX_COSETS)
    precision_default = _env_float("MODEQ_PRECISION", 1e-11)

    def add(name, func, help_text):
        sub = subs.add_parser(name, help=help_text)
        sub.add_argument("--json", action="store_true", help="machine-readable output")
        sub.set_defaults(func=func)
        return sub

    s = add("index", cmd_index, "subgroup index by coset enumeration, both sides")
    _add_qp(s)
    s.add_argument("--max-cosets", type=int, default=max_cosets_default)

    s = add("membership", cmd_membership, "exact membership tests for one matrix")
    _add_qp(s)
    s.add_argument("--matrix", required=True, help='entries "a,b,c,d", e.g. "-2,sqrt3,-3sqrt3,4"')

    s = add("surface", cmd_surface, "covering invariants of the intermediate surface")
    _add_qp(s)
    s.add_argument("--max-cosets", type=int, default=max_cosets_default)

    s = add("param", cmd_param, "exact parametrized solution pair (alpha, beta)")
    _add_qp(s)
    s.add_argument("--z", required=True, help="rational parameter, e.g. 1/2")

    s = add("solve", cmd_solve, "numeric solution beta of the degree-p relation")
    _add_qp(s)
    s.add_argument("--alpha", required=True, help="alpha in (0,1), float or fraction")
    s.add_argument("--tolerance", type=float, default=precision_default)

    s = add("eliminate", cmd_eliminate, "relation polynomial by exact elimination")
    _add_qp(s)
    s.add_argument("--format", choices=["human", "json", "latex"], default="human")

    s = add("verify", cmd_verify, "run the full verification suite")
    s.add_argument("--samples", type=int, default=97)

    s = add("domain-svg", cmd_domain_svg, "render a fundamental domain as SVG")
    s.add_argument("--case", required=True, choices=list(CASE_ORDER))
    s.add_argument("--output", "-o", help="write to file instead of stdout")

    s = add("f21", cmd_f21, "hypergeometric value F_a(x)")
    s.add_argument("--a", required=True, help="parameter a, e.g. 1/2 or 1/3")
    s.add_argument("--x", required=True, help="argument in [0,1)")
    s.add_argument("--tolerance", type=float, default=1e-15)

    s = add("mu", cmd_mu, "ring-domain modulus mu(r)")
    s.add_argument("--r", required=True, type=float)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, UnsupportedOrder, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
