"""Fundamental-domain polygons and deterministic SVG rendering.

Each case stores the ideal polygon of the intersection subgroup: an
ordered list of boundary vertices on the real line plus infinity, with
exact quadratic-ring coordinates, and the side-pairing labels.  Sides
between consecutive finite vertices are geodesic semicircles orthogonal to
the real axis; the first and last finite vertices carry vertical sides up
to infinity.  The SVG output is byte-deterministic for a given case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import CASES, CaseSpec
from .qrat import QuadRat


@dataclass(frozen=True)
class DomainPolygon:
    label: str
    vertices: tuple[QuadRat | None, ...]  # None marks the vertex at infinity
    pairings: tuple[tuple[str, str], ...]  # (name, word)

    def finite_vertices(self) -> list[QuadRat]:
        return [v for v in self.vertices if v is not None]

    def vertex_strings(self) -> list[str]:
        return ["∞" if v is None else str(v) for v in self.vertices]


def _pairings(case: CaseSpec) -> tuple[tuple[str, str], ...]:
    return tuple((fx.name, fx.word) for fx in case.pairings)


_R3 = QuadRat.sqrt(3)
_HEX_VERTICES = (
    QuadRat(0),
    _R3 / 3,
    _R3 / 2,
    2 * _R3 / 3,
    _R3,
    None,
)

DOMAINS: dict[str, DomainPolygon] = {
    "inf-2": DomainPolygon(
        label="inf-2",
        vertices=(QuadRat(0), QuadRat(Fraction(1, 2)), QuadRat(1), QuadRat(2), None),
        pairings=_pairings(CASES["inf-2"]),
    ),
    "inf-3": DomainPolygon(
        label="inf-3",
        vertices=(
            QuadRat(0),
            QuadRat(Fraction(1, 3)),
            QuadRat(Fraction(2, 5)),
            QuadRat(Fraction(1, 2)),
            QuadRat(Fraction(2, 3)),
            QuadRat(1),
            QuadRat(Fraction(4, 3)),
            QuadRat(Fraction(3, 2)),
            QuadRat(2),
            None,
        ),
        pairings=_pairings(CASES["inf-3"]),
    ),
    "3-3": DomainPolygon(label="3-3", vertices=_HEX_VERTICES, pairings=_pairings(CASES["3-3"])),
    "3-2": DomainPolygon(label="3-2", vertices=_HEX_VERTICES, pairings=_pairings(CASES["3-2"])),
}


def get_domain(label: str) -> DomainPolygon:
    try:
        return DOMAINS[label]
    except KeyError:
        raise KeyError(f"unknown case {label!r}; available: {sorted(DOMAINS)}") from None


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def domain_svg(polygon: DomainPolygon) -> str:
    """Render the polygon: base line, semicircular sides, vertical ends, labels."""
    finite = [v.to_float() for v in polygon.finite_vertices()]
    lo, hi = min(finite), max(finite)
    span = hi - lo
    margin = 0.15 * span
    top = 0.85 * span
    scale = 480.0 / (span + 2 * margin)

    def sx(x: float) -> str:
        return _fmt((x - lo + margin) * scale)

    def sy(y: float) -> str:
        return _fmt((top - y) * scale + 40.0)

    width = _fmt((span + 2 * margin) * scale)
    height = _fmt(top * scale + 80.0)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>fundamental domain {polygon.label}</title>",
        '<g stroke="black" stroke-width="1.5" fill="none">',
        # real axis
        f'<line x1="{sx(lo - margin)}" y1="{sy(0)}" x2="{sx(hi + margin)}" y2="{sy(0)}" stroke-width="0.7"/>',
        # vertical sides to infinity at the extreme finite vertices
        f'<line x1="{sx(lo)}" y1="{sy(0)}" x2="{sx(lo)}" y2="{sy(top)}"/>',
        f'<line x1="{sx(hi)}" y1="{sy(0)}" x2="{sx(hi)}" y2="{sy(top)}"/>',
    ]
    for u, v in zip(finite, finite[1:]):
        r = (v - u) / 2.0 * scale
        lines.append(
            f'<path d="M {sx(u)} {sy(0)} A {_fmt(r)} {_fmt(r)} 0 0 1 {sx(v)} {sy(0)}"/>'
        )
    lines.append("</g>")
    lines.append('<g font-family="monospace" font-size="12" fill="black">')
    for v in polygon.finite_vertices():
        lines.append(f'<text x="{sx(v.to_float())}" y="{sy(-0.06 * span)}" text-anchor="middle">{v}</text>')
    lines.append(f'<text x="{sx((lo + hi) / 2)}" y="{sy(top * 1.02)}" text-anchor="middle">∞</text>')
    for i, (name, word) in enumerate(polygon.pairings):
        lines.append(f'<text x="8" y="{_fmt(16.0 + 14.0 * i)}">{name} = {word}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
