"""DOT, JSON-ready reports and SVG plots."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .arrangement import LabeledSemilattice, build_arrangement, intersection_semilattice
from .errors import UnsupportedDimension
from .exactla import format_rational, solve
from .gaingraph import GainGraph
from .genericity import FlatsLattice
from .transport import Triple


def _dot(nodes: list[str], covers) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for i, label in enumerate(nodes):
        escaped = label.replace('"', '\\"')
        lines.append(f'  n{i} [label="{escaped}"];')
    for i, j in covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_set_label(g: GainGraph, s) -> str:
    return ",".join(g.ordered(s)) if s else "∅"


def circuit_set_label(g: GainGraph, circuits, names=None) -> str:
    if not circuits:
        return "∅"
    parts = sorted(circuits, key=g.sort_key)
    if names:
        return "".join(sorted(names[g.label(x)] for x in parts))
    return " ".join(g.label(x, sep="" if all(len(e) == 1 for e in x) else ".") for x in parts)


def semilattice_dot(semi: LabeledSemilattice, g: GainGraph) -> str:
    return _dot([edge_set_label(g, f.labels) for f in semi.flats], semi.covers)


def flats_dot(lattice: FlatsLattice, g: GainGraph, names=None) -> str:
    return _dot([circuit_set_label(g, f.circuits, names) for f in lattice.flats], lattice.covers)


def flat_reports(lattice: FlatsLattice, g: GainGraph) -> list[dict]:
    """One record per flat: circuits, their equations, dimension, a representative gain."""
    out = []
    for flat in lattice.flats:
        circs = sorted(flat.circuits, key=g.sort_key)
        rep = lattice.representative(flat)
        out.append(
            {
                "circuits": [g.ordered(x) for x in circs],
                "equations": [lattice.equation(x).format() for x in circs],
                "dimension": flat.dim,
                "representative": {e: format_rational(v) for e, v in zip(g.edge_ids, rep)},
            }
        )
    return out


def _variables(dim: int) -> list[str]:
    return ["x", "y", "z"][:dim] if dim <= 3 else [f"x{i + 1}" for i in range(dim)]


def format_linear(coefficients, rhs, variables) -> str:
    """``4x + 6y = 13`` from integer coefficients."""
    parts = []
    for c, v in zip(coefficients, variables):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + v)
        else:
            parts.append(("- " if c < 0 else "+ ") + mag + v)
    return f"{' '.join(parts)} = {rhs}"


def hyperplane_lines(t: Triple) -> list[str]:
    variables = _variables(t.dim)
    out = []
    for h in t.arrangement().hyperplanes:
        normal, offset = h.canonical()
        out.append(f"{h.label}: {format_linear(normal, offset, variables)}")
    return out


def _clip(normal, offset, box):
    """End points of the line ``normal . x = offset`` inside the box, exactly."""
    (x0, y0), (x1, y1) = box
    a, b = normal
    pts = set()
    if b != 0:
        for x in (x0, x1):
            y = (offset - a * x) / b
            if y0 <= y <= y1:
                pts.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (offset - b * y) / a
            if x0 <= x <= x1:
                pts.add((x, y))
    pts = sorted(pts)
    return (pts[0], pts[-1]) if pts else None


def svg_plot(t: Triple, size: int = 480) -> str:
    """Deterministic SVG of a planar arrangement.

    The view box holds every pairwise crossing, every reference point and
    the foot of each line on its defining segment, plus a margin.  Points
    where three or more lines meet are drawn in orange.
    """
    if t.dim != 2:
        raise UnsupportedDimension(f"plots need dimension 2, got {t.dim}")
    c, g = t.configuration, t.graph
    arrangement = build_arrangement(c, g)
    hs = arrangement.hyperplanes
    keep = [tuple(p) for p in c.points.values()]
    for h, k in combinations(hs, 2):
        sol = solve([h.normal, k.normal], [h.offset, k.offset])
        if not sol.is_empty and sol.dim == 0:
            keep.append(sol.base)
    for e in g.edges:
        qu, qv = c.point(e.tail), c.point(e.head)
        h = arrangement.hyperplane(e.id)
        d = tuple(b - a for a, b in zip(qu, qv))
        s = (h.offset - sum(n * x for n, x in zip(h.normal, qu))) / sum(n * x for n, x in zip(h.normal, d))
        keep.append(tuple(a + s * x for a, x in zip(qu, d)))
    xs, ys = [p[0] for p in keep], [p[1] for p in keep]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    margin = span / 10
    box = ((min(xs) - margin, min(ys) - margin), (max(xs) + margin, max(ys) + margin))
    (bx0, by0), (bx1, by1) = box
    scale = Fraction(size) / max(bx1 - bx0, by1 - by0)

    def sx(x):
        return f"{float((x - bx0) * scale):.3f}"

    def sy(y):
        return f"{float((by1 - y) * scale):.3f}"

    width = f"{float((bx1 - bx0) * scale):.3f}"
    height = f"{float((by1 - by0) * scale):.3f}"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<g class="lines" stroke="black" stroke-width="1.5" fill="none">',
    ]
    for h in hs:
        seg = _clip(h.normal, h.offset, box)
        if seg is None:
            continue
        (p, q) = seg
        out.append(f'<line id="h-{h.label}" x1="{sx(p[0])}" y1="{sy(p[1])}" x2="{sx(q[0])}" y2="{sy(q[1])}"/>')
    out.append("</g>")
    out.append('<g class="labels" font-family="sans-serif" font-size="12">')
    for h in hs:
        seg = _clip(h.normal, h.offset, box)
        if seg is not None:
            q = seg[1]
            out.append(f'<text x="{sx(q[0])}" y="{sy(q[1])}">{h.label}</text>')
    out.append("</g>")
    out.append('<g class="reference-points" fill="steelblue">')
    for v in g.vertices:
        p = c.point(v)
        out.append(f'<rect x="{float((p[0] - bx0) * scale) - 3:.3f}" y="{float((by1 - p[1]) * scale) - 3:.3f}" width="6" height="6"><title>q_{v}</title></rect>')
    out.append("</g>")
    out.append('<g class="multiple-points" fill="orange" stroke="black">')
    for flat in multiple_points(t):
        p = flat.subspace.base
        label = ",".join(g.ordered(flat.labels))
        out.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="5"><title>{label}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def multiple_points(t: Triple):
    """Zero-dimensional flats lying on at least three hyperplanes."""
    semi = intersection_semilattice(t.arrangement())
    return [f for f in semi.points() if len(f.labels) >= 3]
