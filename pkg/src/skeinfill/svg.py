"""Band diagrams: Newton polygon, lambda-band (red), eps-band (blue), spanning classes.

Strips are clipped to the viewport with exact rational arithmetic, so the
output depends only on the input data.
"""

from __future__ import annotations

from fractions import Fraction

from .lattice import BandPair, NewtonPolygon
from .qtorus import Pair

SCALE = 40
MARGIN = 1


def _clip(poly: list[tuple[Fraction, Fraction]], a: int, b: int, c: int) -> list[tuple[Fraction, Fraction]]:
    """Keep the half-plane a x + b y <= c (one Sutherland-Hodgman pass)."""
    out = []
    n = len(poly)
    for i in range(n):
        P, Q = poly[i], poly[(i + 1) % n]
        fp = a * P[0] + b * P[1] - c
        fq = a * Q[0] + b * Q[1] - c
        if fp <= 0:
            out.append(P)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((P[0] + t * (Q[0] - P[0]), P[1] + t * (Q[1] - P[1])))
    return out


def strip(form: Pair, lo: int, hi: int, box: int) -> list[tuple[Fraction, Fraction]]:
    """The strip lo <= form <= hi intersected with the square [-box, box]^2."""
    B = Fraction(box)
    poly = [(-B, -B), (B, -B), (B, B), (-B, B)]
    poly = _clip(poly, form[0], form[1], hi)
    return _clip(poly, -form[0], -form[1], -lo)


def _fmt(v: Fraction) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_band_svg(P: NewtonPolygon, bp: BandPair, classes: list[Pair], title: str = "") -> str:
    # draw each class by its representative with eps in {0, 1}
    classes = [c if bp.eps_at(c) in (0, 1) else (-c[0], -c[1]) for c in classes]
    pts = list(P.vertices) + classes
    box = max(max(abs(a), abs(b)) for a, b in pts) + MARGIN
    size = 2 * box * SCALE

    def xy(x, y) -> str:
        return f"{_fmt((Fraction(x) + box) * SCALE)},{_fmt((box - Fraction(y)) * SCALE)}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{title}</title>" if title else "",
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for form, lo, hi, colour in ((bp.lam, -bp.M, bp.M, "red"), (bp.eps, 0, 1, "blue")):
        region = strip(form, lo, hi, box)
        if region:
            d = " ".join(xy(x, y) for x, y in region)
            out.append(f'<polygon points="{d}" fill="{colour}" fill-opacity="0.15" stroke="{colour}" stroke-width="1"/>')
    out.append(f'<line x1="0" y1="{box * SCALE}" x2="{size}" y2="{box * SCALE}" stroke="gray" stroke-width="0.5"/>')
    out.append(f'<line x1="{box * SCALE}" y1="0" x2="{box * SCALE}" y2="{size}" stroke="gray" stroke-width="0.5"/>')
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            out.append(f'<circle cx="{(x + box) * SCALE}" cy="{(box - y) * SCALE}" r="1.5" fill="gray"/>')
    if len(P.vertices) >= 2:
        d = " ".join(xy(*v) for v in P.vertices)
        tag = "polyline" if P.kind == "SEGMENT" else "polygon"
        out.append(f'<{tag} points="{d}" fill="none" stroke="black" stroke-width="2"/>')
    for v in P.vertices:
        out.append(f'<circle cx="{(v[0] + box) * SCALE}" cy="{(box - v[1]) * SCALE}" r="4" fill="black"/>')
    for a, b in classes:
        out.append(f'<circle cx="{(a + box) * SCALE}" cy="{(box - b) * SCALE}" r="5" fill="none" '
                   f'stroke="darkgreen" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(line for line in out if line) + "\n"
