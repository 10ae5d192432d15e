"""Static SVG pictures of alcove balls for rank 1 and rank 2."""

from __future__ import annotations

import math
from pathlib import Path

from alcove_orbits.cartan import RootDatum
from alcove_orbits.chamber_orbits import census_from_ball, partition_of
from alcove_orbits.config import AlcoveOrbitsError
from alcove_orbits.involutions import classify
from alcove_orbits.report import DecompositionReport, datum_of
from alcove_orbits.weyl_affine import affine_group

WIDTH = 640
MARGIN = 20


class PlanarityError(AlcoveOrbitsError, ValueError):
    pass


def _embedding(datum: RootDatum):
    """Coroot coordinates -> Euclidean plane via the invariant inner product."""
    g = [[float(x) for x in row] for row in datum.coroot_gram()]
    if datum.rank == 1:
        s = math.sqrt(g[0][0])
        return lambda p: (s * float(p[0]), 0.0)
    a = math.sqrt(g[0][0])
    b = g[0][1] / a
    c = math.sqrt(g[1][1] - b * b)
    return lambda p: (a * float(p[0]) + b * float(p[1]), c * float(p[1]))


def color(k: int) -> str:
    return f"hsl({(k * 137.508) % 360:.1f},62%,62%)"


def render_svg(datum: RootDatum, radius: int, class_index: int, budget: int | None = None) -> str:
    if datum.rank > 2:
        raise PlanarityError(
            f"SVG output needs a planar or linear apartment (rank <= 2); {datum.name} has rank {datum.rank}"
        )
    G = affine_group(datum)
    classes = classify(datum)
    if not 0 <= class_index < len(classes):
        raise AlcoveOrbitsError(f"class index {class_index} out of range 0..{len(classes) - 1}")
    cls = classes[class_index]
    ball = G.ball(radius, budget)
    cen = census_from_ball(cls.sigma, datum, ball)
    orbit_of = {}
    for k, part in enumerate(partition_of(cen, ball, datum)):
        for x in part:
            orbit_of[x] = k

    embed = _embedding(datum)
    verts0 = G.fundamental_vertices()
    shapes = []
    for x in ball.elements:
        pts = [embed(G.apply(x, v)) for v in verts0]
        shapes.append((x, pts))
    xs = [p[0] for _, pts in shapes for p in pts]
    ys = [p[1] for _, pts in shapes for p in pts]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    scale = (WIDTH - 2 * MARGIN) / span
    height = WIDTH if datum.rank == 2 else 2 * MARGIN + 40

    def tx(p):
        u = MARGIN + (p[0] - lo_x) * scale
        if datum.rank == 1:
            return u, height / 2
        return u, MARGIN + (hi_y - p[1]) * scale

    def fmt(v: float) -> str:
        return f"{v:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{height:.0f}" viewBox="0 0 {WIDTH} {height:.0f}">',
        f"<title>{datum.name} alcoves of length &lt;= {radius}, coloured by orbit of the "
        f"centralizer of class {class_index}</title>",
        f'<clipPath id="frame"><rect x="0" y="0" width="{WIDTH}" height="{height:.0f}"/></clipPath>',
        '<g id="alcoves" stroke="#333" stroke-width="0.6">',
    ]
    for x, pts in shapes:
        fill = color(orbit_of[x])
        word = " ".join(map(str, ball.word[x]))
        if datum.rank == 1:
            (x0, y0), (x1, y1) = tx(pts[0]), tx(pts[1])
            out.append(
                f'<line class="alcove" data-word="{word}" data-orbit="{orbit_of[x]}" '
                f'x1="{fmt(x0)}" y1="{fmt(y0)}" x2="{fmt(x1)}" y2="{fmt(y1)}" '
                f'stroke="{fill}" stroke-width="14"/>'
            )
        else:
            coords = " ".join(f"{fmt(u)},{fmt(v)}" for u, v in map(tx, pts))
            out.append(
                f'<polygon class="alcove" data-word="{word}" data-orbit="{orbit_of[x]}" '
                f'points="{coords}" fill="{fill}"/>'
            )
    out.append("</g>")

    # fixed locus of sigma: lam/2 + (+1 eigenspace of w)
    sigma = cls.sigma
    w = sigma.finite.matrix
    n = datum.rank
    if sigma.finite.word:
        p0 = tuple(c / 2 for c in sigma.translation)
        fixed_dirs = []
        for e in range(n):
            d = tuple(w[i][e] + (i == e) for i in range(n))
            if any(d):
                fixed_dirs.append(d)
        cx, cy = tx(embed(p0))
        if not fixed_dirs:
            out.append(
                f'<circle class="fixed-locus" cx="{fmt(cx)}" cy="{fmt(cy)}" r="5" '
                f'fill="none" stroke="#c00" stroke-width="2.5"/>'
            )
        else:
            d = embed(fixed_dirs[0])
            norm = math.hypot(*d)
            t = 2 * WIDTH / scale / norm
            a = tx(embed(tuple(p + t * q for p, q in zip(p0, fixed_dirs[0]))))
            b = tx(embed(tuple(p - t * q for p, q in zip(p0, fixed_dirs[0]))))
            out.append(
                f'<line class="fixed-locus" clip-path="url(#frame)" x1="{fmt(a[0])}" '
                f'y1="{fmt(a[1])}" x2="{fmt(b[0])}" y2="{fmt(b[1])}" stroke="#c00" '
                f'stroke-width="2.5"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(
    report: DecompositionReport, path: str | Path, class_index: int, budget: int | None = None
) -> str:
    text = render_svg(datum_of(report), report.radius, class_index, budget or report.budget)
    Path(path).write_text(text)
    return text
