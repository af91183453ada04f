"""SVG 1.1 weight diagrams for rank-2 algebras.

Simple roots are drawn as dashed arrows, the roots of a as solid grey arrows,
weights as dots whose radius grows with multiplicity, and each signed
generalized Verma module as the convex hull of its truncated support:
dashed for eps = +1, dotted for eps = -1.
"""

from __future__ import annotations

import math

from .characters import weyl_character
from .embedding import EmbeddingSpec
from .rootspace import RootDatum, Weight, add

SIZE = 480
UNIT = 60.0
HEADER = ('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
          '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
          '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n')


def _frame(d: RootDatum):
    """Orthonormal plane coordinates (floats) for the root span."""
    def ip(x, y):
        return float(d.inner(x, y))

    f1 = [float(c) for c in d.simple_roots[0]]
    n1 = math.sqrt(ip(f1, f1))
    f1 = [c / n1 for c in f1]
    a2 = [float(c) for c in d.simple_roots[1]]
    p = ip(a2, f1)
    f2 = [a - p * b for a, b in zip(a2, f1)]
    n2 = math.sqrt(ip(f2, f2))
    f2 = [c / n2 for c in f2]
    return lambda x: (ip(x, f1), ip(x, f2))


def _hull(points: list) -> list:
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 1e-9:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 1e-9:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, scale: float):
        self.scale = scale
        self.items: list[str] = []

    def pt(self, xy) -> tuple[str, str]:
        return _fmt(SIZE / 2 + self.scale * xy[0]), _fmt(SIZE / 2 - self.scale * xy[1])

    def arrow(self, xy, cls: str, style: str):
        x, y = self.pt(xy)
        c = _fmt(SIZE / 2)
        self.items.append(f'<line class="{cls}" x1="{c}" y1="{c}" x2="{x}" y2="{y}" '
                          f'{style} marker-end="url(#head)"/>')

    def dot(self, xy, mult: int):
        x, y = self.pt(xy)
        r = 3.0 + 1.5 * (mult - 1)
        self.items.append(f'<circle class="weight" data-mult="{mult}" cx="{x}" cy="{y}" '
                          f'r="{_fmt(r)}" fill="black"/>')
        if mult > 1:
            self.items.append(f'<circle class="mult-marker" cx="{x}" cy="{y}" r="{_fmt(r + 3)}" '
                              f'fill="none" stroke="black" stroke-width="0.8"/>')

    def polygon(self, pts, cls: str, dash: str):
        coords = " ".join(",".join(self.pt(p)) for p in pts)
        self.items.append(f'<polygon class="{cls}" points="{coords}" fill="none" '
                          f'stroke="black" stroke-width="1.2" stroke-dasharray="{dash}"/>')

    def render(self, title: str) -> str:
        body = "\n".join(self.items)
        return (HEADER
                + f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
                f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">\n'
                f'<title>{title}</title>\n'
                '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="3" '
                'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="black"/></marker></defs>\n'
                f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>\n'
                f"{body}\n</svg>\n")


def draw(d: RootDatum, mu: Weight, spec: EmbeddingSpec | None = None, depth: int = 4) -> str:
    """SVG of the weight diagram of L^mu, with the decomposition if spec is given."""
    if d.rank != 2:
        raise ValueError(f"drawing needs a rank-2 algebra, got rank {d.rank}")
    plane = _frame(d)
    chars = weyl_character(d, mu)
    points = [plane(x) for x, _ in chars.items()]
    extent = max([math.hypot(*p) for p in points] + [math.hypot(*plane(a)) for a in d.roots])
    terms = []
    if spec is not None:
        from .verma import weyl_verma_decompose
        for t in weyl_verma_decompose(spec, mu, depth):
            hull = _hull([plane(add(t.carrier, x)) for x, _ in t.gv.terms.items()])
            terms.append((t.sign, hull))
            extent = max([extent] + [math.hypot(*p) for p in hull])
    canvas = _Canvas((SIZE / 2 - 20) / max(extent, 1.0))
    for a in d.simple_roots:
        canvas.arrow(plane(a), "simple-root", 'stroke="black" stroke-dasharray="5,3"')
    if spec is not None:
        for b in spec.a_simple_roots:
            canvas.arrow(plane(b), "a-root", 'stroke="grey" stroke-width="2"')
    for x, m in chars.sorted_items():
        canvas.dot(plane(x), m)
    for sign, hull in terms:
        if sign > 0:
            canvas.polygon(hull, "contour positive", "6,3")
        else:
            canvas.polygon(hull, "contour negative", "1,3")
    labels = ",".join(str(v) for v in d.labels(mu))
    return canvas.render(f"{d.name} highest weight ({labels})")
