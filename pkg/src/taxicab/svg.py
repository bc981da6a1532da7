"""SVG rendering of exact scenes and the stock figures.

Scene geometry stays in exact rationals; pixels are produced only at
serialization time, rounded to three decimals. Output depends on nothing
but the inputs, so repeated runs are byte-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union
from xml.sax.saxutils import escape

from .angles import directed_arc
from .circle import TaxicabCircle, arc_position, circle_point_at_arc
from .geometry import ORIGIN, Line, Point, format_scalar, midpoint
from .i5t import IsoscelesTriangle, ccw_order, i5t_analyze
from .isometry import taxicab_reflect, taxicab_rotate

DEFAULT_SCALE = 40
MARGIN = Fraction(1, 2)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point
    role: str = "line"
    dashed: bool = False


@dataclass(frozen=True)
class Dot:
    p: Point
    role: str = "point"


@dataclass(frozen=True)
class Label:
    p: Point
    text: str
    role: str = "label"


@dataclass(frozen=True)
class Polyline:
    points: tuple[Point, ...]
    role: str = "arc"


Element = Union[Segment, Dot, Label, Polyline]


@dataclass
class SvgScene:
    elements: list[Element] = field(default_factory=list)
    title: str = ""

    def add(self, *elements: Element) -> SvgScene:
        self.elements.extend(elements)
        return self

    def count(self, kind: type, role: str) -> int:
        return sum(1 for e in self.elements if isinstance(e, kind) and e.role == role)

    def _points(self) -> list[Point]:
        pts: list[Point] = []
        for e in self.elements:
            if isinstance(e, Segment):
                pts += [e.a, e.b]
            elif isinstance(e, Polyline):
                pts += e.points
            else:
                pts.append(e.p)
        return pts

    def render(self, scale: int = DEFAULT_SCALE) -> str:
        pts = self._points()
        min_x = min(p.x for p in pts) - MARGIN
        max_x = max(p.x for p in pts) + MARGIN
        min_y = min(p.y for p in pts) - MARGIN
        max_y = max(p.y for p in pts) + MARGIN

        def px(p: Point) -> tuple[str, str]:
            return _pixel((p.x - min_x) * scale), _pixel((max_y - p.y) * scale)

        width = _pixel((max_x - min_x) * scale)
        height = _pixel((max_y - min_y) * scale)
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
        ]
        if self.title:
            out.append(f"<title>{escape(self.title)}</title>")
        out.append('<g fill="none" stroke="black" stroke-width="1.5">')
        for e in self.elements:
            if isinstance(e, Segment):
                (x1, y1), (x2, y2) = px(e.a), px(e.b)
                dash = ' stroke-dasharray="6,4"' if e.dashed else ""
                out.append(
                    f'<line class="{e.role}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{dash}/>'
                )
            elif isinstance(e, Polyline):
                coords = " ".join(",".join(px(p)) for p in e.points)
                out.append(f'<polyline class="{e.role}" points="{coords}"/>')
        out.append("</g>")
        out.append('<g fill="black" font-family="serif" font-size="14">')
        for e in self.elements:
            if isinstance(e, Dot):
                x, y = px(e.p)
                out.append(f'<circle class="{e.role}" cx="{x}" cy="{y}" r="3"/>')
            elif isinstance(e, Label):
                x, y = px(e.p)
                out.append(
                    f'<text class="{e.role}" x="{x}" y="{y}" text-anchor="middle">'
                    f"{escape(e.text)}</text>"
                )
        out.append("</g>")
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _pixel(v: Fraction) -> str:
    """Round half-even to three decimals and drop trailing zeros, exactly."""
    thousandths = round(v * 1000)
    sign = "-" if thousandths < 0 else ""
    whole, frac = divmod(abs(thousandths), 1000)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:03d}".rstrip("0")


def svg_scale() -> int:
    """Pixels per unit, from ``TAXI_SVG_SCALE`` (default 40)."""
    raw = os.environ.get("TAXI_SVG_SCALE")
    if raw is None or raw == "":
        return DEFAULT_SCALE
    try:
        scale = int(raw)
    except ValueError:
        raise ValueError(f"TAXI_SVG_SCALE must be a positive integer, got {raw!r}") from None
    if scale <= 0:
        raise ValueError(f"TAXI_SVG_SCALE must be a positive integer, got {raw!r}")
    return scale


# -- building blocks ---------------------------------------------------------


def circle_sides(c: TaxicabCircle) -> list[Segment]:
    e, n, w, s = c.corners()
    return [Segment(a, b, "side") for a, b in ((e, n), (n, w), (w, s), (s, e))]


def axes(lo_x, hi_x, lo_y, hi_y) -> list[Segment]:
    return [
        Segment(Point(lo_x, 0), Point(hi_x, 0), "axis"),
        Segment(Point(0, lo_y), Point(0, hi_y), "axis"),
    ]


def angle_arc(vertex: Point, start: Point, end: Point, radius: Fraction) -> Polyline:
    """Taxicab arc of ``radius`` about ``vertex`` sweeping ccw from ray ``start`` to ray ``end``."""
    c = TaxicabCircle(vertex, radius)
    s0 = arc_position(c, vertex + (start - vertex).scale(radius / (start - vertex).norm1()))
    sweep = directed_arc(vertex, start, end) * radius
    pts = [circle_point_at_arc(c, s0)]
    side_len = 2 * radius
    k = (s0 // side_len + 1) * side_len
    while k < s0 + sweep:
        pts.append(circle_point_at_arc(c, k))
        k += side_len
    pts.append(circle_point_at_arc(c, s0 + sweep))
    return Polyline(tuple(pts))


def _angle_annotation(vertex: Point, a: Point, b: Point, value: Fraction, radius: Fraction) -> list:
    """Arc plus value label for the undirected angle a-vertex-b."""
    if directed_arc(vertex, a, b) > 4:
        a, b = b, a
    # label sits on the bisecting ray, twice as far out as the arc
    half = directed_arc(vertex, a, b) / 2
    a_unit = vertex + (a - vertex).scale(1 / (a - vertex).norm1())
    ring = TaxicabCircle(vertex, Fraction(1))
    mid = circle_point_at_arc(ring, arc_position(ring, a_unit) + half)
    spot = vertex + (mid - vertex).scale(2 * radius)
    return [angle_arc(vertex, a, b, radius), Label(spot, format_scalar(value), "angle-label")]


# -- the stock figures -------------------------------------------------------


def figure_circle() -> SvgScene:
    c = TaxicabCircle(ORIGIN, Fraction(4))
    scene = SvgScene(title="Taxicab circle of radius 4 with sides S1..S4")
    scene.add(*circle_sides(c))
    for side, spot in zip(("S1", "S2", "S3", "S4"), ((5, 5), (-5, 5), (-5, -5), (5, -5))):
        scene.add(Label(Point(Fraction(spot[0], 2), Fraction(spot[1], 2)), side, "side-label"))
    scene.add(Dot(ORIGIN), Label(Point(0, Fraction(1, 2)), "(x0,y0)"))
    return scene


def figure_unit_circle() -> SvgScene:
    c = TaxicabCircle(ORIGIN, Fraction(1))
    scene = SvgScene(title="Unit taxicab circle")
    scene.add(*circle_sides(c))
    scene.add(*axes(Fraction(-9, 8), Fraction(9, 8), Fraction(-9, 8), Fraction(9, 8)))
    t = Fraction(1, 8)
    for e in c.corners():
        if e.y == 0:
            scene.add(Segment(Point(e.x, -t), Point(e.x, t), "tick"))
            scene.add(Label(Point(e.x, -2 * t), format_scalar(e.x), "tick-label"))
        else:
            scene.add(Segment(Point(-t, e.y), Point(t, e.y), "tick"))
            scene.add(Label(Point(2 * t, e.y), format_scalar(e.y), "tick-label"))
    return scene


def figure_rotation_reflection() -> SvgScene:
    scene = SvgScene(title="Rotation by 1 t-radian; reflection across y = x/2")
    r = Fraction(4)
    # rotation panel: P on the quadrant-I side, turned by 1 t-radian about Q
    p = Point(3, 1)
    p_rot = taxicab_rotate(p, ORIGIN, 1)
    scene.add(*axes(Fraction(-1, 4), r + Fraction(1, 4), Fraction(-1, 4), r + Fraction(1, 4)))
    scene.add(Segment(Point(0, r), Point(r, 0), "side"))
    scene.add(Segment(ORIGIN, p, "radius"), Segment(ORIGIN, p_rot, "radius"))
    scene.add(Dot(p), Label(p + Point(Fraction(1, 3), Fraction(1, 3)), "P"))
    scene.add(Dot(p_rot), Label(p_rot + Point(Fraction(1, 3), Fraction(1, 3)), "P'"))
    scene.add(Dot(ORIGIN), Label(Point(Fraction(1, 4), Fraction(-1, 3)), "Q"))
    scene.add(*_angle_annotation(ORIGIN, p, p_rot, Fraction(1), Fraction(1)))

    # reflection panel, shifted right: P across the line y = x/2
    shift = Point(6, 0)
    line = Line.from_coefficients(1, -2, 0)
    q = Point(2, 0)
    q_ref = taxicab_reflect(q, line)
    m = midpoint(q, q_ref)
    scene.add(*(
        Segment(s.a + shift, s.b + shift, "axis")
        for s in axes(Fraction(-1, 4), r + Fraction(1, 4), Fraction(-1, 4), r + Fraction(1, 4))
    ))
    scene.add(Segment(shift, Point(4, 2) + shift, "mirror", dashed=True))
    scene.add(Label(Point(Fraction(7, 2), 2) + shift, "l"))
    scene.add(Segment(q + shift, q_ref + shift, "perpendicular", dashed=True))
    for pt, name in ((q, "P"), (q_ref, "P'"), (m, "M")):
        scene.add(Dot(pt + shift), Label(pt + shift + Point(Fraction(1, 3), Fraction(1, 3)), name))
    return scene


_CASE_LEGS = {
    "case1": (Point(Fraction(3, 2), Fraction(5, 2)), Point(3, 1)),
    "case2": (Point(Fraction(3, 2), Fraction(5, 2)), Point(-3, 1)),
    "case3": (Point(Fraction(3, 2), Fraction(5, 2)), Point(-3, -1)),
}

_CASE_TITLES = {
    "case1": "Isosceles triangle, legs in quadrant I",
    "case2": "Isosceles triangle, legs in quadrants I and II",
    "case3": "Isosceles triangle, legs in quadrants I and III",
}


def figure_case(name: str) -> SvgScene:
    p, q = _CASE_LEGS[name]
    r = p.norm1()
    report = i5t_analyze(IsoscelesTriangle(ORIGIN, p, q))
    a, b = ccw_order(p, q)
    scene = SvgScene(title=_CASE_TITLES[name])
    lo = -r - Fraction(1, 4)
    hi = r + Fraction(1, 4)
    scene.add(*axes(lo, hi, lo, hi))
    scene.add(*(Segment(s.a, s.b, "side", dashed=True) for s in circle_sides(TaxicabCircle(ORIGIN, r))))
    scene.add(Segment(ORIGIN, p, "radius"), Segment(ORIGIN, q, "radius"), Segment(p, q, "chord"))
    off = Point(Fraction(1, 3), Fraction(1, 3))
    scene.add(Dot(p), Label(p + off, f"P({p})"))
    scene.add(Dot(q), Label(q + off, f"Q({q})"))
    scene.add(Dot(ORIGIN), Label(Point(Fraction(1, 2), Fraction(-1, 3)), "O(0,0)"))
    small = r / 8
    scene.add(*_angle_annotation(ORIGIN, a, b, directed_arc(ORIGIN, a, b), small))
    scene.add(*_angle_annotation(a, ORIGIN, b, report.alpha, small))
    scene.add(*_angle_annotation(b, ORIGIN, a, report.beta, small))
    return scene


FIGURES: dict[str, Callable[[], SvgScene]] = {
    "circle": figure_circle,
    "unit-circle": figure_unit_circle,
    "rotation-reflection": figure_rotation_reflection,
    "case1": lambda: figure_case("case1"),
    "case2": lambda: figure_case("case2"),
    "case3": lambda: figure_case("case3"),
}


def emit_figure(name: str) -> SvgScene:
    try:
        build = FIGURES[name]
    except KeyError:
        raise KeyError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}") from None
    return build()
