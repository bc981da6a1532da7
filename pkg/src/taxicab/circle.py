"""Taxicab circles: four-sided diamonds parametrized by arc length.

Arc length is measured counterclockwise from the east corner
``(x0 + r, y0)``. The sides are numbered as usual::

    S1: north-east, east corner -> north corner
    S2: north-west, north corner -> west corner
    S3: south-west, west corner -> south corner
    S4: south-east, south corner -> east corner

Each side has taxicab length ``2r``, so the perimeter is ``8r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    DegenerateInputError,
    DomainError,
    Point,
    ScalarLike,
    taxicab_distance,
    to_scalar,
)


class Side(enum.IntEnum):
    S1 = 1
    S2 = 2
    S3 = 3
    S4 = 4

    @property
    def previous(self) -> Side:
        return Side((self.value - 2) % 4 + 1)


@dataclass(frozen=True, slots=True)
class CirclePosition:
    """Where a point sits on a circle.

    ``side`` is the side the point lies on; a corner is assigned to the side
    leaving it counterclockwise, and ``corner`` then holds the
    ``(incoming, outgoing)`` pair of sides meeting there.
    """

    side: Side
    corner: Optional[tuple[Side, Side]] = None

    @property
    def is_corner(self) -> bool:
        return self.corner is not None


@dataclass(frozen=True, slots=True)
class TaxicabCircle:
    center: Point
    radius: Fraction

    def __post_init__(self) -> None:
        r = to_scalar(self.radius)
        if r <= 0:
            raise DomainError(f"circle radius must be positive, got {r}")
        object.__setattr__(self, "radius", r)

    @property
    def perimeter(self) -> Fraction:
        return 8 * self.radius

    def corners(self) -> list[Point]:
        """East, north, west, south: the starting corners of S1..S4."""
        c, r = self.center, self.radius
        return [
            Point(c.x + r, c.y),
            Point(c.x, c.y + r),
            Point(c.x - r, c.y),
            Point(c.x, c.y - r),
        ]

    def __contains__(self, p: Point) -> bool:
        return taxicab_distance(p, self.center) == self.radius


def unit_circle(center: Point) -> TaxicabCircle:
    return TaxicabCircle(center, Fraction(1))


def point_on_circle(c: TaxicabCircle, p: Point) -> Optional[CirclePosition]:
    if p not in c:
        return None
    dx = p.x - c.center.x
    dy = p.y - c.center.y
    if dy == 0:
        side = Side.S1 if dx > 0 else Side.S3
    elif dx == 0:
        side = Side.S2 if dy > 0 else Side.S4
    else:
        if dx > 0:
            side = Side.S1 if dy > 0 else Side.S4
        else:
            side = Side.S2 if dy > 0 else Side.S3
        return CirclePosition(side)
    return CirclePosition(side, (side.previous, side))


def _arc_position(c: TaxicabCircle, p: Point) -> Fraction:
    pos = point_on_circle(c, p)
    if pos is None:
        raise DomainError(f"point {p} is not on the circle")
    start = c.corners()[pos.side - 1]
    return 2 * c.radius * (pos.side - 1) + 2 * abs(p.x - start.x)


def arc_position(c: TaxicabCircle, p: Point) -> Fraction:
    """Counterclockwise arc length from the east corner to ``p``, in [0, 8r)."""
    return _arc_position(c, p)


def circle_point_at_arc(c: TaxicabCircle, s: ScalarLike) -> Point:
    r = c.radius
    s = to_scalar(s) % c.perimeter
    side, t = divmod(s, 2 * r)
    h = t / 2
    cx, cy = c.center.x, c.center.y
    if side == 0:
        return Point(cx + r - h, cy + h)
    if side == 1:
        return Point(cx - h, cy + r - h)
    if side == 2:
        return Point(cx - r + h, cy - h)
    return Point(cx + h, cy - r + h)


def arc_length_ccw(c: TaxicabCircle, a: Point, b: Point) -> Fraction:
    return (_arc_position(c, b) - _arc_position(c, a)) % c.perimeter


def ray_circle_intersection(c: TaxicabCircle, direction: Point) -> Point:
    n = direction.norm1()
    if n == 0:
        raise DegenerateInputError("ray direction is the zero vector")
    return c.center + direction.scale(c.radius / n)
