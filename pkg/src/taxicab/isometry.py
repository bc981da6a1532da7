"""Taxicab isometries and the general (non-isometric) taxicab motions.

The isometries generated by translations, quarter-turn rotations and the
four reflections across ``y=x``, ``y=-x``, ``y=0`` and ``x=0`` all have the
form ``p -> L(p) + t`` where ``L`` is one of the eight signed permutation
matrices (the symmetries of the square). :class:`Isometry` stores exactly
that pair, so composition never leaves the canonical form.

:func:`taxicab_rotate` and :func:`taxicab_reflect` implement rotation along
taxicab circles and perpendicular reflection across arbitrary lines. Those
preserve distance to the center (or the mirror) but are not isometries in
general; :func:`find_distance_witness` searches for a pair they distort.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .circle import TaxicabCircle, arc_position, circle_point_at_arc
from .geometry import (
    ORIGIN,
    DegenerateInputError,
    DomainError,
    Line,
    Point,
    ScalarLike,
    format_scalar,
    taxicab_distance,
    to_scalar,
)
from .angles import FULL_TURN


class LinearPart(enum.Enum):
    """The eight signed permutation matrices, as ``(a, b, c, d)`` for [[a, b], [c, d]]."""

    identity = (1, 0, 0, 1)
    rot2 = (0, -1, 1, 0)
    rot4 = (-1, 0, 0, -1)
    rot6 = (0, 1, -1, 0)
    reflect_x_axis = (1, 0, 0, -1)
    reflect_y_axis = (-1, 0, 0, 1)
    reflect_y_eq_x = (0, 1, 1, 0)
    reflect_y_eq_neg_x = (0, -1, -1, 0)

    def __call__(self, p: Point) -> Point:
        a, b, c, d = self.value
        return Point(a * p.x + b * p.y, c * p.x + d * p.y)

    def __matmul__(self, other: LinearPart) -> LinearPart:
        a, b, c, d = self.value
        e, f, g, h = other.value
        return LinearPart((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    @property
    def inverse(self) -> LinearPart:
        a, b, c, d = self.value
        # signed permutation matrices are orthogonal
        return LinearPart((a, c, b, d))

    @property
    def determinant(self) -> int:
        a, b, c, d = self.value
        return a * d - b * c


QUARTER_TURNS = (LinearPart.identity, LinearPart.rot2, LinearPart.rot4, LinearPart.rot6)

SPECIAL_AXES = {
    "y=x": LinearPart.reflect_y_eq_x,
    "y=-x": LinearPart.reflect_y_eq_neg_x,
    "y=0": LinearPart.reflect_x_axis,
    "x=0": LinearPart.reflect_y_axis,
}


@dataclass(frozen=True, slots=True)
class Isometry:
    linear: LinearPart = LinearPart.identity
    translation: Point = ORIGIN

    def __call__(self, p: Point) -> Point:
        return self.linear(p) + self.translation

    def __matmul__(self, other: Isometry) -> Isometry:
        return compose(self, other)

    def __str__(self) -> str:
        return f"linear={self.linear.name} t={self.translation}"

    @classmethod
    def parse(cls, text: str) -> Isometry:
        """Inverse of ``str``: ``linear=<name> t=<x>,<y>``."""
        m = re.fullmatch(r"linear=(\w+) t=(\S+)", text.strip())
        if m is None:
            raise ValueError(f"malformed isometry: {text!r}")
        try:
            linear = LinearPart[m.group(1)]
        except KeyError:
            raise ValueError(f"unknown linear part {m.group(1)!r}") from None
        return cls(linear, Point.parse(m.group(2)))

    def to_affine(self) -> AffineMap:
        return AffineMap(tuple(Fraction(v) for v in self.linear.value), self.translation)


IDENTITY = Isometry()


def translation(v: Point) -> Isometry:
    return Isometry(LinearPart.identity, v)


def _about(linear: LinearPart, center: Point) -> Isometry:
    # conjugate by the translation moving center to the origin
    return Isometry(linear, center - linear(center))


def rotation_2n(n: int, center: Point = ORIGIN) -> Isometry:
    """Rotation by ``2n`` t-radians (n quarter turns) counterclockwise about ``center``."""
    return _about(QUARTER_TURNS[n % 4], center)


def reflection_special(axis: str, through: Point = ORIGIN) -> Isometry:
    """Reflection across a line parallel to one of ``y=x, y=-x, y=0, x=0`` through ``through``."""
    try:
        linear = SPECIAL_AXES[axis]
    except KeyError:
        raise DomainError(f"not a special axis: {axis!r}") from None
    return _about(linear, through)


def compose(f: Isometry, g: Isometry) -> Isometry:
    """``f`` after ``g``."""
    return Isometry(f.linear @ g.linear, f.linear(g.translation) + f.translation)


def apply(f: Isometry, p: Point) -> Point:
    return f(p)


def invert(f: Isometry) -> Isometry:
    inv = f.linear.inverse
    return Isometry(inv, -inv(f.translation))


def group_elements(center: Point = ORIGIN) -> list[Isometry]:
    """The eight linear parts acting about ``center``, in enumeration order."""
    return [_about(linear, center) for linear in LinearPart]


# -- general taxicab motions -------------------------------------------------


def taxicab_rotate(p: Point, center: Point, theta: ScalarLike) -> Point:
    """Slide ``p`` counterclockwise along its taxicab circle about ``center``.

    The circle has radius ``d_T(p, center)`` and the point travels an arc of
    ``theta * radius``, so the angle swept at ``center`` is ``theta``
    t-radians (taken modulo a full turn).
    """
    theta = to_scalar(theta)
    if theta < 0:
        raise DomainError(f"rotation amount must be nonnegative, got {theta}")
    if p == center:
        raise DegenerateInputError("cannot rotate the center about itself")
    circle = TaxicabCircle(center, taxicab_distance(p, center))
    return circle_point_at_arc(circle, arc_position(circle, p) + (theta % FULL_TURN) * circle.radius)


def taxicab_reflect(p: Point, line: Line) -> Point:
    """Reflect ``p`` across ``line``: PP' is perpendicular to the line and bisected by it."""
    a, b, c = line.a, line.b, line.c
    k = 2 * (a * p.x + b * p.y - c) / (a * a + b * b)
    return Point(p.x - k * a, p.y - k * b)


# -- affine candidates and the isometry decision -----------------------------


@dataclass(frozen=True, slots=True)
class AffineMap:
    """``p -> M p + offset`` with ``matrix = (a, b, c, d)`` for [[a, b], [c, d]]."""

    matrix: tuple[Fraction, Fraction, Fraction, Fraction]
    offset: Point = ORIGIN

    def __post_init__(self) -> None:
        if len(self.matrix) != 4:
            raise ValueError("affine matrix needs exactly four entries")
        object.__setattr__(self, "matrix", tuple(to_scalar(v) for v in self.matrix))

    def __call__(self, p: Point) -> Point:
        a, b, c, d = self.matrix
        return Point(a * p.x + b * p.y + self.offset.x, c * p.x + d * p.y + self.offset.y)

    def linear_part(self) -> Optional[LinearPart]:
        """The matching signed permutation, or None when the matrix is not one."""
        for lp in LinearPart:
            if all(Fraction(u) == v for u, v in zip(lp.value, self.matrix)):
                return lp
        return None

    def as_isometry(self) -> Optional[Isometry]:
        lp = self.linear_part()
        return None if lp is None else Isometry(lp, self.offset)


PointPair = tuple[Point, Point]

WITNESS_GRID = 4


def grid_pairs(bound: int = WITNESS_GRID) -> Iterator[PointPair]:
    """Unordered pairs of distinct integer points with |coordinates| <= bound.

    Points are ordered by taxicab norm, then counterclockwise from the
    positive x-axis, so ``(0,0), (1,0), (0,1), (-1,0), (0,-1), (2,0), ...``;
    pair ``(pts[i], pts[j])`` with ``i < j`` comes in order of ``j``, then ``i``.
    """
    rng = range(-bound, bound + 1)

    def key(p: Point):
        n = p.norm1()
        return (n, arc_position(TaxicabCircle(ORIGIN, n), p) if n else 0)

    pts = sorted((Point(x, y) for x in rng for y in rng), key=key)
    for j in range(len(pts)):
        for i in range(j):
            yield pts[i], pts[j]


def find_distance_witness(
    f: Callable[[Point], Point], pairs: Optional[Iterable[PointPair]] = None
) -> Optional[PointPair]:
    """First pair whose taxicab distance ``f`` changes, or None."""
    for p, q in grid_pairs() if pairs is None else pairs:
        if taxicab_distance(p, q) != taxicab_distance(f(p), f(q)):
            return p, q
    return None


def is_taxicab_isometry_affine(m: AffineMap) -> tuple[bool, Optional[PointPair]]:
    """Decide whether an affine map preserves taxicab distance.

    It does exactly when the matrix is a signed permutation. Otherwise a
    witness pair is returned; one of ``(0,0)-(1,0)``, ``(0,0)-(0,1)``,
    ``(1,0)-(0,1)``, ``(0,0)-(1,1)`` always works, and all of them are
    on the search grid.
    """
    if m.linear_part() is not None:
        return True, None
    witness = find_distance_witness(m)
    assert witness is not None, "non-permutation matrix with no grid witness"
    return False, witness


@dataclass(frozen=True)
class SampleReport:
    passed: bool
    checked: int
    first_failure: Optional[PointPair] = None
    distances: Optional[tuple[Fraction, Fraction]] = None

    def __str__(self) -> str:
        if self.passed:
            return f"pass ({self.checked} pairs)"
        p, q = self.first_failure
        before, after = self.distances
        return (
            f"fail at ({p}) ({q}): distance {format_scalar(before)} "
            f"became {format_scalar(after)}"
        )


def verify_isometry_samples(m: Callable[[Point], Point], pairs: Sequence[PointPair]) -> SampleReport:
    """Check ``d_T(p, q) == d_T(m(p), m(q))`` on every supplied pair."""
    if not pairs:
        raise DomainError("need at least one point pair to check")
    for n, (p, q) in enumerate(pairs, start=1):
        before = taxicab_distance(p, q)
        after = taxicab_distance(m(p), m(q))
        if before != after:
            return SampleReport(False, n, (p, q), (before, after))
    return SampleReport(True, len(pairs))


def parse_generator(token: str) -> Isometry:
    """Parse one CLI generator token.

    ``translate=X,Y``, ``rotate=N[@X,Y]``, ``reflect=AXIS[@X,Y]`` (AXIS one of
    ``y=x``, ``y=-x``, ``y=0``, ``x=0``), or ``linear=<name>`` optionally
    followed by ``;t=X,Y``.
    """
    kind, sep, rest = token.partition("=")
    if not sep:
        raise ValueError(f"malformed generator {token!r}")
    body, _, at = rest.partition("@")
    center = Point.parse(at) if at else ORIGIN
    if kind == "translate":
        return translation(Point.parse(rest))
    if kind == "rotate":
        try:
            n = int(body)
        except ValueError:
            raise ValueError(f"rotation count must be an integer, got {body!r}") from None
        return rotation_2n(n, center)
    if kind == "reflect":
        if body not in SPECIAL_AXES:
            raise ValueError(f"unknown reflection axis {body!r}")
        return reflection_special(body, center)
    if kind == "linear":
        name, _, t = rest.partition(";t=")
        return Isometry.parse(f"linear={name} t={t or '0,0'}")
    raise ValueError(f"unknown generator kind {kind!r}")
