"""Exact scalars, points, lines and the two planar metrics.

Every coordinate is a :class:`fractions.Fraction`; nothing in this package
touches floating point until SVG pixels are formatted.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_LITERAL = re.compile(r"[+-]?(?:\d+(?:/\d+)?|\d+\.\d*|\.\d+)")


class GeometryError(ValueError):
    """Base class for input errors raised by the kernel."""


class DegenerateInputError(GeometryError):
    """Coincident points, zero directions, collinear triangles."""


class DomainError(GeometryError):
    """An argument lies outside an operation's domain."""


def parse_scalar(text: str) -> Fraction:
    """Parse ``INT``, ``INT/INT`` or a finite decimal such as ``1.5``."""
    if not _LITERAL.fullmatch(text):
        raise ValueError(f"malformed rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in literal: {text!r}") from None


def format_scalar(value: Fraction) -> str:
    """Canonical literal: ``p/q`` in lowest terms, bare integer when q == 1."""
    return str(Fraction(value))


def to_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", to_scalar(self.x))
        object.__setattr__(self, "y", to_scalar(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scale(self, k: ScalarLike) -> Point:
        k = to_scalar(k)
        return Point(self.x * k, self.y * k)

    def norm1(self) -> Fraction:
        """Taxicab length of the point read as a vector."""
        return abs(self.x) + abs(self.y)

    def __str__(self) -> str:
        return f"{format_scalar(self.x)},{format_scalar(self.y)}"

    @classmethod
    def parse(cls, text: str) -> Point:
        """Parse the ``x,y`` token form used on the command line."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected a point 'x,y', got {text!r}")
        return cls(parse_scalar(parts[0]), parse_scalar(parts[1]))


ORIGIN = Point(0, 0)


def taxicab_distance(p: Point, q: Point) -> Fraction:
    return abs(p.x - q.x) + abs(p.y - q.y)


def euclidean_distance_squared(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


@dataclass(frozen=True, slots=True)
class Line:
    """The line ``a*x + b*y = c``.

    Construct through :meth:`from_coefficients` (or :func:`line_through`) to
    get the normalized triple: integer coefficients with gcd 1 and the first
    nonzero of ``(a, b)`` positive, so equal lines compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def from_coefficients(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> Line:
        a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
        if a == 0 and b == 0:
            raise DegenerateInputError("line needs a or b nonzero")
        lcm = math.lcm(a.denominator, b.denominator, c.denominator)
        ints = [int(v * lcm) for v in (a, b, c)]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
            ints = [-v for v in ints]
        return cls(*(Fraction(v) for v in ints))

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    @property
    def direction(self) -> Point:
        return Point(self.b, -self.a)

    def __str__(self) -> str:
        return f"{format_scalar(self.a)}*x + {format_scalar(self.b)}*y = {format_scalar(self.c)}"


def line_through(a: Point, b: Point) -> Line:
    if a == b:
        raise DegenerateInputError(f"line through coincident points {a}")
    ca = b.y - a.y
    cb = a.x - b.x
    return Line.from_coefficients(ca, cb, ca * a.x + cb * a.y)


def is_perpendicular(l1: Line, l2: Line) -> bool:
    d1, d2 = l1.direction, l2.direction
    return d1.x * d2.x + d1.y * d2.y == 0
