"""Angle measure in t-radians.

An angle is measured by dropping both of its rays onto the unit taxicab
circle about the vertex and reading off the arc between them. A full turn is
8, a right angle 2, a straight angle 4.
"""

from __future__ import annotations

from fractions import Fraction

from .circle import arc_length_ccw, ray_circle_intersection, unit_circle
from .geometry import DegenerateInputError, DomainError, Point, ScalarLike, to_scalar

FULL_TURN = Fraction(8)
STRAIGHT = Fraction(4)
RIGHT = Fraction(2)


def angle_standard_position(slope: ScalarLike) -> Fraction:
    """Measure of the acute angle from the positive x-axis to a ray of ``slope``."""
    m = to_scalar(slope)
    if m <= 0:
        raise DomainError(f"standard-position formula needs slope > 0, got {m}")
    return 2 - 2 / (1 + m)


def directed_arc(vertex: Point, p: Point, q: Point) -> Fraction:
    """Counterclockwise measure from ray ``vertex->p`` to ray ``vertex->q``, in [0, 8)."""
    if p == vertex or q == vertex:
        raise DegenerateInputError(f"ray endpoint coincides with vertex {vertex}")
    c = unit_circle(vertex)
    up = ray_circle_intersection(c, p - vertex)
    uq = ray_circle_intersection(c, q - vertex)
    return arc_length_ccw(c, up, uq)


def angle_measure(vertex: Point, p: Point, q: Point) -> Fraction:
    """Undirected measure of angle p-vertex-q, in [0, 4]."""
    arc = directed_arc(vertex, p, q)
    return min(arc, FULL_TURN - arc)


def is_right_angle(vertex: Point, p: Point, q: Point) -> bool:
    return angle_measure(vertex, p, q) == RIGHT
