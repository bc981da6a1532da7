from fractions import Fraction as F

import pytest
from conftest import points, positive_rationals
from hypothesis import given
from hypothesis import strategies as st
from oracles import corner_walk

from taxicab.circle import (
    Side,
    TaxicabCircle,
    arc_length_ccw,
    circle_point_at_arc,
    point_on_circle,
    ray_circle_intersection,
    unit_circle,
)
from taxicab.geometry import DegenerateInputError, DomainError, Point, taxicab_distance

O = Point(0, 0)
UNIT = unit_circle(O)


def test_point_on_circle_examples():
    c = TaxicabCircle(O, F(4))
    pos = point_on_circle(c, Point(F(3, 2), F(5, 2)))
    assert pos.side is Side.S1 and not pos.is_corner
    east = point_on_circle(c, Point(4, 0))
    assert east.side is Side.S1 and east.corner == (Side.S4, Side.S1)
    assert point_on_circle(c, Point(1, 1)) is None


@pytest.mark.parametrize(
    "p, side, corner",
    [
        (Point(0, 4), Side.S2, (Side.S1, Side.S2)),
        (Point(-4, 0), Side.S3, (Side.S2, Side.S3)),
        (Point(0, -4), Side.S4, (Side.S3, Side.S4)),
        (Point(-1, 3), Side.S2, None),
        (Point(-1, -3), Side.S3, None),
        (Point(1, -3), Side.S4, None),
    ],
)
def test_point_on_circle_all_sides(p, side, corner):
    pos = point_on_circle(TaxicabCircle(O, F(4)), p)
    assert pos.side is side and pos.corner == corner


def test_nonpositive_radius_rejected():
    with pytest.raises(DomainError):
        TaxicabCircle(O, F(0))


@pytest.mark.parametrize(
    "s, expected", [(0, Point(1, 0)), (2, Point(0, 1)), (1, Point(F(1, 2), F(1, 2))), (8, Point(1, 0)), (-2, Point(0, -1))]
)
def test_circle_point_at_arc_examples(s, expected):
    assert circle_point_at_arc(UNIT, s) == expected


def test_arc_length_examples():
    assert arc_length_ccw(UNIT, Point(1, 0), Point(0, 1)) == 2
    assert arc_length_ccw(UNIT, Point(1, 0), Point(1, 0)) == 0
    # frozen from the corner-walk oracle: 3/2 along S1, then 1 along S2
    assert corner_walk(O, F(1), Point(F(3, 4), F(1, 4)), Point(F(-1, 2), F(1, 2))) == F(5, 2)
    assert arc_length_ccw(UNIT, Point(F(3, 4), F(1, 4)), Point(F(-1, 2), F(1, 2))) == F(5, 2)


def test_arc_length_off_circle():
    with pytest.raises(DomainError, match="1,1"):
        arc_length_ccw(UNIT, Point(1, 0), Point(1, 1))


@pytest.mark.parametrize(
    "c, d, expected",
    [
        (UNIT, Point(3, 1), Point(F(3, 4), F(1, 4))),
        (UNIT, Point(0, -5), Point(0, -1)),
        (TaxicabCircle(O, F(4)), Point(-2, -2), Point(-2, -2)),
        (TaxicabCircle(Point(1, 1), F(2)), Point(1, -1), Point(2, 0)),
    ],
)
def test_ray_circle_intersection_examples(c, d, expected):
    assert ray_circle_intersection(c, d) == expected


def test_ray_zero_direction():
    with pytest.raises(DegenerateInputError):
        ray_circle_intersection(UNIT, Point(0, 0))


circles = st.builds(TaxicabCircle, points, positive_rationals)
arcs = st.fractions(min_value=-50, max_value=50, max_denominator=16)


@given(circles, arcs)
def test_arc_points_lie_on_circle(c, s):
    p = circle_point_at_arc(c, s)
    assert taxicab_distance(p, c.center) == c.radius
    assert point_on_circle(c, p) is not None


@given(circles, st.fractions(min_value=0, max_value=1, max_denominator=64))
def test_arc_round_trip(c, frac):
    s = frac * c.perimeter
    if s == c.perimeter:
        return
    start = circle_point_at_arc(c, 0)
    assert arc_length_ccw(c, start, circle_point_at_arc(c, s)) == s


@given(circles, arcs, arcs)
def test_arc_length_matches_corner_walk(c, s, t):
    a, b = circle_point_at_arc(c, s), circle_point_at_arc(c, t)
    assert arc_length_ccw(c, a, b) == corner_walk(c.center, c.radius, a, b)


@given(circles, arcs, arcs)
def test_arc_complementarity(c, s, t):
    a, b = circle_point_at_arc(c, s), circle_point_at_arc(c, t)
    if a == b:
        assert arc_length_ccw(c, a, b) == 0
    else:
        assert arc_length_ccw(c, a, b) + arc_length_ccw(c, b, a) == c.perimeter


@given(circles)
def test_perimeter_is_sum_of_sides(c):
    cs = c.corners()
    total = sum(taxicab_distance(cs[i], cs[(i + 1) % 4]) for i in range(4))
    assert total == c.perimeter == 8 * c.radius


@given(circles, arcs, arcs)
def test_scale_covariance(c, s, t):
    big = TaxicabCircle(c.center, 2 * c.radius)

    def scaled(p):
        return c.center + (p - c.center).scale(2)

    a, b = circle_point_at_arc(c, s), circle_point_at_arc(c, t)
    assert arc_length_ccw(big, scaled(a), scaled(b)) == 2 * arc_length_ccw(c, a, b)
