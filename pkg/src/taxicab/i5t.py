"""Base angles of isosceles triangles in the taxicab plane.

An isosceles triangle with apex O and equal legs OP, OQ is moved by a group
isometry so that O is the origin, then classified by the quadrants holding P
and Q:

* same quadrant: base angles are equal iff |x_P| = |y_Q| and |x_Q| = |y_P|
* adjacent quadrants: equal iff |x_P| = |x_Q| and |y_P| = |y_Q|
* opposing quadrants: always equal

Points on an axis belong to both neighbouring quadrants, so one pair can
qualify for several configurations; the equality condition holds when the
condition of any qualifying configuration holds.

The closed-form base angles are evaluated on a canonical image of the
triangle. Writing A for the leg endpoint met first when sweeping the apex
angle counterclockwise and B for the other one, the canonical images are

1. A and B in (closed) quadrant I,
2. A in quadrant I, B in quadrant II, with y_A >= y_B,
3. A in quadrant I, B in quadrant III,

and alpha, beta are the base angles at A and B respectively. Every report
also measures both angles directly on the input triangle and records whether
the two routes agree.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .angles import angle_measure
from .geometry import (
    ORIGIN,
    DegenerateInputError,
    DomainError,
    Point,
    format_scalar,
    taxicab_distance,
)
from .isometry import Isometry, LinearPart, compose, translation


class Kind(enum.Enum):
    same_quadrant = "same_quadrant"
    adjacent_quadrants = "adjacent_quadrants"
    opposing_quadrants = "opposing_quadrants"


# classification reports the strongest qualifying kind
_PRECEDENCE = (Kind.opposing_quadrants, Kind.adjacent_quadrants, Kind.same_quadrant)


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    all_kinds: frozenset[Kind]


@dataclass(frozen=True)
class IsoscelesTriangle:
    apex: Point
    p: Point
    q: Point

    def __post_init__(self) -> None:
        leg_p = taxicab_distance(self.p, self.apex)
        leg_q = taxicab_distance(self.q, self.apex)
        if leg_p == 0 or leg_q == 0:
            raise DegenerateInputError("a leg endpoint coincides with the apex")
        if leg_p != leg_q:
            raise DomainError(
                f"legs differ: {format_scalar(leg_p)} vs {format_scalar(leg_q)}"
            )
        u, v = self.p - self.apex, self.q - self.apex
        if u.x * v.y - u.y * v.x == 0:
            raise DegenerateInputError("apex and leg endpoints are collinear")

    @property
    def leg(self) -> Fraction:
        return taxicab_distance(self.p, self.apex)


def quadrants(p: Point) -> frozenset[int]:
    """Closed quadrants (1..4) containing ``p``; axis points get two."""
    if p == ORIGIN:
        raise DegenerateInputError("the origin lies in every quadrant")
    qs = set()
    if p.x >= 0 and p.y >= 0:
        qs.add(1)
    if p.x <= 0 and p.y >= 0:
        qs.add(2)
    if p.x <= 0 and p.y <= 0:
        qs.add(3)
    if p.x >= 0 and p.y <= 0:
        qs.add(4)
    return frozenset(qs)


def _relation(a: int, b: int) -> Kind:
    if a == b:
        return Kind.same_quadrant
    if (a - b) % 4 == 2:
        return Kind.opposing_quadrants
    return Kind.adjacent_quadrants


def classify_configuration(p: Point, q: Point) -> Configuration:
    kinds = frozenset(_relation(a, b) for a in quadrants(p) for b in quadrants(q))
    primary = next(k for k in _PRECEDENCE if k in kinds)
    return Configuration(primary, kinds)


def _kind_condition(kind: Kind, p: Point, q: Point) -> bool:
    if kind is Kind.same_quadrant:
        return abs(p.x) == abs(q.y) and abs(q.x) == abs(p.y)
    if kind is Kind.adjacent_quadrants:
        return abs(p.x) == abs(q.x) and abs(p.y) == abs(q.y)
    return True


def _check_origin_pair(p: Point, q: Point) -> None:
    # reuses the triangle invariants with the apex pinned at the origin
    IsoscelesTriangle(ORIGIN, p, q)


def i5t_condition(p: Point, q: Point) -> bool:
    """Predicted base-angle equality for legs OP, OQ with O at the origin."""
    _check_origin_pair(p, q)
    config = classify_configuration(p, q)
    return any(_kind_condition(k, p, q) for k in config.all_kinds)


# -- canonical orientations and closed forms ---------------------------------


def ccw_order(p: Point, q: Point) -> tuple[Point, Point]:
    """Order two leg endpoints so the apex angle sweeps counterclockwise from the first."""
    # arc position on a taxicab circle is monotone in Euclidean angle, so the
    # short arc runs counterclockwise from p exactly when p x q > 0
    if p.x * q.y - p.y * q.x > 0:
        return p, q
    return q, p


def canonical_case(p: Point, q: Point) -> Optional[int]:
    """Which canonical orientation (1, 2 or 3) the pair is in, if any."""
    a, b = ccw_order(p, q)
    if a.x < 0 or a.y < 0:
        return None
    if b.x >= 0 and b.y >= 0:
        return 1
    if b.x <= 0 and b.y >= 0 and a.y >= b.y:
        return 2
    if b.x <= 0 and b.y <= 0:
        return 3
    return None


def _closed_form(case: int, a: Point, b: Point) -> tuple[Fraction, Fraction]:
    r = a.norm1()
    if case == 1:
        return 3 - 2 * a.x / r, 3 - 2 * b.y / r
    if case == 2:
        x0, y0, x1, y1 = a.x, a.y, -b.x, b.y
        chord = x0 + x1 + y0 - y1
        return (
            2 * (x0 + x1) / chord - 2 * x0 / r,
            4 - 2 * (x0 + x1) / chord - 2 * x1 / r,
        )
    x0, y0, x1, y1 = a.x, a.y, -b.x, -b.y
    return (y0 - y1) / r, (x1 - x0) / r


def base_angles(p: Point, q: Point) -> tuple[Fraction, Fraction]:
    """Closed-form base angles ``(alpha, beta)`` of a canonical pair.

    ``alpha`` is the angle at the counterclockwise-first endpoint and
    ``beta`` the angle at the other; argument order does not matter.
    """
    _check_origin_pair(p, q)
    case = canonical_case(p, q)
    if case is None:
        raise DomainError(
            f"pair ({p}) ({q}) is not in a canonical orientation; "
            "pass it through normalize_triangle first"
        )
    return _closed_form(case, *ccw_order(p, q))


@dataclass(frozen=True)
class _Normal:
    isometry: Isometry
    p: Point
    q: Point
    case: int
    alpha: Fraction
    beta: Fraction


def _normalize(t: IsoscelesTriangle) -> _Normal:
    # Among all eight images, take the lowest case, then the smallest
    # (alpha, beta); the choice depends only on the orbit of the triangle,
    # which is what makes reports isometry invariant.
    shift = translation(-t.apex)
    best = None
    for index, linear in enumerate(LinearPart):
        f = compose(Isometry(linear), shift)
        p, q = f(t.p), f(t.q)
        case = canonical_case(p, q)
        if case is None:
            continue
        alpha, beta = _closed_form(case, *ccw_order(p, q))
        key = (case, alpha, beta, index)
        if best is None or key < best[0]:
            best = key, _Normal(f, p, q, case, alpha, beta)
    assert best is not None, f"no canonical image for {t}"
    return best[1]


def normalize_triangle(t: IsoscelesTriangle) -> tuple[Isometry, Point, Point]:
    """Group isometry taking the apex to the origin and the legs to a canonical case.

    Returns the isometry and the images of ``t.p`` and ``t.q``.
    """
    n = _normalize(t)
    return n.isometry, n.p, n.q


@dataclass(frozen=True)
class I5TReport:
    configuration: Configuration
    alpha: Fraction
    beta: Fraction
    condition_predicted: bool
    angles_equal_measured: bool
    agreement: bool
    normalizing_isometry: Isometry
    canonical_case: int
    alpha_measured: Fraction
    beta_measured: Fraction

    @property
    def closed_form_matches(self) -> bool:
        return (self.alpha, self.beta) == (self.alpha_measured, self.beta_measured)

    def summary(self) -> tuple[Fraction, Fraction, bool, bool]:
        """The isometry-invariant part of the report."""
        return self.alpha, self.beta, self.condition_predicted, self.agreement

    def to_dict(self) -> dict[str, object]:
        return {
            "configuration": self.configuration.kind.value,
            "all_kinds": ",".join(
                k.value for k in _PRECEDENCE[::-1] if k in self.configuration.all_kinds
            ),
            "canonical_case": self.canonical_case,
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
            "alpha_measured": format_scalar(self.alpha_measured),
            "beta_measured": format_scalar(self.beta_measured),
            "closed_form_matches": self.closed_form_matches,
            "condition_predicted": self.condition_predicted,
            "angles_equal_measured": self.angles_equal_measured,
            "agreement": self.agreement,
            "normalizing_isometry": str(self.normalizing_isometry),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def i5t_analyze(t: IsoscelesTriangle) -> I5TReport:
    n = _normalize(t)
    a, _ = ccw_order(n.p, n.q)
    # measure on the input triangle, not on the normalized image
    first, second = (t.p, t.q) if a == n.p else (t.q, t.p)
    alpha_m = angle_measure(first, t.apex, second)
    beta_m = angle_measure(second, t.apex, first)
    rel_p, rel_q = t.p - t.apex, t.q - t.apex
    config = classify_configuration(rel_p, rel_q)
    predicted = any(_kind_condition(k, rel_p, rel_q) for k in config.all_kinds)
    measured_equal = alpha_m == beta_m
    return I5TReport(
        configuration=config,
        alpha=n.alpha,
        beta=n.beta,
        condition_predicted=predicted,
        angles_equal_measured=measured_equal,
        agreement=predicted == measured_equal,
        normalizing_isometry=n.isometry,
        canonical_case=n.case,
        alpha_measured=alpha_m,
        beta_measured=beta_m,
    )
