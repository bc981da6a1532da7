"""Exit criteria, one test per criterion, all at exact (zero-tolerance) equality.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL table printed at
the end of the session.
"""

import io
import itertools
import random
import time
from fractions import Fraction as F

import pytest
from conftest import GOLDEN
from oracles import angle_oracle, corner_walk

from taxicab.angles import angle_measure, angle_standard_position
from taxicab.circle import TaxicabCircle, arc_length_ccw, circle_point_at_arc
from taxicab.cli import run_command
from taxicab.geometry import Point, format_scalar, parse_scalar, taxicab_distance
from taxicab.i5t import IsoscelesTriangle, base_angles, ccw_order, i5t_analyze
from taxicab.isometry import (
    AffineMap,
    Isometry,
    LinearPart,
    SPECIAL_AXES,
    apply,
    compose,
    find_distance_witness,
    grid_pairs,
    invert,
    is_taxicab_isometry_affine,
    reflection_special,
    rotation_2n,
    taxicab_reflect,
    taxicab_rotate,
    translation,
    verify_isometry_samples,
)
from taxicab.geometry import Line
from taxicab.svg import FIGURES

O = Point(0, 0)


def rand_scalar(rng, span=50, den=12):
    return F(rng.randint(-span * den, span * den), rng.randint(1, den))


def rand_point(rng, span=50, den=12):
    return Point(rand_scalar(rng, span, den), rand_scalar(rng, span, den))


def rand_nonzero(rng):
    while True:
        p = rand_point(rng)
        if p != O:
            return p


def rand_isometry(rng):
    return Isometry(rng.choice(list(LinearPart)), rand_point(rng))


@pytest.mark.criterion(1, "standard-position formula equals arc-length oracle for 2500 slopes")
def test_c1_angle_formula_equivalence():
    start = time.perf_counter()
    mismatches = [
        (p, q)
        for p in range(1, 51)
        for q in range(1, 51)
        if angle_standard_position(F(p, q)) != angle_oracle(O, Point(1, 0), Point(q, p))
    ]
    elapsed = time.perf_counter() - start
    assert mismatches == []
    assert elapsed < 1.0, f"took {elapsed:.2f}s"


@pytest.mark.criterion(2, "right angles measure exactly 2")
def test_c2_right_angles():
    assert angle_measure(O, Point(1, 0), Point(0, 1)) == 2
    rng = random.Random(2)
    for _ in range(200):
        v, d = rand_point(rng), rand_nonzero(rng)
        k = rand_scalar(rng)
        while k == 0:
            k = rand_scalar(rng)
        p, q = v + d, v + Point(-d.y, d.x).scale(k)
        assert angle_measure(v, p, q) == 2
        assert angle_oracle(v, p, q) == 2


@pytest.mark.criterion(3, "full counterclockwise arc is exactly 8r")
def test_c3_perimeter():
    for r in (F(1), F(2), F(7, 3), F(100)):
        for center in (O, Point(F(-5, 2), F(1, 3))):
            c = TaxicabCircle(center, r)
            cs = c.corners() + c.corners()[:1]
            total = sum(arc_length_ccw(c, a, b) for a, b in zip(cs, cs[1:]))
            assert total == 8 * r == c.perimeter
            assert sum(corner_walk(center, r, a, b) for a, b in zip(cs, cs[1:])) == 8 * r
            # a full lap from a generic point: just short of the start plus the last step
            start = circle_point_at_arc(c, r / 3)
            almost = circle_point_at_arc(c, r / 3 - r / 7)
            assert arc_length_ccw(c, start, almost) + arc_length_ccw(c, almost, start) == 8 * r


@pytest.mark.criterion(4, "generator families preserve taxicab distance")
def test_c4_generator_isometries():
    rng = random.Random(4)
    centers = [rand_point(rng) for _ in range(5)]
    families = {
        "translation": [translation(rand_point(rng)) for _ in range(5)],
        "rotation": [rotation_2n(n, c) for n in range(4) for c in centers],
        "reflection": [reflection_special(a, c) for a in SPECIAL_AXES for c in centers],
    }
    assert len(families["rotation"]) == 20 and len(families["reflection"]) == 20
    for fam, maps in families.items():
        for f in maps:
            pairs = [(rand_point(rng), rand_point(rng)) for _ in range(200)]
            report = verify_isometry_samples(f, pairs)
            assert report.passed, (fam, str(f), str(report))


@pytest.mark.criterion(5, "dihedral table closed; compose/invert/apply identities")
def test_c5_group_closure():
    elements = list(LinearPart)
    products = [a @ b for a in elements for b in elements]
    assert len(products) == 64 and set(products) == set(elements)
    probe = Point(2, 7)
    for a, b in itertools.product(elements, repeat=2):
        assert (a @ b)(probe) == a(b(probe))
    rng = random.Random(5)
    for _ in range(500):
        f, g, h = rand_isometry(rng), rand_isometry(rng), rand_isometry(rng)
        p = rand_point(rng)
        assert compose(f, compose(g, h)) == compose(compose(f, g), h)
        assert compose(f, invert(f)) == Isometry() == compose(invert(f), f)
        assert apply(compose(f, g), p) == apply(f, apply(g, p))


@pytest.mark.criterion(6, "taxicab rotation by 2 equals (x,y) -> (-y,x) on [-10,10]^2")
def test_c6_rotation_equivalence():
    count = 0
    for x, y in itertools.product(range(-10, 11), repeat=2):
        if (x, y) == (0, 0):
            continue
        assert taxicab_rotate(Point(x, y), O, 2) == Point(-y, x)
        count += 1
    assert count == 440


@pytest.mark.criterion(7, "negative controls have verified witnesses")
def test_c7_negative_controls():
    for matrix in [(1, 1, 0, 1), (F(3, 5), F(-4, 5), F(4, 5), F(3, 5))]:
        m = AffineMap(matrix)
        ok, witness = is_taxicab_isometry_affine(m)
        assert not ok
        assert not verify_isometry_samples(m, [witness]).passed

    off_center = [(p, q) for p, q in grid_pairs() if O not in (p, q)]

    def rot1(z):
        return taxicab_rotate(z, O, 1)

    w = find_distance_witness(rot1, off_center)
    assert w is not None and w == find_distance_witness(rot1, off_center)
    assert taxicab_distance(rot1(w[0]), rot1(w[1])) != taxicab_distance(*w)

    y2x = Line.from_coefficients(2, -1, 0)

    def refl(z):
        return taxicab_reflect(z, y2x)

    w = find_distance_witness(refl)
    assert w is not None
    assert taxicab_distance(refl(w[0]), refl(w[1])) != taxicab_distance(*w)


@pytest.mark.criterion(8, "exhaustive sweep on |x|+|y|=12: condition iff equal base angles")
def test_c8_i5t_sweep():
    start = time.perf_counter()
    pts = [Point(x, y) for x in range(-12, 13) for y in range(-12, 13) if abs(x) + abs(y) == 12]
    assert len(pts) == 48
    ordered = [(p, q) for p in pts for q in pts if p != q]
    assert len(ordered) == 2256
    nondegenerate = [(p, q) for p, q in ordered if p != -q]
    disagreements, form_mismatch = [], []
    for p, q in nondegenerate:
        r = i5t_analyze(IsoscelesTriangle(O, p, q))
        if not r.agreement:
            disagreements.append((p, q))
        if not r.closed_form_matches:
            form_mismatch.append((p, q))
    elapsed = time.perf_counter() - start
    assert len(nondegenerate) == 2208
    assert disagreements == []
    assert form_mismatch == []
    assert elapsed < 5.0, f"took {elapsed:.2f}s"


@pytest.mark.criterion(9, "worked-figure base angles (3/2,7/4), (3/4,1), (3/8,3/8)")
def test_c9_worked_figures():
    p = Point(F(3, 2), F(5, 2))
    expected = {Point(3, 1): (F(3, 2), F(7, 4)), Point(-3, 1): (F(3, 4), F(1)), Point(-3, -1): (F(3, 8), F(3, 8))}
    for q, (alpha, beta) in expected.items():
        first, second = ccw_order(p, q)
        assert (angle_oracle(first, O, second), angle_oracle(second, O, first)) == (alpha, beta)
        assert base_angles(p, q) == (alpha, beta)
        report = i5t_analyze(IsoscelesTriangle(O, p, q))
        assert (report.alpha, report.beta) == (alpha, beta)
        assert (report.alpha_measured, report.beta_measured) == (alpha, beta)


@pytest.mark.criterion(10, "report tuple invariant under group isometries")
def test_c10_corollary_transport():
    rng = random.Random(10)
    made = 0
    while made < 100:
        apex = rand_point(rng)
        r = abs(rand_scalar(rng)) + F(1, 12)
        c = TaxicabCircle(apex, r)
        p = circle_point_at_arc(c, rand_scalar(rng))
        q = circle_point_at_arc(c, rand_scalar(rng))
        u, v = p - apex, q - apex
        if u.x * v.y - u.y * v.x == 0:
            continue
        made += 1
        base = i5t_analyze(IsoscelesTriangle(apex, p, q))
        assert base.agreement
        for _ in range(10):
            f = rand_isometry(rng)
            image = i5t_analyze(IsoscelesTriangle(f(apex), f(p), f(q)))
            assert image.summary() == base.summary()


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    return run_command(argv, stdout=out, stderr=err), out.getvalue()


@pytest.mark.criterion(11, "CLI golden outputs and rational round-trip")
def test_c11_cli():
    cases = {
        "dist.txt": ["dist", "0,0", "3,4"],
        "angle.txt": ["angle", "3,1", "0,0", "3/2,5/2"],
        "triangle-case1.txt": ["triangle", "0,0", "3/2,5/2", "3,1"],
        "triangle-case2.txt": ["triangle", "0,0", "3/2,5/2", "-3,1"],
        "triangle-case3.txt": ["triangle", "0,0", "3/2,5/2", "-3,-1"],
        **{f"figure-{n}.svg": ["figure", n] for n in FIGURES},
    }
    assert len([k for k in cases if k.startswith("figure-")]) == 6
    for name, argv in cases.items():
        code, out = _cli(argv)
        assert code == 0
        assert out == (GOLDEN / name).read_text(), name
        assert _cli(argv) == (code, out)
    rng = random.Random(11)
    for _ in range(200):
        s = rand_scalar(rng, span=10**6, den=10**6)
        assert parse_scalar(format_scalar(s)) == s
        code, out = _cli(["dist", f"{format_scalar(s)},0", "0,0"])
        assert code == 0 and parse_scalar(out.strip()) == abs(s)
