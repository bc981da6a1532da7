"""``taxi`` command line interface.

Points are single tokens ``x,y`` whose components are rational literals
(``3``, ``-3/2``, ``0.25``). Scalars print in canonical ``p/q`` form and
structured results as one line of JSON. Exit status is 0 on success, 2 on a
usage error and 1 when the kernel rejects the input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import __version__
from .angles import angle_measure, directed_arc
from .circle import (
    TaxicabCircle,
    arc_length_ccw,
    arc_position,
    circle_point_at_arc,
    point_on_circle,
)
from .geometry import (
    GeometryError,
    Point,
    euclidean_distance_squared,
    format_scalar,
    line_through,
    midpoint,
    parse_scalar,
    taxicab_distance,
)
from .i5t import IsoscelesTriangle, i5t_analyze
from .isometry import (
    IDENTITY,
    AffineMap,
    compose,
    is_taxicab_isometry_affine,
    parse_generator,
    taxicab_reflect,
    taxicab_rotate,
)
from .svg import FIGURES, emit_figure, svg_scale


class _Parser(argparse.ArgumentParser):
    # let "-3,1" and "-1/2" through as positionals instead of unknown options
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\.?\d")


def _point(text: str) -> Point:
    try:
        return Point.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _matrix(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"matrix needs four entries a,b,c,d, got {text!r}")
    return tuple(_scalar(p) for p in parts)


def _emit(out: TextIO, value) -> None:
    if isinstance(value, dict):
        out.write(json.dumps(value) + "\n")
    else:
        out.write(f"{value}\n")


def cmd_dist(args, out):
    if args.euclid2:
        return format_scalar(euclidean_distance_squared(args.p, args.q))
    return format_scalar(taxicab_distance(args.p, args.q))


def cmd_midpoint(args, out):
    return str(midpoint(args.a, args.b))


def cmd_angle(args, out):
    fn = directed_arc if args.directed else angle_measure
    return format_scalar(fn(args.vertex, args.p, args.q))


def cmd_circle(args, out):
    c = TaxicabCircle(args.center, args.radius)
    if args.at is not None:
        return str(circle_point_at_arc(c, args.at))
    if args.locate is not None:
        pos = point_on_circle(c, args.locate)
        if pos is None:
            return {"on_circle": False}
        return {
            "on_circle": True,
            "side": pos.side.name,
            "corner": None if pos.corner is None else "/".join(s.name for s in pos.corner),
            "arc_position": format_scalar(arc_position(c, args.locate)),
        }
    if args.arc is not None:
        return format_scalar(arc_length_ccw(c, *args.arc))
    return {
        "center": str(c.center),
        "radius": format_scalar(c.radius),
        "perimeter": format_scalar(c.perimeter),
        "corners": " ".join(str(p) for p in c.corners()),
    }


def cmd_rotate(args, out):
    return str(taxicab_rotate(args.p, args.center, args.theta))


def cmd_reflect(args, out):
    return str(taxicab_reflect(args.p, line_through(args.a, args.b)))


def cmd_isometry(args, out):
    if args.matrix is not None:
        if args.generators:
            raise _Usage("--matrix cannot be combined with generators")
        ok, witness = is_taxicab_isometry_affine(AffineMap(args.matrix, args.offset))
        result = {"isometry": ok}
        if witness is not None:
            m = AffineMap(args.matrix, args.offset)
            p, q = witness
            result.update(
                witness=f"{p} {q}",
                distance_before=format_scalar(taxicab_distance(p, q)),
                distance_after=format_scalar(taxicab_distance(m(p), m(q))),
            )
        return result
    f = IDENTITY
    for token in args.generators:
        try:
            g = parse_generator(token)
        except ValueError as exc:
            raise _Usage(str(exc)) from None
        f = compose(g, f)
    result = {"linear": f.linear.name, "translation": str(f.translation), "text": str(f)}
    if args.apply is not None:
        result["image"] = str(f(args.apply))
    return result


def cmd_triangle(args, out):
    return i5t_analyze(IsoscelesTriangle(args.apex, args.p, args.q)).to_dict()


def cmd_figure(args, out):
    svg = emit_figure(args.name).render(svg_scale())
    if args.output:
        Path(args.output).write_text(svg)
        return args.output
    out.write(svg)
    return None


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taxi", description="Exact taxicab-plane geometry.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dist", help="taxicab distance between two points")
    p.add_argument("p", type=_point)
    p.add_argument("q", type=_point)
    p.add_argument("--euclid2", action="store_true", help="squared Euclidean distance instead")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("midpoint", help="midpoint of a segment")
    p.add_argument("a", type=_point)
    p.add_argument("b", type=_point)
    p.set_defaults(func=cmd_midpoint)

    p = sub.add_parser("angle", help="t-radian measure of angle P-VERTEX-Q")
    p.add_argument("vertex", type=_point)
    p.add_argument("p", type=_point)
    p.add_argument("q", type=_point)
    p.add_argument("--directed", action="store_true", help="counterclockwise arc from P to Q, in [0,8)")
    p.set_defaults(func=cmd_angle)

    p = sub.add_parser("circle", help="taxicab circle queries")
    p.add_argument("center", type=_point)
    p.add_argument("radius", type=_scalar)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--at", type=_scalar, metavar="S", help="point at ccw arc length S from the east corner")
    g.add_argument("--locate", type=_point, metavar="P", help="side and arc position of P")
    g.add_argument("--arc", type=_point, nargs=2, metavar=("A", "B"), help="ccw arc length from A to B")
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("rotate", help="taxicab rotation of P about CENTER by THETA t-radians")
    p.add_argument("p", type=_point)
    p.add_argument("center", type=_point)
    p.add_argument("theta", type=_scalar)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("reflect", help="reflect P across the line through A and B")
    p.add_argument("p", type=_point)
    p.add_argument("a", type=_point)
    p.add_argument("b", type=_point)
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser(
        "isometry",
        help="compose group isometries, or test an affine map",
        description=(
            "Generators apply left to right: translate=X,Y  rotate=N[@X,Y]  "
            "reflect=AXIS[@X,Y] (AXIS in y=x, y=-x, y=0, x=0)  linear=NAME[;t=X,Y]."
        ),
    )
    p.add_argument("generators", nargs="*")
    p.add_argument("--apply", type=_point, metavar="P")
    p.add_argument("--matrix", type=_matrix, metavar="A,B,C,D")
    p.add_argument("--offset", type=_point, default=Point(0, 0), metavar="X,Y")
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("triangle", help="base-angle analysis of isosceles triangle APEX,P,Q")
    p.add_argument("apex", type=_point)
    p.add_argument("p", type=_point)
    p.add_argument("q", type=_point)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("figure", help="write one of the stock SVG figures")
    p.add_argument("name", choices=list(FIGURES))
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_figure)
    return parser


def run_command(
    argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
) -> int:
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args, out)
    except _Usage as exc:
        err.write(f"taxi {args.command}: usage error: {exc}\n")
        return 2
    except (GeometryError, ValueError) as exc:
        err.write(f"taxi {args.command}: error: {exc}\n")
        return 1
    if result is not None:
        _emit(out, result)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
