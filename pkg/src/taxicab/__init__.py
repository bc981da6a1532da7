"""Exact geometry of the taxicab (L1) plane."""

__version__ = "0.1.0"

from .angles import angle_measure, angle_standard_position, directed_arc, is_right_angle
from .circle import (
    CirclePosition,
    Side,
    TaxicabCircle,
    arc_length_ccw,
    circle_point_at_arc,
    point_on_circle,
    ray_circle_intersection,
)
from .geometry import (
    DegenerateInputError,
    DomainError,
    GeometryError,
    Line,
    Point,
    euclidean_distance_squared,
    format_scalar,
    is_perpendicular,
    line_through,
    midpoint,
    parse_scalar,
    taxicab_distance,
)
from .i5t import (
    Configuration,
    I5TReport,
    IsoscelesTriangle,
    Kind,
    base_angles,
    classify_configuration,
    i5t_analyze,
    i5t_condition,
    normalize_triangle,
)
from .isometry import (
    AffineMap,
    Isometry,
    LinearPart,
    apply,
    compose,
    invert,
    is_taxicab_isometry_affine,
    reflection_special,
    rotation_2n,
    taxicab_reflect,
    taxicab_rotate,
    translation,
    verify_isometry_samples,
)
