"""Two-watchman route approximation in simple polygons.

Computes pairs of closed tours that jointly see every point of a simple
polygon, minimizing (approximately) either the longer tour or the total
length, with tours either freely placed or forced through two given points.
"""

from .errors import (
    ClockwiseFixedUp,
    CollinearTriple,
    CoverageVerificationFailed,
    DegenerateTour,
    DuplicateVertex,
    EmptyInput,
    EmptyTarget,
    GeometryError,
    InvalidCut,
    NotAWatchmanRoute,
    PointOutsidePolygon,
    SegmentOutsidePolygon,
    SelfIntersecting,
    TargetNotOnEdge,
    UnknownKind,
    WrongCase,
)
from .geom_core import (
    Point,
    Region,
    SimplePolygon,
    Triangulation,
    kernel,
    orient,
    validate_polygon,
)
from .visibility import (
    VisibilityPolygon,
    sees,
    visibility_from_point,
    weak_visibility_from_segment,
)
from .geodesics import (
    GeodesicPath,
    ShortestPathTree,
    build_spt,
    shortest_path,
    shortest_path_points,
)
from .cuts import Cut, CoverRelation, Extension, cover_relation, extensions, left_polygon
from .tentacles import (
    EventPoint,
    HeadSweep,
    MotionCoeffs,
    TargetSweep,
    Tentacle,
    edge_restricted_tentacle,
    evaluate_motion,
    event_points,
    motion_coeffs,
    motion_partials,
    slide_eps_prime,
    tentacle,
)
from .jellyfish import (
    Jellyfish,
    JellyfishPair,
    MinimumJellyfishPair,
    ReducedJellyfishPair,
    SplitRecord,
    bases,
    jellyfish_pair,
    slot_table,
)
from .jellyfish import reduce as reduce_jellyfish

__all__ = [
    "Point",
    "Region",
    "SimplePolygon",
    "Triangulation",
    "kernel",
    "orient",
    "validate_polygon",
    "VisibilityPolygon",
    "sees",
    "visibility_from_point",
    "weak_visibility_from_segment",
    "GeodesicPath",
    "ShortestPathTree",
    "build_spt",
    "shortest_path",
    "shortest_path_points",
    "Cut",
    "CoverRelation",
    "Extension",
    "cover_relation",
    "extensions",
    "left_polygon",
    "Tentacle",
    "MotionCoeffs",
    "EventPoint",
    "TargetSweep",
    "HeadSweep",
    "tentacle",
    "edge_restricted_tentacle",
    "motion_coeffs",
    "evaluate_motion",
    "motion_partials",
    "slide_eps_prime",
    "event_points",
    "Jellyfish",
    "JellyfishPair",
    "MinimumJellyfishPair",
    "ReducedJellyfishPair",
    "SplitRecord",
    "bases",
    "jellyfish_pair",
    "slot_table",
    "reduce_jellyfish",
    "GeometryError",
    "SelfIntersecting",
    "DuplicateVertex",
    "CollinearTriple",
    "ClockwiseFixedUp",
    "PointOutsidePolygon",
    "SegmentOutsidePolygon",
    "EmptyTarget",
    "InvalidCut",
    "TargetNotOnEdge",
    "WrongCase",
    "EmptyInput",
    "DegenerateTour",
    "NotAWatchmanRoute",
    "CoverageVerificationFailed",
    "UnknownKind",
]

__version__ = "0.1.0"
