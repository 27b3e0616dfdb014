"""Exception and warning types shared across the package."""


class GeometryError(Exception):
    """Base class for all structured rejections raised by this package."""


class SelfIntersecting(GeometryError):
    """Polygon boundary intersects itself."""


class DuplicateVertex(GeometryError):
    """Two consecutive polygon vertices coincide."""


class CollinearTriple(GeometryError):
    """Three consecutive polygon vertices are collinear (general position
    is required; such inputs are rejected rather than perturbed)."""


class PointOutsidePolygon(GeometryError):
    """A query point lies outside the polygon."""


class SegmentOutsidePolygon(GeometryError):
    """A query segment is not contained in the polygon."""


class EmptyTarget(GeometryError):
    """Shortest-path target region is empty."""


class InvalidCut(GeometryError):
    """Chord endpoints or interior violate the cut definition."""


class TargetNotOnEdge(GeometryError):
    """Restricted-tentacle target point does not lie on the stated edge."""


class WrongCase(GeometryError):
    """Motion-formula configuration is inconsistent with the requested
    coefficient family."""


class EmptyInput(GeometryError):
    """An operation that needs at least one object received none."""


class DegenerateTour(GeometryError):
    """Point or segment tour where a non-degenerate one is required."""


class NotAWatchmanRoute(GeometryError):
    """Tour fails to cover every extension, so it is not a watchman route."""


class CoverageVerificationFailed(GeometryError):
    """Internal bug guard: a returned solution failed its own coverage
    verification."""


class UnknownKind(GeometryError):
    """Unrecognized guarantee-factor kind string."""


class ClockwiseFixedUp(UserWarning):
    """Input polygon was clockwise and has been reversed to CCW."""
