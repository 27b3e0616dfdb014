"""Robust planar primitives: points, exact predicates, validated simple
polygons, ear-clipping triangulation, and kernel computation.

Every combinatorial decision (orientation, incidence, containment) goes
through exact predicates: a floating-point filter backed by rational
arithmetic on the exact binary values of the input floats.  Constructed
coordinates (intersection points, perpendicular feet) are plain floats;
rounding may perturb lengths and coordinates but never a branch decision
taken on the original input coordinates.
"""
from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    ClockwiseFixedUp,
    CollinearTriple,
    DuplicateVertex,
    SelfIntersecting,
)


class Point(NamedTuple):
    """A point (or free vector) in the plane."""

    x: float
    y: float

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)


def dot(a: Point, b: Point) -> float:
    return a.x * b.x + a.y * b.y


def cross(a: Point, b: Point) -> float:
    return a.x * b.y - a.y * b.x


def dist(a: Point, b: Point) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def norm(a: Point) -> float:
    return math.hypot(a.x, a.y)


def normalize(a: Point) -> Point:
    n = norm(a)
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return Point(a.x / n, a.y / n)


def lerp(a: Point, b: Point, t: float) -> Point:
    return Point(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)


# Shewchuk's static filter bound for the 2D orientation determinant:
# (3 + 16u) * u with u = 2^-53.
_CCW_ERRBOUND = 3.3306690738754716e-16


def _orient_exact(a: Point, b: Point, c: Point) -> int:
    ax, ay = Fraction(a.x), Fraction(a.y)
    bx, by = Fraction(b.x), Fraction(b.y)
    cx, cy = Fraction(c.x), Fraction(c.y)
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def orient(a: Point, b: Point, c: Point) -> int:
    """Exact orientation sign: +1 if c is strictly left of the directed line
    a->b, 0 if collinear, -1 if right.

    Fast float path with a static error filter; falls back to rational
    arithmetic on the exact values of the input floats when the filter
    cannot certify the sign.
    """
    detleft = (b.x - a.x) * (c.y - a.y)
    detright = (b.y - a.y) * (c.x - a.x)
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            # opposite (or zero) signs of exact products: difference sign is safe
            return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return 1 if det > 0.0 else (-1 if det < 0.0 else 0)
        detsum = -detleft - detright
    else:
        return 1 if -detright > 0.0 else (-1 if -detright < 0.0 else 0)
    errbound = _CCW_ERRBOUND * detsum
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    return _orient_exact(a, b, c)


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment [a, b].  Exact."""
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_properly_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments (a,b) and (c,d) cross transversally."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    return ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
           ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the closed segments [a,b] and [c,d] share at least one point."""
    if segments_properly_intersect(a, b, c, d):
        return True
    return (on_segment(a, b, c) or on_segment(a, b, d)
            or on_segment(c, d, a) or on_segment(c, d, b))


def line_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Optional[Point]:
    """Intersection of lines p1p2 and p3p4 as a float point; None if parallel."""
    d1 = p2 - p1
    d2 = p4 - p3
    denom = cross(d1, d2)
    if denom == 0.0:
        return None
    t = cross(p3 - p1, d2) / denom
    return Point(p1.x + d1.x * t, p1.y + d1.y * t)


def _ray_shoot_frac(P, ox, oy, dx, dy, t_lo):
    best_t = None
    best = None
    n = P.n
    for idx in range(n):
        a = P.vertices[idx]
        b = P.vertices[(idx + 1) % n]
        ax, ay = Fraction(a.x), Fraction(a.y)
        bx, by = Fraction(b.x), Fraction(b.y)
        ex, ey = bx - ax, by - ay
        denom = dx * ey - dy * ex
        if denom == 0:
            # parallel edge: collinear endpoints are legitimate hits
            if dx * (ay - oy) - dy * (ax - ox) == 0:
                for px, py, pt in ((ax, ay, a), (bx, by, b)):
                    if dx != 0:
                        t = (px - ox) / dx
                    elif dy != 0:
                        t = (py - oy) / dy
                    else:
                        continue
                    if t > t_lo and (best_t is None or t < best_t):
                        best_t = t
                        best = (pt, idx)
            continue
        t = ((ax - ox) * ey - (ay - oy) * ex) / denom
        s = ((ax - ox) * dy - (ay - oy) * dx) / denom
        if 0 <= s <= 1 and t > t_lo and (best_t is None or t < best_t):
            hit = Point(float(ax + s * ex), float(ay + s * ey))
            best_t = t
            best = (hit, idx)
    if best is None:
        return None
    return best[0], best[1], float(best_t)


def ray_shoot(P, origin: Point, direction: Point, t_min: float = 0):
    """First boundary hit of origin + t*direction with t strictly above
    t_min.  All comparisons exact; returns (point, edge index, t) or None."""
    return _ray_shoot_frac(P, Fraction(origin.x), Fraction(origin.y),
                           Fraction(direction.x), Fraction(direction.y),
                           Fraction(t_min))


def ray_shoot_through(P, a: Point, b: Point):
    """First boundary hit strictly beyond b along the ray from a through b.
    The direction b - a is formed in exact arithmetic."""
    dx = Fraction(b.x) - Fraction(a.x)
    dy = Fraction(b.y) - Fraction(a.y)
    return _ray_shoot_frac(P, Fraction(b.x), Fraction(b.y), dx, dy,
                           Fraction(0))


def _frac_orient(ax, ay, bx, by, cx, cy) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def signed_area(points: Sequence[Point]) -> float:
    """Shoelace signed area of a closed ring given by its vertices."""
    a = 0.0
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        a += p.x * q.y - q.x * p.y
    return 0.5 * a


def polygon_centroid(points: Sequence[Point]) -> Point:
    """Area centroid of a ring; falls back to the vertex mean when the ring
    is degenerate (zero area)."""
    a2 = 0.0
    cx = cy = 0.0
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        w = p.x * q.y - q.x * p.y
        a2 += w
        cx += (p.x + q.x) * w
        cy += (p.y + q.y) * w
    if abs(a2) < 1e-12:
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        return Point(sum(xs) / n, sum(ys) / n)
    return Point(cx / (3.0 * a2), cy / (3.0 * a2))


def point_in_ring(ring: Sequence[Point], p: Point) -> bool:
    """Closed point-in-polygon test on an arbitrary simple ring.  Exact on
    the ring's own coordinates.  Degenerate rings (1 or 2 points) degrade to
    point/segment membership."""
    n = len(ring)
    if n == 1:
        return p == ring[0]
    if n == 2:
        return on_segment(ring[0], ring[1], p)
    inside = False
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        if on_segment(a, b, p):
            return True
        if (a.y > p.y) != (b.y > p.y):
            # edge spans the horizontal line through p; side test decides
            if b.y > a.y:
                if orient(a, b, p) > 0:
                    inside = not inside
            else:
                if orient(a, b, p) < 0:
                    inside = not inside
    return inside


class Region:
    """A polygonal subset of a polygon, possibly degenerate (a segment or a
    single point).  Used for kernels, left polygons, and clipped visibility
    regions."""

    __slots__ = ("ring", "_exact_ring")

    def __init__(self, ring: Sequence[Point], exact_ring=None):
        self.ring = tuple(ring)
        self._exact_ring = exact_ring

    @property
    def area(self) -> float:
        if len(self.ring) < 3:
            return 0.0
        return abs(signed_area(self.ring))

    def contains(self, p: Point) -> bool:
        """Closed membership test; uses the exact rational ring if present."""
        if self._exact_ring is not None and len(self._exact_ring) >= 3:
            return _point_in_exact_ring(self._exact_ring, p)
        return point_in_ring(self.ring, p)

    def representative_point(self) -> Point:
        return polygon_centroid(self.ring)

    def __repr__(self) -> str:
        return f"Region({len(self.ring)} pts, area={self.area:.6g})"


def _point_in_exact_ring(ring, p: Point) -> bool:
    px, py = Fraction(p.x), Fraction(p.y)
    n = len(ring)
    inside = False
    for i in range(n):
        ax, ay = ring[i]
        bx, by = ring[(i + 1) % n]
        o = _frac_orient(ax, ay, bx, by, px, py)
        if o == 0 and min(ax, bx) <= px <= max(ax, bx) \
                and min(ay, by) <= py <= max(ay, by):
            return True
        if (ay > py) != (by > py):
            if by > ay:
                if o > 0:
                    inside = not inside
            else:
                if o < 0:
                    inside = not inside
    return inside


class Triangulation:
    """Ear-clipping triangulation of a simple polygon with triangle
    adjacency, supporting point location and dual-tree walks."""

    __slots__ = ("polygon", "triangles", "neighbors", "_bboxes")

    def __init__(self, polygon: "SimplePolygon", triangles, neighbors):
        self.polygon = polygon
        self.triangles = tuple(triangles)
        self.neighbors = tuple(neighbors)
        pts = polygon.vertices
        self._bboxes = []
        for (i, j, k) in self.triangles:
            xs = (pts[i].x, pts[j].x, pts[k].x)
            ys = (pts[i].y, pts[j].y, pts[k].y)
            self._bboxes.append((min(xs), min(ys), max(xs), max(ys)))

    def triangle_points(self, t: int):
        v = self.polygon.vertices
        i, j, k = self.triangles[t]
        return v[i], v[j], v[k]

    def locate(self, p: Point) -> int:
        """Index of a triangle whose closed interior contains p; the lowest
        index wins so results are deterministic.  -1 if p is outside."""
        for t in range(len(self.triangles)):
            x0, y0, x1, y1 = self._bboxes[t]
            if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
                continue
            a, b, c = self.triangle_points(t)
            if orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0:
                return t
        return -1

    def locate_all(self, p: Point):
        """All triangles whose closed interior contains p (a point on a
        diagonal or vertex belongs to several)."""
        out = []
        for t in range(len(self.triangles)):
            x0, y0, x1, y1 = self._bboxes[t]
            if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
                continue
            a, b, c = self.triangle_points(t)
            if orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0:
                out.append(t)
        return out


def _in_closed_triangle(a: Point, b: Point, c: Point, p: Point) -> bool:
    return orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0


class SimplePolygon:
    """Validated simple polygon with CCW vertex order and cached structure.

    Construct through validate_polygon; the constructor itself trusts its
    input.
    """

    __slots__ = ("vertices", "reflex_flags", "n", "edges", "_triangulation",
                 "_area", "_perimeter", "bbox", "_geo_cache", "_vertex_index",
                 "_scratch")

    def __init__(self, vertices: Sequence[Point], reflex_flags: Sequence[bool]):
        self.vertices = tuple(vertices)
        self.reflex_flags = tuple(reflex_flags)
        self.n = len(self.vertices)
        self.edges = tuple((self.vertices[i], self.vertices[(i + 1) % self.n])
                           for i in range(self.n))
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))
        self._triangulation = None
        self._area = None
        self._perimeter = None
        self._geo_cache = None
        self._vertex_index = None
        self._scratch = {}

    @property
    def area(self) -> float:
        if self._area is None:
            self._area = signed_area(self.vertices)
        return self._area

    @property
    def perimeter(self) -> float:
        if self._perimeter is None:
            self._perimeter = sum(dist(a, b) for a, b in self.edges)
        return self._perimeter

    @property
    def reflex_vertices(self):
        return [(i, self.vertices[i]) for i in range(self.n) if self.reflex_flags[i]]

    def edge(self, i: int):
        return self.edges[i]

    def contains(self, p: Point) -> bool:
        """Closed containment (boundary counts as inside).  Exact."""
        x0, y0, x1, y1 = self.bbox
        if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
            return False
        return point_in_ring(self.vertices, p)

    def on_boundary(self, p: Point) -> bool:
        for a, b in self.edges:
            if on_segment(a, b, p):
                return True
        return False

    def contains_segment(self, a: Point, b: Point) -> bool:
        """True iff the closed segment [a,b] stays inside the closed polygon.
        Exact: boundary contact (including sliding along edges and passing
        through reflex vertices) is allowed; any excursion outside is not."""
        if not (self.contains(a) and self.contains(b)):
            return False
        if a == b:
            return True
        sx0, sx1 = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
        sy0, sy1 = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
        params = {Fraction(0), Fraction(1)}
        for c, d in self.edges:
            if max(c.x, d.x) < sx0 or min(c.x, d.x) > sx1 \
                    or max(c.y, d.y) < sy0 or min(c.y, d.y) > sy1:
                continue
            d1 = orient(a, b, c)
            d2 = orient(a, b, d)
            d3 = orient(c, d, a)
            d4 = orient(c, d, b)
            if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
                    ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
                return False
            # every non-proper boundary contact happens at a polygon vertex
            # or a segment endpoint; collect the parameters of vertex contacts
            if d1 == 0 and on_segment(a, b, c):
                params.add(_exact_param(a, b, c))
            if d2 == 0 and on_segment(a, b, d):
                params.add(_exact_param(a, b, d))
        if len(params) == 2:
            # no vertex contact: one midpoint decides, and when it sits
            # clear of every edge the float test matches the exact one
            mid = Point((a.x + b.x) * 0.5, (a.y + b.y) * 0.5)
            if self._edge_clearance(mid) > 1e-9:
                return point_in_ring(self.vertices, mid)
        ordered = sorted(params)
        exact_ring = self._exact_vertices()
        ax, ay = Fraction(a.x), Fraction(a.y)
        bx, by = Fraction(b.x), Fraction(b.y)
        for t0, t1 in zip(ordered, ordered[1:]):
            tm = (t0 + t1) / 2
            mx = ax + (bx - ax) * tm
            my = ay + (by - ay) * tm
            if not _point_in_exact_ring_frac(exact_ring, mx, my):
                return False
        return True

    def _edge_clearance(self, p: Point) -> float:
        best = float("inf")
        for c, d in self.edges:
            dx, dy = d.x - c.x, d.y - c.y
            L2 = dx * dx + dy * dy
            t = ((p.x - c.x) * dx + (p.y - c.y) * dy) / L2
            t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
            ex, ey = p.x - (c.x + t * dx), p.y - (c.y + t * dy)
            g = ex * ex + ey * ey
            if g < best:
                best = g
        return math.sqrt(best)

    def _exact_vertices(self):
        ring = self._scratch.get("exact_verts")
        if ring is None:
            ring = [(Fraction(v.x), Fraction(v.y)) for v in self.vertices]
            self._scratch["exact_verts"] = ring
        return ring

    @property
    def triangulation(self) -> Triangulation:
        if self._triangulation is None:
            self._triangulation = _ear_clip(self)
        return self._triangulation

    def __repr__(self) -> str:
        return f"SimplePolygon({self.n} vertices)"


def _point_in_exact_ring_frac(ring, px: Fraction, py: Fraction) -> bool:
    n = len(ring)
    inside = False
    for i in range(n):
        ax, ay = ring[i]
        bx, by = ring[(i + 1) % n]
        o = _frac_orient(ax, ay, bx, by, px, py)
        if o == 0 and min(ax, bx) <= px <= max(ax, bx) \
                and min(ay, by) <= py <= max(ay, by):
            return True
        if (ay > py) != (by > py):
            if by > ay:
                if o > 0:
                    inside = not inside
            else:
                if o < 0:
                    inside = not inside
    return inside


def _exact_param(a: Point, b: Point, p: Point) -> Fraction:
    """Parameter t of a collinear point p on [a,b], exact."""
    ax, bx = Fraction(a.x), Fraction(b.x)
    ay, by = Fraction(a.y), Fraction(b.y)
    if abs(b.x - a.x) >= abs(b.y - a.y):
        return (Fraction(p.x) - ax) / (bx - ax)
    return (Fraction(p.y) - ay) / (by - ay)


def validate_polygon(raw: Iterable) -> SimplePolygon:
    """Normalize and validate a raw vertex list into a SimplePolygon.

    Checks: >= 3 finite vertices, no consecutive duplicates, no collinear
    consecutive triple, simple boundary.  Clockwise rings are reversed with
    a ClockwiseFixedUp warning.
    """
    pts = [Point(float(p[0]), float(p[1])) for p in raw]
    if len(pts) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    for p in pts:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ValueError(f"non-finite vertex {p}")
    n = len(pts)
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise DuplicateVertex(f"vertices {i} and {(i + 1) % n} coincide at {pts[i]}")
    # orientation first so the collinear/reflex reports refer to CCW order
    exact = [(Fraction(p.x), Fraction(p.y)) for p in pts]
    a2 = Fraction(0)
    for i in range(n):
        ax, ay = exact[i]
        bx, by = exact[(i + 1) % n]
        a2 += ax * by - bx * ay
    if a2 < 0:
        pts.reverse()
        warnings.warn("clockwise input reversed to CCW", ClockwiseFixedUp)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orient(a, b, c) == 0:
            raise CollinearTriple(
                f"vertices {a}, {b}, {c} are collinear (general position required)")
    # simplicity: no two non-adjacent edges may share any point
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if segments_intersect(a, b, c, d):
                raise SelfIntersecting(f"edges {i} and {j} intersect")
    reflex = []
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        reflex.append(orient(a, b, c) < 0)
    return SimplePolygon(pts, reflex)


def _ear_clip(P: SimplePolygon) -> Triangulation:
    """O(n^3) worst-case ear clipping; exact predicates throughout."""
    v = P.vertices
    idx = list(range(P.n))
    triangles = []
    while len(idx) > 3:
        clipped = False
        m = len(idx)
        for pos in range(m):
            ip, ic, inx = idx[pos - 1], idx[pos], idx[(pos + 1) % m]
            a, b, c = v[ip], v[ic], v[inx]
            if orient(a, b, c) <= 0:
                continue
            ear = True
            for other in idx:
                if other in (ip, ic, inx):
                    continue
                if _in_closed_triangle(a, b, c, v[other]):
                    ear = False
                    break
            if ear:
                triangles.append((ip, ic, inx))
                idx.pop(pos)
                clipped = True
                break
        if not clipped:
            raise SelfIntersecting("ear clipping failed; polygon is not simple")
    triangles.append(tuple(idx))
    # adjacency across shared (diagonal) edges
    edge_owner = {}
    neighbors = [[None, None, None] for _ in triangles]
    for t, (i, j, k) in enumerate(triangles):
        for s, (u, w) in enumerate(((i, j), (j, k), (k, i))):
            key = (min(u, w), max(u, w))
            if key in edge_owner:
                t2, s2 = edge_owner[key]
                neighbors[t][s] = t2
                neighbors[t2][s2] = t
            else:
                edge_owner[key] = (t, s)
    return Triangulation(P, triangles, [tuple(nb) for nb in neighbors])


def kernel(P: SimplePolygon) -> Optional[Region]:
    """The kernel of P: the set of points seeing all of P, computed as the
    intersection of the left half-planes of all boundary edges in exact
    rational arithmetic.  None if P is not star-shaped."""
    x0, y0, x1, y1 = P.bbox
    mx = (x1 - x0) + (y1 - y0) + 1.0
    cur = [(Fraction(x0 - mx), Fraction(y0 - mx)),
           (Fraction(x1 + mx), Fraction(y0 - mx)),
           (Fraction(x1 + mx), Fraction(y1 + mx)),
           (Fraction(x0 - mx), Fraction(y1 + mx))]
    for a, b in P.edges:
        ax, ay = Fraction(a.x), Fraction(a.y)
        bx, by = Fraction(b.x), Fraction(b.y)
        nxt = []
        m = len(cur)
        if m == 0:
            return None
        sides = []
        for px, py in cur:
            sides.append((bx - ax) * (py - ay) - (by - ay) * (px - ax))
        for i in range(m):
            px, py = cur[i]
            qx, qy = cur[(i + 1) % m]
            si, sj = sides[i], sides[(i + 1) % m]
            if si >= 0:
                nxt.append((px, py))
            if (si > 0 and sj < 0) or (si < 0 and sj > 0):
                t = si / (si - sj)
                nxt.append((px + (qx - px) * t, py + (qy - py) * t))
        # drop exact consecutive duplicates
        dedup = []
        for p in nxt:
            if not dedup or p != dedup[-1]:
                dedup.append(p)
        if len(dedup) > 1 and dedup[0] == dedup[-1]:
            dedup.pop()
        cur = dedup
        if not cur:
            return None
    ring = [Point(float(px), float(py)) for px, py in cur]
    return Region(ring, exact_ring=cur)


def sample_boundary(P: SimplePolygon, count: int, rng) -> list:
    """count points uniform in arc length on the boundary, deterministic
    under the supplied random.Random."""
    lengths = [dist(a, b) for a, b in P.edges]
    total = sum(lengths)
    out = []
    for _ in range(count):
        s = rng.random() * total
        for (a, b), L in zip(P.edges, lengths):
            if s <= L or (a, b) == P.edges[-1]:
                t = s / L if L > 0 else 0.0
                out.append(lerp(a, b, min(t, 1.0)))
                break
            s -= L
    return out


def sample_interior(P: SimplePolygon, count: int, rng) -> list:
    """count points uniform in area, via area-weighted triangle sampling."""
    tri = P.triangulation
    areas = []
    for t in range(len(tri.triangles)):
        a, b, c = tri.triangle_points(t)
        areas.append(abs(signed_area([a, b, c])))
    total = sum(areas)
    out = []
    for _ in range(count):
        s = rng.random() * total
        chosen = len(areas) - 1
        for t, ar in enumerate(areas):
            if s <= ar:
                chosen = t
                break
            s -= ar
        a, b, c = tri.triangle_points(chosen)
        r1 = math.sqrt(rng.random())
        r2 = rng.random()
        out.append(Point(
            a.x * (1 - r1) + b.x * r1 * (1 - r2) + c.x * r1 * r2,
            a.y * (1 - r1) + b.y * r1 * (1 - r2) + c.y * r1 * r2))
    return out
