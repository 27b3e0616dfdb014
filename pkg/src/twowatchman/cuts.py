"""Cuts, edge extensions, left polygons, and the cover classification.

A cut is a directed chord of the polygon: both endpoints on the boundary,
all interior points strictly inside.  It splits the polygon into the left
polygon (interior locally to the left of the travel direction) and its
complement.  Extending the two edges incident to a reflex vertex until
they hit the boundary yields the extension set; any guard set must meet
the left polygon of every extension, which is what makes these chords the
backbone of the route computations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InvalidCut
from .geom_core import (
    Point,
    Region,
    SimplePolygon,
    dist,
    lerp,
    line_intersection,
    on_segment,
    ray_shoot_through,
    segments_intersect,
)

__all__ = [
    "Cut",
    "Extension",
    "CoverRelation",
    "extensions",
    "left_polygon",
    "cover_relation",
]


@dataclass(frozen=True)
class Cut:
    """Directed chord start -> end; the left polygon lies to its left."""

    start: Point
    end: Point

    def reversed(self) -> "Cut":
        return Cut(self.end, self.start)

    def __repr__(self) -> str:
        return f"Cut({self.start} -> {self.end})"


@dataclass(frozen=True)
class Extension:
    """A cut collinear with a boundary edge, anchored at a reflex vertex.

    The cut keeps the source edge's direction, so the edge's left side and
    the cut's left side agree."""

    cut: Cut
    source_edge: int
    reflex_vertex: Point


class CoverRelation(enum.Enum):
    NONE = "none"
    REFLECTS = "reflects"
    CROSSES = "crosses"
    PROPERLY_COVERS_WITHOUT_TOUCHING = "properly_covers_without_touching"


# ---------------------------------------------------------------------------
# extensions

def extensions(P: SimplePolygon) -> List[Extension]:
    """Both incident-edge extensions of every reflex vertex, ordered by
    vertex index then source edge index."""
    n = P.n
    verts = P.vertices
    out: List[Extension] = []
    for i, v in P.reflex_vertices:
        u = verts[(i - 1) % n]
        w = verts[(i + 1) % n]
        found: List[Tuple[int, Extension]] = []
        # incoming edge continued forward beyond the reflex vertex
        fwd = ray_shoot_through(P, u, v)
        if fwd is not None:
            hit, _, _ = fwd
            if hit != v:
                e = (i - 1) % n
                found.append((e, Extension(Cut(v, hit), e, v)))
        # outgoing edge continued backward, cut still pointing with the edge
        back = ray_shoot_through(P, w, v)
        if back is not None:
            hit, _, _ = back
            if hit != v:
                found.append((i, Extension(Cut(hit, v), i, v)))
        found.sort(key=lambda t: t[0])
        out.extend(ext for _, ext in found)
    return out


# ---------------------------------------------------------------------------
# left polygons

def _locate_on_boundary(P: SimplePolygon, p: Point) -> Optional[Tuple[int, float]]:
    """Edge index and parameter of a boundary point; vertices report as
    (incident edge, 0.0)."""
    verts = P.vertices
    n = P.n
    for i in range(n):
        if p == verts[i]:
            return (i, 0.0)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if on_segment(a, b, p):
            if abs(b.x - a.x) >= abs(b.y - a.y):
                t = (p.x - a.x) / (b.x - a.x)
            else:
                t = (p.y - a.y) / (b.y - a.y)
            return (i, t)
    return None


def _locate_tolerant(P: SimplePolygon, p: Point) -> Optional[Tuple[Tuple[int, float], bool]]:
    """Exact boundary location, falling back to the nearest edge within 1e-9
    for constructed points (window chord endpoints on slanted edges round a
    few ulps off the exact segment).  Second component marks the fallback."""
    loc = _locate_on_boundary(P, p)
    if loc is not None:
        return loc, False
    verts = P.vertices
    n = P.n
    best, best_d, best_t = -1, math.inf, 0.0
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        dx, dy = b.x - a.x, b.y - a.y
        t = max(0.0, min(1.0, ((p.x - a.x) * dx + (p.y - a.y) * dy)
                         / (dx * dx + dy * dy)))
        d = dist(p, Point(a.x + t * dx, a.y + t * dy))
        if d < best_d:
            best, best_d, best_t = i, d, t
    if best_d > 1e-9:
        return None
    if best_t >= 1.0:
        return ((best + 1) % n, 0.0), True
    return (best, best_t), True


def _validate_cut(P: SimplePolygon, c: Cut) -> Tuple[Tuple[int, float], Tuple[int, float]]:
    if c.start == c.end:
        raise InvalidCut("cut endpoints coincide")
    ra = _locate_tolerant(P, c.start)
    rb = _locate_tolerant(P, c.end)
    if ra is None or rb is None:
        raise InvalidCut("cut endpoint not on the boundary")
    la, snapped_a = ra
    lb, snapped_b = rb
    if snapped_a or snapped_b:
        # endpoints carry rounding noise, so probe containment pointwise
        for t in (0.25, 0.5, 0.75):
            m = lerp(c.start, c.end, t)
            if not P.contains(m):
                raise InvalidCut("cut leaves the polygon")
            if P.on_boundary(m):
                raise InvalidCut("cut interior touches the boundary")
        return la, lb
    if not P.contains_segment(c.start, c.end):
        raise InvalidCut("cut leaves the polygon")
    for t in (0.25, 0.5, 0.75):
        if P.on_boundary(lerp(c.start, c.end, t)):
            raise InvalidCut("cut interior touches the boundary")
    return la, lb


def left_polygon(P: SimplePolygon, c: Cut) -> Region:
    """Closed sub-polygon to the left of the cut: the chord followed by the
    boundary walked forward from end back around to start."""
    (ea, ta), (eb, tb) = _validate_cut(P, c)
    verts = P.vertices
    n = P.n
    ring = [c.start, c.end]
    e, t = eb, tb
    for _ in range(n + 1):
        if e == ea and t <= ta:
            break
        v = (e + 1) % n
        ring.append(verts[v])
        e, t = v, 0.0
    else:
        raise InvalidCut("boundary walk failed to close")
    cleaned = [ring[0]]
    for p in ring[1:]:
        if p != cleaned[-1]:
            cleaned.append(p)
    if len(cleaned) > 1 and cleaned[-1] == cleaned[0]:
        cleaned.pop()
    return Region(cleaned)


# ---------------------------------------------------------------------------
# cover classification

GuardSet = Union[Point, Iterable[Point]]


def _ring_has(ring: Sequence[Point], p: Point) -> bool:
    m = len(ring)
    for i in range(m):
        if on_segment(ring[i], ring[(i + 1) % m], p):
            return True
    return False


def _param_on(a: Point, b: Point, p: Point) -> float:
    if abs(b.x - a.x) >= abs(b.y - a.y):
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def _segment_meets_region(L: Region, a: Point, b: Point) -> bool:
    if L.contains(a) or L.contains(b):
        return True
    ring = L.ring
    m = len(ring)
    return any(segments_intersect(a, b, ring[i], ring[(i + 1) % m])
               for i in range(m))


def _segment_meets_interior(L: Region, a: Point, b: Point) -> bool:
    """Whether any point of [a, b] lies strictly inside the region.  The
    segment is split at every ring crossing and each piece is tested at its
    midpoint."""
    if L.area == 0:
        return False
    if a == b:
        return L.contains(a) and not _ring_has(L.ring, a)
    ring = L.ring
    m = len(ring)
    ts = {0.0, 1.0}
    for i in range(m):
        u, v = ring[i], ring[(i + 1) % m]
        if not segments_intersect(a, b, u, v):
            continue
        x = line_intersection(a, b, u, v)
        if x is not None:
            ts.add(min(1.0, max(0.0, _param_on(a, b, x))))
        else:
            for p in (u, v):
                if on_segment(a, b, p):
                    ts.add(min(1.0, max(0.0, _param_on(a, b, p))))
    cuts_sorted = sorted(ts)
    for t0, t1 in zip(cuts_sorted, cuts_sorted[1:]):
        if t1 - t0 < 1e-12:
            continue
        mid = lerp(a, b, 0.5 * (t0 + t1))
        if L.contains(mid) and not _ring_has(ring, mid):
            return True
    return False


def _primitives(G: GuardSet) -> Tuple[List[Point], List[Tuple[Point, Point]]]:
    """Split a guard set into isolated points and polyline segments.  Sets
    are discrete; ordered sequences are chained."""
    if isinstance(G, Point):
        return [G], []
    pts = list(G)
    if not pts:
        return [], []
    if isinstance(G, (set, frozenset)) or len(pts) == 1:
        return pts, []
    return [], [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


def cover_relation(P: SimplePolygon, G: GuardSet, c: Cut) -> CoverRelation:
    """Classify how a guard set relates to the cut's left polygon: missing
    it entirely, touching only its rim, or entering its interior (with or
    without meeting the cut itself)."""
    L = left_polygon(P, c)
    points, segs = _primitives(G)
    covered = False
    properly = False
    meets_cut = False
    for p in points:
        if L.contains(p):
            covered = True
            if not _ring_has(L.ring, p):
                properly = True
        if on_segment(c.start, c.end, p):
            meets_cut = True
    for a, b in segs:
        if _segment_meets_region(L, a, b):
            covered = True
        if _segment_meets_interior(L, a, b):
            properly = True
        if segments_intersect(a, b, c.start, c.end):
            meets_cut = True
    if not covered:
        return CoverRelation.NONE
    if not properly:
        return CoverRelation.REFLECTS
    if meets_cut:
        return CoverRelation.CROSSES
    return CoverRelation.PROPERLY_COVERS_WITHOUT_TOUCHING
