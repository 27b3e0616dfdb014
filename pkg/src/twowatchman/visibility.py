"""Point and weak-segment visibility polygons, windows, and the sees
predicate.  Closed visibility throughout: grazing contact with the boundary,
including sight lines through reflex vertices, counts as seeing.

Point visibility uses triangular expansion over the polygon triangulation:
a cone of sight is pushed through the dual graph, narrowing at blocking
vertices.  All cone decisions are exact orientation tests against original
input coordinates; only the emitted hit points are constructed floats.
"""
from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from .errors import PointOutsidePolygon, SegmentOutsidePolygon
from .geom_core import (
    Point,
    Region,
    SimplePolygon,
    dist,
    lerp,
    line_intersection,
    on_segment,
    orient,
    point_in_ring,
    signed_area,
)


class VisibilityPolygon(NamedTuple):
    region: Region
    windows: List[Tuple[Tuple[Point, Point], Point]]  # (segment, reflex anchor)
    source: object  # Point or (Point, Point)

    @property
    def area(self) -> float:
        return self.region.area

    def contains(self, p: Point) -> bool:
        return self.region.contains(p)


def sees(P: SimplePolygon, p: Point, q: Point) -> bool:
    """Closed visibility between two points of P (exact)."""
    if not P.contains(p):
        raise PointOutsidePolygon(f"{p} is outside the polygon")
    if not P.contains(q):
        raise PointOutsidePolygon(f"{q} is outside the polygon")
    return P.contains_segment(p, q)


def _edge_param_hit(q: Point, c: Point, a: Point, b: Point) -> float:
    """Param along boundary edge a->b where the ray from q through constraint
    point c lands.  c on the edge returns c's own param."""
    if on_segment(a, b, c):
        if abs(b.x - a.x) >= abs(b.y - a.y):
            return (c.x - a.x) / (b.x - a.x)
        return (c.y - a.y) / (b.y - a.y)
    hit = line_intersection(q, c, a, b)
    if hit is None:
        # cone ray parallel to the edge: grazes the near endpoint
        return 0.0 if dist(q, a) <= dist(q, b) else 1.0
    if abs(b.x - a.x) >= abs(b.y - a.y):
        t = (hit.x - a.x) / (b.x - a.x)
    else:
        t = (hit.y - a.y) / (b.y - a.y)
    return min(1.0, max(0.0, t))


def visibility_from_point(P: SimplePolygon, q: Point) -> VisibilityPolygon:
    """Visibility polygon of a point by triangular expansion.  Handles q in
    the interior, on an edge, or at a vertex."""
    if not P.contains(q):
        raise PointOutsidePolygon(f"{q} is outside the polygon")
    tri = P.triangulation
    verts = P.vertices
    n = P.n
    tris = tri.locate_all(q)

    def boundary_index(u: int, v: int) -> Optional[int]:
        if (u + 1) % n == v:
            return u
        return None

    def neighbor_across(t: int, u: int, v: int) -> int:
        i, j, k = tri.triangles[t]
        for s, (e1, e2) in enumerate(((i, j), (j, k), (k, i))):
            if {e1, e2} == {u, v}:
                return tri.neighbors[t][s]
        raise AssertionError("edge not in triangle")

    # pieces of visible boundary: (edge index, param start, param end)
    pieces: List[Tuple[int, float, float]] = []

    def emit(idx: int, cr: Point, cl: Point) -> None:
        a, b = verts[idx], verts[(idx + 1) % n]
        t0 = _edge_param_hit(q, cr, a, b)
        t1 = _edge_param_hit(q, cl, a, b)
        if t1 < t0:
            t0, t1 = t1, t0
        pieces.append((idx, t0, t1))

    # boundary edges through q are fully visible and are not portals
    for idx in range(n):
        a, b = verts[idx], verts[(idx + 1) % n]
        if on_segment(a, b, q):
            pieces.append((idx, 0.0, 1.0))

    stack = []
    for t in tris:
        i, j, k = tri.triangles[t]
        for (u, v) in ((i, j), (j, k), (k, i)):
            if on_segment(verts[u], verts[v], q):
                continue  # covered above or owned by the twin triangle
            idx = boundary_index(u, v)
            if idx is not None:
                emit(idx, verts[u], verts[v])
            else:
                stack.append((neighbor_across(t, u, v), u, v, verts[u], verts[v]))

    while stack:
        t, r, l, cr, cl = stack.pop()
        if orient(q, cr, cl) <= 0:
            continue  # cone pinched shut: nothing further is visible
        i, j, k = tri.triangles[t]
        w = i + j + k - r - l
        wp = verts[w]
        sr = orient(q, cr, wp)
        sl = orient(q, cl, wp)
        sub = []
        if sr >= 0 and sl <= 0:
            sub.append((r, w, cr, wp))
            sub.append((w, l, wp, cl))
        elif sr < 0:
            sub.append((w, l, cr, cl))
        else:
            sub.append((r, w, cr, cl))
        for (u, v, ncr, ncl) in sub:
            if orient(q, ncr, ncl) <= 0:
                continue
            idx = boundary_index(u, v)
            if idx is not None:
                emit(idx, ncr, ncl)
            else:
                stack.append((neighbor_across(t, u, v), u, v, ncr, ncl))

    return _assemble(P, q, pieces)


def _assemble(P: SimplePolygon, source, pieces) -> VisibilityPolygon:
    """Merge boundary pieces (in boundary order) into the visibility ring.
    Windows are exactly the gaps between consecutive pieces, so boundary
    edges are never misclassified by float tests on constructed points."""
    verts = P.vertices
    n = P.n
    eps = 1e-12 * max(P.bbox[2] - P.bbox[0], P.bbox[3] - P.bbox[1])
    pieces = sorted(pieces)
    merged: List[List] = []
    for idx, t0, t1 in pieces:
        if merged and merged[-1][0] == idx and t0 <= merged[-1][2] + 1e-12:
            merged[-1][2] = max(merged[-1][2], t1)
        else:
            merged.append([idx, t0, t1])

    def param_point(idx: int, t: float) -> Point:
        a, b = verts[idx], verts[(idx + 1) % n]
        if t <= 0.0:
            return a
        if t >= 1.0:
            return b
        return lerp(a, b, t)

    ends = []  # (start point, end point) of each merged piece
    for idx, t0, t1 in merged:
        ends.append((param_point(idx, t0), param_point(idx, t1)))

    ring: List[Point] = []
    gaps: List[Tuple[Point, Point]] = []
    k = len(merged)
    for i in range(k):
        p0, p1 = ends[i]
        for p in ((p0, p1) if dist(p0, p1) > eps else (p0,)):
            if not ring or dist(ring[-1], p) > eps:
                ring.append(p)
        q0 = ends[(i + 1) % k][0]
        if dist(p1, q0) > eps:
            gaps.append((p1, q0))
    if len(ring) > 1 and dist(ring[0], ring[-1]) <= eps:
        ring.pop()

    reflex_set = {verts[i] for i in range(n) if P.reflex_flags[i]}
    windows = []
    for a, b in gaps:
        cand = [p for p in (a, b) if p in reflex_set]
        if len(cand) == 1:
            anchor = cand[0]
        elif len(cand) == 2:
            if isinstance(source, Point):
                anchor = min(cand, key=lambda p: dist(source, p))
            else:
                anchor = cand[0]
        else:
            # constructed endpoint drifted off the exact vertex; snap
            best = None
            for p in (a, b):
                for rv in reflex_set:
                    d = dist(p, rv)
                    if best is None or d < best[0]:
                        best = (d, rv)
            anchor = best[1] if best else a
        windows.append(((a, b), anchor))
    region = Region(ring)
    return VisibilityPolygon(region=region, windows=windows, source=source)


def _region_intersects_segment(P: SimplePolygon, vp: VisibilityPolygon,
                               a: Point, b: Point) -> bool:
    ring = vp.region.ring
    if point_in_ring(ring, a) or point_in_ring(ring, b):
        return True
    m = len(ring)
    from .geom_core import segments_intersect
    for i in range(m):
        if segments_intersect(ring[i], ring[(i + 1) % m], a, b):
            return True
    return False


def weak_visibility_from_segment(P: SimplePolygon, s: Tuple[Point, Point]
                                 ) -> VisibilityPolygon:
    """Weak visibility polygon of a segment: all points seeing at least one
    point of s.  Built from an arrangement of candidate sight lines whose
    faces are classified exactly; intended for desk-scale verification, not
    for the solver's inner loops."""
    p1, p2 = Point(*s[0]), Point(*s[1])
    if p1 == p2:
        return visibility_from_point(P, p1)
    if not P.contains_segment(p1, p2):
        raise SegmentOutsidePolygon(f"segment {p1}-{p2} leaves the polygon")

    import shapely.geometry as sg
    import shapely.ops as so

    poly = sg.Polygon([(v.x, v.y) for v in P.vertices])
    span = 4.0 * max(P.bbox[2] - P.bbox[0], P.bbox[3] - P.bbox[1])
    reflex = [v for i, v in enumerate(P.vertices) if P.reflex_flags[i]]
    pivots = reflex + [p1, p2]
    lines = [sg.LineString([(p1.x, p1.y), (p2.x, p2.y)])]
    for i, u in enumerate(reflex):
        for w in pivots:
            if w == u:
                continue
            d = Point(w.x - u.x, w.y - u.y)
            L = dist(u, w)
            if L == 0:
                continue
            d = Point(d.x / L, d.y / L)
            a = Point(u.x - span * d.x, u.y - span * d.y)
            b = Point(u.x + span * d.x, u.y + span * d.y)
            lines.append(sg.LineString([(a.x, a.y), (b.x, b.y)]))
    clipped = [ln.intersection(poly) for ln in lines]
    parts = [g for g in clipped if not g.is_empty]
    merged = so.unary_union(parts + [poly.exterior])
    faces = list(so.polygonize(merged))
    keep = []
    for face in faces:
        rp = face.representative_point()
        cand = Point(rp.x, rp.y)
        if not P.contains(cand):
            continue
        vp = visibility_from_point(P, cand)
        if _region_intersects_segment(P, vp, p1, p2):
            keep.append(face)
    if not keep:
        return VisibilityPolygon(Region([p1, p2]), [], (p1, p2))
    union = so.unary_union(keep)
    if union.geom_type == "MultiPolygon":
        union = max(union.geoms, key=lambda g: g.area)
    union = union.buffer(0)
    ring = [Point(x, y) for x, y in union.exterior.coords[:-1]]
    if signed_area(ring) < 0:
        ring.reverse()
    vp = _assemble_weak(P, (p1, p2), ring)
    return vp


def _assemble_weak(P, source, ring):
    eps = 1e-9 * max(P.bbox[2] - P.bbox[0], P.bbox[3] - P.bbox[1])
    # drop collinear chain points introduced by the arrangement
    cleaned = []
    m = len(ring)
    for i in range(m):
        a, b, c = ring[i - 1], ring[i], ring[(i + 1) % m]
        if dist(a, b) <= eps:
            continue
        cleaned.append(b)
    ring = cleaned
    reflex_set = {v for i, v in enumerate(P.vertices) if P.reflex_flags[i]}
    windows = []
    m = len(ring)
    for i in range(m):
        a, b = ring[i], ring[(i + 1) % m]
        mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
        if P.on_boundary(mid) or dist(a, b) <= eps:
            continue
        anchor = None
        best = None
        for p in (a, b):
            for rv in reflex_set:
                d = dist(p, rv)
                if best is None or d < best[0]:
                    best = (d, rv)
        if best and best[0] <= 1e-6:
            anchor = best[1]
        windows.append(((a, b), anchor if anchor is not None else a))
    return VisibilityPolygon(Region(ring), windows, source)
