"""Tentacles: shortest paths that acquire sight of a boundary point.

A tentacle from a head point q to a boundary target r is the shortest
geodesic from q to any point seeing r.  Its tip always lands on a window
chord of r's visibility polygon; the chord's anchoring reflex vertex is
the hiding vertex, and the chord itself (directed to keep q outside its
left polygon) is the tentacle cut.

The edge-restricted variant pins the target to a stated boundary edge.
It differs from the plain tentacle only when the target is a reflex
vertex whose collinear extension separates the head from the edge; the
target region then shrinks to the part of the vertex's visibility
polygon on the edge's side of the extension.

Motion families A-F give the tentacle length as closed-form functions of
a head displacement delta along a segment and a target displacement
epsilon along its edge, valid between event points where the waypoint
sequence, hiding vertex, and tip/boundary contact stay fixed.  The
coefficients are derived from signed cross and dot products, which keeps
every orientation case in one formula; the intersection-point slide
epsilon' = a*eps/(1 - c*eps) is exact for straight lines, so within an
event interval the families reproduce recomputed lengths to rounding
error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .cuts import Cut, Extension, _locate_on_boundary, extensions, left_polygon
from .errors import PointOutsidePolygon, TargetNotOnEdge, WrongCase
from .geodesics import GeodesicPath, _pt_seg_path
from .geom_core import (
    Point,
    Region,
    SimplePolygon,
    cross,
    dist,
    dot,
    lerp,
    line_intersection,
    on_segment,
    orient,
)
from .visibility import VisibilityPolygon, sees, visibility_from_point

__all__ = [
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
]


@dataclass(frozen=True)
class Tentacle:
    head: Point
    target: Point
    target_edge: int
    path: GeodesicPath
    tip: Point
    hiding_vertex: Optional[Point]
    tentacle_cut: Optional[Cut]

    @property
    def length(self) -> float:
        return self.path.length

    def __repr__(self) -> str:
        return (f"Tentacle({self.head} -> {self.target}, "
                f"len={self.length:.6g})")


# ---------------------------------------------------------------------------
# shared caches on the polygon scratch space

def _vp(P: SimplePolygon, r: Point) -> VisibilityPolygon:
    cache = P._scratch.setdefault("vp", {})
    key = (r.x, r.y)
    vp = cache.get(key)
    if vp is None:
        vp = visibility_from_point(P, r)
        cache[key] = vp
    return vp


def _extensions(P: SimplePolygon) -> List[Extension]:
    exts = P._scratch.get("extensions")
    if exts is None:
        exts = extensions(P)
        P._scratch["extensions"] = exts
    return exts


def _vertex_index(P: SimplePolygon, p: Point) -> Optional[int]:
    idx = P._vertex_index
    if idx is None:
        idx = {v: i for i, v in enumerate(P.vertices)}
        P._vertex_index = idx
    return idx.get(p)


def _snap_target(P: SimplePolygon, r: Point) -> Tuple[int, Point]:
    """Edge index and effective position of a boundary target.  Points that
    miss the exact segment test by rounding noise (e.g. interpolated along a
    slanted edge) are pulled onto the nearest edge within 1e-9."""
    loc = _locate_on_boundary(P, r)
    if loc is not None:
        return loc[0], r
    verts = P.vertices
    n = P.n
    best, best_d = 0, math.inf
    for i in range(n):
        d = _dist_pt_seg(r, verts[i], verts[(i + 1) % n])
        if d < best_d:
            best, best_d = i, d
    if best_d > 1e-9:
        raise PointOutsidePolygon("tentacle target must lie on the boundary")
    a, b = verts[best], verts[(best + 1) % n]
    d = Point(b.x - a.x, b.y - a.y)
    t = ((r.x - a.x) * d.x + (r.y - a.y) * d.y) / (d.x * d.x + d.y * d.y)
    if t <= 0.0:
        return best, a
    if t >= 1.0:
        return best, b
    return best, _snap_in(P, Point(a.x + t * d.x, a.y + t * d.y))


def _dist_pt_seg(p: Point, a: Point, b: Point) -> float:
    d = Point(b.x - a.x, b.y - a.y)
    L2 = d.x * d.x + d.y * d.y
    if L2 == 0:
        return dist(p, a)
    t = max(0.0, min(1.0, ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / L2))
    return dist(p, Point(a.x + t * d.x, a.y + t * d.y))


def _near_boundary(P: SimplePolygon, p: Point, tol: float = 1e-9) -> bool:
    verts = P.vertices
    n = P.n
    return any(_dist_pt_seg(p, verts[i], verts[(i + 1) % n]) <= tol
               for i in range(n))


def _edge_near(P: SimplePolygon, p: Point) -> int:
    verts = P.vertices
    n = P.n
    best, best_d = 0, math.inf
    for i in range(n):
        d = _dist_pt_seg(p, verts[i], verts[(i + 1) % n])
        if d < best_d:
            best, best_d = i, d
    return best


def _snap_in(P: SimplePolygon, p: Point) -> Point:
    """Pull a constructed boundary point that rounded outside the polygon
    back in: project onto the nearest edge, then nudge along its inward
    normal if the projection still fails the exact containment test."""
    if P.contains(p):
        return p
    a, b = P.edge(_edge_near(P, p))
    d = Point(b.x - a.x, b.y - a.y)
    L2 = d.x * d.x + d.y * d.y
    t = max(0.0, min(1.0, ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / L2))
    f = Point(a.x + t * d.x, a.y + t * d.y)
    if P.contains(f):
        return f
    nn = math.sqrt(L2)
    for push in (1e-13, 1e-11, 1e-9):
        g = Point(f.x - push * d.y / nn, f.y + push * d.x / nn)
        if P.contains(g):
            return g
    raise PointOutsidePolygon(f"could not snap {p} onto the polygon")


# ---------------------------------------------------------------------------
# tentacle construction

def _directed_cut(a: Point, b: Point, q: Point) -> Cut:
    """Orient the chord so the head stays outside its left polygon."""
    if orient(a, b, q) > 0:
        return Cut(b, a)
    return Cut(a, b)


def _zero_tentacle(P: SimplePolygon, q: Point, r: Point, edge: int) -> Tentacle:
    return Tentacle(q, r, edge, GeodesicPath((q,)), q, None, None)


def tentacle(P: SimplePolygon, q: Point, r: Point) -> Tentacle:
    """Shortest path from q to a point seeing r; r must be on the boundary."""
    if not P.contains(q):
        raise PointOutsidePolygon("tentacle head outside polygon")
    edge, r = _snap_target(P, r)
    if sees(P, q, r):
        return _zero_tentacle(P, q, r, edge)
    vp = _vp(P, r)
    best: Optional[Tuple[GeodesicPath, Tuple[Point, Point], Point]] = None
    for seg, anchor in vp.windows:
        safe = (_snap_in(P, seg[0]), _snap_in(P, seg[1]))
        path = _pt_seg_path(P, q, safe)
        if best is None or path.length < best[0].length - 1e-15:
            best = (path, seg, anchor)
    if best is None:
        # float disagreement between the exact segment test and the
        # visibility region: treat as visible
        return _zero_tentacle(P, q, r, edge)
    path, seg, anchor = best
    cut = _directed_cut(seg[0], seg[1], q)
    return Tentacle(q, r, edge, path, path.waypoints[-1], anchor, cut)


def _extension_at(P: SimplePolygon, vidx: int, edge: int) -> Optional[Extension]:
    v = P.vertices[vidx]
    for ext in _extensions(P):
        if ext.source_edge == edge and ext.reflex_vertex == v:
            return ext
    return None


def _clip_left(ring: Sequence[Point], a: Point, b: Point) -> List[Point]:
    """Half-plane clip keeping points on or left of the directed line a->b."""
    out: List[Point] = []
    m = len(ring)
    for i in range(m):
        cur, nxt = ring[i], ring[(i + 1) % m]
        sc = orient(a, b, cur)
        sn = orient(a, b, nxt)
        if sc >= 0:
            out.append(cur)
        if (sc > 0 > sn) or (sc < 0 < sn):
            x = line_intersection(cur, nxt, a, b)
            if x is not None:
                out.append(x)
    cleaned: List[Point] = []
    for p in out:
        if not cleaned or dist(p, cleaned[-1]) > 1e-12:
            cleaned.append(p)
    if len(cleaned) > 1 and dist(cleaned[0], cleaned[-1]) <= 1e-12:
        cleaned.pop()
    return cleaned


def _restricted_region(P: SimplePolygon, vidx: int, edge: int):
    """Target region of the vertex-restricted tentacle: VP(v) clipped to the
    left of the extension collinear with the stated edge.  Cached per
    (vertex, edge) with its candidate entry segments."""
    cache = P._scratch.setdefault("zr_region", {})
    key = (vidx, edge)
    hit = cache.get(key)
    if hit is not None:
        return hit
    v = P.vertices[vidx]
    ext = _extension_at(P, vidx, edge)
    vp = _vp(P, v)
    if ext is None:
        cache[key] = None
        return None
    L = left_polygon(P, ext.cut)
    ring = _clip_left(vp.region.ring, ext.cut.start, ext.cut.end)
    region = Region(ring)
    # entry candidates: ring edges not lying along the polygon boundary
    cands: List[Tuple[Tuple[Point, Point], Optional[Point], Optional[Cut]]] = []
    m = len(ring)
    for i in range(m):
        s0, s1 = _snap_in(P, ring[i]), _snap_in(P, ring[(i + 1) % m])
        mid = lerp(s0, s1, 0.5)
        if P.on_boundary(mid) and P.on_boundary(s0) and P.on_boundary(s1):
            continue
        if (_dist_pt_seg(s0, ext.cut.start, ext.cut.end) <= 1e-9
                and _dist_pt_seg(s1, ext.cut.start, ext.cut.end) <= 1e-9):
            cands.append(((s0, s1), v, ext.cut))
            continue
        win = None
        for seg, anchor in vp.windows:
            if (_dist_pt_seg(s0, seg[0], seg[1]) <= 1e-9
                    and _dist_pt_seg(s1, seg[0], seg[1]) <= 1e-9):
                win = (seg, anchor)
                break
        if win is not None:
            cands.append(((s0, s1), win[1], None))
        else:
            cands.append(((s0, s1), None, None))
    result = (region, L, ext, cands)
    cache[key] = result
    return result


def edge_restricted_tentacle(P: SimplePolygon, q: Point, r: Point,
                             b: int) -> Tentacle:
    """Tentacle whose target is tied to boundary edge b.  For targets
    interior to b this is the plain tentacle; for a reflex endpoint whose
    collinear extension separates q from b it becomes the shortest path
    seeing b itself."""
    a0, a1 = P.edge(b)
    if not on_segment(a0, a1, r):
        if _dist_pt_seg(r, a0, a1) > 1e-9:
            raise TargetNotOnEdge("restricted target must lie on the stated "
                                  "edge")
        d = Point(a1.x - a0.x, a1.y - a0.y)
        t = ((r.x - a0.x) * d.x + (r.y - a0.y) * d.y) / (d.x * d.x
                                                         + d.y * d.y)
        if t <= 0.0:
            r = a0
        elif t >= 1.0:
            r = a1
        else:
            r = _snap_in(P, Point(a0.x + t * d.x, a0.y + t * d.y))
    if r != a0 and r != a1:
        t = tentacle(P, q, r)
        if t.target_edge != b:
            t = Tentacle(t.head, t.target, b, t.path, t.tip,
                         t.hiding_vertex, t.tentacle_cut)
        return t
    vidx = _vertex_index(P, r)
    assert vidx is not None
    rec = _restricted_region(P, vidx, b)
    if rec is None:
        # convex vertex: no collinear extension, restriction is vacuous
        t = tentacle(P, q, r)
        return Tentacle(t.head, t.target, b, t.path, t.tip,
                        t.hiding_vertex, t.tentacle_cut)
    region, L, ext, cands = rec
    if not P.contains(q):
        raise PointOutsidePolygon("tentacle head outside polygon")
    if L.contains(q):
        t = tentacle(P, q, r)
        return Tentacle(t.head, t.target, b, t.path, t.tip,
                        t.hiding_vertex, t.tentacle_cut)
    if region.contains(q):
        return _zero_tentacle(P, q, r, b)
    best = None
    for seg, hider, cut in cands:
        path = _pt_seg_path(P, q, seg)
        if best is None or path.length < best[0].length - 1e-15:
            best = (path, hider, cut)
    if best is None:
        return _zero_tentacle(P, q, r, b)
    path, hider, cut = best
    tip = path.waypoints[-1]
    if cut is None and hider is not None:
        # tip sits on an ordinary window of VP(v); direct its chord
        for seg, anchor in _vp(P, r).windows:
            if anchor == hider:
                cut = _directed_cut(seg[0], seg[1], q)
                break
    return Tentacle(q, r, b, path, tip, hider, cut)


# ---------------------------------------------------------------------------
# motion families

_F_LEN = 24


@dataclass(frozen=True)
class MotionCoeffs:
    """Closed-form length-change coefficients for one event interval.

    `coeffs` holds the family's own slots; `full` embeds them into the
    24-slot combined form so evaluation is uniform."""

    family: str
    coeffs: Tuple[float, ...]
    full: Tuple[float, ...]
    anchors: Dict[str, object]


def _unit(v: Point) -> Point:
    n = math.hypot(v.x, v.y)
    if n == 0:
        raise WrongCase("zero direction vector")
    return Point(v.x / n, v.y / n)


def slide_eps_prime(a: float, c: float, eps: float) -> float:
    """Displacement of a line's intersection with the cut as the cut's
    boundary point moves by eps: eps' = a*eps / (1 - c*eps)."""
    return a * eps / (1.0 - c * eps)


def _slide_constants(x0: Point, ldir: Point, u_h: Point, r0: Point,
                     bdir: Point) -> Tuple[float, float]:
    """Exact constants of the intersection slide eps' = a*eps/(1 - c*eps)
    for the line through x0 with direction ldir crossed by the rotating
    line through u_h and r0 + eps*bdir."""
    den = cross(ldir, Point(r0.x - u_h.x, r0.y - u_h.y))
    if abs(den) < 1e-15:
        raise WrongCase("slide line parallel to the tentacle cut")
    a = -cross(Point(x0.x - u_h.x, x0.y - u_h.y), bdir) / den
    c = -cross(ldir, bdir) / den
    return a, c


def _angle(u: Point, v: Point) -> float:
    nu, nv = math.hypot(u.x, u.y), math.hypot(v.x, v.y)
    if nu == 0 or nv == 0:
        return 0.0
    return math.acos(max(-1.0, min(1.0, dot(u, v) / (nu * nv))))


def _family_A(P, tent, bdir):
    u = tent.path.waypoints[-2]
    p0 = tent.tip
    u_h = tent.hiding_vertex
    r0 = tent.target
    eidx = _edge_near(P, p0)
    ea, eb = P.edge(eidx)
    ldir = _unit(Point(eb.x - ea.x, eb.y - ea.y))
    a, c = _slide_constants(p0, ldir, u_h, r0, bdir)
    A0 = dist(u, p0)
    D = dot(ldir, Point(p0.x - u.x, p0.y - u.y))
    A1 = 2.0 * (D * a - A0 * A0 * c)
    A2 = A0 * A0 * c * c - 2.0 * D * a * c + a * a
    A3 = -c
    anchors = {"p": p0, "r": r0, "u": u, "u_h": u_h,
               "t": line_intersection(p0, Point(p0.x + ldir.x, p0.y + ldir.y),
                                      r0, Point(r0.x + bdir.x, r0.y + bdir.y)),
               "phi": _angle(Point(u.x - p0.x, u.y - p0.y), ldir),
               "a": a, "c": c}
    return (A0, A1, A2, A3), anchors


def _family_B(tent, bdir):
    u = tent.path.waypoints[-2]
    u_h = tent.hiding_vertex
    r0 = tent.target
    uh_r = Point(u_h.x - r0.x, u_h.y - r0.y)
    R = math.hypot(uh_r.x, uh_r.y)
    if R == 0:
        raise WrongCase("target coincides with the hiding vertex")
    g0 = cross(Point(u.x - u_h.x, u.y - u_h.y), uh_r)
    if g0 == 0:
        raise WrongCase("last waypoint lies on the tentacle cut")
    sgn = 1.0 if g0 > 0 else -1.0
    g1 = cross(Point(u.x - u_h.x, u.y - u_h.y), bdir)
    S = dot(uh_r, bdir)
    B0 = sgn * g0 / R
    B1 = -sgn * g1 / R
    B2 = -2.0 * S / (R * R)
    B3 = 1.0 / (R * R)
    anchors = {"p": tent.tip, "r": r0, "u": u, "u_h": u_h,
               "beta": _angle(uh_r, bdir),
               "gamma": _angle(Point(u.x - u_h.x, u.y - u_h.y),
                               Point(tent.tip.x - u_h.x, tent.tip.y - u_h.y))}
    return (B0, B1, B2, B3), anchors


def _family_C(tent, sdir):
    q0 = tent.head
    u1 = tent.path.waypoints[1]
    C0 = dist(q0, u1)
    C1 = 2.0 * dot(sdir, Point(q0.x - u1.x, q0.y - u1.y))
    C2 = 1.0
    anchors = {"q": q0, "u": u1,
               "theta": _angle(sdir, Point(q0.x - u1.x, q0.y - u1.y))}
    return (C0, C1, C2), anchors


def _family_D(tent, sdir, bdir):
    q0 = tent.head
    u_h = tent.hiding_vertex
    r0 = tent.target
    uh_r = Point(u_h.x - r0.x, u_h.y - r0.y)
    R = math.hypot(uh_r.x, uh_r.y)
    if R == 0:
        raise WrongCase("target coincides with the hiding vertex")
    N0 = cross(Point(q0.x - u_h.x, q0.y - u_h.y), uh_r)
    if N0 == 0:
        raise WrongCase("head lies on the tentacle cut")
    sgn = 1.0 if N0 > 0 else -1.0
    D0 = sgn * N0 / R
    D1 = D3 = D6 = D7 = 0.0
    if bdir is not None:
        D1 = -sgn * cross(Point(q0.x - u_h.x, q0.y - u_h.y), bdir) / R
        S = dot(uh_r, bdir)
        D6 = -2.0 * S / (R * R)
        D7 = 1.0 / (R * R)
    D2 = 0.0
    if sdir is not None:
        D2 = sgn * cross(sdir, uh_r) / R
        if bdir is not None:
            D3 = -sgn * cross(sdir, bdir) / R
    co = (D0, D1, D2, D3, 0.0, 0.0, D6, D7, 0.0, 0.0)
    anchors = {"p": tent.tip, "q": q0, "r": r0, "u_h": u_h,
               "beta": None if bdir is None else _angle(uh_r, bdir),
               "gamma": _angle(Point(q0.x - u_h.x, q0.y - u_h.y),
                               Point(tent.tip.x - u_h.x, tent.tip.y - u_h.y))}
    return co, anchors


def _family_E(P, tent, sdir, bdir):
    q0 = tent.head
    p0 = tent.tip
    u_h = tent.hiding_vertex
    r0 = tent.target
    qp = Point(q0.x - p0.x, q0.y - p0.y)
    W = qp.x * qp.x + qp.y * qp.y
    E0 = math.sqrt(W)
    a = c = 0.0
    ldir = None
    if bdir is not None:
        eidx = _edge_near(P, p0)
        ea, eb = P.edge(eidx)
        ldir = _unit(Point(eb.x - ea.x, eb.y - ea.y))
        a, c = _slide_constants(p0, ldir, u_h, r0, bdir)
    Ds = dot(sdir, qp) if sdir is not None else 0.0
    Dl = dot(ldir, qp) if ldir is not None else 0.0
    Dsl = dot(sdir, ldir) if (sdir is not None and ldir is not None) else 0.0
    E1 = -2.0 * c * W - 2.0 * a * Dl
    E2 = 2.0 * Ds if sdir is not None else 0.0
    E3 = -4.0 * c * Ds - 2.0 * a * Dsl
    E4 = c * c * W + a * a + 2.0 * a * c * Dl
    E5 = 1.0 if sdir is not None else 0.0
    E6 = 2.0 * c * c * Ds + 2.0 * a * c * Dsl
    E7 = -2.0 * c if sdir is not None else 0.0
    E8 = c * c if sdir is not None else 0.0
    E9 = -2.0 * c
    E10 = c * c
    co = (E0, E1, E2, E3, E4, E5, E6, E7, E8, E9, E10)
    anchors = {"p": p0, "q": q0, "r": r0, "u_h": u_h, "a": a, "c": c,
               "phi": None if ldir is None else
               _angle(Point(q0.x - p0.x, q0.y - p0.y), ldir)}
    return co, anchors


def _embed(first=None, middle=None, last=None) -> Tuple[float, ...]:
    F = [0.0] * _F_LEN
    if first is not None:
        F[0], F[1], F[2] = first
    if middle is not None:
        F[3:13] = list(middle)
    if last is not None:
        if len(last) == 4:  # family A: numerator quadratic, squared divisor
            A0, A1, A2, A3 = last
            F[13], F[14], F[17] = A0, A1, A2
            F[22], F[23] = 2.0 * A3, A3 * A3
        else:  # family E
            (F[13], F[14], F[15], F[16], F[17], F[18],
             F[19], F[20], F[21], F[22], F[23]) = last
    return tuple(F)


def motion_coeffs(P: SimplePolygon, tent: Tentacle,
                  head_dir: Optional[Point] = None,
                  target_dir: Optional[Point] = None,
                  family: Optional[str] = None) -> MotionCoeffs:
    """Coefficients of the length-change function for a tentacle whose head
    moves along head_dir and whose target moves along target_dir.  The
    natural family follows from the tentacle's structure; requesting an
    inconsistent one raises WrongCase."""
    sdir = _unit(head_dir) if head_dir is not None else None
    bdir = _unit(target_dir) if target_dir is not None else None
    wp = tent.path.waypoints
    if tent.length == 0.0 or len(wp) == 1:
        natural = "F"
        if family is not None and family != natural:
            raise WrongCase("zero tentacle admits only the combined family")
        zero = tuple([0.0] * _F_LEN)
        return MotionCoeffs("F", zero, zero, {"q": tent.head, "r": tent.target})
    multi = len(wp) >= 3
    tip_onb = _near_boundary(P, tent.tip)
    if multi:
        if sdir is not None and bdir is not None:
            natural = "F"
        elif bdir is not None:
            natural = "A" if tip_onb else "B"
        else:
            natural = "C"
    else:
        natural = "E" if tip_onb else "D"
    if family is not None and family != natural:
        raise WrongCase(f"configuration implies family {natural}, "
                        f"not {family}")
    if natural == "A":
        co, anch = _family_A(P, tent, bdir)
        return MotionCoeffs("A", co, _embed(last=co), anch)
    if natural == "B":
        co, anch = _family_B(tent, bdir)
        full = _embed(middle=(co[0], co[1], 0.0, 0.0, 0.0, 0.0,
                              co[2], co[3], 0.0, 0.0))
        return MotionCoeffs("B", co, full, anch)
    if natural == "C":
        co, anch = _family_C(tent, sdir)
        return MotionCoeffs("C", co, _embed(first=co), anch)
    if natural == "D":
        co, anch = _family_D(tent, sdir, bdir)
        return MotionCoeffs("D", co, _embed(middle=co), anch)
    if natural == "E":
        co, anch = _family_E(P, tent, sdir, bdir)
        return MotionCoeffs("E", co, _embed(last=co), anch)
    # combined: head block plus the applicable tip block
    cco, canch = _family_C(tent, sdir)
    if tip_onb:
        aco, aanch = _family_A(P, tent, bdir)
        full = _embed(first=cco, last=aco)
        co = tuple(full)
        anch = {**aanch, **canch}
    else:
        bco, banch = _family_B(tent, bdir)
        full = _embed(first=cco,
                      middle=(bco[0], bco[1], 0.0, 0.0, 0.0, 0.0,
                              bco[2], bco[3], 0.0, 0.0))
        co = tuple(full)
        anch = {**banch, **canch}
    return MotionCoeffs("F", co, full, anch)


def evaluate_motion(mc: MotionCoeffs, delta: float, eps: float) -> float:
    """Length change of the tentacle under the motions (delta, eps)."""
    F = mc.full
    out = 0.0
    s1 = F[0] * F[0] + F[1] * delta + F[2] * delta * delta
    out += -F[0] + math.sqrt(max(0.0, s1))
    num2 = (F[3] + F[4] * eps + F[5] * delta + F[6] * eps * delta
            + F[7] * eps * eps + F[8] * eps * eps * delta)
    den2 = (1.0 + F[9] * eps + F[10] * eps * eps + F[11] * eps ** 3
            + F[12] * eps ** 4)
    out += -F[3] + num2 / math.sqrt(den2)
    num3 = (F[13] * F[13] + F[14] * eps + F[15] * delta + F[16] * eps * delta
            + F[17] * eps * eps + F[18] * delta * delta
            + F[19] * eps * eps * delta + F[20] * eps * delta * delta
            + F[21] * eps * eps * delta * delta)
    den3 = 1.0 + F[22] * eps + F[23] * eps * eps
    out += -F[13] + math.sqrt(max(0.0, num3) / den3)
    return out


def motion_partials(mc: MotionCoeffs, delta: float,
                    eps: float) -> Tuple[float, float]:
    """Analytic partial derivatives (d/d delta, d/d eps) of the length
    change.  Degenerate all-zero blocks contribute nothing."""
    F = mc.full
    dd = de = 0.0
    s1 = F[0] * F[0] + F[1] * delta + F[2] * delta * delta
    if (F[1] != 0.0 or F[2] != 0.0) and s1 > 0.0:
        dd += (F[1] + 2.0 * F[2] * delta) / (2.0 * math.sqrt(s1))
    num2 = (F[3] + F[4] * eps + F[5] * delta + F[6] * eps * delta
            + F[7] * eps * eps + F[8] * eps * eps * delta)
    den2 = (1.0 + F[9] * eps + F[10] * eps * eps + F[11] * eps ** 3
            + F[12] * eps ** 4)
    if any(F[i] != 0.0 for i in range(3, 13)):
        rd = math.sqrt(den2)
        dd += (F[5] + F[6] * eps + F[8] * eps * eps) / rd
        dnum = F[4] + F[6] * delta + 2.0 * F[7] * eps + 2.0 * F[8] * eps * delta
        dden = (F[9] + 2.0 * F[10] * eps + 3.0 * F[11] * eps * eps
                + 4.0 * F[12] * eps ** 3)
        de += dnum / rd - num2 * dden / (2.0 * den2 * rd)
    num3 = (F[13] * F[13] + F[14] * eps + F[15] * delta + F[16] * eps * delta
            + F[17] * eps * eps + F[18] * delta * delta
            + F[19] * eps * eps * delta + F[20] * eps * delta * delta
            + F[21] * eps * eps * delta * delta)
    den3 = 1.0 + F[22] * eps + F[23] * eps * eps
    if any(F[i] != 0.0 for i in range(13, 24)) and num3 > 0.0:
        g = math.sqrt(num3 / den3)
        dnum3 = (F[15] + F[16] * eps + 2.0 * F[18] * delta
                 + F[19] * eps * eps + 2.0 * F[20] * eps * delta
                 + 2.0 * F[21] * eps * eps * delta)
        dd += dnum3 / (2.0 * den3 * g)
        enum3 = (F[14] + F[16] * delta + 2.0 * F[17] * eps
                 + 2.0 * F[19] * eps * delta + F[20] * delta * delta
                 + 2.0 * F[21] * eps * delta * delta)
        eden3 = F[22] + 2.0 * F[23] * eps
        de += (enum3 * den3 - num3 * eden3) / (2.0 * den3 * den3 * g)
    return dd, de


# ---------------------------------------------------------------------------
# event enumeration

@dataclass(frozen=True)
class EventPoint:
    param: float
    etype: int
    description: str


@dataclass(frozen=True)
class TargetSweep:
    """Target slides along boundary edge `edge`; one or two fixed heads."""
    edge: int
    heads: Tuple[Point, ...]


@dataclass(frozen=True)
class HeadSweep:
    """Head slides along a free segment; the target point stays fixed."""
    segment: Tuple[Point, Point]
    target: Point
    target_edge: Optional[int] = None


_PARAM_TOL = 1e-9
_INSET = 1e-9


def _sig(P: SimplePolygon, tent: Tentacle,
         moving_head: Optional[Point] = None) -> tuple:
    wp = tent.path.waypoints
    chain = wp[1:-1]
    head_onb = (_near_boundary(P, moving_head)
                if moving_head is not None else False)
    return (tent.length > 0.0, chain, tent.hiding_vertex,
            tent.length > 0.0 and _near_boundary(P, tent.tip), head_onb)


def _classify(s0: tuple, s1: tuple) -> Tuple[int, str]:
    if s0[0] != s1[0]:
        return 4, "tentacle becomes or stops being degenerate"
    if s0[3] != s1[3] or s0[4] != s1[4]:
        if s0[1] == s1[1] and s0[2] == s1[2]:
            return 4, "head or tip contact with the boundary changes"
    if s0[1] != s1[1]:
        w0, w1 = s0[1], s1[1]
        if w0[-1:] == w1[-1:] and w0[:1] != w1[:1]:
            return 1, "waypoint change at the head end"
        if w0[:1] == w1[:1] and w0[-1:] != w1[-1:]:
            return 2, "waypoint change at the tip end"
        if len(w0) != len(w1) and (w0[1:] == w1 or w1[1:] == w0):
            return 1, "waypoint change at the head end"
        if len(w0) != len(w1) and (w0[:-1] == w1 or w1[:-1] == w0):
            return 2, "waypoint change at the tip end"
        return 1, "waypoint sequence changes"
    if s0[2] != s1[2]:
        return 3, "hiding vertex changes"
    return 4, "head or tip contact with the boundary changes"


def event_points(P: SimplePolygon, sweep, samples: int = 96) -> List[EventPoint]:
    """Parameters in (0, 1) where the sweeping tentacle's structure changes,
    located by bisection on the combinatorial signature; with two heads the
    equal-length crossovers (type 5) are root-found from the motion
    families inside each smooth interval."""
    if isinstance(sweep, TargetSweep):
        a, b = P.edge(sweep.edge)
        span = dist(a, b)

        def tents(t: float) -> List[Tentacle]:
            r = lerp(a, b, t)
            return [edge_restricted_tentacle(P, h, r, sweep.edge)
                    for h in sweep.heads]

        def sig(t: float) -> tuple:
            return tuple(_sig(P, tt) for tt in tents(t))

        bdir: Optional[Point] = Point((b.x - a.x) / span, (b.y - a.y) / span)
    elif isinstance(sweep, HeadSweep):
        a, b = sweep.segment
        tgt_edge = (sweep.target_edge if sweep.target_edge is not None
                    else _edge_of(P, sweep.target))

        def tents(t: float) -> List[Tentacle]:
            qq = lerp(a, b, t)
            return [edge_restricted_tentacle(P, qq, sweep.target, tgt_edge)]

        def sig(t: float) -> tuple:
            qq = lerp(a, b, t)
            return (_sig(P, tents(t)[0], moving_head=qq),)

        bdir = None
    else:
        raise WrongCase("unknown sweep configuration")

    lo, hi = _INSET, 1.0 - _INSET
    ts = [lo + (hi - lo) * i / samples for i in range(samples + 1)]
    sigs = [sig(t) for t in ts]
    events: List[EventPoint] = []
    breaks: List[float] = [lo]
    for i in range(samples):
        # a cell may hold several events; keep localizing until the running
        # signature matches the cell's right end
        left_t, s_left = ts[i], sigs[i]
        s_right_end = sigs[i + 1]
        guard = 0
        while s_left != s_right_end and guard < 16:
            guard += 1
            t0, t1 = left_t, ts[i + 1]
            while t1 - t0 > _PARAM_TOL:
                tm = 0.5 * (t0 + t1)
                if sig(tm) == s_left:
                    t0 = tm
                else:
                    t1 = tm
            tev = 0.5 * (t0 + t1)
            probe = min(tev + 2.0 * _PARAM_TOL, ts[i + 1])
            s_after = sig(probe)
            per_head = [_classify(sa, sb) for sa, sb in zip(s_left, s_after)
                        if sa != sb]
            etype, descr = min(per_head) if per_head else (4,
                                                           "structure changes")
            events.append(EventPoint(tev, etype, descr))
            breaks.append(tev)
            left_t, s_left = probe, s_after
    breaks.append(hi)

    if isinstance(sweep, TargetSweep) and len(sweep.heads) == 2:
        for lo_t, hi_t in zip(breaks, breaks[1:]):
            if hi_t - lo_t < 10.0 * _PARAM_TOL:
                continue
            t0 = lo_t + 3.0 * _PARAM_TOL
            t1 = hi_t - 3.0 * _PARAM_TOL
            pair0 = tents(t0)
            d0 = pair0[0].length - pair0[1].length
            pair1 = tents(t1)
            d1 = pair1[0].length - pair1[1].length
            if d0 == 0.0 or d1 == 0.0 or (d0 > 0) == (d1 > 0):
                continue
            mcs = [motion_coeffs(P, tt, target_dir=bdir)
                   if tt.length > 0 else None for tt in pair0]

            def diff(t: float) -> float:
                e = (t - t0) * span
                l1 = pair0[0].length + (evaluate_motion(mcs[0], 0.0, e)
                                        if mcs[0] is not None else 0.0)
                l2 = pair0[1].length + (evaluate_motion(mcs[1], 0.0, e)
                                        if mcs[1] is not None else 0.0)
                return l1 - l2
            x0, x1 = t0, t1
            f0 = diff(x0)
            while x1 - x0 > _PARAM_TOL:
                xm = 0.5 * (x0 + x1)
                fm = diff(xm)
                if fm == 0.0:
                    x0 = x1 = xm
                    break
                if (fm > 0) == (f0 > 0):
                    x0 = xm
                else:
                    x1 = xm
            events.append(EventPoint(0.5 * (x0 + x1), 5,
                                     "tentacle lengths cross over"))

    events.sort(key=lambda e: e.param)
    merged: List[EventPoint] = []
    for ev in events:
        if merged and abs(ev.param - merged[-1].param) <= _PARAM_TOL:
            continue
        merged.append(ev)
    return merged
