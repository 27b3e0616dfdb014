"""Relative convex hulls and tour assembly.

A tour is the boundary of the smallest relatively convex set containing
its input objects: a closed geodesic cycle whose corners are input points
or reflex polygon vertices.  Hulls are built by joining the Euclidean
hull cyclically with geodesics, then inserting any input point the curve
still leaves outside; hulls of geodesically collinear inputs collapse to
a point or a doubled path.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import EmptyInput
from .geodesics import GeodesicPath, shortest_path_points
from .geom_core import Point, SimplePolygon, dist, orient, signed_area
from .tentacles import _dist_pt_seg

__all__ = [
    "Tour",
    "relative_convex_hull",
    "tour_from_jellyfish",
    "classify_chains",
]

HullObject = Union[Point, GeodesicPath, Iterable[Point]]
Chain = Tuple[str, Tuple[int, int]]

_AREA_TOL = 1e-12


@dataclass(frozen=True)
class Tour:
    """Closed route: a waypoint cycle, a doubled path, or a single point.

    Segment tours store the path once; their length counts both
    directions.  Chains partition a proper cycle into maximal pieces
    whose interior vertices turn one way."""

    kind: str  # "point" | "segment" | "closed"
    waypoints: Tuple[Point, ...]
    length: float
    chains: Tuple[Chain, ...]

    def cycle(self) -> Tuple[Point, ...]:
        """One full traversal (segment tours unfold into out-and-back)."""
        if self.kind == "segment":
            return self.waypoints + tuple(reversed(self.waypoints[1:-1]))
        return self.waypoints

    def __repr__(self) -> str:
        return (f"Tour({self.kind}, {len(self.waypoints)} wps, "
                f"len={self.length:.6g})")


# ---------------------------------------------------------------------------
# hull construction

def _collect(objects) -> List[Point]:
    if isinstance(objects, (Point, GeodesicPath)):
        objects = [objects]
    pts: List[Point] = []
    for obj in objects:
        if isinstance(obj, Point):
            pts.append(obj)
        elif isinstance(obj, GeodesicPath):
            pts.extend(obj.waypoints)
        else:
            pts.extend(Point(p[0], p[1]) for p in obj)
    return pts


def _euclid_hull(pts: Sequence[Point]) -> List[Point]:
    """Lower/upper monotone chain; strictly convex turns only, so
    collinear interior points drop out."""
    ps = sorted(set(pts))
    if len(ps) <= 2:
        return ps
    lower: List[Point] = []
    for p in ps:
        while len(lower) > 1 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(ps):
        while len(upper) > 1 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 2 else ps[:1]


def _arc(P: SimplePolygon, a: Point, b: Point) -> GeodesicPath:
    cache = P._scratch.setdefault("hull_arc", {})
    key = (a, b)
    path = cache.get(key)
    if path is None:
        path = shortest_path_points(P, a, b)
        cache[key] = path
    return path


def _curve_of(P: SimplePolygon, cyc: Sequence[Point]) -> List[Point]:
    out: List[Point] = []
    m = len(cyc)
    for i in range(m):
        wp = _arc(P, cyc[i], cyc[(i + 1) % m]).waypoints
        for p in wp[:-1]:
            if not out or out[-1] != p:
                out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _encloses(curve: Sequence[Point], s: Point, tol: float = 1e-9) -> bool:
    m = len(curve)
    if m == 1:
        return dist(curve[0], s) <= tol
    for i in range(m):
        if _dist_pt_seg(s, curve[i], curve[(i + 1) % m]) <= tol:
            return True
    wn = 0
    for i in range(m):
        a, b = curve[i], curve[(i + 1) % m]
        if a.y <= s.y < b.y and orient(a, b, s) > 0:
            wn += 1
        elif b.y <= s.y < a.y and orient(a, b, s) < 0:
            wn -= 1
    return wn != 0


def relative_convex_hull(P: SimplePolygon, objects) -> Tour:
    """Shortest closed curve in the polygon containing every object
    (points, geodesic paths, or iterables of points)."""
    pts = _collect(objects)
    if not pts:
        raise EmptyInput("relative convex hull needs at least one point")
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return Tour("point", (uniq[0],), 0.0, ())
    cyc = _euclid_hull(uniq)
    for _ in range(len(uniq) + 4):
        curve = _curve_of(P, cyc)
        on_cycle = set(cyc)
        outside = [s for s in uniq
                   if s not in on_cycle and not _encloses(curve, s)]
        if not outside:
            break
        s = outside[0]
        m = len(cyc)
        best = None
        for i in range(m):
            a, b = cyc[i], cyc[(i + 1) % m]
            delta = (_arc(P, a, s).length + _arc(P, s, b).length
                     - _arc(P, a, b).length)
            if best is None or delta < best[0] - 1e-12:
                best = (delta, i)
        cyc = cyc[:best[1] + 1] + [s] + cyc[best[1] + 1:]
        curve = None
    if curve is None:
        curve = _curve_of(P, cyc)
    return _finalize(curve)


def tour_from_jellyfish(P: SimplePolygon, jf) -> Tour:
    """Hull of a jellyfish: its head plus all tentacle paths."""
    objects: List[HullObject] = [jf.head]
    objects.extend(t.path for t in jf.tentacles)
    return relative_convex_hull(P, objects)


# ---------------------------------------------------------------------------
# normalization

def _cycle_length(curve: Sequence[Point]) -> float:
    m = len(curve)
    return sum(dist(curve[i], curve[(i + 1) % m]) for i in range(m))


def _drop_passthrough(curve: List[Point]) -> List[Point]:
    """Remove waypoints the curve passes straight through; reversal tips
    (spurs) stay."""
    changed = True
    while changed and len(curve) > 2:
        changed = False
        for i in range(len(curve)):
            a = curve[i - 1]
            w = curve[i]
            b = curve[(i + 1) % len(curve)]
            if w == a:
                curve.pop(i)
                changed = True
                break
            if orient(a, w, b) == 0:
                forward = ((w.x - a.x) * (b.x - w.x)
                           + (w.y - a.y) * (b.y - w.y))
                if forward > 0:
                    curve.pop(i)
                    changed = True
                    break
    if len(curve) == 2 and curve[0] == curve[1]:
        curve.pop()
    return curve


def _palindrome_rotation(curve: Sequence[Point]):
    """Rotation index at which the cycle reads the same both ways, if the
    curve is a doubled path."""
    m = len(curve)
    if m % 2 != 0:
        return None
    for r in range(m):
        if all(curve[(r + i) % m] == curve[(r - i) % m] for i in range(m)):
            return r
    return None


def _finalize(curve: List[Point]) -> Tour:
    curve = _drop_passthrough(list(curve))
    if len(curve) == 1:
        return Tour("point", (curve[0],), 0.0, ())
    if len(curve) == 2:
        a, b = sorted(curve)
        return Tour("segment", (a, b), 2.0 * dist(a, b), ())
    length = _cycle_length(curve)
    r = _palindrome_rotation(curve)
    if r is not None:
        half = len(curve) // 2
        path = [curve[(r + i) % len(curve)] for i in range(half + 1)]
        if path[-1] < path[0]:
            path.reverse()
        return Tour("segment", tuple(path), length, ())
    area = signed_area(curve)
    if area < 0:
        curve.reverse()
    start = min(range(len(curve)), key=lambda i: curve[i])
    curve = curve[start:] + curve[:start]
    wps = tuple(curve)
    chains = _chains_on(wps) if abs(area) > _AREA_TOL else ()
    return Tour("closed", wps, length, chains)


# ---------------------------------------------------------------------------
# chain classification

def _chains_on(wps: Sequence[Point]) -> Tuple[Chain, ...]:
    m = len(wps)
    reflex = [orient(wps[i - 1], wps[i], wps[(i + 1) % m]) < 0
              for i in range(m)]
    if not any(reflex):
        return (("convex", (0, m - 1)),)
    # maximal reflex runs, walked cyclically from a convex vertex
    start = next(i for i in range(m) if not reflex[i])
    runs: List[Tuple[int, int]] = []
    i = 0
    while i < m:
        j = (start + i) % m
        if reflex[j]:
            k = i
            while k < m and reflex[(start + k) % m]:
                k += 1
            runs.append(((start + i) % m, (start + k - 1) % m))
            i = k
        else:
            i += 1
    chains: List[Chain] = []
    for idx, (a, b) in enumerate(runs):
        chains.append(("reflex", ((a - 1) % m, (b + 1) % m)))
        nxt = runs[(idx + 1) % len(runs)][0]
        chains.append(("convex", ((b + 1) % m, (nxt - 1) % m)))
    chains.sort(key=lambda c: c[1][0])
    return tuple(chains)


def classify_chains(t: Tour) -> Tuple[Chain, ...]:
    """Maximal alternating convex/reflex chains of a proper cycle;
    degenerate tours decompose into nothing."""
    if t.kind != "closed":
        return ()
    if abs(signed_area(t.waypoints)) <= _AREA_TOL:
        return ()
    return _chains_on(t.waypoints)
