"""Jellyfish: tentacle bundles with a common head that jointly see the
boundary.

A jellyfish pair assigns, for both endpoints of every boundary edge, the
shorter of the two heads' tentacles to that head; edges whose endpoints
land in different jellyfish get an extra matched tentacle pair at the
equalizing split point, which restores joint edge coverage.  The minimum
jellyfish pair over two extensions optimizes both heads along their
extension chords; its length (the longest tentacle) lower-bounds half the
optimal route maxlen, which is what makes it the anchor of the
approximation.  Reduction drops tentacles whose cut another, longer
tentacle already reaches behind.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .cuts import Extension, _segment_meets_region, left_polygon
from .errors import InvalidCut
from .geodesics import (GeodesicPath, _closest_seg_seg, _seg_seg_common_point,
                        _seg_seg_path, shortest_path)
from .geom_core import (Point, Region, SimplePolygon, dist, lerp,
                        segments_intersect)
from .tentacles import (
    Tentacle,
    edge_restricted_tentacle,
    _restricted_region,
    _snap_in,
    _vertex_index,
    _vp,
)


__all__ = [
    "Jellyfish",
    "JellyfishPair",
    "MinimumJellyfishPair",
    "ReducedJellyfishPair",
    "SplitRecord",
    "jellyfish_pair",
    "slot_table",
    "bases",
    "reduce",
]

_TOL = 1e-9


@dataclass(frozen=True)
class Jellyfish:
    """All tentacles attached to one head."""

    head: Point
    tentacles: Tuple[Tentacle, ...]

    @property
    def length(self) -> float:
        return max((t.length for t in self.tentacles), default=0.0)


@dataclass(frozen=True)
class SplitRecord:
    """Equalization point of an edge whose endpoints split across heads."""

    edge: int
    r_star: Point
    length_1: float
    length_2: float


@dataclass(frozen=True)
class JellyfishPair:
    polygon: SimplePolygon
    jf1: Jellyfish
    jf2: Jellyfish
    length: float
    split_records: Tuple[SplitRecord, ...]


@dataclass(frozen=True)
class MinimumJellyfishPair:
    pair: JellyfishPair
    q1: Point
    q2: Point
    e1: Extension
    e2: Extension
    case_tag: int
    mode: str

    @property
    def length(self) -> float:
        return self.pair.length


@dataclass(frozen=True)
class ReducedJellyfishPair:
    pair: JellyfishPair
    tentacles: Tuple[Tentacle, ...]
    removal_log: Tuple[Tuple[Tentacle, Tentacle], ...]

    @property
    def length(self) -> float:
        return max((t.length for t in self.tentacles), default=0.0)

    def for_head(self, head: Point) -> Tuple[Tentacle, ...]:
        return tuple(t for t in self.tentacles if t.head == head)


# ---------------------------------------------------------------------------
# jellyfish pairs for fixed heads

def _edge_point(P: SimplePolygon, b: int, t: float) -> Point:
    a, c = P.edge(b)
    return Point(a.x + t * (c.x - a.x), a.y + t * (c.y - a.y))


def _split_edge(P: SimplePolygon, q1: Point, q2: Point, b: int,
                tol: float):
    """Equalization point on edge b: bracketed bisection on the signed
    length difference of the two heads' tentacles."""
    memo: Dict[float, float] = {}

    def diff(t: float) -> float:
        g = memo.get(t)
        if g is None:
            r = _edge_point(P, b, t)
            g = (edge_restricted_tentacle(P, q1, r, b).length
                 - edge_restricted_tentacle(P, q2, r, b).length)
            memo[t] = g
        return g

    lo, hi = 1e-7, 1.0 - 1e-7
    grid = [lo + (hi - lo) * i / 32 for i in range(33)]
    bracket = None
    for t0, t1 in zip(grid, grid[1:]):
        if diff(t0) == 0.0:
            bracket = (t0, t0)
            break
        if diff(t0) * diff(t1) < 0.0:
            bracket = (t0, t1)
            break
    if bracket is None:
        return None
    t0, t1 = bracket
    while t1 - t0 > 1e-12:
        tm = 0.5 * (t0 + t1)
        if diff(t0) * diff(tm) <= 0.0:
            t1 = tm
        else:
            t0 = tm
    ts = 0.5 * (t0 + t1)
    r_star = _edge_point(P, b, ts)
    ta = edge_restricted_tentacle(P, q1, r_star, b)
    tb = edge_restricted_tentacle(P, q2, r_star, b)
    return r_star, ta, tb


def jellyfish_pair(P: SimplePolygon, q1: Point, q2: Point,
                   tol: float = _TOL) -> JellyfishPair:
    """Assign every edge-endpoint tentacle to the head with the shorter
    one (ties to q1) and split edges whose endpoints disagree."""
    own1: List[Tentacle] = []
    own2: List[Tentacle] = []
    splits: List[SplitRecord] = []
    n = P.n
    verts = P.vertices
    for b in range(n):
        sides = []
        for v in (verts[b], verts[(b + 1) % n]):
            ta = edge_restricted_tentacle(P, q1, v, b)
            tb = edge_restricted_tentacle(P, q2, v, b)
            if ta.length <= tb.length:
                own1.append(ta)
                sides.append(1)
            else:
                own2.append(tb)
                sides.append(2)
        if sides[0] != sides[1]:
            rec = _split_edge(P, q1, q2, b, tol)
            if rec is not None:
                r_star, ta, tb = rec
                own1.append(ta)
                own2.append(tb)
                splits.append(SplitRecord(b, r_star, ta.length, tb.length))
    length = max((t.length for t in own1 + own2), default=0.0)
    return JellyfishPair(P, Jellyfish(q1, tuple(own1)),
                         Jellyfish(q2, tuple(own2)), length, tuple(splits))


# ---------------------------------------------------------------------------
# per-slot shortest tentacles from a whole extension

Slot = Tuple[int, int]  # (edge index, endpoint 0 or 1)


def _slot_region(P: SimplePolygon, slot: Slot):
    """Target region of the slot's vertex-restricted tentacle plus its entry
    segments (the frontier pieces not lying along the polygon boundary).
    Geodesics can only enter the region through those, so shortest-path
    queries skip the rest of the ring.  Reflex endpoints use their clipped
    visibility region, convex ones the plain visibility region."""
    cache = P._scratch.setdefault("slot_region", {})
    hit = cache.get(slot)
    if hit is not None:
        return hit
    b, which = slot
    v = P.vertices[(b + which) % P.n]
    vidx = _vertex_index(P, v)
    rec = _restricted_region(P, vidx, b)
    if rec is not None:
        ring = rec[0].ring
        entries = [seg for seg, _, _ in rec[3]]
    else:
        vp = _vp(P, v)
        ring = vp.region.ring
        entries = [(_snap_in(P, s[0]), _snap_in(P, s[1]))
                   for s, _ in vp.windows]
    region = Region([_snap_in(P, p) for p in ring])
    result = (region, entries)
    cache[slot] = result
    return result


def _sp_to_region(P: SimplePolygon, seg: Tuple[Point, Point], region: Region,
                  entries: Sequence[Tuple[Point, Point]]) -> GeodesicPath:
    """Shortest path from a chord to a region, entering only through the
    given frontier segments."""
    for p in seg:
        if region.contains(p):
            return GeodesicPath((p,))
    for s in entries:
        if segments_intersect(seg[0], seg[1], s[0], s[1]):
            return GeodesicPath((_seg_seg_common_point(seg, s),))
    best = None
    for s in entries:
        path = _seg_seg_path(P, seg, s)
        if best is None or path.length < best.length:
            best = path
    if best is None:
        return shortest_path(P, seg, region)
    return best


def _ext_segment(P: SimplePolygon, ext: Extension) -> Tuple[Point, Point]:
    return _snap_in(P, ext.cut.start), _snap_in(P, ext.cut.end)


def slot_table(P: SimplePolygon, ext: Extension) -> Dict[Slot, GeodesicPath]:
    """Shortest path from anywhere on the extension chord into every slot's
    target region; the free-head analogue of the per-vertex tentacles.
    Cached per extension, reused across extension pairs."""
    cache = P._scratch.setdefault("slot_table", {})
    key = (ext.cut.start, ext.cut.end)
    hit = cache.get(key)
    if hit is not None:
        return hit
    seg = _ext_segment(P, ext)
    table: Dict[Slot, GeodesicPath] = {}
    for b in range(P.n):
        for which in (0, 1):
            region, entries = _slot_region(P, (b, which))
            table[(b, which)] = _sp_to_region(P, seg, region, entries)
    cache[key] = table
    return table


def _free_target_path(P: SimplePolygon, ext: Extension,
                      r: Point) -> GeodesicPath:
    """Shortest path from the extension chord to a point seeing r."""
    vp = _vp(P, r)
    region = Region([_snap_in(P, p) for p in vp.region.ring])
    entries = [(_snap_in(P, s[0]), _snap_in(P, s[1])) for s, _ in vp.windows]
    return _sp_to_region(P, _ext_segment(P, ext), region, entries)


# ---------------------------------------------------------------------------
# bases

def _cut_mid(P: SimplePolygon, ext: Extension) -> Point:
    return _snap_in(P, lerp(ext.cut.start, ext.cut.end, 0.5))


def _crossed_edges(P: SimplePolygon, t1: Dict[Slot, GeodesicPath],
                   t2: Dict[Slot, GeodesicPath]) -> List[int]:
    out = []
    for b in range(P.n):
        d0 = t1[(b, 0)].length - t2[(b, 0)].length
        d1 = t1[(b, 1)].length - t2[(b, 1)].length
        if (d0 <= 0.0 < d1) or (d1 <= 0.0 < d0):
            out.append(b)
    return out


def _split_roots_free(P: SimplePolygon, e1: Extension, e2: Extension,
                      b: int) -> List[Tuple[Point, Point]]:
    """Head pairs equalizing the two extensions' free tentacles along edge
    b (the two-longest-tentacle configuration with one shared target)."""
    memo: Dict[float, Tuple[float, Point, Point]] = {}

    def probe(t: float) -> Tuple[float, Point, Point]:
        hit = memo.get(t)
        if hit is None:
            r = _snap_in(P, _edge_point(P, b, t))
            p1 = _free_target_path(P, e1, r)
            p2 = _free_target_path(P, e2, r)
            hit = (p1.length - p2.length, p1.waypoints[0], p2.waypoints[0])
            memo[t] = hit
        return hit

    lo, hi = 1e-6, 1.0 - 1e-6
    grid = [lo + (hi - lo) * i / 16 for i in range(17)]
    out = []
    for t0, t1 in zip(grid, grid[1:]):
        if probe(t0)[0] * probe(t1)[0] >= 0.0:
            continue
        a, c = t0, t1
        while c - a > 1e-10:
            m = 0.5 * (a + c)
            if probe(a)[0] * probe(m)[0] <= 0.0:
                c = m
            else:
                a = m
        _, h1, h2 = probe(0.5 * (a + c))
        out.append((h1, h2))
    return out


def _common_head_roots(P: SimplePolygon, ext: Extension,
                       slots: Sequence[Slot]) -> List[Point]:
    """Heads on the extension where two vertex tentacles from the same head
    have equal length (two longest tentacles sharing their head)."""
    seg = _ext_segment(P, ext)
    verts = P.vertices
    n = P.n

    def head(t: float) -> Point:
        return _snap_in(P, lerp(seg[0], seg[1], t))

    out: List[Point] = []
    for i in range(len(slots)):
        for j in range(i + 1, len(slots)):
            (b1, w1), (b2, w2) = slots[i], slots[j]
            v1 = verts[(b1 + w1) % n]
            v2 = verts[(b2 + w2) % n]
            if v1 == v2 and b1 == b2:
                continue
            memo: Dict[float, float] = {}

            def diff(t: float) -> float:
                g = memo.get(t)
                if g is None:
                    q = head(t)
                    g = (edge_restricted_tentacle(P, q, v1, b1).length
                         - edge_restricted_tentacle(P, q, v2, b2).length)
                    memo[t] = g
                return g

            grid = [k / 8 for k in range(9)]
            for t0, t1 in zip(grid, grid[1:]):
                if diff(t0) * diff(t1) >= 0.0:
                    continue
                a, c = t0, t1
                while c - a > _TOL:
                    m = 0.5 * (a + c)
                    if diff(a) * diff(m) <= 0.0:
                        c = m
                    else:
                        a = m
                out.append(head(0.5 * (a + c)))
    return out


def _three_way_candidates(P: SimplePolygon, exts: Tuple[Extension, Extension],
                          crossed: Sequence[int],
                          top: Tuple[Sequence[Slot], Sequence[Slot]],
                          other_base: Tuple[Point, Point]):
    """Configurations where a shared-target split tentacle pair and a
    third vertex tentacle at the same head all have equal length; solved
    as a 2-variable root problem per seed."""
    from scipy.optimize import least_squares

    verts = P.vertices
    n = P.n
    out = []
    for i, ext in enumerate(exts):
        other = exts[1 - i]
        seg = _ext_segment(P, ext)
        for b in crossed:
            free_memo: Dict[float, GeodesicPath] = {}

            def free(tr: float) -> GeodesicPath:
                p = free_memo.get(tr)
                if p is None:
                    p = _free_target_path(P, other,
                                          _snap_in(P, _edge_point(P, b, tr)))
                    free_memo[tr] = p
                return p

            for slot in top[i][:3]:
                b2, w2 = slot
                if b2 == b:
                    continue
                v2 = verts[(b2 + w2) % n]

                def residual(x):
                    tq = min(1.0, max(0.0, x[0]))
                    tr = min(1.0, max(0.0, x[1]))
                    q = _snap_in(P, lerp(seg[0], seg[1], tq))
                    r = _snap_in(P, _edge_point(P, b, tr))
                    l_split = edge_restricted_tentacle(P, q, r, b).length
                    l_free = free(round(tr, 12)).length
                    l_third = edge_restricted_tentacle(P, q, v2, b2).length
                    return [l_split - l_free, l_split - l_third]

                best = None
                for seed in ((0.5, 0.5), (0.2, 0.8)):
                    try:
                        sol = least_squares(residual, seed,
                                            bounds=([0.0, 0.0], [1.0, 1.0]),
                                            diff_step=1e-6, max_nfev=30)
                    except Exception:
                        continue
                    res = max(abs(v) for v in sol.fun)
                    if res < 1e-7 and (best is None or res < best[0]):
                        best = (res, sol.x)
                    if best is not None and best[0] < 1e-9:
                        break
                if best is None:
                    continue
                tq, tr = best[1]
                q = _snap_in(P, lerp(seg[0], seg[1],
                                     min(1.0, max(0.0, tq))))
                partner = free(round(min(1.0, max(0.0, tr)), 12)).waypoints[0]
                pair = (q, partner) if i == 0 else (partner, q)
                out.append(pair)
    return out


def _four_way_candidates(P: SimplePolygon, exts: Tuple[Extension, Extension],
                         crossed: Sequence[int]):
    """Configurations with two split edges whose four tentacles share the
    maximum; found by minimizing the running maximum over both heads and
    both split parameters."""
    from scipy.optimize import minimize

    segs = [_ext_segment(P, e) for e in exts]
    out = []
    for ai in range(len(crossed)):
        for bi in range(ai + 1, len(crossed)):
            b1, b2 = crossed[ai], crossed[bi]

            def objective(x):
                tq1, tq2, tr1, tr2 = (min(1.0, max(0.0, v)) for v in x)
                q1 = _snap_in(P, lerp(segs[0][0], segs[0][1], tq1))
                q2 = _snap_in(P, lerp(segs[1][0], segs[1][1], tq2))
                r1 = _snap_in(P, _edge_point(P, b1, tr1))
                r2 = _snap_in(P, _edge_point(P, b2, tr2))
                return max(
                    edge_restricted_tentacle(P, q1, r1, b1).length,
                    edge_restricted_tentacle(P, q2, r1, b1).length,
                    edge_restricted_tentacle(P, q1, r2, b2).length,
                    edge_restricted_tentacle(P, q2, r2, b2).length)

            try:
                sol = minimize(objective, (0.5, 0.5, 0.5, 0.5),
                               method="Nelder-Mead",
                               options={"xatol": 1e-7, "fatol": 1e-7,
                                        "maxiter": 160, "maxfev": 260})
            except Exception:
                continue
            tq1, tq2 = (min(1.0, max(0.0, v)) for v in sol.x[:2])
            out.append((_snap_in(P, lerp(segs[0][0], segs[0][1], tq1)),
                        _snap_in(P, lerp(segs[1][0], segs[1][1], tq2))))
    return out


def bases(P: SimplePolygon, e1: Extension, e2: Extension,
          mode: str = "full") -> MinimumJellyfishPair:
    """Best head pair on two extension chords.

    Fast mode tries the per-slot maximizing heads and the split-edge
    equalization heads; full mode adds the common-head, three-way, and
    four-way equal-length configurations, solved numerically.  Every
    candidate pair is scored by building its jellyfish pair, and the
    shortest one wins (earliest case on ties)."""
    assert mode in ("fast", "full")
    assert e1.cut != e2.cut, "bases needs two distinct extensions"
    t1 = slot_table(P, e1)
    t2 = slot_table(P, e2)
    slots = sorted(t1.keys())
    best1 = best2 = None
    for s in slots:
        l1, l2 = t1[s].length, t2[s].length
        if l1 <= l2:
            if best1 is None or l1 > best1[0]:
                best1 = (l1, t1[s].waypoints[0])
        else:
            if best2 is None or l2 > best2[0]:
                best2 = (l2, t2[s].waypoints[0])
    q1c = best1[1] if best1 is not None else _cut_mid(P, e1)
    q2c = best2[1] if best2 is not None else _cut_mid(P, e2)
    candidates: List[Tuple[int, Point, Point]] = [(1, q1c, q2c)]
    crossed = _crossed_edges(P, t1, t2)
    for b in crossed:
        for h1, h2 in _split_roots_free(P, e1, e2, b):
            candidates.append((2, h1, h2))
    if mode == "full":
        top1 = sorted(slots, key=lambda s: -t1[s].length)[:6]
        top2 = sorted(slots, key=lambda s: -t2[s].length)[:6]
        for q in _common_head_roots(P, e1, top1):
            candidates.append((3, q, q2c))
        for q in _common_head_roots(P, e2, top2):
            candidates.append((3, q1c, q))
        for h1, h2 in _three_way_candidates(P, (e1, e2), crossed,
                                            (top1, top2), (q1c, q2c)):
            candidates.append((4, h1, h2))
        for h1, h2 in _four_way_candidates(P, (e1, e2), crossed):
            candidates.append((5, h1, h2))
    best = None
    seen = set()
    for tag, c1, c2 in candidates:
        c1 = _snap_in(P, c1)
        c2 = _snap_in(P, c2)
        key = (round(c1.x, 9), round(c1.y, 9), round(c2.x, 9), round(c2.y, 9))
        if key in seen:
            continue
        seen.add(key)
        pr = jellyfish_pair(P, c1, c2)
        if best is None or pr.length < best[0].length - 1e-12:
            best = (pr, tag, c1, c2)
    pr, tag, q1, q2 = best
    return MinimumJellyfishPair(pr, q1, q2, e1, e2, tag, mode)


# ---------------------------------------------------------------------------
# reduction

def _reaches(L: Region, waypoints: Sequence[Point],
             tol: float = _TOL) -> bool:
    """Whether a guard polyline enters the closed region, allowing the
    snap-level slack that keeps a tip constructed on a cut counted as
    touching it."""
    if len(waypoints) == 1:
        if L.contains(waypoints[0]):
            return True
    elif any(_segment_meets_region(L, a, b)
             for a, b in zip(waypoints, waypoints[1:])):
        return True
    ring = L.ring
    m = len(ring)
    segs = (list(zip(waypoints, waypoints[1:]))
            if len(waypoints) > 1 else [(waypoints[0], waypoints[0])])
    for s in segs:
        for i in range(m):
            p, q = _closest_seg_seg(s, (ring[i], ring[(i + 1) % m]))
            if dist(p, q) <= tol:
                return True
    return False


def reduce(pair: JellyfishPair) -> ReducedJellyfishPair:
    """Drop tentacles whose cut an earlier (longer) retained tentacle
    already reaches; the removal log records each drop's witness."""
    P = pair.polygon
    ordered = sorted(pair.jf1.tentacles + pair.jf2.tentacles,
                     key=lambda t: (-t.length, t.target_edge, t.target.x,
                                    t.target.y, t.head.x, t.head.y))
    retained: List[Tentacle] = []
    log: List[Tuple[Tentacle, Tentacle]] = []
    for t in ordered:
        coverer = None
        if t.tentacle_cut is not None:
            try:
                L = left_polygon(P, t.tentacle_cut)
            except InvalidCut:
                L = None
            if L is not None:
                for t2 in retained:
                    if _reaches(L, t2.path.waypoints):
                        coverer = t2
                        break
        if coverer is None:
            retained.append(t)
        else:
            log.append((t, coverer))
    return ReducedJellyfishPair(pair, tuple(retained), tuple(log))
