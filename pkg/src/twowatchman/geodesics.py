"""Geodesic shortest paths inside a simple polygon.

Point-to-point paths run the funnel algorithm along the triangulation
sleeve.  Point-to-segment queries enumerate hourglass waypoints: the
optimal tip on a segment is reached either at an endpoint or
perpendicularly from a waypoint of one of the two extreme paths, so those
finitely many candidates are exhaustive.  Region targets reduce to the
region's boundary edges.

Shortest-path trees are built by funnel splitting over the dual tree; all
turning decisions are exact orientation tests on input vertices.
"""
from __future__ import annotations

import math
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import EmptyTarget, PointOutsidePolygon
from .geom_core import (
    Point,
    Region,
    SimplePolygon,
    dist,
    on_segment,
    orient,
    segments_intersect,
)


class GeodesicPath:
    __slots__ = ("waypoints", "length")

    def __init__(self, waypoints: Sequence[Point]):
        pts: List[Point] = []
        for p in waypoints:
            if not pts or pts[-1] != p:
                pts.append(p)
        self.waypoints = tuple(pts)
        self.length = sum(
            dist(pts[i], pts[i + 1]) for i in range(len(pts) - 1))

    def __repr__(self) -> str:
        return f"GeodesicPath({len(self.waypoints)} pts, len={self.length:.6g})"

    def reversed(self) -> "GeodesicPath":
        return GeodesicPath(tuple(reversed(self.waypoints)))


Segment = Tuple[Point, Point]


# ---------------------------------------------------------------------------
# per-polygon machinery cache

class _Geo:
    def __init__(self, P: SimplePolygon):
        self.P = P
        self.tri = P.triangulation
        self.dual_parents: Dict[int, List[int]] = {}
        self.D: Optional[List[List[float]]] = None
        self.PRED: Optional[List[List[int]]] = None
        self.spt_cache: Dict[Tuple[float, float], "ShortestPathTree"] = {}

    def dual_bfs(self, t0: int) -> List[int]:
        if t0 in self.dual_parents:
            return self.dual_parents[t0]
        nb = self.tri.neighbors
        par = [-2] * len(self.tri.triangles)
        par[t0] = -1
        queue = [t0]
        for t in queue:
            for s in nb[t]:
                if s is not None and par[s] == -2:
                    par[s] = t
                    queue.append(s)
        self.dual_parents[t0] = par
        return par

    def table(self) -> Tuple[List[List[float]], List[List[int]]]:
        if self.D is None:
            n = self.P.n
            D = [[0.0] * n for _ in range(n)]
            PRED = [[-1] * n for _ in range(n)]
            for i in range(n):
                t = build_spt(self.P, self.P.vertices[i])
                for j in range(n):
                    D[i][j] = t.dist[j]
                    PRED[i][j] = t.parent[j] if t.parent[j] >= 0 else i
                PRED[i][i] = i
            self.D = D
            self.PRED = PRED
        return self.D, self.PRED


def _geo(P: SimplePolygon) -> _Geo:
    g = getattr(P, "_geo_cache", None)
    if g is None:
        g = _Geo(P)
        P._geo_cache = g
    return g


def vertex_distance_table(P: SimplePolygon):
    """All-pairs geodesic distances between polygon vertices, with
    predecessor links for path reconstruction."""
    return _geo(P).table()


def vertex_path(P: SimplePolygon, i: int, j: int) -> List[int]:
    """Vertex indices along the geodesic from vertex i to vertex j."""
    _, PRED = _geo(P).table()
    out = [j]
    while out[-1] != i:
        out.append(PRED[i][out[-1]])
    out.reverse()
    return out


# ---------------------------------------------------------------------------
# funnel core

def _in_wedge(pts: List[Point], apex: int, i: int, x: Point) -> bool:
    """True iff the geodesic to x leaves the funnel chain at pts[i].  The
    chain is read left end .. apex .. right end; the wedge at a vertex is
    bounded by both adjacent chain edges extended, so membership needs the
    two-sided test (one-sided tests admit every vertex past the tangency)."""
    n = len(pts)
    if i < apex:
        if orient(pts[i + 1], pts[i], x) < 0:
            return False
        return i == 0 or orient(pts[i], pts[i - 1], x) <= 0
    if i > apex:
        if orient(pts[i - 1], pts[i], x) > 0:
            return False
        return i == n - 1 or orient(pts[i], pts[i + 1], x) >= 0
    left_ok = i == 0 or orient(pts[i], pts[i - 1], x) <= 0
    right_ok = i == n - 1 or orient(pts[i], pts[i + 1], x) >= 0
    return left_ok and right_ok


def _tangent_front(pts: List[Point], apex: int, x: Point) -> int:
    for i in range(len(pts)):
        if _in_wedge(pts, apex, i, x):
            return i
    return len(pts) - 1


def _tangent_back(pts: List[Point], apex: int, x: Point) -> int:
    for i in range(len(pts) - 1, -1, -1):
        if _in_wedge(pts, apex, i, x):
            return i
    return 0


def _portal_chain(g: _Geo, ta: int, tb: int) -> List[Tuple[int, int]]:
    """Shared diagonals along the dual-tree path from ta to tb, each as a
    (vertex index, vertex index) pair ordered as stored in the triangle."""
    par = g.dual_bfs(ta)
    chain = []
    t = tb
    while t != ta:
        p = par[t]
        chain.append(_shared_edge(g, p, t))
        t = p
    chain.reverse()
    return chain


def _shared_edge(g: _Geo, t1: int, t2: int) -> Tuple[int, int]:
    i, j, k = g.tri.triangles[t1]
    for s, (u, v) in enumerate(((i, j), (j, k), (k, i))):
        if g.tri.neighbors[t1][s] == t2:
            return (u, v)
    raise AssertionError("triangles not adjacent")


def _drop_straight(chain: List[Point]) -> List[Point]:
    """Remove interior waypoints the path passes straight through, so equal
    geodesics compare equal regardless of which collinear wraps the funnel
    happened to touch."""
    out: List[Point] = []
    for p in chain:
        while len(out) >= 2:
            a, b = out[-2], out[-1]
            if orient(a, b, p) == 0 and \
                    (b.x - a.x) * (p.x - b.x) + (b.y - a.y) * (p.y - b.y) > 0:
                out.pop()
            else:
                break
        out.append(p)
    return out


def _funnel_path(P: SimplePolygon, a: Point, b: Point) -> GeodesicPath:
    g = _geo(P)
    ta = g.tri.locate(a)
    tb = g.tri.locate(b)
    if ta < 0 or tb < 0:
        raise PointOutsidePolygon("funnel endpoint outside polygon")
    if ta == tb:
        return GeodesicPath((a, b))
    verts = P.vertices
    portals = _portal_chain(g, ta, tb)
    while portals and on_segment(verts[portals[0][0]], verts[portals[0][1]], a):
        portals.pop(0)
    if not portals:
        return GeodesicPath((a, b))

    u, v = portals[0]
    pu, pv = verts[u], verts[v]
    s = orient(a, pu, pv)
    assert s != 0
    if s > 0:
        right_i, left_i = u, v
    else:
        right_i, left_i = v, u
    pts = [verts[left_i], a, verts[right_i]]
    apex = 1
    tail = [a]

    def add(w: Point, side_left: bool):
        nonlocal pts, apex, tail
        if side_left:
            i = _tangent_front(pts, apex, w)
            if i > apex:
                tail.extend(pts[apex + 1:i + 1])
                pts = [w] + pts[i:]
                apex = 1
            else:
                pts = [w] + pts[i:]
                apex = apex - i + 1
        else:
            j = _tangent_back(pts, apex, w)
            if j < apex:
                tail.extend(pts[t] for t in range(apex - 1, j - 1, -1))
                apex = j
            pts = pts[:j + 1] + [w]

    cl, cr = left_i, right_i
    for (x, y) in portals[1:]:
        if x == cl or y == cl:
            w_i = x if y == cl else y
            add(verts[w_i], side_left=False)
            cr = w_i
        else:
            w_i = x if y == cr else y
            add(verts[w_i], side_left=True)
            cl = w_i
    add(b, side_left=True)
    path = tail + [pts[t] for t in range(apex - 1, -1, -1)]
    return GeodesicPath(_drop_straight(path))


def shortest_path_points(P: SimplePolygon, a: Point, b: Point) -> GeodesicPath:
    if a == b:
        return GeodesicPath((a,))
    return _funnel_path(P, a, b)


# ---------------------------------------------------------------------------
# shortest-path tree

class ShortestPathTree:
    """Geodesic distances from a root to every polygon vertex, with parent
    links, lowest-common-ancestor queries, and lazily built augmentation
    edges (each tree edge extended beyond its child to the boundary)."""

    def __init__(self, P: SimplePolygon, root: Point,
                 parent: List[int], dist_: List[float]):
        self.P = P
        self.root = root
        self.parent = parent  # per vertex: parent vertex index, -1 = root
        self.dist = dist_
        self.depth = [0] * P.n
        order = sorted(range(P.n), key=lambda i: dist_[i])
        for i in order:
            if self.parent[i] >= 0:
                self.depth[i] = self.depth[self.parent[i]] + 1
        self._up: Optional[List[List[int]]] = None
        self._aug: Optional[Dict[int, Optional[Tuple[Point, int]]]] = None

    def path_to(self, v: int) -> GeodesicPath:
        chain = [self.P.vertices[v]]
        while self.parent[v] >= 0:
            v = self.parent[v]
            chain.append(self.P.vertices[v])
        chain.append(self.root)
        chain.reverse()
        return GeodesicPath(chain)

    def _lift(self) -> List[List[int]]:
        if self._up is None:
            n = self.P.n
            levels = max(1, (max(self.depth)).bit_length())
            up = [list(self.parent)]
            for k in range(1, levels):
                prev = up[-1]
                up.append([prev[prev[i]] if prev[i] >= 0 else -1
                           for i in range(n)])
            self._up = up
        return self._up

    def lca(self, u: int, v: int) -> int:
        """Deepest common vertex on the two root paths; -1 when the paths
        only share the root."""
        up = self._lift()
        du, dv = self.depth[u], self.depth[v]
        if du < dv:
            u, v, du, dv = v, u, dv, du
        d = du - dv
        k = 0
        while d:
            if d & 1:
                u = up[k][u]
            d >>= 1
            k += 1
        if u == v:
            return u
        for k in range(len(up) - 1, -1, -1):
            if up[k][u] != up[k][v]:
                u = up[k][u]
                v = up[k][v]
        return self.parent[u]

    def augmentation(self) -> Dict[int, Optional[Tuple[Point, int]]]:
        """Per tree edge (parent -> child v), the first boundary hit of the
        ray extended beyond v, or None when the prolongation immediately
        leaves the polygon."""
        if self._aug is None:
            from .geom_core import ray_shoot_through
            out: Dict[int, Optional[Tuple[Point, int]]] = {}
            for v in range(self.P.n):
                src = (self.root if self.parent[v] < 0
                       else self.P.vertices[self.parent[v]])
                w = self.P.vertices[v]
                if src == w:
                    out[v] = None
                    continue
                hit = ray_shoot_through(self.P, src, w)
                if hit is not None:
                    hp, eidx, _ = hit
                    mid = Point((w.x + hp.x) / 2, (w.y + hp.y) / 2)
                    if self.P.contains(mid):
                        out[v] = (hp, eidx)
                        continue
                out[v] = None
            self._aug = out
        return self._aug


def build_spt(P: SimplePolygon, root: Point) -> ShortestPathTree:
    g = _geo(P)
    key = (root.x, root.y)
    cached = g.spt_cache.get(key)
    if cached is not None:
        return cached
    t0 = g.tri.locate(root)
    if t0 < 0:
        raise PointOutsidePolygon("tree root outside polygon")
    verts = P.vertices
    n = P.n
    parent = [-2] * n
    dist_ = [math.inf] * n
    tris = g.tri.triangles
    nb = g.tri.neighbors

    def assign(v: int, par: int, d: float):
        if parent[v] == -2:
            parent[v] = par
            dist_[v] = d

    for c in tris[t0]:
        assign(c, -1, dist(root, verts[c]))

    def child_edges(t: int, entry: Optional[Tuple[int, int]]):
        i, j, k = tris[t]
        out = []
        for s, (u, v) in enumerate(((i, j), (j, k), (k, i))):
            nt = nb[t][s]
            if nt is None:
                continue
            if entry is not None and {u, v} == {entry[0], entry[1]}:
                continue
            out.append((nt, (u, v)))
        return out

    # stack entries: (triangle, entry edge, funnel pts/dists/apex, end
    # indices cl/cr).  funnel None = the entry edge contains the root.
    stack = [(nt, e, None, None, -1, -1, -1) for nt, e in child_edges(t0, None)]

    while stack:
        t, entry, pts, dd, apex, cl, cr = stack.pop()
        eu, ev = entry
        far = tris[t][0] + tris[t][1] + tris[t][2] - eu - ev
        w = verts[far]
        if pts is None:
            if on_segment(verts[eu], verts[ev], root):
                # root lies on the entry edge: everything here is direct
                assign(far, -1, dist(root, w))
                for nt, e in child_edges(t, entry):
                    stack.append((nt, e, None, None, -1, -1, -1))
                continue
            s = orient(root, verts[eu], verts[ev])
            assert s != 0
            if s > 0:
                r_i, l_i = eu, ev
            else:
                r_i, l_i = ev, eu
            pts = [verts[l_i], root, verts[r_i]]
            dd = [dist(root, verts[l_i]), 0.0, dist(root, verts[r_i])]
            apex = 1
            cl, cr = l_i, r_i

        # tangent from the far vertex to the funnel chain fixes its parent
        i = _tangent_front(pts, apex, w)
        nd = dd[i] + dist(pts[i], w)
        assign(far, _pt_index(P, pts[i], root), nd)

        children = child_edges(t, entry)
        if not children:
            continue
        left_state = right_state = None
        for nt, (u, v) in children:
            if cr == u or cr == v:
                # portal keeps the right end, far becomes the new left end
                if left_state is None:
                    npts = [w] + pts[i:]
                    ndd = [nd] + dd[i:]
                    napex = 1 if i > apex else apex - i + 1
                    left_state = (npts, ndd, napex)
                npts, ndd, napex = left_state
                stack.append((nt, (u, v), npts, ndd, napex, far, cr))
            else:
                if right_state is None:
                    j = _tangent_back(pts, apex, w)
                    nd2 = dd[j] + dist(pts[j], w)
                    npts = pts[:j + 1] + [w]
                    ndd = dd[:j + 1] + [nd2]
                    napex = j if j < apex else apex
                    right_state = (npts, ndd, napex)
                npts, ndd, napex = right_state
                stack.append((nt, (u, v), npts, ndd, napex, cl, far))

    tree = ShortestPathTree(P, root, parent, dist_)
    g.spt_cache[key] = tree
    return tree


def _pt_index(P: SimplePolygon, p: Point, root: Point) -> int:
    if p == root:
        return -1
    idx = getattr(P, "_vertex_index", None)
    if idx is None:
        idx = {v: i for i, v in enumerate(P.vertices)}
        P._vertex_index = idx
    return idx[p]


# ---------------------------------------------------------------------------
# point-to-segment and segment-to-segment queries

def _foot_param(w: Point, a: Point, b: Point) -> float:
    d = Point(b.x - a.x, b.y - a.y)
    L2 = d.x * d.x + d.y * d.y
    if L2 == 0:
        return 0.0
    return ((w.x - a.x) * d.x + (w.y - a.y) * d.y) / L2


def _pt_seg_path(P: SimplePolygon, q: Point, s: Segment) -> GeodesicPath:
    a, b = s
    if a == b:
        return shortest_path_points(P, q, a)
    if on_segment(a, b, q):
        return GeodesicPath((q,))
    best: Optional[GeodesicPath] = None
    for endpoint in (a, b):
        path = shortest_path_points(P, q, endpoint)
        if best is None or path.length < best.length:
            best = path
        wps = path.waypoints
        for i, w in enumerate(wps):
            if i == len(wps) - 1:
                break  # endpoint itself already counted
            t = _foot_param(w, a, b)
            if t < 0.0 or t > 1.0:
                continue
            foot = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            if foot == w:
                cand = GeodesicPath(wps[:i + 1])
            elif P.contains_segment(w, foot):
                cand = GeodesicPath(wps[:i + 1] + (foot,))
            else:
                continue
            if best is None or cand.length < best.length - 1e-15:
                best = cand
    return best


def _seg_seg_path(P: SimplePolygon, s1: Segment, s2: Segment) -> GeodesicPath:
    a1, b1 = s1
    a2, b2 = s2
    if segments_intersect(a1, b1, a2, b2):
        x = _seg_seg_common_point(s1, s2)
        return GeodesicPath((x,))
    best: Optional[GeodesicPath] = None

    def consider(path: Optional[GeodesicPath]):
        nonlocal best
        if path is not None and (best is None or path.length < best.length):
            best = path

    for e in (a1, b1):
        consider(_pt_seg_path(P, e, s2))
    for e in (a2, b2):
        consider(_pt_seg_path(P, e, s1).reversed())
    # straight visible bridge between segment interiors
    px, py = _closest_seg_seg(s1, s2)
    if px != py and P.contains_segment(px, py):
        consider(GeodesicPath((px, py)))
    # wraps around reflex vertices
    vertex_distance_table(P)
    reflex = [i for i in range(P.n) if P.reflex_flags[i]]
    from_s1: Dict[int, GeodesicPath] = {}
    to_s2: Dict[int, GeodesicPath] = {}
    for i in reflex:
        v = P.vertices[i]
        from_s1[i] = _pt_seg_path(P, v, s1).reversed()
        to_s2[i] = _pt_seg_path(P, v, s2)
    for i in reflex:
        for j in reflex:
            mid = vertex_path(P, i, j)
            chain = (from_s1[i].waypoints
                     + tuple(P.vertices[k] for k in mid[1:-1])
                     + to_s2[j].waypoints)
            consider(GeodesicPath(chain))
    return best


def _seg_seg_common_point(s1: Segment, s2: Segment) -> Point:
    from .geom_core import line_intersection
    a1, b1 = s1
    a2, b2 = s2
    for p in (a1, b1):
        if on_segment(a2, b2, p):
            return p
    for p in (a2, b2):
        if on_segment(a1, b1, p):
            return p
    x = line_intersection(a1, b1, a2, b2)
    return x if x is not None else a1


def _closest_seg_seg(s1: Segment, s2: Segment) -> Tuple[Point, Point]:
    best = None
    for (p, (a, b)) in ((s1[0], s2), (s1[1], s2)):
        t = min(1.0, max(0.0, _foot_param(p, a, b)))
        f = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        d = dist(p, f)
        if best is None or d < best[0]:
            best = (d, p, f)
    for (p, (a, b)) in ((s2[0], s1), (s2[1], s1)):
        t = min(1.0, max(0.0, _foot_param(p, a, b)))
        f = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        d = dist(p, f)
        if best is None or d < best[0]:
            best = (d, f, p)
    return best[1], best[2]


def shortest_path(P: SimplePolygon,
                  X: Union[Point, Segment],
                  Y: Union[Point, Segment, Region]) -> GeodesicPath:
    """Minimal geodesic between point/segment X and point/segment/region Y."""
    if Y is None:
        raise EmptyTarget("empty region target")
    if isinstance(Y, Region):
        ring = Y.ring
        if len(ring) == 0:
            raise EmptyTarget("empty region target")
        if isinstance(X, Point):
            if Y.contains(X):
                return GeodesicPath((X,))
        else:
            for p in X:
                if Y.contains(p):
                    return GeodesicPath((p,))
        if len(ring) == 1:
            return shortest_path(P, X, ring[0])
        best = None
        m = len(ring)
        edges = [(ring[i], ring[(i + 1) % m]) for i in range(m)]
        if m == 2:
            edges = [edges[0]]
        for e in edges:
            path = shortest_path(P, X, e)
            if best is None or path.length < best.length:
                best = path
        return best
    if isinstance(X, Point) and isinstance(Y, Point):
        return shortest_path_points(P, X, Y)
    if isinstance(X, Point):
        return _pt_seg_path(P, X, Y)
    if isinstance(Y, Point):
        return _pt_seg_path(P, Y, X).reversed()
    return _seg_seg_path(P, X, Y)
