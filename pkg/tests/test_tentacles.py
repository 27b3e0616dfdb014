"""Tentacles, edge-restricted tentacles, motion families, event sweeps."""
import math
import random

import pytest

from twowatchman.cuts import Cut
from twowatchman.errors import PointOutsidePolygon, TargetNotOnEdge, WrongCase
from twowatchman.geodesics import shortest_path_points
from twowatchman.geom_core import Point, cross, dist, lerp
from twowatchman.tentacles import (
    EventPoint,
    HeadSweep,
    TargetSweep,
    edge_restricted_tentacle,
    evaluate_motion,
    event_points,
    motion_coeffs,
    motion_partials,
    slide_eps_prime,
    tentacle,
    _slide_constants,
    _snap_in,
)
from twowatchman.visibility import sees, visibility_from_point


def _cut_line_through(cut, p, tol=1e-9):
    d = Point(cut.end.x - cut.start.x, cut.end.y - cut.start.y)
    v = Point(p.x - cut.start.x, p.y - cut.start.y)
    return abs(cross(d, v)) / math.hypot(d.x, d.y) <= tol


def _seg_gap(p, a, b):
    dx, dy = b.x - a.x, b.y - a.y
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return dist(p, a)
    s = max(0.0, min(1.0, ((p.x - a.x) * dx + (p.y - a.y) * dy) / L2))
    return dist(p, Point(a.x + s * dx, a.y + s * dy))


class TestTentacle:
    def test_visible_target_zero(self, lshape):
        t = tentacle(lshape, Point(1.5, 0.2), Point(0, 2))
        assert t.length == 0.0
        assert t.tip == t.head
        assert t.hiding_vertex is None
        assert t.tentacle_cut is None

    def test_lshape_frozen(self, lshape):
        q, r = Point(1.9, 0.5), Point(0, 1.9)
        t = tentacle(lshape, q, r)
        assert abs(t.length - 0.31 / math.sqrt(1.81)) < 1e-12
        assert t.hiding_vertex == Point(1.0, 1.0)
        # tip is the perpendicular foot of q on the window chord
        # (1,1)->(2,0.1); foot parameter from the projection formula
        a, b = Point(1.0, 1.0), Point(2.0, 0.1)
        s = ((q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y)) / 1.81
        foot = lerp(a, b, s)
        assert dist(t.tip, foot) < 1e-12
        # the cut runs along the window with q kept on its right
        assert dist(t.tentacle_cut.start, b) < 1e-12
        assert dist(t.tentacle_cut.end, a) < 1e-12
        assert _cut_line_through(t.tentacle_cut, t.tip)
        assert _cut_line_through(t.tentacle_cut, r)

    def test_lshape_frozen_sampled_minimum(self, lshape):
        q, r = Point(1.9, 0.5), Point(0, 1.9)
        t = tentacle(lshape, q, r)
        vp = visibility_from_point(lshape, r)
        ring = vp.region.ring
        rng = random.Random(5)
        best = math.inf
        # ring samples dominate: the optimum lies on a window chord
        per_edge = 80_000 // len(ring)
        for i in range(len(ring)):
            a, b = ring[i], ring[(i + 1) % len(ring)]
            for k in range(per_edge):
                p = lerp(a, b, (k + 0.5) / per_edge)
                if not lshape.contains(p):
                    continue
                best = min(best, shortest_path_points(lshape, q, p).length)
        x0, y0, x1, y1 = lshape.bbox
        got = 0
        while got < 20_000:
            p = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
            if vp.region.contains(p) and lshape.contains(p):
                got += 1
                best = min(best, shortest_path_points(lshape, q, p).length)
        assert t.length <= best + 1e-9
        assert best - t.length < 1e-4

    def test_convex_always_zero(self, square):
        rng = random.Random(2)
        for _ in range(20):
            q = Point(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95))
            r = lerp(*square.edge(rng.randrange(4)), rng.random())
            assert tentacle(square, q, r).length == 0.0

    def test_tip_on_target_frontier(self, lshape, comb3):
        rng = random.Random(9)
        for P in (lshape, comb3):
            for _ in range(25):
                x0, y0, x1, y1 = P.bbox
                q = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
                if not P.contains(q):
                    continue
                e = rng.randrange(P.n)
                r = lerp(*P.edge(e), rng.uniform(0.05, 0.95))
                t = tentacle(P, q, r)
                vp = visibility_from_point(P, t.target)
                assert dist(t.target, r) < 1e-9
                if t.length == 0:
                    assert t.tip == q and sees(P, q, t.target)
                    continue
                assert t.hiding_vertex in P.vertices
                assert _cut_line_through(t.tentacle_cut, t.tip, 1e-8)
                assert _cut_line_through(t.tentacle_cut, r, 1e-8)
                # the tip sits on the window chord, i.e. on VP(r)'s frontier
                ring = vp.region.ring
                gap = min(_seg_gap(t.tip, ring[i], ring[(i + 1) % len(ring)])
                          for i in range(len(ring)))
                assert gap < 1e-7
                # and q stays on the blind side of the cut
                c = t.tentacle_cut
                assert cross(Point(c.end.x - c.start.x, c.end.y - c.start.y),
                             Point(q.x - c.start.x, q.y - c.start.y)) <= 1e-9

    def test_deterministic(self, comb3):
        q, r = Point(0.9, 2.0), Point(5.0, 1.4)
        t1 = tentacle(comb3, q, r)
        t2 = tentacle(comb3, q, r)
        assert t1.path.waypoints == t2.path.waypoints
        assert t1.tip == t2.tip

    def test_head_outside_raises(self, lshape):
        with pytest.raises(PointOutsidePolygon):
            tentacle(lshape, Point(1.5, 1.5), Point(0, 1.9))
        with pytest.raises(PointOutsidePolygon):
            tentacle(lshape, Point(0.5, 0.5), Point(0.7, 0.9))


class TestEdgeRestricted:
    def test_interior_target_matches_plain(self, lshape):
        q, r = Point(1.9, 0.5), Point(0, 1.9)
        t = tentacle(lshape, q, r)
        tr = edge_restricted_tentacle(lshape, q, r, 5)
        assert tr.path.waypoints == t.path.waypoints
        assert tr.length == t.length

    def test_wrong_edge_raises(self, lshape):
        with pytest.raises(TargetNotOnEdge):
            edge_restricted_tentacle(lshape, Point(0.5, 0.5), Point(0, 1.9), 0)

    def test_lshape_vertex_frozen(self, lshape):
        q, v = Point(0.5, 1.5), Point(1.0, 1.0)
        tr = edge_restricted_tentacle(lshape, q, v, 2)
        assert abs(tr.length - 0.5) < 1e-12
        assert dist(tr.tip, Point(0.5, 1.0)) < 1e-12
        assert tr.hiding_vertex == v
        assert tr.tentacle_cut == Cut(Point(1.0, 1.0), Point(0.0, 1.0))
        assert tentacle(lshape, q, v).length == 0.0

    def test_lshape_vertex_limit_oracle(self, lshape):
        # ZR at the vertex is the limit of plain tentacles approaching it
        # from the edge interior
        q = Point(0.5, 1.5)
        tr = edge_restricted_tentacle(lshape, q, Point(1.0, 1.0), 2)
        prev = None
        for h in (1e-2, 1e-3, 1e-4):
            lim = tentacle(lshape, q, Point(1.0 + h, 1.0)).length
            gap = abs(lim - tr.length)
            assert gap < 3.0 * h
            if prev is not None:
                assert gap <= prev + 1e-12
            prev = gap

    def test_other_edge_at_same_vertex(self, lshape):
        # restricting to the vertical edge leaves q on the seeing side, so
        # the restriction is vacuous there
        q, v = Point(0.5, 1.5), Point(1.0, 1.0)
        tr = edge_restricted_tentacle(lshape, q, v, 3)
        assert tr.length == 0.0

    def test_convex_vertex_matches_plain(self, lshape):
        q = Point(1.5, 0.5)
        tr = edge_restricted_tentacle(lshape, q, Point(2.0, 0.0), 0)
        assert tr.length == tentacle(lshape, q, Point(2.0, 0.0)).length


COMB_A = (Point(0.5, 2.0), Point(5.0, 2.0))     # multi-segment, tip on wall
COMB_B = (Point(0.9, 2.0), Point(5.0, 1.4))     # multi-segment, tip free
COMB_E = (Point(0.3, 0.5), Point(5.0, 1.6))     # single-segment, tip on wall
UP = Point(0.0, 1.0)


class TestMotionFamilies:
    def _rebuild_check(self, P, q, r, sdir, bdir, motions, tol=1e-8):
        t0 = tentacle(P, q, r)
        mc = motion_coeffs(P, t0, head_dir=sdir, target_dir=bdir)
        for d, e in motions:
            q2 = q if sdir is None else Point(q.x + d * sdir.x,
                                              q.y + d * sdir.y)
            r2 = r if bdir is None else Point(r.x + e * bdir.x,
                                              r.y + e * bdir.y)
            fresh = tentacle(P, q2, r2).length
            pred = t0.length + evaluate_motion(mc, d, e)
            assert abs(fresh - pred) < tol, (mc.family, d, e)
        return mc

    def test_family_D_lshape_frozen(self, lshape):
        q, r = Point(1.9, 0.5), Point(0, 1.9)
        down = Point(0.0, -1.0)
        mc = self._rebuild_check(lshape, q, r, None, down,
                                 [(0.0, 1e-3), (0.0, -1e-3), (0.0, 0.05)])
        assert mc.family == "D"
        assert abs(mc.coeffs[0] - 0.31 / math.sqrt(1.81)) < 1e-12

    def test_family_A(self, comb3):
        q, r = COMB_A
        mc = self._rebuild_check(comb3, q, r, None, UP,
                                 [(0.0, 1e-3), (0.0, -1e-2), (0.0, 0.02)])
        assert mc.family == "A"

    def test_family_B(self, comb3):
        q, r = COMB_B
        mc = self._rebuild_check(comb3, q, r, None, UP,
                                 [(0.0, 1e-3), (0.0, -0.02), (0.0, 0.03)])
        assert mc.family == "B"

    def test_family_C(self, comb3):
        q, r = COMB_A
        mc = self._rebuild_check(comb3, q, r, Point(1.0, 0.0), None,
                                 [(1e-3, 0.0), (-0.05, 0.0), (0.1, 0.0)])
        assert mc.family == "C"

    def test_family_E(self, comb3):
        q, r = COMB_E
        mc = self._rebuild_check(comb3, q, r, Point(1.0, 0.0), UP,
                                 [(0.0, 1e-3), (1e-2, 0.0), (0.02, 0.02),
                                  (-0.02, 0.01)])
        assert mc.family == "E"

    def test_family_F_combined(self, comb3):
        q, r = COMB_B
        mc = self._rebuild_check(comb3, q, r, Point(0.0, -1.0), UP,
                                 [(1e-3, 1e-3), (0.02, -0.02), (0.05, 0.03)])
        assert mc.family == "F"

    def test_zero_at_origin(self, lshape, comb3):
        configs = [(lshape, Point(1.9, 0.5), Point(0, 1.9), None, UP),
                   (comb3, COMB_A[0], COMB_A[1], Point(1, 0), UP),
                   (comb3, COMB_B[0], COMB_B[1], Point(0, 1), UP),
                   (comb3, COMB_E[0], COMB_E[1], Point(1, 0), UP)]
        for P, q, r, sdir, bdir in configs:
            mc = motion_coeffs(P, tentacle(P, q, r), head_dir=sdir,
                               target_dir=bdir)
            assert abs(evaluate_motion(mc, 0.0, 0.0)) < 1e-12
            # the leading slot of every block is a distance
            assert mc.full[0] >= 0.0
            assert mc.full[3] >= 0.0
            assert mc.full[13] >= 0.0

    def test_partials_match_finite_differences(self, lshape, comb3):
        configs = [(lshape, Point(1.9, 0.5), Point(0, 1.9), Point(1, 0), UP),
                   (comb3, COMB_A[0], COMB_A[1], Point(1, 0), UP),
                   (comb3, COMB_B[0], COMB_B[1], Point(0, -1), UP),
                   (comb3, COMB_E[0], COMB_E[1], Point(1, 0), UP)]
        h = 1e-6
        for P, q, r, sdir, bdir in configs:
            mc = motion_coeffs(P, tentacle(P, q, r), head_dir=sdir,
                               target_dir=bdir)
            for d, e in ((0.0, 0.0), (0.01, 0.01), (-0.01, 0.02)):
                ad, ae = motion_partials(mc, d, e)
                nd = (evaluate_motion(mc, d + h, e)
                      - evaluate_motion(mc, d - h, e)) / (2 * h)
                ne = (evaluate_motion(mc, d, e + h)
                      - evaluate_motion(mc, d, e - h)) / (2 * h)
                assert abs(ad - nd) <= 1e-6 * max(1.0, abs(nd))
                assert abs(ae - ne) <= 1e-6 * max(1.0, abs(ne))

    def test_wrong_family_raises(self, lshape, comb3):
        single = tentacle(lshape, Point(1.9, 0.5), Point(0, 1.9))
        with pytest.raises(WrongCase):
            motion_coeffs(lshape, single, target_dir=UP, family="A")
        multi = tentacle(comb3, *COMB_B)
        with pytest.raises(WrongCase):
            motion_coeffs(comb3, multi, target_dir=UP, family="D")

    def test_zero_tentacle_all_zero(self, square):
        t = tentacle(square, Point(0.5, 0.5), Point(1.0, 0.5))
        mc = motion_coeffs(square, t, head_dir=Point(1, 0), target_dir=UP)
        assert mc.family == "F"
        assert all(c == 0.0 for c in mc.full)
        assert evaluate_motion(mc, 0.3, -0.2) == 0.0

    def test_eps_prime_identity(self):
        assert slide_eps_prime(1.0, 0.0, 0.01) == 0.01

    def test_slide_constants_match_similar_triangles(self):
        # pivot at the origin, boundary point r sliding up the line x = 2,
        # probe line through (-1, 0) at 45 degrees: the distance-quotient
        # construction gives |a| = |p,t||u_h,p| / (|r,t||u_h,r|) and
        # c = (|u_h,p| + |u_h,r|) / (|r,t||u_h,r|)
        u_h, r0 = Point(0.0, 0.0), Point(2.0, 0.0)
        bdir = Point(0.0, 1.0)
        x0 = Point(-1.0, 0.0)
        ldir = Point(1.0 / math.sqrt(2), 1.0 / math.sqrt(2))
        a, c = _slide_constants(x0, ldir, u_h, r0, bdir)
        t_pt = Point(2.0, 3.0)  # probe line meets x = 2 there
        a_quot = (dist(x0, t_pt) * dist(u_h, x0)) / (dist(r0, t_pt)
                                                     * dist(u_h, r0))
        c_quot = (dist(u_h, x0) + dist(u_h, r0)) / (dist(r0, t_pt)
                                                    * dist(u_h, r0))
        assert abs(abs(a) - a_quot) < 1e-12
        assert abs(abs(c) - c_quot) < 1e-12
        # and the closed form tracks the true intersection displacement
        from twowatchman.geom_core import line_intersection
        for eps in (1e-3, 0.01, 0.1, -0.05):
            rp = Point(r0.x + eps * bdir.x, r0.y + eps * bdir.y)
            x = line_intersection(x0, Point(x0.x + ldir.x, x0.y + ldir.y),
                                  u_h, rp)
            moved = (x.x - x0.x) * ldir.x + (x.y - x0.y) * ldir.y
            assert abs(moved - slide_eps_prime(a, c, eps)) < 1e-12

    def test_parallel_slide_is_linear(self):
        # probe line parallel to the target's edge: similar triangles with a
        # pair of parallels, eps' = (|u_h,p| / |u_h,r|) * eps exactly
        u_h, r0 = Point(0.0, 0.0), Point(1.0, 0.0)
        a, c = _slide_constants(Point(-1.0, 0.0), Point(0.0, 1.0),
                                u_h, r0, Point(0.0, 1.0))
        assert abs(abs(a) - 1.0) < 1e-15
        assert c == 0.0


def _oracle_events(P, edge, heads, step=1e-4, tol=1e-6):
    """Dense-parameter scan for structural changes of the swept tentacles,
    refined by bisection.  Independent of event_points' grid machinery."""
    from twowatchman.tentacles import _near_boundary

    a, b = P.edge(edge)

    def sig(t):
        r = lerp(a, b, t)
        out = []
        for h in heads:
            tt = edge_restricted_tentacle(P, h, r, edge)
            out.append((tt.length > 0, tt.path.waypoints[1:-1],
                        tt.hiding_vertex,
                        tt.length > 0 and _near_boundary(P, tt.tip)))
        return tuple(out)

    n = int(round(1.0 / step))
    lo = 1e-9
    hi = 1.0 - 1e-9
    ts = [lo + (hi - lo) * i / n for i in range(n + 1)]
    found = []
    prev_t, prev_s = ts[0], sig(ts[0])
    for t in ts[1:]:
        s = sig(t)
        if s != prev_s:
            t0, t1 = prev_t, t
            while t1 - t0 > tol:
                tm = 0.5 * (t0 + t1)
                if sig(tm) == prev_s:
                    t0 = tm
                else:
                    t1 = tm
            found.append(0.5 * (t0 + t1))
        prev_t, prev_s = t, s
    return found


class TestEventPoints:
    def test_square_center_sweep_empty(self, square):
        for e in range(4):
            assert event_points(square,
                                TargetSweep(edge=e,
                                            heads=(Point(0.5, 0.5),))) == []

    def test_square_head_sweep_empty(self, square):
        evs = event_points(square,
                           HeadSweep(segment=(Point(0.2, 0.2),
                                              Point(0.8, 0.8)),
                                     target=Point(1.0, 0.5), target_edge=1))
        assert evs == []

    def test_convex_no_reflex_event_types(self, square):
        # types 1-3 need reflex vertices, so any convex sweep lacks them
        evs = event_points(square,
                           TargetSweep(edge=2, heads=(Point(0.1, 0.1),
                                                      Point(0.9, 0.2))))
        assert all(ev.etype in (4, 5) for ev in evs)

    def test_comb_sweep_against_dense_oracle(self, comb3):
        head = Point(0.5, 2.0)
        evs = event_points(comb3, TargetSweep(edge=1, heads=(head,)))
        assert len(evs) >= 3
        params = [ev.param for ev in evs]
        assert params == sorted(params)
        assert all(t1 - t0 > 1e-9 for t0, t1 in zip(params, params[1:]))
        oracle = _oracle_events(comb3, 1, (head,))
        assert len(oracle) == len(evs)
        for got, want in zip(params, oracle):
            assert abs(got - want) < 1e-5

    def test_comb_sweep_event_types(self, comb3):
        evs = event_points(comb3, TargetSweep(edge=1, heads=(Point(0.5, 2.0),)))
        kinds = [ev.etype for ev in evs]
        assert 3 in kinds          # hiding vertex handoff at a mouth corner
        assert 4 in kinds          # tip reaches the bottom wall
        assert 1 in kinds          # first segment wraps a mouth corner

    def test_structure_constant_between_events(self, comb3):
        head = Point(0.5, 2.0)
        evs = event_points(comb3, TargetSweep(edge=1, heads=(head,)))
        a, b = comb3.edge(1)
        cuts = [1e-6] + [ev.param for ev in evs] + [1.0 - 1e-6]
        for lo, hi in zip(cuts, cuts[1:]):
            probes = [lo + (hi - lo) * f for f in (0.02, 0.5, 0.98)]
            sigs = set()
            for t in probes:
                tt = edge_restricted_tentacle(comb3, head, lerp(a, b, t), 1)
                sigs.add((tt.path.waypoints[1:-1], tt.hiding_vertex))
            assert len(sigs) == 1

    def test_two_head_crossover(self, comb3):
        h1, h2 = Point(0.7, 1.4), Point(2.5, 1.8)
        evs = event_points(comb3, TargetSweep(edge=1, heads=(h1, h2)))
        fives = [ev for ev in evs if ev.etype == 5]
        assert len(fives) == 1
        a, b = comb3.edge(1)
        r = lerp(a, b, fives[0].param)
        l1 = edge_restricted_tentacle(comb3, h1, r, 1).length
        l2 = edge_restricted_tentacle(comb3, h2, r, 1).length
        assert abs(l1 - l2) < 1e-7

    def test_head_sweep_events(self, comb3):
        evs = event_points(comb3,
                           HeadSweep(segment=(Point(0.2, 0.3),
                                              Point(4.8, 0.3)),
                                     target=Point(5.0, 1.9), target_edge=1))
        assert evs
        params = [ev.param for ev in evs]
        assert params == sorted(params)


class TestLemmaFiveProperty:
    def test_union_sees_subsegment(self, lshape, comb3):
        rng = random.Random(11)
        for P in (lshape, comb3):
            for _ in range(4):
                x0, y0, x1, y1 = P.bbox
                while True:
                    q = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
                    if P.contains(q):
                        break
                e = rng.randrange(P.n)
                a, b = P.edge(e)
                u, v = sorted((rng.uniform(0.05, 0.95),
                               rng.uniform(0.05, 0.95)))
                if v - u < 0.05:
                    continue
                r1, r2 = lerp(a, b, u), lerp(a, b, v)
                guards = []
                for r in (r1, r2):
                    wp = tentacle(P, q, r).path.waypoints
                    for i in range(len(wp) - 1):
                        guards.extend(lerp(wp[i], wp[i + 1], k / 12.0)
                                      for k in range(13))
                    guards.append(wp[-1])
                guards = [g for g in guards if P.contains(g)]
                assert guards
                for k in range(1000):
                    s = _snap_in(P, lerp(r1, r2, k / 999.0))
                    assert any(sees(P, g, s) for g in guards), (P.n, q, s)
