"""Funnel shortest paths, shortest-path trees, and segment/region targets."""
import math
import random

import pytest

from twowatchman.errors import EmptyTarget
from twowatchman.geodesics import (
    GeodesicPath,
    build_spt,
    shortest_path,
    shortest_path_points,
    vertex_distance_table,
    vertex_path,
)
from twowatchman.geom_core import Point, Region, dist, lerp
from twowatchman.visibility import visibility_from_point

import oracles

SQRT2 = math.sqrt(2.0)


def _random_interior(P, rng, count):
    x0, y0, x1, y1 = P.bbox
    out = []
    while len(out) < count:
        p = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
        if P.contains(p):
            out.append(p)
    return out


class TestPointToPoint:
    def test_convex_straight(self, square):
        p, q = Point(0.1, 0.2), Point(0.8, 0.9)
        path = shortest_path_points(square, p, q)
        assert path.waypoints == (p, q)
        assert abs(path.length - dist(p, q)) < 1e-12

    def test_lshape_frozen_anchor(self, lshape):
        # straight line would cross the notch edge at (1, 1.4)
        path = shortest_path_points(lshape, Point(1.9, 0.5), Point(0.5, 1.9))
        assert path.waypoints == (Point(1.9, 0.5), Point(1.0, 1.0), Point(0.5, 1.9))
        assert abs(path.length - 2.0 * math.sqrt(1.06)) < 1e-12

    def test_lshape_grazing_corner(self, lshape):
        # endpoints collinear with the reflex corner: straight segment wins
        path = shortest_path_points(lshape, Point(1.9, 0.1), Point(0.1, 1.9))
        assert abs(path.length - 1.8 * SQRT2) < 1e-12

    def test_identical_endpoints(self, lshape):
        path = shortest_path_points(lshape, Point(0.5, 0.5), Point(0.5, 0.5))
        assert path.length == 0.0
        assert len(path.waypoints) == 1

    def test_symmetry_and_reversal(self, lshape, comb3):
        rng = random.Random(5)
        for P in (lshape, comb3):
            pts = _random_interior(P, rng, 8)
            for i in range(0, 8, 2):
                a, b = pts[i], pts[i + 1]
                fwd = shortest_path_points(P, a, b)
                rev = shortest_path_points(P, b, a)
                assert abs(fwd.length - rev.length) < 1e-9
                assert fwd.waypoints == tuple(reversed(rev.waypoints))

    def test_triangle_inequality(self, comb3):
        rng = random.Random(9)
        pts = _random_interior(comb3, rng, 12)
        for i in range(0, 12, 3):
            a, b, c = pts[i], pts[i + 1], pts[i + 2]
            ab = shortest_path_points(comb3, a, b).length
            bc = shortest_path_points(comb3, b, c).length
            ac = shortest_path_points(comb3, a, c).length
            assert ac <= ab + bc + 1e-9

    def test_waypoints_are_reflex_and_visible(self, lshape, comb3, staircase4):
        rng = random.Random(13)
        for P in (lshape, comb3, staircase4):
            reflex = {p for _, p in P.reflex_vertices}
            pts = _random_interior(P, rng, 6)
            for i in range(0, 6, 2):
                path = shortest_path_points(P, pts[i], pts[i + 1])
                wps = path.waypoints
                for w in wps[1:-1]:
                    assert w in reflex
                for j in range(len(wps) - 1):
                    assert P.contains_segment(wps[j], wps[j + 1])

    def test_grid_oracle_agreement(self, lshape):
        oracle = oracles.GridOracle(lshape, res=100)
        rng = random.Random(17)
        pts = _random_interior(lshape, rng, 12)
        for i in range(0, 12, 2):
            a, b = pts[i], pts[i + 1]
            got = shortest_path_points(lshape, a, b).length
            ref = oracle.distance(a, b)
            assert got <= ref + 1e-9
            assert abs(got - ref) / max(ref, 1e-9) < 0.01


class TestShortestPathTree:
    def test_convex_star(self, square):
        t = build_spt(square, Point(0.4, 0.5))
        assert all(p == -1 for p in t.parent)
        for i, v in enumerate(square.vertices):
            assert abs(t.dist[i] - dist(Point(0.4, 0.5), v)) < 1e-12

    def test_parent_chains_match_paths(self, lshape, comb3, staircase4):
        for P in (lshape, comb3, staircase4):
            for root in (P.vertices[0], Point(
                    (P.vertices[0].x + P.vertices[1].x) / 2,
                    (P.vertices[0].y + P.vertices[1].y) / 2)):
                t = build_spt(P, root)
                for v in range(P.n):
                    tree_path = t.path_to(v)
                    free_path = shortest_path_points(P, root, P.vertices[v])
                    assert abs(tree_path.length - free_path.length) < 1e-9
                    assert tree_path.waypoints == free_path.waypoints
                    assert abs(t.dist[v] - free_path.length) < 1e-9

    def test_lca_matches_prefix_intersection(self, lshape):
        root = Point(0.0, 2.0)
        t = build_spt(lshape, root)
        vi = {v: i for i, v in enumerate(lshape.vertices)}
        u = vi[Point(2.0, 0.0)]
        w = vi[Point(2.0, 1.0)]
        pu = t.path_to(u).waypoints
        pw = t.path_to(w).waypoints
        common = None
        for i in range(min(len(pu), len(pw))):
            if pu[i] == pw[i]:
                common = pu[i]
            else:
                break
        a = t.lca(u, w)
        got = root if a == -1 else lshape.vertices[a]
        assert got == common

    def test_lca_random(self, comb3):
        t = build_spt(comb3, comb3.vertices[0])
        rng = random.Random(3)
        for _ in range(20):
            u = rng.randrange(comb3.n)
            w = rng.randrange(comb3.n)
            pu = t.path_to(u).waypoints
            pw = t.path_to(w).waypoints
            common = None
            for i in range(min(len(pu), len(pw))):
                if pu[i] == pw[i]:
                    common = pu[i]
                else:
                    break
            a = t.lca(u, w)
            got = t.root if a == -1 else comb3.vertices[a]
            assert got == common

    def test_augmentation_edges(self, lshape, comb3):
        for P in (lshape, comb3):
            t = build_spt(P, P.vertices[0])
            aug = t.augmentation()
            for v, entry in aug.items():
                if entry is None:
                    continue
                hit, eidx = entry
                a, b = P.edge(eidx)
                assert P.on_boundary(hit) or dist(hit, a) < 1e-9 or dist(hit, b) < 1e-9
                mid = lerp(P.vertices[v], hit, 0.5)
                assert P.contains(mid)

    def test_vertex_distance_table(self, lshape):
        D, PRED = vertex_distance_table(lshape)
        for i in range(lshape.n):
            for j in range(lshape.n):
                want = shortest_path_points(
                    lshape, lshape.vertices[i], lshape.vertices[j]).length
                assert abs(D[i][j] - want) < 1e-9
        chain = vertex_path(lshape, 1, 5)
        pts = [lshape.vertices[k] for k in chain]
        assert pts[0] == lshape.vertices[1]
        assert pts[-1] == lshape.vertices[5]


class TestSegmentTargets:
    def test_perpendicular_in_square(self, square):
        q = Point(0.1, 0.5)
        s = (Point(0.9, 0.2), Point(0.9, 0.8))
        path = shortest_path(square, q, s)
        assert abs(path.length - 0.8) < 1e-12
        assert path.waypoints[-1] == Point(0.9, 0.5)

    def test_around_corner(self, lshape):
        # sightlines from q clear the notch corner only below y = 1.11 on
        # the left wall, so reaching s demands a wrap at (1, 1)
        q = Point(1.9, 0.9)
        s = (Point(0.0, 1.5), Point(0.0, 2.0))
        path = shortest_path(lshape, q, s)
        want = dist(q, Point(1, 1)) + dist(Point(1, 1), Point(0, 1.5))
        assert abs(path.length - want) < 1e-12
        oracle = oracles.GridOracle(lshape, res=100)
        targets = [lerp(s[0], s[1], t / 10) for t in range(11)]
        ref = min(oracle.distances_from(q, targets))
        assert path.length <= ref + 1e-9

    def test_segment_to_segment_square(self, square):
        s1 = (Point(0.1, 0.2), Point(0.1, 0.8))
        s2 = (Point(0.9, 0.3), Point(0.9, 0.7))
        path = shortest_path(square, s1, s2)
        assert abs(path.length - 0.8) < 1e-12

    def test_segment_source_point_target(self, lshape):
        s = (Point(1.5, 0.2), Point(1.9, 0.2))
        p = Point(0.5, 1.5)
        a = shortest_path(lshape, s, p)
        b = shortest_path(lshape, p, s)
        assert abs(a.length - b.length) < 1e-9

    def test_crossing_segments_zero(self, square):
        s1 = (Point(0.2, 0.2), Point(0.8, 0.8))
        s2 = (Point(0.2, 0.8), Point(0.8, 0.2))
        path = shortest_path(square, s1, s2)
        assert path.length == 0.0


class TestRegionTargets:
    def test_region_window_perpendicular(self, lshape):
        vp = visibility_from_point(lshape, Point(0.0, 1.9))
        q = Point(1.9, 0.5)
        path = shortest_path(lshape, q, vp.region)
        want = 0.31 / math.sqrt(1.81)
        assert abs(path.length - want) < 1e-9

    def test_point_inside_region_zero(self, lshape):
        vp = visibility_from_point(lshape, Point(0.0, 1.9))
        path = shortest_path(lshape, Point(0.5, 1.5), vp.region)
        assert path.length == 0.0

    def test_empty_region_raises(self, lshape):
        with pytest.raises(EmptyTarget):
            shortest_path(lshape, Point(0.5, 0.5), Region(()))
