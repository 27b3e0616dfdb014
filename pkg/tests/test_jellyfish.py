"""Jellyfish structure: per-edge tentacle assignment, split-point
equalization, minimum head pairs over extension chords, and reduction.

Derived expectations are checked against independent oracles computed in
this file: dense parameter scans for split brackets, a half-plane-clip
kernel for the star-shaped cases, slot-table lower bounds, and random
probe heads for minimality.
"""
import random

import pytest

from twowatchman import validate_polygon
from twowatchman.cli import generate_corpus
from twowatchman.cuts import CoverRelation, cover_relation, extensions
from twowatchman.geom_core import Point, dist, lerp
from twowatchman.jellyfish import (
    Jellyfish,
    JellyfishPair,
    bases,
    jellyfish_pair,
    reduce as reduce_pair,
    slot_table,
    _ext_segment,
    _snap_in,
)
from twowatchman.tentacles import edge_restricted_tentacle, tentacle


# ---------------------------------------------------------------------------
# oracles

def _kernel_ring(P):
    """Kernel as the intersection of the edge half-planes, clipped from an
    expanded bounding box (Sutherland-Hodgman)."""
    x0, y0, x1, y1 = P.bbox
    pad = (x1 - x0) + (y1 - y0) + 1.0
    ring = [Point(x0 - pad, y0 - pad), Point(x1 + pad, y0 - pad),
            Point(x1 + pad, y1 + pad), Point(x0 - pad, y1 + pad)]
    for a, b in P.edges:
        dx, dy = b.x - a.x, b.y - a.y
        out = []
        m = len(ring)
        for i in range(m):
            p, q = ring[i], ring[(i + 1) % m]
            sp = dx * (p.y - a.y) - dy * (p.x - a.x)
            sq = dx * (q.y - a.y) - dy * (q.x - a.x)
            if sp >= 0:
                out.append(p)
            if (sp > 0 > sq) or (sp < 0 < sq):
                t = sp / (sp - sq)
                out.append(Point(p.x + t * (q.x - p.x),
                                 p.y + t * (q.y - p.y)))
        ring = out
        if not ring:
            break
    return ring


def _dist_to_kernel(P, p):
    ring = _kernel_ring(P)
    assert ring, "kernel oracle produced an empty kernel"
    m = len(ring)
    best = float("inf")
    inside = True
    for i in range(m):
        a, b = ring[i], ring[(i + 1) % m]
        dx, dy = b.x - a.x, b.y - a.y
        if dx * (p.y - a.y) - dy * (p.x - a.x) < 0:
            inside = False
        L2 = dx * dx + dy * dy
        t = 0.0 if L2 == 0 else ((p.x - a.x) * dx + (p.y - a.y) * dy) / L2
        t = min(1.0, max(0.0, t))
        best = min(best, dist(p, Point(a.x + t * dx, a.y + t * dy)))
    return 0.0 if inside else best


def _edge_param(P, b, p):
    a, c = P.edge(b)
    dx, dy = c.x - a.x, c.y - a.y
    return ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)


def _scan_sign_brackets(P, q1, q2, b, samples=80):
    """Parameter intervals of edge b where the two heads' restricted
    tentacle lengths cross, from a dense independent scan."""
    a, c = P.edge(b)
    out = []
    prev = None
    for k in range(samples + 1):
        t = 1e-6 + (1.0 - 2e-6) * k / samples
        r = Point(a.x + t * (c.x - a.x), a.y + t * (c.y - a.y))
        d = (edge_restricted_tentacle(P, q1, r, b).length
             - edge_restricted_tentacle(P, q2, r, b).length)
        if prev is not None and prev[1] * d < 0:
            out.append((prev[0], t))
        prev = (t, d)
    return out


COMB3_HEADS = (Point(0.5, 1.8), Point(4.5, 1.9))
COMB3_PAIR_LEN = 1.7445234480024443
COMB3_SPLIT_EDGES = {0, 6}

# frozen lengths of the best head pairs over comb3 extension pairs,
# sandwiched below by the slot-table bound and above by random probes
COMB3_BASES = {
    (0, 7): (0.355332043497, 2),
    (3, 7): (1.000000000000, 1),
    (1, 6): (0.866719955908, 1),
}


# ---------------------------------------------------------------------------
# fixed-head pairs

class TestJellyfishPair:
    def test_square_all_zero_ties_to_first(self, square):
        pair = jellyfish_pair(square, Point(0.25, 0.5), Point(0.75, 0.5))
        assert pair.length == 0.0
        assert not pair.split_records
        # symmetric heads tie on every endpoint; ties go to the first head
        assert len(pair.jf1.tentacles) == 8
        assert not pair.jf2.tentacles
        assert all(t.length == 0.0 for t in pair.jf1.tentacles)

    def test_kernel_head_owns_everything(self, lshape):
        pair = jellyfish_pair(lshape, Point(0.5, 0.5), Point(1.9, 0.1))
        assert pair.length == 0.0
        assert len(pair.jf1.tentacles) == 12
        assert not pair.jf2.tentacles

    def test_comb3_frozen(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        assert pair.length == pytest.approx(COMB3_PAIR_LEN, abs=1e-9)
        assert {s.edge for s in pair.split_records} == COMB3_SPLIT_EDGES
        assert len(pair.jf1.tentacles) == 16
        assert len(pair.jf2.tentacles) == 12
        # the pair length is the longest stored tentacle
        longest = max(t.length for t in
                      pair.jf1.tentacles + pair.jf2.tentacles)
        assert pair.length == longest

    def test_split_points_equalize(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        assert pair.split_records
        for s in pair.split_records:
            assert abs(s.length_1 - s.length_2) <= 1e-9
            t = _edge_param(comb3, s.edge, s.r_star)
            assert 0.0 < t < 1.0
            # stored lengths are the actual restricted tentacle lengths
            l1 = edge_restricted_tentacle(comb3, COMB3_HEADS[0], s.r_star,
                                          s.edge).length
            l2 = edge_restricted_tentacle(comb3, COMB3_HEADS[1], s.r_star,
                                          s.edge).length
            assert l1 == pytest.approx(s.length_1, abs=1e-12)
            assert l2 == pytest.approx(s.length_2, abs=1e-12)

    def test_split_points_match_dense_scan(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        for s in pair.split_records:
            brackets = _scan_sign_brackets(comb3, *COMB3_HEADS, b=s.edge)
            assert len(brackets) == 1
            lo, hi = brackets[0]
            assert lo <= _edge_param(comb3, s.edge, s.r_star) <= hi

    def test_assignment_rule(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        split_targets = {(s.edge, s.r_star) for s in pair.split_records}
        for t in pair.jf1.tentacles:
            if (t.target_edge, t.target) in split_targets:
                continue
            other = edge_restricted_tentacle(comb3, COMB3_HEADS[1],
                                             t.target, t.target_edge)
            assert t.length <= other.length
        for t in pair.jf2.tentacles:
            if (t.target_edge, t.target) in split_targets:
                continue
            other = edge_restricted_tentacle(comb3, COMB3_HEADS[0],
                                             t.target, t.target_edge)
            assert t.length < other.length

    def test_boundary_min_bounded_by_pair_length(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        for b in range(comb3.n):
            a, c = comb3.edge(b)
            for k in range(1, 10):
                r = lerp(a, c, k / 10)
                m = min(
                    edge_restricted_tentacle(comb3, COMB3_HEADS[0], r,
                                             b).length,
                    edge_restricted_tentacle(comb3, COMB3_HEADS[1], r,
                                             b).length)
                assert m <= pair.length + 1e-9

    def test_deterministic(self, comb3):
        a = jellyfish_pair(comb3, *COMB3_HEADS)
        b = jellyfish_pair(comb3, *COMB3_HEADS)
        assert a.length == b.length
        assert [t.target for t in a.jf1.tentacles] == \
            [t.target for t in b.jf1.tentacles]


# ---------------------------------------------------------------------------
# minimum pairs over extension chords

class TestBases:
    def test_lshape_bases_sit_in_kernel(self, lshape):
        exts = extensions(lshape)
        assert len(exts) == 2
        m = bases(lshape, exts[0], exts[1], mode="fast")
        assert m.length == 0.0
        assert _dist_to_kernel(lshape, m.q1) <= 1e-9
        assert _dist_to_kernel(lshape, m.q2) <= 1e-9

    @pytest.mark.parametrize("pair_idx", sorted(COMB3_BASES))
    def test_comb3_frozen_values(self, comb3, pair_idx):
        i, j = pair_idx
        want, want_case = COMB3_BASES[pair_idx]
        exts = extensions(comb3)
        m = bases(comb3, exts[i], exts[j], mode="full")
        assert m.length == pytest.approx(want, abs=1e-6)
        assert m.case_tag == want_case
        assert m.mode == "full"

    def test_full_no_worse_than_fast(self, comb3):
        exts = extensions(comb3)
        for i, j in COMB3_BASES:
            fast = bases(comb3, exts[i], exts[j], mode="fast")
            full = bases(comb3, exts[i], exts[j], mode="full")
            assert full.length <= fast.length + 1e-9
            assert fast.length <= 2.0 * full.length + 1e-6

    def test_slot_table_lower_bound(self, comb3):
        exts = extensions(comb3)
        for i, j in COMB3_BASES:
            t1 = slot_table(comb3, exts[i])
            t2 = slot_table(comb3, exts[j])
            lb = max(min(t1[s].length, t2[s].length) for s in t1)
            m = bases(comb3, exts[i], exts[j], mode="full")
            assert m.length >= lb - 1e-9
        # the vertex-dominated pair attains its bound exactly
        t1 = slot_table(comb3, exts[3])
        t2 = slot_table(comb3, exts[7])
        lb = max(min(t1[s].length, t2[s].length) for s in t1)
        assert bases(comb3, exts[3], exts[7]).length == \
            pytest.approx(lb, abs=1e-9)

    def test_minimum_beats_random_heads(self, comb3):
        exts = extensions(comb3)
        rng = random.Random(7)
        for i, j in ((0, 7), (3, 7)):
            m = bases(comb3, exts[i], exts[j], mode="full")
            s1 = _ext_segment(comb3, exts[i])
            s2 = _ext_segment(comb3, exts[j])
            for _ in range(12):
                u1 = _snap_in(comb3, lerp(s1[0], s1[1], rng.random()))
                u2 = _snap_in(comb3, lerp(s2[0], s2[1], rng.random()))
                probe = jellyfish_pair(comb3, u1, u2)
                assert m.length <= probe.length + 1e-9

    def test_heads_lie_on_their_extensions(self, comb3):
        exts = extensions(comb3)
        m = bases(comb3, exts[0], exts[7], mode="fast")
        for q, e in ((m.q1, m.e1), (m.q2, m.e2)):
            a, c = e.cut.start, e.cut.end
            dx, dy = c.x - a.x, c.y - a.y
            t = ((q.x - a.x) * dx + (q.y - a.y) * dy) / (dx * dx + dy * dy)
            assert -1e-6 <= t <= 1.0 + 1e-6
            foot = Point(a.x + t * dx, a.y + t * dy)
            assert dist(q, foot) <= 1e-6

    def test_rejects_identical_extensions(self, comb3):
        exts = extensions(comb3)
        with pytest.raises(AssertionError):
            bases(comb3, exts[0], exts[0])


# ---------------------------------------------------------------------------
# reduction

class TestReduce:
    def test_single_tentacle_kept(self, lshape):
        q = Point(1.9, 0.5)
        t = tentacle(lshape, q, Point(0, 1.9))
        assert t.tentacle_cut is not None
        pair = JellyfishPair(lshape, Jellyfish(q, (t,)),
                             Jellyfish(q, ()), t.length, ())
        red = reduce_pair(pair)
        assert red.tentacles == (t,)
        assert not red.removal_log

    def test_duplicate_cut_removed(self, lshape):
        q = Point(1.9, 0.5)
        t1 = tentacle(lshape, q, Point(0, 1.9))
        t2 = tentacle(lshape, q, Point(0, 1.9))
        pair = JellyfishPair(lshape, Jellyfish(q, (t1,)),
                             Jellyfish(q, (t2,)),
                             max(t1.length, t2.length), ())
        red = reduce_pair(pair)
        assert len(red.tentacles) == 1
        assert len(red.removal_log) == 1
        removed, coverer = red.removal_log[0]
        assert removed.tentacle_cut is not None
        assert coverer in red.tentacles

    def test_zero_tentacles_never_removed(self, lshape):
        pair = jellyfish_pair(lshape, Point(0.5, 0.5), Point(1.9, 0.1))
        red = reduce_pair(pair)
        assert len(red.tentacles) == 12
        assert not red.removal_log

    def test_comb3_reduction(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        red = reduce_pair(pair)
        total = len(pair.jf1.tentacles) + len(pair.jf2.tentacles)
        assert len(red.tentacles) + len(red.removal_log) == total
        assert red.removal_log
        assert red.length == pair.length
        retained = set(map(id, red.tentacles))
        for removed, coverer in red.removal_log:
            assert id(coverer) in retained
            assert coverer.length >= removed.length - 1e-12
            rel = cover_relation(comb3, list(coverer.path.waypoints),
                                 removed.tentacle_cut)
            assert rel is not CoverRelation.NONE

    def test_heads_partition(self, comb3):
        pair = jellyfish_pair(comb3, *COMB3_HEADS)
        red = reduce_pair(pair)
        h1, h2 = COMB3_HEADS
        own1 = red.for_head(h1)
        own2 = red.for_head(h2)
        assert len(own1) + len(own2) == len(red.tentacles)
        assert all(t.head == h1 for t in own1)
        assert all(t.head == h2 for t in own2)
