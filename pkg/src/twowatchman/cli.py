"""Command-line front end and test-corpus generation.

Subcommands: `solve` (compute a two-watchman route for a polygon JSON file)
and `corpus` (emit a deterministic test polygon).  Corpus generation lives
here so the CLI and the test suite build identical families.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
import zlib

from .errors import GeometryError
from .geom_core import Point, orient, segments_intersect, validate_polygon


# ---------------------------------------------------------------------------
# corpus generation
# ---------------------------------------------------------------------------

def _comb(teeth: int, rng: random.Random):
    """Comb with `teeth` unit-wide teeth over a unit base strip; 4k vertices,
    kernel empty for k >= 2.  Mouth corners and tooth tops are jittered so no
    extension passes through a second vertex."""
    if teeth < 2:
        raise ValueError("comb needs at least 2 teeth")
    k = teeth
    w = 2 * k - 1
    mouth = [1.05 + 0.12 * rng.random() for _ in range(k)]
    top = [2.0 + 0.4 * rng.random() for _ in range(k)]
    verts = [(0.0, 0.0), (float(w), 0.0), (float(w), top[k - 1])]
    for i in range(k - 1, 0, -1):
        # tooth i occupies x in [2i, 2i+1]
        verts.append((2.0 * i, top[i]))
        verts.append((2.0 * i, mouth[i]))
        verts.append((2.0 * i - 1.0, mouth[i - 1]))
        verts.append((2.0 * i - 1.0, top[i - 1]))
    verts.append((0.0, top[0]))
    return verts


def _staircase(reflex_count: int, rng: random.Random):
    """Ascending staircase with `reflex_count` inner step corners."""
    if reflex_count < 1:
        raise ValueError("staircase needs at least 1 reflex vertex")
    k = reflex_count + 1  # number of steps
    verts = [(0.0, 0.0)]
    for j in range(1, k + 1):
        verts.append((float(j), float(j - 1)))
        verts.append((float(j), float(j)))
    verts.append((0.0, float(k)))
    return verts


def _spiral(half_turns: int, rng: random.Random):
    """Spiral strip polygon: an outer archimedean polyline out, an inner
    offset polyline back."""
    if half_turns < 2:
        raise ValueError("spiral needs at least 2 half turns")
    steps_per_half = 4
    m = steps_per_half * half_turns
    thetas = []
    for j in range(m + 1):
        jitter = 0.12 * (rng.random() - 0.5) if 0 < j < m else 0.0
        thetas.append((j + jitter) * math.pi / steps_per_half)
    grow = 0.30
    width = 0.55 * grow * math.pi  # strictly less than one full-turn gap
    outer = []
    inner = []
    for th in thetas:
        r_out = 1.0 + grow * th
        r_in = r_out - width * (1.0 + 0.15 * math.sin(3.1 * th))
        outer.append((r_out * math.cos(th), r_out * math.sin(th)))
        inner.append((r_in * math.cos(th), r_in * math.sin(th)))
    return outer + inner[::-1]


def _convex(n: int, rng: random.Random):
    if n < 3:
        raise ValueError("convex needs at least 3 vertices")
    angles = sorted(2.0 * math.pi * (i + 0.35 * rng.random()) / n for i in range(n))
    return [(math.cos(a), math.sin(a)) for a in angles]


def _random_polygon(n: int, rng: random.Random):
    """Random simple polygon by repeated edge bulging: pick an edge, replace
    it by two edges through a nearby random point whenever that keeps the
    boundary simple.  Gives a healthy mix of convex and reflex vertices."""
    if n < 3:
        raise ValueError("random polygon needs at least 3 vertices")
    pts = [Point(0.0, 0.0), Point(1.0, 0.0), Point(0.55, 0.9)]
    while len(pts) < n:
        placed = False
        for _ in range(300):
            ei = rng.randrange(len(pts))
            a = pts[ei]
            b = pts[(ei + 1) % len(pts)]
            mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
            span = math.hypot(b.x - a.x, b.y - a.y)
            cand = Point(mid.x + span * 0.9 * (rng.random() - 0.5),
                         mid.y + span * 0.9 * (rng.random() - 0.5))
            if cand in pts or orient(a, cand, b) == 0:
                continue
            ok = True
            for j in range(len(pts)):
                if j == ei:
                    continue
                c = pts[j]
                d = pts[(j + 1) % len(pts)]
                for (u, v) in ((a, cand), (cand, b)):
                    if c in (u, v) or d in (u, v):
                        # edges sharing an endpoint: collinear means overlap risk
                        shared = c if c in (u, v) else d
                        other_old = d if shared == c else c
                        if orient(shared, cand, other_old) == 0:
                            ok = False
                            break
                        continue
                    if segments_intersect(u, v, c, d):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            prv = pts[ei - 1]
            nxt = pts[(ei + 2) % len(pts)]
            if orient(prv, a, cand) == 0 or orient(cand, b, nxt) == 0:
                continue
            pts.insert(ei + 1, cand)
            placed = True
            break
        if not placed:
            raise GeometryError("random polygon generation stalled")
    return [(p.x, p.y) for p in pts]


_FAMILIES = {
    "comb": _comb,
    "spiral": _spiral,
    "staircase": _staircase,
    "random": _random_polygon,
    "convex": _convex,
}


def generate_corpus(family: str, n: int, seed: int) -> dict:
    """Polygon JSON for one corpus instance.

    `n` is the family's size parameter: teeth for comb, reflex corners for
    staircase, half turns for spiral, vertex count for random and convex.
    Deterministic under (family, n, seed).
    """
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    last = None
    for attempt in range(20):
        key = zlib.crc32(f"{family}:{n}:{seed}:{attempt}".encode())
        rng = random.Random(key)
        try:
            raw = _FAMILIES[family](n, rng)
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                validate_polygon(raw)
        except (GeometryError, ValueError) as exc:
            last = exc
            continue
        return {"vertices": [[float(x), float(y)] for x, y in raw]}
    raise GeometryError(f"could not generate a valid {family} polygon: {last}")


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.6g}"


def write_svg(path: str, P, solution) -> None:
    """Layered debug figure: polygon, extensions (dashed), tentacles (thin),
    tours (thick).  Fixed palette, viewBox fitted with a 5% margin."""
    x0, y0, x1, y1 = P.bbox
    mx = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    vb = (x0 - mx, y0 - mx, (x1 - x0) + 2 * mx, (y1 - y0) + 2 * mx)
    sw = 0.004 * max(vb[2], vb[3])
    lines = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(vb[0])} {_fmt(-(y1 + mx))} {_fmt(vb[2])} {_fmt(vb[3])}">')
    lines.append('<g transform="scale(1,-1)">')

    def path_d(points, close):
        d = "M " + " L ".join(f"{_fmt(p.x)},{_fmt(p.y)}" for p in points)
        return d + (" Z" if close else "")

    lines.append(f'<path d="{path_d(P.vertices, True)}" fill="#f5f5f0" '
                 f'stroke="#444444" stroke-width="{_fmt(sw)}"/>')
    from .cuts import extensions as _extensions
    for ext in _extensions(P):
        a, b = ext.cut.start, ext.cut.end
        lines.append(f'<line x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" '
                     f'x2="{_fmt(b.x)}" y2="{_fmt(b.y)}" stroke="#999999" '
                     f'stroke-width="{_fmt(0.6 * sw)}" '
                     f'stroke-dasharray="{_fmt(3 * sw)} {_fmt(2 * sw)}"/>')
    for tp in solution.provenance.get("tentacle_paths", []):
        pts = [Point(x, y) for x, y in tp]
        if len(pts) >= 2:
            lines.append(f'<path d="{path_d(pts, False)}" fill="none" '
                         f'stroke="#2ca02c" stroke-width="{_fmt(0.7 * sw)}"/>')
    palette = ("#d62728", "#1f77b4")
    for tour, color in zip((solution.tour1, solution.tour2), palette):
        pts = tour.waypoints
        if len(pts) == 1:
            p = pts[0]
            lines.append(f'<circle cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" '
                         f'r="{_fmt(2.5 * sw)}" fill="{color}"/>')
        else:
            lines.append(f'<path d="{path_d(pts, True)}" fill="none" '
                         f'stroke="{color}" stroke-width="{_fmt(2.0 * sw)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # bad flags must exit 3, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(3)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twowatchman",
                description="Approximate two-watchman routes in simple polygons.")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve one polygon", parents=[], add_help=True)
    ps.add_argument("--input", required=True, help="polygon JSON file")
    ps.add_argument("--mode", choices=("floating", "fixed"), default="floating")
    ps.add_argument("--variant", choices=("fast", "full"), default="fast")
    ps.add_argument("--heads", help='fixed-mode heads as "x1,y1;x2,y2"')
    ps.add_argument("--samples", type=int, default=10000)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--json", dest="json_path", help="write solution JSON here")
    ps.add_argument("--svg", dest="svg_path", help="write debug SVG here")
    ps.add_argument("--verbose", action="store_true")

    pc = sub.add_parser("corpus", help="generate a corpus polygon")
    pc.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--output", help="write polygon JSON here (default stdout)")
    return p


def _parse_heads(text: str):
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError("expected two points separated by ';'")
    out = []
    for part in parts:
        xy = part.split(",")
        if len(xy) != 2:
            raise ValueError(f"bad point {part!r}")
        out.append(Point(float(xy[0]), float(xy[1])))
    return out


def run(args) -> int:
    """Execute a parsed `solve` command; returns the process exit code."""
    from .solver import solution_to_dict, solve_fixed, solve_floating

    if args.samples < 100:
        sys.stderr.write("error: --samples must be at least 100\n")
        return 3
    heads = None
    if args.mode == "fixed":
        if not args.heads:
            sys.stderr.write("error: --heads is required in fixed mode\n")
            return 3
        try:
            heads = _parse_heads(args.heads)
        except ValueError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 3
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        sys.stderr.write(f"error: cannot read {args.input}: {exc}\n")
        return 4
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"error: {args.input} is not valid JSON: {exc}\n")
        return 2
    try:
        P = validate_polygon(data["vertices"])
    except (GeometryError, ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: invalid polygon: {exc}\n")
        return 2
    try:
        if args.mode == "floating":
            sol = solve_floating(P, variant=args.variant,
                                 samples=args.samples, seed=args.seed)
        else:
            sol = solve_fixed(P, heads[0], heads[1],
                              samples=args.samples, seed=args.seed)
    except GeometryError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if args.verbose:
        sys.stderr.write(f"mode={sol.mode} maxlen={sol.maxlen:.9g} "
                         f"sumlen={sol.sumlen:.9g} "
                         f"lower_bound={sol.lower_bound:.9g}\n")
        sys.stderr.write(f"provenance: {sol.provenance.get('winner')}\n")
    doc = solution_to_dict(sol)
    if args.json_path:
        try:
            with open(args.json_path, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.json_path}: {exc}\n")
            return 4
    if args.svg_path:
        try:
            write_svg(args.svg_path, P, sol)
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.svg_path}: {exc}\n")
            return 4
    print(json.dumps({"mode": doc["mode"], "maxlen": doc["maxlen"],
                      "sumlen": doc["sumlen"],
                      "coverage_misses": doc["coverage"]["misses"]}))
    return 0


def run_corpus(args) -> int:
    try:
        doc = generate_corpus(args.family, args.n, args.seed)
    except (GeometryError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    text = json.dumps(doc)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.output}: {exc}\n")
            return 4
    else:
        print(text)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    if args.command == "solve":
        return run(args)
    return run_corpus(args)


if __name__ == "__main__":
    sys.exit(main())
