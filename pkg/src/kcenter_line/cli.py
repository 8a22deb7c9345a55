"""Command line front end: ``kcenter-line {solve,decide,verify,generate}``.

Instances are JSON objects ``{"points": [[x, y], ...], "k": 2, "metric": "L2"}``.
Solutions are JSON with every float written to 17 significant digits, so they
read back bit for bit.  Exit codes: 0 success, 1 bad input, 2 infeasible
decision or failed verification.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import tempfile
import time

from .approx import approx_fixed_orientation, approx_free_line
from .fixedline import decide_fixed_line, solve_fixed_line
from .fixedorient import decide_fixed_orientation, solve_fixed_orientation
from .freeline import decide_free_line, solve_free_line
from .geometry import Line, Metric, Point, ball_polygon, covering_radius, normalize_angle
from .model import CoverSolution, ProblemInstance

MODES = ("fixed-line", "fixed-orientation", "arbitrary")
DISTS = ("uniform", "clustered", "collinear", "near-collinear")
VERIFY_REL = 1e-9
CANVAS = 800
MARGIN = 0.05


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# ---- instance files -------------------------------------------------------

def _number(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise InputError(f"{what} must be a finite number")
    return float(v)


def parse_instance(text: str) -> ProblemInstance:
    """Strictly parse an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"instance is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    extra = set(doc) - {"points", "k", "metric"}
    if extra:
        raise InputError(f"unknown instance field(s): {', '.join(sorted(extra))}")
    if "points" not in doc or "k" not in doc:
        raise InputError("instance needs 'points' and 'k'")
    pts = doc["points"]
    if not isinstance(pts, list):
        raise InputError("'points' must be a list")
    points = []
    for i, p in enumerate(pts):
        if not isinstance(p, list) or len(p) != 2:
            raise InputError(f"point {i} must be a pair [x, y]")
        points.append(Point(_number(p[0], f"point {i} x"), _number(p[1], f"point {i} y")))
    k = doc["k"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InputError("'k' must be a positive integer")
    metric = doc.get("metric", "L2")
    if metric not in ("L2", "L1", "Linf"):
        raise InputError("'metric' must be one of L2, L1, Linf")
    return ProblemInstance(points, k, metric)


def instance_doc(inst: ProblemInstance) -> dict:
    return {"points": [[p.x, p.y] for p in inst.points], "k": inst.k, "metric": inst.metric.value}


# ---- serialization ------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize {x}")
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def dumps(obj, indent: int = 0) -> str:
    """JSON text with floats at 17 significant digits and one key per line."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple)):
        inner = [dumps(v, indent + 1) for v in obj]
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(inner) + "]"
        if not inner:
            return "[]"
        return "[\n" + ",\n".join(pad + s for s in inner) + "\n" + "  " * indent + "]"
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def solution_doc(status: str, sol: CoverSolution | None, meta: dict, guarantee=None) -> dict:
    doc = {"status": status}
    if sol is not None:
        doc["radius"] = float(sol.radius)
        doc["line"] = {"anchor": [float(sol.line.anchor.x), float(sol.line.anchor.y)],
                       "theta": float(sol.line.theta)}
        doc["centers"] = [[float(c[0]), float(c[1])] for c in sol.centers]
    if guarantee is not None:
        doc["guarantee"] = float(guarantee)
    doc["meta"] = meta
    return doc


def parse_solution(text: str) -> CoverSolution:
    try:
        doc = json.loads(text)
        line = Line(Point(*map(float, doc["line"]["anchor"])), float(doc["line"]["theta"]))
        centers = [Point(float(x), float(y)) for x, y in doc["centers"]]
        return CoverSolution(float(doc["radius"]), line, centers)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed solution file: {exc}") from None


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path) -> str:
    try:
        if path in (None, "-"):
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# ---- svg ------------------------------------------------------------------------

def render_svg(inst: ProblemInstance, sol: CoverSolution) -> str:
    """Deterministic 800x800 drawing of points, center line and covering balls."""
    pts = inst.points or [Point(0.0, 0.0)]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    s = CANVAS * (1 - 2 * MARGIN) / span
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    X = lambda x: CANVAS / 2 + (x - cx) * s
    Y = lambda y: CANVAS / 2 - (y - cy) * s
    f = lambda v: f"{v:.3f}"
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
           f'viewBox="0 0 {CANVAS} {CANVAS}">',
           f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>']
    r = sol.radius
    for c in sol.centers:
        if inst.metric is Metric.L2:
            out.append(f'<circle cx="{f(X(c[0]))}" cy="{f(Y(c[1]))}" r="{f(r * s)}" '
                       'fill="steelblue" fill-opacity="0.3" stroke="steelblue"/>')
        else:
            poly = " ".join(f"{f(X(q.x))},{f(Y(q.y))}" for q in ball_polygon(c, r, inst.metric))
            out.append(f'<polygon points="{poly}" fill="steelblue" fill-opacity="0.3" stroke="steelblue"/>')
    if sol.line is not None:
        reach = 2 * (span + r + abs(sol.line.offset((cx, cy)))) + 1
        foot = sol.line.project((cx, cy))
        dx, dy = sol.line.direction
        a = (foot.x - reach * dx, foot.y - reach * dy)
        b = (foot.x + reach * dx, foot.y + reach * dy)
        out.append(f'<line x1="{f(X(a[0]))}" y1="{f(Y(a[1]))}" x2="{f(X(b[0]))}" y2="{f(Y(b[1]))}" '
                   'stroke="firebrick" stroke-width="1.5"/>')
    for p in inst.points:
        out.append(f'<circle cx="{f(X(p.x))}" cy="{f(Y(p.y))}" r="3" fill="black"/>')
    for c in sol.centers:
        out.append(f'<circle cx="{f(X(c[0]))}" cy="{f(Y(c[1]))}" r="2.5" fill="firebrick"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---- commands -------------------------------------------------------------------

def _anchor(text: str) -> Point:
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"--line-anchor expects 'x,y', got {text!r}") from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InputError("--line-anchor must be finite")
    return Point(x, y)


def _load(args) -> ProblemInstance:
    inst = parse_instance(_read(args.input))
    if args.metric is not None:
        inst = ProblemInstance(inst.points, inst.k, args.metric)
    return inst


def _fixed_line(args) -> Line:
    theta = args.line_theta if args.line_theta is not None else (args.theta or 0.0)
    return Line(_anchor(args.line_anchor), theta)


def _check_mode(args, inst):
    if args.mode == "arbitrary" and inst.metric is not Metric.L2:
        raise InputError("--mode arbitrary supports only the L2 metric")
    if not math.isfinite(args.tolerance) or args.tolerance <= 0:
        raise InputError("--tolerance must be positive")


def _meta(args, started: float, epsilon=None) -> dict:
    return {"mode": args.mode, "epsilon": epsilon, "tolerance": args.tolerance,
            "seed": args.seed, "wall_ms": round((time.perf_counter() - started) * 1000.0, 3)}


def cmd_solve(args) -> int:
    started = time.perf_counter()
    inst = _load(args)
    _check_mode(args, inst)
    guarantee = epsilon = None
    if args.approx:
        epsilon = args.epsilon
        if args.mode == "fixed-line":
            raise InputError("--approx is not available for --mode fixed-line (it is solved exactly)")
        if args.mode == "fixed-orientation":
            if not epsilon > 0:
                raise InputError("--epsilon must be positive")
            rep = approx_fixed_orientation(inst, args.theta or 0.0, epsilon)
        else:
            if not 0 < epsilon < 1:
                raise InputError("--epsilon must lie in (0, 1)")
            rep = approx_free_line(inst, epsilon)
        sol, status, guarantee = rep.solution, "approx", rep.guarantee
    elif args.mode == "fixed-line":
        sol, status = solve_fixed_line(inst, _fixed_line(args)), "optimal"
    elif args.mode == "fixed-orientation":
        theta = args.theta or 0.0
        sol = solve_fixed_orientation(inst, theta, args.tolerance)
        exact = inst.metric is Metric.LINF and normalize_angle(theta) == 0.0
        status = "optimal" if exact else "tolerance_optimal"
    else:
        sol, status = solve_free_line(inst, args.tolerance), "tolerance_optimal"
    _write(args.out, dumps(solution_doc(status, sol, _meta(args, started, epsilon), guarantee)) + "\n")
    if args.svg:
        _write(args.svg, render_svg(inst, sol))
    return 0


def cmd_decide(args) -> int:
    started = time.perf_counter()
    inst = _load(args)
    _check_mode(args, inst)
    r = args.radius
    if not math.isfinite(r) or r < 0:
        raise InputError("--radius must be a nonnegative number")
    if args.mode == "fixed-line":
        line = _fixed_line(args)
        centers = decide_fixed_line(inst, line, r)
        found = None if centers is None else (line, centers)
    elif args.mode == "fixed-orientation":
        found = decide_fixed_orientation(inst, r, args.theta or 0.0)
    else:
        found = decide_free_line(inst, r)
    meta = _meta(args, started)
    if found is None:
        _write(args.out, dumps(solution_doc("infeasible", None, meta)) + "\n")
        return 2
    sol = CoverSolution(r, found[0], found[1])
    _write(args.out, dumps(solution_doc("feasible", sol, meta)) + "\n")
    if args.svg:
        _write(args.svg, render_svg(inst, sol))
    return 0


def verify(inst: ProblemInstance, sol: CoverSolution, rel: float = VERIFY_REL) -> dict:
    """Recompute coverage of a solution from scratch."""
    n_centers = len(sol.centers)
    scale = max([abs(v) for p in inst.points for v in p] + [sol.radius, 1.0])
    slack = rel * scale
    off_line = max((abs(sol.line.offset(c)) for c in sol.centers), default=0.0)
    got = covering_radius(inst.points, sol.centers, inst.metric) if inst.points else 0.0
    ok = n_centers <= inst.k and off_line <= slack and got <= sol.radius + slack
    return {"status": "verified" if ok else "failed", "covering_radius": float(got),
            "claimed_radius": float(sol.radius), "centers": n_centers, "k": inst.k,
            "max_offset_from_line": float(off_line)}


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.input))
    sol = parse_solution(_read(args.solution))
    report = verify(inst, sol)
    _write(args.out, dumps(report) + "\n")
    return 0 if report["status"] == "verified" else 2


def generate_points(n: int, seed: int, dist: str) -> list[list[float]]:
    rng = random.Random(seed)
    if dist == "uniform":
        return [[rng.random(), rng.random()] for _ in range(n)]
    if dist == "clustered":
        hubs = [(rng.random(), rng.random()) for _ in range(max(1, min(n, 1 + n // 5)))]
        out = []
        for _ in range(n):
            hx, hy = rng.choice(hubs)
            out.append([hx + rng.gauss(0.0, 0.03), hy + rng.gauss(0.0, 0.03)])
        return out
    if dist == "collinear":
        # axis-parallel or diagonal so the points are exactly collinear in floats
        kind = rng.randrange(3)
        c = rng.random()
        ts = [rng.random() for _ in range(n)]
        return [[t, c] if kind == 0 else [c, t] if kind == 1 else [t, t] for t in ts]
    if dist == "near-collinear":
        a, b = rng.uniform(-1.0, 1.0), rng.random()
        out = []
        for _ in range(n):
            x = rng.random()
            out.append([x, a * x + b + rng.gauss(0.0, 0.01)])
        return out
    raise InputError(f"unknown distribution {dist!r}")


def cmd_generate(args) -> int:
    if args.n < 0:
        raise InputError("--n must be nonnegative")
    if args.k < 1:
        raise InputError("--k must be positive")
    doc = {"points": generate_points(args.n, args.seed, args.dist), "k": args.k,
           "metric": args.metric or "L2"}
    _write(args.out, dumps(doc) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kcenter-line", description="k congruent balls with centers on a line")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("-i", "--input", default="-", help="instance JSON (default stdin)")
        sp.add_argument("--mode", choices=MODES, default="arbitrary")
        sp.add_argument("--metric", choices=[m.value for m in Metric])
        sp.add_argument("--theta", type=float, help="line direction for fixed-orientation (radians)")
        sp.add_argument("--line-theta", type=float, help="direction of the fixed line")
        sp.add_argument("--line-anchor", default="0,0", help="point on the fixed line, 'x,y'")
        sp.add_argument("--tolerance", type=float, default=1e-9)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--out", help="output path (default stdout)")
        sp.add_argument("--svg", help="also write an SVG rendering here")

    s = sub.add_parser("solve", help="minimize the radius")
    common(s)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="approx", action="store_false", default=False)
    g.add_argument("--approx", dest="approx", action="store_true")
    s.add_argument("--epsilon", type=float, default=0.1)
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("decide", help="test a given radius")
    common(d)
    d.add_argument("--radius", type=float, required=True)
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("verify", help="check a solution file against an instance")
    v.add_argument("-i", "--input", default="-")
    v.add_argument("--solution", required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("generate", help="emit a random instance")
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--dist", choices=DISTS, default="uniform")
    gen.add_argument("--metric", choices=[m.value for m in Metric])
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_generate)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"kcenter-line: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"kcenter-line: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
