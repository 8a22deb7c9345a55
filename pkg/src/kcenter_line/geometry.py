"""Metric-aware planar primitives shared by every solver.

Lines are stored in point-angle form; ``Line.at(t)`` is an isometric
parameterization, so a cross-section of a ball with a line is an interval in
``t``.  Scalar routines work on :class:`Point`; the ``*_batch`` kernels
evaluate many lines at once with numpy and are what the solvers use in their
inner loops.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

import numpy as np

REL_TOL = 1e-9
ABS_TOL = 1e-12


class Metric(str, Enum):
    L2 = "L2"
    L1 = "L1"
    LINF = "Linf"

    @classmethod
    def parse(cls, value: "Metric | str") -> "Metric":
        if isinstance(value, Metric):
            return value
        for m in cls:
            if m.value.lower() == str(value).lower():
                return m
        raise ValueError(f"unknown metric {value!r}")


class Point(NamedTuple):
    x: float
    y: float


class Interval(NamedTuple):
    lo: float
    hi: float

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, t: float) -> bool:
        return self.lo <= t <= self.hi


EMPTY = Interval(math.inf, -math.inf)


def _unit(theta: float) -> tuple[float, float]:
    c, s = math.cos(theta), math.sin(theta)
    # cos(pi/2) is 6e-17, which would turn a vertical line into a slightly
    # tilted one for the polyhedral metrics.
    if abs(c) < 1e-15:
        c = 0.0
    if abs(s) < 1e-15:
        s = 0.0
    return c, s


def normalize_angle(theta: float) -> float:
    theta = float(theta) % math.pi
    return 0.0 if theta >= math.pi else theta


@dataclass(frozen=True)
class Line:
    """Line through ``anchor`` with direction angle ``theta`` in [0, pi)."""

    anchor: Point
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "anchor", Point(float(self.anchor[0]), float(self.anchor[1])))
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    @property
    def direction(self) -> tuple[float, float]:
        return _unit(self.theta)

    @property
    def normal(self) -> tuple[float, float]:
        c, s = self.direction
        return (-s, c)

    def at(self, t: float) -> Point:
        c, s = self.direction
        return Point(float(self.anchor.x + t * c), float(self.anchor.y + t * s))

    def param(self, p: Sequence[float]) -> float:
        c, s = self.direction
        return (p[0] - self.anchor.x) * c + (p[1] - self.anchor.y) * s

    def offset(self, p: Sequence[float]) -> float:
        """Signed distance of ``p`` from the line along :attr:`normal`."""
        c, s = self.direction
        return -(p[0] - self.anchor.x) * s + (p[1] - self.anchor.y) * c

    def project(self, p: Sequence[float]) -> Point:
        return self.at(self.param(p))

    def shifted(self, dy: float) -> "Line":
        nx, ny = self.normal
        return Line(Point(self.anchor.x + dy * nx, self.anchor.y + dy * ny), self.theta)

    @classmethod
    def through(cls, p: Sequence[float], q: Sequence[float]) -> "Line":
        return cls(Point(p[0], p[1]), math.atan2(q[1] - p[1], q[0] - p[0]))

    @classmethod
    def horizontal(cls, y0: float) -> "Line":
        return cls(Point(0.0, y0), 0.0)


def as_points(points: Iterable[Sequence[float]]) -> list[Point]:
    out = []
    for p in points:
        x, y = float(p[0]), float(p[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite coordinate in {p!r}")
        out.append(Point(x, y))
    return out


def unique_points(points: Iterable[Sequence[float]]) -> list[Point]:
    """Drop exact duplicates, keeping first occurrences in input order."""
    seen = set()
    out = []
    for p in as_points(points):
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def distance(p: Sequence[float], q: Sequence[float], m: Metric = Metric.L2) -> float:
    dx, dy = abs(p[0] - q[0]), abs(p[1] - q[1])
    if m is Metric.L2:
        return math.hypot(dx, dy)
    if m is Metric.L1:
        return dx + dy
    return max(dx, dy)


def dual_norm(v: Sequence[float], m: Metric) -> float:
    """Norm dual to ``m``; for a unit normal it converts offsets to ``m``-distances."""
    if m is Metric.L2:
        return math.hypot(v[0], v[1])
    if m is Metric.L1:
        return max(abs(v[0]), abs(v[1]))
    return abs(v[0]) + abs(v[1])


def line_distance(p: Sequence[float], line: Line, m: Metric = Metric.L2) -> float:
    """Distance in metric ``m`` from ``p`` to the nearest point of ``line``."""
    return abs(line.offset(p)) / dual_norm(line.normal, m)


def pairwise_max_distance(points: Sequence[Sequence[float]], m: Metric = Metric.L2) -> float:
    best = 0.0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            best = max(best, distance(points[i], points[j], m))
    return best


def covering_radius(points, centers, m: Metric = Metric.L2) -> float:
    """Largest distance from a point to its nearest center (0 for no points)."""
    if len(points) == 0:
        return 0.0
    if len(centers) == 0:
        return math.inf
    P = np.asarray(points, dtype=float).reshape(-1, 2)
    C = np.asarray(centers, dtype=float).reshape(-1, 2)
    diff = np.abs(P[:, None, :] - C[None, :, :])
    if m is Metric.L2:
        d = np.hypot(diff[..., 0], diff[..., 1])
    elif m is Metric.L1:
        d = diff.sum(axis=-1)
    else:
        d = diff.max(axis=-1)
    return float(d.min(axis=1).max())


# ---------------------------------------------------------------- intervals

def _halflines(coefs, rhs) -> Interval:
    lo, hi = -math.inf, math.inf
    for a, b in zip(coefs, rhs):
        if a > 0:
            hi = min(hi, b / a)
        elif a < 0:
            lo = max(lo, b / a)
        elif b < 0:
            return EMPTY
    return Interval(lo, hi) if lo <= hi else EMPTY


def disk_line_interval(center: Sequence[float], r: float, line: Line,
                       m: Metric = Metric.L2) -> Interval:
    """Parameters ``t`` with ``distance(line.at(t), center, m) <= r``."""
    if r < 0:
        return EMPTY
    if m is Metric.L2:
        t0 = line.param(center)
        d = line.offset(center)
        gap = r * r - d * d
        if gap < 0:
            return EMPTY
        half = math.sqrt(gap)
        return Interval(t0 - half, t0 + half)
    c, s = line.direction
    a = line.anchor.x - center[0]
    b = line.anchor.y - center[1]
    # |a + tc| and |b + ts| are the coordinate gaps at parameter t; both balls
    # are intersections of four half-planes, so the section is four half-lines.
    if m is Metric.L1:
        coefs = (c + s, c - s, -c + s, -c - s)
        rhs = (r - a - b, r - a + b, r + a - b, r + a + b)
    else:
        coefs = (c, -c, s, -s)
        rhs = (r - a, r + a, r - b, r + b)
    return _halflines(coefs, rhs)


def frame_batch(P: np.ndarray, px, py, theta):
    """Line-frame coordinates of every point for every line.

    Returns ``(t, o)`` of shape (L, n): the parameter of the foot point and the
    signed normal offset.
    """
    px, py, theta = (np.atleast_1d(np.asarray(v, dtype=float)) for v in (px, py, theta))
    c, s = np.cos(theta), np.sin(theta)
    c = np.where(np.abs(c) < 1e-15, 0.0, c)
    s = np.where(np.abs(s) < 1e-15, 0.0, s)
    dx = P[None, :, 0] - px[:, None]
    dy = P[None, :, 1] - py[:, None]
    t = dx * c[:, None] + dy * s[:, None]
    o = -dx * s[:, None] + dy * c[:, None]
    return t, o


def line_intervals_batch(P: np.ndarray, px, py, theta, r: float, m: Metric = Metric.L2):
    """Vectorized :func:`disk_line_interval` over L lines and n centers.

    Returns ``(lo, hi)`` arrays of shape (L, n); empty sections have
    ``lo = +inf`` and ``hi = -inf``.
    """
    P = np.asarray(P, dtype=float).reshape(-1, 2)
    if m is Metric.L2:
        t, o = frame_batch(P, px, py, theta)
        gap = r * r - o * o
        ok = gap >= 0
        half = np.sqrt(np.where(ok, gap, 0.0))
        return np.where(ok, t - half, np.inf), np.where(ok, t + half, -np.inf)
    px, py, theta = (np.atleast_1d(np.asarray(v, dtype=float)) for v in (px, py, theta))
    c, s = np.cos(theta), np.sin(theta)
    c = np.where(np.abs(c) < 1e-15, 0.0, c)[:, None]
    s = np.where(np.abs(s) < 1e-15, 0.0, s)[:, None]
    a = px[:, None] - P[None, :, 0]
    b = py[:, None] - P[None, :, 1]
    if m is Metric.L1:
        rows = [(c + s, r - a - b), (c - s, r - a + b), (s - c, r + a - b), (-c - s, r + a + b)]
    else:
        rows = [(c, r - a), (-c, r + a), (s, r - b), (-s, r + b)]
    shape = a.shape
    lo = np.full(shape, -np.inf)
    hi = np.full(shape, np.inf)
    dead = np.zeros(shape, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore"):
        for coef, rhs in rows:
            coef = np.broadcast_to(coef, shape)
            q = rhs / coef
            hi = np.where(coef > 0, np.minimum(hi, q), hi)
            lo = np.where(coef < 0, np.maximum(lo, q), lo)
            dead |= (coef == 0) & (rhs < 0)
    dead |= lo > hi
    return np.where(dead, np.inf, lo), np.where(dead, -np.inf, hi)


# --------------------------------------------------------- circles / balls

def circle_circle_intersections(c1: Sequence[float], r1: float,
                                c2: Sequence[float], r2: float) -> list[Point]:
    """Boundary intersections of two circles.

    Tangent circles give one point.  Concentric circles (including identical
    ones) are degenerate and give no points.
    """
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    D = math.hypot(dx, dy)
    tol = REL_TOL * max(r1, r2, D) + ABS_TOL
    if D <= ABS_TOL or D > r1 + r2 + tol or D < abs(r1 - r2) - tol:
        return []
    a = (D * D + r1 * r1 - r2 * r2) / (2 * D)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    ux, uy = dx / D, dy / D
    mx, my = c1[0] + a * ux, c1[1] + a * uy
    if h <= tol:
        return [Point(mx, my)]
    return [Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)]


def circle_pairs_batch(P: np.ndarray, r: float):
    """Intersection points of all equal-radius circle pairs centered at ``P``.

    Returns ``(X, I, J)`` with X of shape (m, 2) and the generating indices.
    Tangent pairs contribute a single point.
    """
    n = len(P)
    I, J = np.triu_indices(n, 1)
    if len(I) == 0:
        return np.zeros((0, 2)), I, J
    V = P[J] - P[I]
    D = np.hypot(V[:, 0], V[:, 1])
    keep = (D > 0) & (D <= 2 * r)
    I, J, V, D = I[keep], J[keep], V[keep], D[keep]
    M = 0.5 * (P[I] + P[J])
    h = np.sqrt(np.maximum(r * r - 0.25 * D * D, 0.0))
    perp = np.stack([-V[:, 1], V[:, 0]], axis=1) / D[:, None]
    single = h <= REL_TOL * r + ABS_TOL
    X1 = M + h[:, None] * perp
    X2 = (M - h[:, None] * perp)[~single]
    X = np.concatenate([X1, X2])
    return X, np.concatenate([I, I[~single]]), np.concatenate([J, J[~single]])


def ball_polygon(center: Sequence[float], r: float, m: Metric) -> list[Point]:
    """Vertices (CCW) of an L1 or Linf ball."""
    x, y = center
    if m is Metric.L1:
        return [Point(x + r, y), Point(x, y + r), Point(x - r, y), Point(x, y - r)]
    if m is Metric.LINF:
        return [Point(x + r, y + r), Point(x - r, y + r), Point(x - r, y - r), Point(x + r, y - r)]
    raise ValueError("ball_polygon is for polyhedral metrics")


def _segment_intersections(p, q, a, b) -> list[Point]:
    rx, ry = q[0] - p[0], q[1] - p[1]
    sx, sy = b[0] - a[0], b[1] - a[1]
    den = rx * sy - ry * sx
    wx, wy = a[0] - p[0], a[1] - p[1]
    scale = max(abs(rx), abs(ry), abs(sx), abs(sy), 1e-300)
    if abs(den) <= REL_TOL * scale * scale:
        if abs(wx * ry - wy * rx) > REL_TOL * scale * scale:
            return []
        # collinear: report the ends of the overlap
        rr = rx * rx + ry * ry
        t0 = (wx * rx + wy * ry) / rr
        t1 = t0 + (sx * rx + sy * ry) / rr
        lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
        if lo > hi:
            return []
        return [Point(p[0] + lo * rx, p[1] + lo * ry), Point(p[0] + hi * rx, p[1] + hi * ry)]
    t = (wx * sy - wy * sx) / den
    u = (wx * ry - wy * rx) / den
    eps = REL_TOL
    if -eps <= t <= 1 + eps and -eps <= u <= 1 + eps:
        return [Point(p[0] + t * rx, p[1] + t * ry)]
    return []


def ball_boundary_intersections(c1, c2, r: float, m: Metric = Metric.L2) -> list[Point]:
    """Points where the boundaries of two radius-``r`` balls meet."""
    if m is Metric.L2:
        return circle_circle_intersections(c1, r, c2, r)
    A, B = ball_polygon(c1, r, m), ball_polygon(c2, r, m)
    out = []
    for i in range(4):
        for j in range(4):
            out.extend(_segment_intersections(A[i], A[(i + 1) % 4], B[j], B[(j + 1) % 4]))
    return out


# ------------------------------------------------------ hull, width, diameter

def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Sequence[float]]) -> list[Point]:
    """Hull vertices in CCW order (monotone chain), collinear points dropped."""
    pts = sorted(set(as_points(points)))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _antipodal_edges(hull: list[Point]):
    """Yield ``(i, j)``: hull edge i -> i+1 and its farthest vertex j."""
    h = len(hull)
    j = 1
    for i in range(h):
        a, b = hull[i], hull[(i + 1) % h]
        while _cross(a, b, hull[(j + 1) % h]) > _cross(a, b, hull[j]):
            j = (j + 1) % h
        yield i, j


def width_line(points: Iterable[Sequence[float]]) -> tuple[float, Line]:
    """Width of the point set and the mid-line of a minimum-width slab.

    Candidate directions are the hull edges; ties go to the smallest angle.
    """
    hull = convex_hull(points)
    if not hull:
        raise ValueError("width of an empty point set")
    if len(hull) == 1:
        return 0.0, Line(hull[0], 0.0)
    if len(hull) == 2:
        return 0.0, Line.through(hull[0], hull[1])
    best = None
    for i, j in _antipodal_edges(hull):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        ex, ey = b[0] - a[0], b[1] - a[1]
        L = math.hypot(ex, ey)
        w = _cross(a, b, hull[j]) / L
        theta = normalize_angle(math.atan2(ey, ex))
        if best is None or w < best[0] - REL_TOL * best[0] or (
                w <= best[0] + REL_TOL * best[0] and theta < best[1]):
            best = (w, theta, a, ex / L, ey / L)
    w, theta, a, ux, uy = best
    # inward normal of a CCW edge is its left normal
    anchor = Point(a[0] - 0.5 * w * uy, a[1] + 0.5 * w * ux)
    return w, Line(anchor, theta)


def diameter(points: Iterable[Sequence[float]]) -> tuple[float, Point, Point]:
    """Largest pairwise L2 distance and a pair realizing it (rotating calipers)."""
    hull = convex_hull(points)
    if not hull:
        raise ValueError("diameter of an empty point set")
    if len(hull) == 1:
        return 0.0, hull[0], hull[0]
    if len(hull) == 2:
        return math.dist(hull[0], hull[1]), hull[0], hull[1]
    best = (-1.0, hull[0], hull[0])
    h = len(hull)
    for i, j in _antipodal_edges(hull):
        for a in (hull[i], hull[(i + 1) % h]):
            d = math.dist(a, hull[j])
            if d > best[0]:
                best = (d, a, hull[j])
    return best


def spread(P: np.ndarray) -> float:
    """Largest distance from the centroid; invariant under rigid motions."""
    if len(P) == 0:
        return 0.0
    c = P.mean(axis=0)
    return float(np.hypot(*(P - c).T).max())
