"""Slow brute-force references for cross-checking the solvers.

They share the geometric primitives (ball/line intersection) but none of the
solver logic: the greedy piercing, the radius search and the line search are
written again here, as plainly as possible.  All grids and iteration counts
are fixed constants, so results are deterministic.
"""
from __future__ import annotations

import math

import numpy as np

from .geometry import Line, Metric, Point, disk_line_interval
from .model import ProblemInstance

__all__ = ["oracle_fixed_line", "oracle_fixed_orientation", "oracle_free_line", "oracle_kcenter_1d"]

FIXED_LINE_MAX_N = 15
FIXED_ORIENTATION_MAX_N = 10
FREE_LINE_MAX_N = 8
KCENTER_1D_MAX_N = 15

RADIUS_ABS_TOL = 1e-12
ORIENTATION_GRID = 10_000
ORIENTATION_REFINE = 3
FREE_ANGLES = 720
FREE_OFFSETS = 100
FREE_INNER_OFFSETS = 200
GOLDEN_ITERS = 45
FREE_ANGLE_ITERS = 40

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _guard(n: int, limit: int, name: str):
    if n > limit:
        raise ValueError(f"{name} handles at most {limit} points, got {n}")


def _points(inst: ProblemInstance) -> np.ndarray:
    return np.array(inst.points, dtype=float).reshape(-1, 2)


def _feasible(P, k, m, line, r) -> bool:
    ivs = [disk_line_interval(p, r, line, m) for p in P]
    if any(iv.lo > iv.hi for iv in ivs):
        return False
    ivs.sort(key=lambda iv: iv.hi)
    used, last = 0, -math.inf
    for lo, hi in ivs:
        if lo > last:
            used += 1
            last = hi
    return used <= k


def _start_radius(P, m, line) -> float:
    # one center at the foot of the centroid covers everything
    foot = line.project(P.mean(axis=0))
    return max(_dist(p, foot, m) for p in P)


def _dist(p, q, m) -> float:
    dx, dy = abs(p[0] - q[0]), abs(p[1] - q[1])
    if m is Metric.L1:
        return dx + dy
    if m is Metric.LINF:
        return max(dx, dy)
    return math.hypot(dx, dy)


def _line_radius(P, k, m, line) -> float:
    if len(P) == 0:
        return 0.0
    lo, hi = 0.0, _start_radius(P, m, line)
    for _ in range(400):
        if hi - lo <= RADIUS_ABS_TOL:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _feasible(P, k, m, line, mid):
            hi = mid
        else:
            lo = mid
    return hi


def oracle_fixed_line(inst: ProblemInstance, line: Line) -> float:
    """Optimal radius on ``line`` by bisection on a plain greedy decision."""
    _guard(inst.n, FIXED_LINE_MAX_N, "oracle_fixed_line")
    return _line_radius(_points(inst), inst.k, inst.metric, line)


def _greedy_counts(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Greedy piercing count of every row; rows with an empty interval get -1."""
    L, n = lo.shape
    order = np.argsort(hi, axis=1, kind="stable")
    lo_s = np.take_along_axis(lo, order, axis=1)
    hi_s = np.take_along_axis(hi, order, axis=1)
    count = np.zeros(L, dtype=int)
    last = np.full(L, -np.inf)
    for j in range(n):
        new = lo_s[:, j] > last
        count += new
        last = np.where(new, hi_s[:, j], last)
    count[(lo > hi).any(axis=1)] = -1
    return count


def _radii_batch(P, k, m, ax, ay, theta) -> np.ndarray:
    """Optimal radius on each line, bisected independently per line."""
    ax, ay = np.asarray(ax, float), np.asarray(ay, float)
    theta = np.broadcast_to(np.asarray(theta, float), ax.shape)
    c, s = np.cos(theta), np.sin(theta)
    g = P.mean(axis=0)
    t = (g[0] - ax) * c + (g[1] - ay) * s
    fx, fy = ax + t * c, ay + t * s
    dx = np.abs(P[None, :, 0] - fx[:, None])
    dy = np.abs(P[None, :, 1] - fy[:, None])
    if m is Metric.L1:
        hi = (dx + dy).max(axis=1)
    elif m is Metric.LINF:
        hi = np.maximum(dx, dy).max(axis=1)
    else:
        hi = np.hypot(dx, dy).max(axis=1)
    lo = np.zeros_like(hi)
    for _ in range(400):
        open_ = hi - lo > RADIUS_ABS_TOL
        if not open_.any():
            break
        mid = 0.5 * (lo + hi)
        idx = np.flatnonzero(open_ & (mid > lo) & (mid < hi))
        if len(idx) == 0:
            break
        # one radius per line: evaluate each row at its own midpoint
        ok = np.empty(len(idx), dtype=bool)
        for q0 in range(0, len(idx), 4096):
            sl = idx[q0:q0 + 4096]
            a, b = _rowwise_intervals(P, ax[sl], ay[sl], theta[sl], mid[sl], m)
            got = _greedy_counts(a, b)
            ok[q0:q0 + len(sl)] = (got >= 0) & (got <= k)
        hi[idx[ok]] = mid[idx[ok]]
        lo[idx[~ok]] = mid[idx[~ok]]
    return hi


def _rowwise_intervals(P, ax, ay, theta, r, m):
    """Intervals of each point's ball on each line, with radius ``r[row]``."""
    c = np.cos(theta)[:, None]
    s = np.sin(theta)[:, None]
    u = P[None, :, 0] - ax[:, None]
    v = P[None, :, 1] - ay[:, None]
    r = r[:, None]
    if m is Metric.L2:
        t = u * c + v * s
        o = v * c - u * s
        half = np.sqrt(np.maximum(r * r - o * o, 0.0))
        lo, hi = t - half, t + half
        bad = np.abs(o) > r
        return np.where(bad, np.inf, lo), np.where(bad, -np.inf, hi)
    # the ball is an intersection of half-planes; each gives a half-line in t
    if m is Metric.L1:
        rows = [(sa * c + sb * s, r + sa * u + sb * v) for sa in (1, -1) for sb in (1, -1)]
    else:
        rows = [(c, r + u), (-c, r - u), (s, r + v), (-s, r - v)]
    lo = np.full(u.shape, -np.inf)
    hi = np.full(u.shape, np.inf)
    bad = np.zeros(u.shape, dtype=bool)
    for a, b in rows:
        a = np.broadcast_to(a, u.shape)
        with np.errstate(divide="ignore", invalid="ignore"):
            q = b / a
        hi = np.where(a > 0, np.minimum(hi, q), hi)
        lo = np.where(a < 0, np.maximum(lo, q), lo)
        bad |= (a == 0) & (b < 0)
    bad |= lo > hi
    return np.where(bad, np.inf, lo), np.where(bad, -np.inf, hi)


def _golden(f, a: float, b: float, iters: int):
    """Golden-section minimum of f on [a, b]; returns (fmin, argmin)."""
    c, d = b - _INVPHI * (b - a), a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best = min((f(a), a), (f(b), b), (fc, c), (fd, d))
    for _ in range(iters):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
            best = min(best, (fd, d))
    return best


def _offset_line(g, normal, theta, y) -> Line:
    return Line(Point(g[0] + y * normal[0], g[1] + y * normal[1]), theta)


def _best_offsets(P, k, m, theta, ys):
    g = P.mean(axis=0)
    normal = (-math.sin(theta), math.cos(theta))
    ax = g[0] + ys * normal[0]
    ay = g[1] + ys * normal[1]
    return _radii_batch(P, k, m, ax, ay, theta)


def _refine_cells(P, k, m, theta, ys, radii, cells: int):
    g = P.mean(axis=0)
    normal = (-math.sin(theta), math.cos(theta))
    best = (float(radii.min()), float(ys[int(np.argmin(radii))]))
    taken = []
    for q in np.argsort(radii, kind="stable"):
        if len(taken) == cells:
            break
        if any(abs(int(q) - u) <= 1 for u in taken):
            continue
        taken.append(int(q))
        a, b = ys[max(q - 1, 0)], ys[min(q + 1, len(ys) - 1)]
        f = lambda y: _line_radius(P, k, m, _offset_line(g, normal, theta, y))
        best = min(best, _golden(f, float(a), float(b), GOLDEN_ITERS))
    return best


def _extent(P, theta):
    off = (P - P.mean(axis=0)) @ np.array([-math.sin(theta), math.cos(theta)])
    return float(off.min()), float(off.max())


def oracle_fixed_orientation(inst: ProblemInstance, theta: float) -> float:
    """Best radius over lines of direction ``theta``, by dense grid and refinement.

    The grid has 10^4 offsets over the extent of the points along the normal,
    padded on each side by the extent itself; the best three grid cells are
    refined by golden-section search.
    """
    _guard(inst.n, FIXED_ORIENTATION_MAX_N, "oracle_fixed_orientation")
    P = _points(inst)
    if len(P) == 0:
        return 0.0
    theta = Line(Point(0.0, 0.0), theta).theta
    y0, y1 = _extent(P, theta)
    pad = (y1 - y0) or 1.0
    ys = np.linspace(y0 - pad, y1 + pad, ORIENTATION_GRID)
    radii = _best_offsets(P, inst.k, inst.metric, theta, ys)
    return _refine_cells(P, inst.k, inst.metric, theta, ys, radii, ORIENTATION_REFINE)[0]


def oracle_free_line(inst: ProblemInstance) -> float:
    """Upper estimate of the free-line optimum by grid search over lines.

    720 angles in [0, pi) times 100 offsets across the points, then nested
    golden-section refinement around the best angle.
    """
    _guard(inst.n, FREE_LINE_MAX_N, "oracle_free_line")
    P = _points(inst)
    if len(P) <= 1:
        return 0.0
    k, m = inst.k, inst.metric
    g = P.mean(axis=0)
    ths = np.pi * np.arange(FREE_ANGLES) / FREE_ANGLES
    nx, ny = -np.sin(ths), np.cos(ths)
    off = (P - g) @ np.stack([nx, ny])
    frac = np.linspace(0.0, 1.0, FREE_OFFSETS)
    ys = off.min(axis=0)[:, None] + frac[None, :] * (off.max(axis=0) - off.min(axis=0))[:, None]
    ax = g[0] + ys * nx[:, None]
    ay = g[1] + ys * ny[:, None]
    th = np.repeat(ths, FREE_OFFSETS)
    radii = _radii_batch(P, k, m, ax.ravel(), ay.ravel(), th)
    q = int(np.argmin(radii))
    best = (float(radii[q]), float(th[q]))

    def at_angle(th):
        y0, y1 = _extent(P, th)
        ys = np.linspace(y0, y1, FREE_INNER_OFFSETS)
        return _refine_cells(P, k, m, th, ys, _best_offsets(P, k, m, th, ys), 1)[0]

    step = math.pi / FREE_ANGLES
    th0 = best[1]
    refined = _golden(at_angle, th0 - step, th0 + step, FREE_ANGLE_ITERS)
    return min(best[0], refined[0])


def oracle_kcenter_1d(xs, k: int) -> float:
    """Exact 1-D k-center radius by dynamic programming over contiguous blocks."""
    xs = sorted(float(x) for x in xs)
    _guard(len(xs), KCENTER_1D_MAX_N, "oracle_kcenter_1d")
    if k < 1:
        raise ValueError("k must be positive")
    n = len(xs)
    if n == 0:
        return 0.0
    # f[c][j]: best radius covering xs[:j] with c blocks
    f = [[math.inf] * (n + 1) for _ in range(k + 1)]
    f[0][0] = 0.0
    for c in range(1, k + 1):
        f[c][0] = 0.0
        for j in range(1, n + 1):
            f[c][j] = min(max(f[c - 1][i], (xs[j - 1] - xs[i]) / 2) for i in range(j))
    return min(f[c][n] for c in range(1, k + 1))
