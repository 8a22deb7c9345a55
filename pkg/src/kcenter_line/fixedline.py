"""k disks with centers on a given line.

For radius r every point contributes the interval of line parameters within
distance r; the disks cover the points iff every interval is nonempty and the
interval system can be pierced by k points.  The optimal radius is the
smallest r where that happens, and it is always one of finitely many
candidates: the largest point-to-line distance, or a radius at which the
endpoint curves of two points cross.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .geometry import (Line, Metric, Point, covering_radius, dual_norm, frame_batch,
                       line_intervals_batch, spread)
from .model import DECISION_SLACK, CoverSolution, ProblemInstance, inflate, pad_centers
from .piercing import assign_to_points, min_piercing, piercing_counts
from .search import smallest_feasible, smallest_feasible_entry

__all__ = [
    "ProblemInstance", "CoverSolution", "decide_fixed_line", "candidate_radii_fixed_line",
    "solve_fixed_line", "solve_fixed_line_l1_linf", "best_line",
]

_GOLDEN = (math.sqrt(5) - 1) / 2


def _recenter(P: np.ndarray, line: Line) -> Line:
    # same line, anchored at the foot of the centroid, keeps parameters small
    if len(P) == 0:
        return line
    return Line(line.project(P.mean(axis=0)), line.theta)


def _intervals(P: np.ndarray, line: Line, r: float, m: Metric):
    lo, hi = line_intervals_batch(P, line.anchor.x, line.anchor.y, line.theta, r, m)
    return lo[0], hi[0]


def _group_center(P: np.ndarray, line: Line, m: Metric, a: float, b: float) -> float:
    """Parameter in [a, b] minimizing the farthest distance to the group ``P``."""
    c, s = line.direction

    def cost(t):
        d = np.abs(P - (line.anchor.x + t * c, line.anchor.y + t * s))
        if m is Metric.L2:
            return float(np.hypot(d[:, 0], d[:, 1]).max())
        if m is Metric.L1:
            return float(d.sum(axis=1).max())
        return float(d.max())

    if m is Metric.L2 and len(P) <= 40:
        # the minimizer is a foot point, an equidistant point of two members,
        # or a window end
        t, o = _frame(P, line)
        i, j = np.triu_indices(len(t), 1)
        dt = t[j] - t[i]
        ok = dt != 0
        x = 0.5 * (t[i] + t[j])[ok] + (o[j] ** 2 - o[i] ** 2)[ok] / (2 * dt[ok])
        cand = np.clip(np.concatenate([t, x, [a, b]]), a, b)
        cost_all = np.hypot(cand[:, None] - t[None, :], o[None, :]).max(axis=1)
        return float(cand[int(np.argmin(cost_all))])

    # golden-section search; the cost is convex in t
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = cost(x1), cost(x2)
    for _ in range(90):
        if b - a <= 1e-15 * (1 + abs(a) + abs(b)):
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = cost(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = cost(x2)
    return x1 if f1 <= f2 else x2


def _place(P: np.ndarray, line: Line, m: Metric, r_eff: float, k: int) -> Optional[list[Point]]:
    """Centers realizing a cover at radius ``r_eff``, or None."""
    lo, hi = _intervals(P, line, r_eff, m)
    if np.any(lo > hi):
        return None
    res = min_piercing(list(zip(lo, hi)))
    if res.count > k:
        return None
    groups = assign_to_points(list(zip(lo, hi)), res.points)
    centers = []
    for g in range(res.count):
        idx = [i for i, gi in enumerate(groups) if gi == g]
        a, b = max(lo[idx]), min(hi[idx])
        centers.append(line.at(_group_center(P[idx], line, m, a, b)))
    return centers


def _count(P, line, m, r_eff) -> int:
    lo, hi = line_intervals_batch(P, line.anchor.x, line.anchor.y, line.theta, r_eff, m)
    return int(piercing_counts(lo, hi)[0])


def decide_fixed_line(inst: ProblemInstance, line: Line, r: float) -> Optional[list[Point]]:
    """k centers on ``line`` whose radius-r balls cover the points, or None."""
    if r < 0:
        return None
    P = inst.unique_array()
    if len(P) == 0:
        return [line.anchor] * inst.k
    work = _recenter(P, line)
    centers = _place(P, work, inst.metric, inflate(r, spread(P)), inst.k)
    if centers is None:
        return None
    return pad_centers(centers, inst.k, line.anchor)


def _finish(inst: ProblemInstance, P: np.ndarray, line: Line, work: Line, r: float) -> CoverSolution:
    centers = _place(P, work, inst.metric, inflate(r, spread(P)), inst.k)
    if centers is None:  # only reachable through rounding at a candidate
        centers = _place(P, work, inst.metric, inflate(r, spread(P)) * (1 + 1e-9), inst.k)
    centers = pad_centers(centers, inst.k, work.anchor)
    return CoverSolution(covering_radius(P, centers, inst.metric), line, centers)


def _frame(P: np.ndarray, line: Line):
    t, o = frame_batch(P, line.anchor.x, line.anchor.y, line.theta)
    return t[0], o[0]


def _dedupe_keep_max(values) -> list[float]:
    vals = sorted(values)
    out: list[float] = []
    for v in vals:
        if out and v - out[-1] <= 1e-9 * max(abs(v), 1e-3):
            out[-1] = v
        else:
            out.append(v)
    return out


def _l2_candidates(t: np.ndarray, d: np.ndarray) -> list[float]:
    ymax = float(d.max())
    i, j = np.triu_indices(len(t), 1)
    dt = t[j] - t[i]
    ok = dt != 0
    i, j, dt = i[ok], j[ok], dt[ok]
    # the line point equidistant from both sites is where all four endpoint
    # curves of the pair can meet
    x = 0.5 * (t[i] + t[j]) + (d[j] ** 2 - d[i] ** 2) / (2 * dt)
    r = np.maximum(np.hypot(x - t[i], d[i]), np.hypot(x - t[j], d[j]))
    return _dedupe_keep_max([ymax] + [float(v) for v in r if v >= ymax])


def _pl_breaks(p, line: Line, m: Metric) -> list[float]:
    c, s = line.direction
    A, B = line.anchor.x - p[0], line.anchor.y - p[1]
    out = []
    if c != 0:
        out.append(-A / c)
    if s != 0:
        out.append(-B / s)
    if m is Metric.LINF:
        if c - s != 0:
            out.append((B - A) / (c - s))
        if c + s != 0:
            out.append((-B - A) / (c + s))
    return out


def _pl_candidates(P: np.ndarray, line: Line, m: Metric) -> list[float]:
    """Crossing radii of the piecewise-linear distance profiles (L1, Linf)."""
    n = len(P)
    f = [lambda t, p=p: _dist_on_line(line, t, p, m) for p in P]
    breaks = [_pl_breaks(p, line, m) for p in P]
    mins = [min(f[i](b) for b in breaks[i]) for i in range(n)]
    ymax = max(mins)
    out = [ymax]
    for i in range(n):
        for j in range(i + 1, n):
            B = sorted(set(breaks[i] + breaks[j]))
            g = [f[i](b) - f[j](b) for b in B]
            for q in range(len(B)):
                if g[q] == 0:
                    out.append(f[i](B[q]))
                if q + 1 < len(B) and g[q] * g[q + 1] < 0:
                    x = B[q] + g[q] / (g[q] - g[q + 1]) * (B[q + 1] - B[q])
                    out.append(max(f[i](x), f[j](x)))
    return _dedupe_keep_max(v for v in out if v >= ymax)


def _dist_on_line(line: Line, t: float, p, m: Metric) -> float:
    c, s = line.direction
    dx = abs(line.anchor.x + t * c - p[0])
    dy = abs(line.anchor.y + t * s - p[1])
    if m is Metric.L2:
        return math.hypot(dx, dy)
    return dx + dy if m is Metric.L1 else max(dx, dy)


def candidate_radii_fixed_line(inst: ProblemInstance, line: Line) -> list[float]:
    """Ascending radii at which the piercing number on ``line`` can change.

    Starts at the largest point-to-line distance; near-duplicates (relative
    1e-9) are merged into their largest member.
    """
    P = inst.unique_array()
    if len(P) == 0:
        return [0.0]
    work = _recenter(P, line)
    if inst.metric is Metric.L2:
        t, o = _frame(P, work)
        return _l2_candidates(t, np.abs(o))
    return _pl_candidates(P, work, inst.metric)


def solve_fixed_line(inst: ProblemInstance, line: Line) -> CoverSolution:
    """Optimal radius and centers for centers restricted to ``line``."""
    if inst.metric is not Metric.L2:
        return solve_fixed_line_l1_linf(inst, line)
    P = inst.unique_array()
    if len(P) == 0:
        return CoverSolution(0.0, line, [line.anchor] * inst.k)
    work = _recenter(P, line)
    scale = spread(P)
    cands = candidate_radii_fixed_line(inst, line)
    idx = smallest_feasible(cands, lambda r: _count(P, work, inst.metric, inflate(r, scale)) <= inst.k)
    return _finish(inst, P, line, work, cands[idx])


def solve_fixed_line_l1_linf(inst: ProblemInstance, line: Line) -> CoverSolution:
    """Fixed-line optimum under L1 or Linf.

    On a horizontal line the interval endpoints are t_i -/+ r shifted by
    constants, so their orders never change: the decision is a linear scan in
    a fixed order, and the candidates ``(alpha_i - beta_j) / 2`` form a matrix
    sorted along rows and columns that is searched without building it.  Other
    lines fall back to enumerating crossings of the piecewise-linear distance
    profiles.
    """
    m = inst.metric
    if m is Metric.L2:
        raise ValueError("solve_fixed_line_l1_linf needs the L1 or Linf metric")
    P = inst.unique_array()
    if len(P) == 0:
        return CoverSolution(0.0, line, [line.anchor] * inst.k)
    work = _recenter(P, line)
    scale = spread(P)
    k = inst.k
    if work.theta != 0.0:
        cands = _pl_candidates(P, work, m)
        idx = smallest_feasible(cands, lambda r: _count(P, work, m, inflate(r, scale)) <= k)
        return _finish(inst, P, line, work, cands[idx])

    t = P[:, 0] - work.anchor.x
    d = np.abs(P[:, 1] - work.anchor.y)
    if m is Metric.L1:
        alpha, beta = t + d, t - d
    else:
        alpha, beta = t.copy(), t.copy()
    ymax = float(d.max())
    by_right = [int(i) for i in np.argsort(beta, kind="stable")]
    alpha_l, beta_l = alpha.tolist(), beta.tolist()

    def feasible(r: float) -> bool:
        r = inflate(r, scale)
        cur, used = -math.inf, 0
        for i in by_right:
            if alpha_l[i] - r > cur:
                used += 1
                if used > k:
                    return False
                cur = beta_l[i] + r
        return True

    if feasible(ymax):
        return _finish(inst, P, line, work, ymax)
    rows = sorted(alpha_l)
    cols = sorted(beta_l, reverse=True)
    n = len(rows)
    best = smallest_feasible_entry(n, n, lambda i, j: max(ymax, 0.5 * (rows[i] - cols[j])), feasible)
    return _finish(inst, P, line, work, best)


# ----------------------------------------------------------- many lines at once

def _batch_feasible(t, o, r_eff: float, k: int) -> np.ndarray:
    gap = r_eff * r_eff - o * o
    ok = gap >= 0
    half = np.sqrt(np.where(ok, gap, 0.0))
    lo = np.where(ok, t - half, np.inf)
    hi = np.where(ok, t + half, -np.inf)
    return piercing_counts(lo, hi) <= k


def best_line(inst: ProblemInstance, lines: list[Line], exact_limit: int = 32):
    """Index of the line with the smallest optimal radius, and its solution.

    Equivalent to running :func:`solve_fixed_line` on every line and taking
    the first minimum, but L2 instances prune lines in bulk: a shared bisection
    keeps only lines still feasible at the current upper bound, and the exact
    solver runs on the few survivors.
    """
    if not lines:
        raise ValueError("no lines given")
    ax = np.array([ln.anchor.x for ln in lines], dtype=float)
    ay = np.array([ln.anchor.y for ln in lines], dtype=float)
    th = np.array([ln.theta for ln in lines], dtype=float)
    return best_line_arrays(inst, ax, ay, th, exact_limit)


def best_line_arrays(inst: ProblemInstance, ax, ay, th, exact_limit: int = 32):
    """:func:`best_line` for lines given as anchor and angle arrays."""
    ax, ay, th = (np.asarray(v, dtype=float).ravel() for v in (ax, ay, th))
    if len(th) == 0:
        raise ValueError("no lines given")
    make = lambda q: Line(Point(float(ax[q]), float(ay[q])), float(th[q]))
    P = inst.unique_array()
    if inst.metric is not Metric.L2 or len(P) == 0 or len(th) <= exact_limit:
        sols = [solve_fixed_line(inst, make(q)) for q in range(len(th))]
        i = min(range(len(sols)), key=lambda q: (sols[q].radius, q))
        return i, sols[i]
    scale = spread(P)
    c0 = P.mean(axis=0)
    Q = P - c0
    t, o = frame_batch(Q, ax - c0[0], ay - c0[1], th)
    # parameters relative to each line's foot of the centroid
    t = t - t.mean(axis=1, keepdims=True)
    lower = np.abs(o).max(axis=1)
    first = int(np.argmin(lower))
    hi = solve_fixed_line(inst, make(first)).radius
    lo = float(lower.min())
    alive = np.flatnonzero(lower <= inflate(hi, scale))
    # alive lines are all feasible at inflate(hi); none is feasible at lo
    for _ in range(200):
        if len(alive) <= exact_limit or hi - lo <= DECISION_SLACK * (hi + scale):
            break
        mid = 0.5 * (lo + hi)
        ok = _batch_feasible(t[alive], o[alive], inflate(mid, scale), inst.k)
        if ok.any():
            alive = alive[ok]
            hi = mid
        else:
            lo = mid
    sols = {int(q): solve_fixed_line(inst, make(q)) for q in alive[:exact_limit]}
    sols.setdefault(first, solve_fixed_line(inst, make(first)))
    i = min(sols, key=lambda q: (sols[q].radius, q))
    return i, sols[i]
