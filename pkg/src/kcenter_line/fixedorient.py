"""k disks centered on some line of a prescribed direction.

Work in the frame where the direction is horizontal and let the line's height
y vary.  All balls reach the line only for y in [y_s, y_t]; inside that range
the piercing number changes only where two ball boundaries cross, so the
decision evaluates one line per event and one per gap between events.  The
optimum is then bracketed and bisected on r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fixedline import solve_fixed_line, _place
from .geometry import (Line, Metric, Point, ball_boundary_intersections, circle_pairs_batch,
                       dual_norm, line_intervals_batch, spread)
from .model import CoverSolution, ProblemInstance, inflate, pad_centers
from .piercing import piercing_counts
from .search import bisect_threshold

__all__ = ["SweepEvent", "sweep_events", "decide_fixed_orientation", "solve_fixed_orientation"]


@dataclass(frozen=True)
class SweepEvent:
    y: float
    kind: str  # "start" | "end" | "circle_pair"
    ids: tuple[int, ...]


def _basis(theta: float):
    ln = Line(Point(0.0, 0.0), theta)
    return ln.theta, np.array(ln.normal)


def _offsets(P: np.ndarray, normal: np.ndarray, origin: np.ndarray) -> np.ndarray:
    return (P - origin) @ normal


def _range(off: np.ndarray, r: float, normal, m: Metric) -> tuple[float, float]:
    reach = r * dual_norm(normal, m)
    return float(off.max() - reach), float(off.min() + reach)


def _pair_offsets(P: np.ndarray, r: float, normal, origin, m: Metric):
    """Offsets of all boundary crossings, with the generating pair."""
    if m is Metric.L2:
        X, I, J = circle_pairs_batch(P, r)
        return (X - origin) @ normal, I, J
    ys, I, J = [], [], []
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            for q in ball_boundary_intersections(P[i], P[j], r, m):
                ys.append((q[0] - origin[0]) * normal[0] + (q[1] - origin[1]) * normal[1])
                I.append(i)
                J.append(j)
    return np.array(ys, dtype=float), np.array(I, dtype=int), np.array(J, dtype=int)


def sweep_events(inst: ProblemInstance, r: float, theta: float):
    """Sweep range and sorted events for radius ``r`` and direction ``theta``.

    Offsets are measured along the unit normal ``(-sin theta, cos theta)``
    from the origin.  Returns ``(y_s, y_t, events)``.  Only boundary crossings
    are listed; the range ends are returned separately.  The event list is
    empty when ``y_s > y_t``.
    """
    P = inst.unique_array()
    _, normal = _basis(theta)
    origin = np.zeros(2)
    if len(P) == 0:
        return -math.inf, math.inf, []
    off = _offsets(P, normal, origin)
    y_s, y_t = _range(off, r, normal, inst.metric)
    if y_s > y_t:
        return y_s, y_t, []
    ys, I, J = _pair_offsets(P, r, normal, origin, inst.metric)
    tol = 1e-12 * (1 + abs(y_s) + abs(y_t))
    events = []
    seen = []
    for y, i, j in sorted(zip(ys.tolist(), I.tolist(), J.tolist())):
        if y < y_s - tol or y > y_t + tol:
            continue
        if seen and abs(y - seen[-1][0]) <= tol and seen[-1][1] == (i, j):
            continue
        seen.append((y, (i, j)))
        events.append(SweepEvent(min(max(y, y_s), y_t), "circle_pair", (i, j)))
    return y_s, y_t, events


def _representatives(P, r, normal, origin, m, lo_y, hi_y) -> np.ndarray:
    ys, _, _ = _pair_offsets(P, r, normal, origin, m)
    ys = ys[(ys >= lo_y) & (ys <= hi_y)]
    pts = np.unique(np.concatenate([ys, [lo_y, hi_y]]))
    tol = 1e-12 * (1 + np.abs(pts).max())
    pts = pts[np.concatenate([[True], np.diff(pts) > tol])]
    mids = 0.5 * (pts[:-1] + pts[1:])
    return np.sort(np.concatenate([pts, mids]))


def _decide(P: np.ndarray, k: int, m: Metric, r: float, theta: float, scale: float):
    theta, normal = _basis(theta)
    origin = P.mean(axis=0)
    off = _offsets(P, normal, origin)
    r_eff = inflate(r, scale)
    ys_eff, yt_eff = _range(off, r_eff, normal, m)
    if ys_eff > yt_eff:
        return None
    y_s, y_t = _range(off, r, normal, m)
    lo_y = min(max(y_s, ys_eff), yt_eff)
    hi_y = max(min(y_t, yt_eff), lo_y)
    reps = _representatives(P, r, normal, origin, m, lo_y, hi_y)
    anchors = origin[None, :] + reps[:, None] * normal[None, :]
    lo, hi = line_intervals_batch(P, anchors[:, 0], anchors[:, 1], theta, r_eff, m)
    ok = np.flatnonzero(piercing_counts(lo, hi) <= k)
    for q in ok:
        line = Line(Point(*anchors[q]), theta)
        centers = _place(P, line, m, r_eff, k)
        if centers is not None:
            return line, pad_centers(centers, k, line.anchor)
    return None


def decide_fixed_orientation(inst: ProblemInstance, r: float, theta: float):
    """``(line, centers)`` for a direction-``theta`` line at radius r, or None.

    Among feasible lines the one with the smallest offset is returned.
    """
    if r < 0:
        return None
    P = inst.unique_array()
    if len(P) == 0:
        line = Line(Point(0.0, 0.0), theta)
        return line, [line.anchor] * inst.k
    return _decide(P, inst.k, inst.metric, r, theta, spread(P))


def solve_fixed_orientation(inst: ProblemInstance, theta: float, tol: float = 1e-9) -> CoverSolution:
    """Smallest radius for centers on a line of direction ``theta``.

    The radius is bisected until it is feasible and ``r - tol * (1 + r)`` is
    not, then the optimum on the witness line is computed exactly.  Under
    Linf with horizontal lines the middle line between the lowest and highest
    points is optimal and is used directly.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    P = inst.unique_array()
    theta, normal = _basis(theta)
    if len(P) == 0:
        return CoverSolution(0.0, Line(Point(0.0, 0.0), theta), [Point(0.0, 0.0)] * inst.k)
    origin = P.mean(axis=0)
    off = _offsets(P, normal, origin)
    mid_line = Line(Point(*(origin + 0.5 * (off.max() + off.min()) * normal)), theta)
    if len(P) == 1 or (inst.metric is Metric.LINF and theta == 0.0):
        return solve_fixed_line(inst, mid_line)

    scale = spread(P)
    m, k = inst.metric, inst.k
    lower = float(off.max() - off.min()) / (2 * dual_norm(normal, m))
    feasible = lambda r: _decide(P, k, m, r, theta, scale) is not None
    if feasible(lower):
        hi = lower
    else:
        hi = solve_fixed_line(ProblemInstance(P, 1, m), mid_line).radius
        bump = 0
        while not feasible(hi):
            bump += 1
            if bump > 60:
                raise RuntimeError("upper bracket is not feasible")
            hi = hi * (1 + 1e-12 * 4 ** bump) + 1e-300
        _, hi = bisect_threshold(feasible, lower, hi, tol)
    line, _ = _decide(P, k, m, hi, theta, scale)
    return solve_fixed_line(inst, line)
