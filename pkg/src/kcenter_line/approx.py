"""Approximation algorithms: sampled parallel lines, a sqrt(2) constant
factor from the width line, and a (1+eps) scheme for free lines that samples
directions around either the diameter (skinny sets) or the whole circle (fat
sets)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fixedline import best_line_arrays, solve_fixed_line
from .geometry import Line, Metric, Point, diameter, dual_norm, normalize_angle, width_line
from .model import CoverSolution, ProblemInstance, pad_centers
from .search import smallest_feasible_entry

__all__ = ["ApproxReport", "approx_fixed_orientation", "kcenter_1d", "constant_factor",
           "approx_free_line", "orientation_sample_count", "skinny_slopes", "fat_angles",
           "LAMBDA_SKINNY", "LAMBDA_FAT"]

LAMBDA_SKINNY = 1.0 / (3.0 * math.sqrt(2.0))
LAMBDA_FAT = 1.0 / (27.0 * math.sqrt(2.0))
SQRT2 = math.sqrt(2.0)


@dataclass
class ApproxReport:
    solution: CoverSolution
    epsilon: float
    guarantee: float
    branch: str  # sampled_lines | constant_factor | skinny | fat
    samples: int = 1  # offsets, slopes or angles tried, depending on branch
    lines: int = 1  # fixed lines solved in total


def _stretch(theta: float, m: Metric) -> float:
    """How much worse a line shift is than the lower bound allows for, per metric."""
    if m is Metric.L2:
        return 1.0
    n = Line(Point(0.0, 0.0), theta).normal
    own = abs(n[0]) + abs(n[1]) if m is Metric.L1 else max(abs(n[0]), abs(n[1]))
    return own * dual_norm(n, m)


def orientation_sample_count(eps: float, theta: float = 0.0, metric: Metric = Metric.L2) -> int:
    """Number of parallel lines sampled for guarantee ``1 + eps``."""
    return math.ceil(_stretch(theta, Metric.parse(metric)) / (eps / 2.0)) + 1


def _orientation_lines(P: np.ndarray, theta: float, eps: float, m: Metric):
    """Anchors and angle of the sampled parallel lines, as ``(ax, ay, theta)``."""
    theta = normalize_angle(theta)
    nx, ny = -math.sin(theta), math.cos(theta)
    c0 = P.mean(axis=0)
    off = (P - c0) @ np.array([nx, ny])
    y_lo, y_hi = float(off.min()), float(off.max())
    if y_hi - y_lo == 0.0:
        ys = np.array([y_lo])
    else:
        ys = np.linspace(y_lo, y_hi, orientation_sample_count(eps, theta, m))
    return c0[0] + ys * nx, c0[1] + ys * ny, np.full(len(ys), theta)


def approx_fixed_orientation(inst: ProblemInstance, theta: float, eps: float) -> ApproxReport:
    """Best of evenly spaced parallel lines spanning the points; within ``1 + eps``.

    For L2 the spacing is at most eps/2 times the extent h, and the optimum
    is at least h/2.  Under L1 and Linf a shift along the normal costs more and
    the lower bound is weaker, so the line count grows by that ratio.
    """
    if not eps > 0:
        raise ValueError("epsilon must be positive")
    P = inst.unique_array()
    if len(P) == 0:
        line = Line(Point(0.0, 0.0), theta)
        return ApproxReport(CoverSolution(0.0, line, [line.anchor] * inst.k), eps, 1.0, "sampled_lines")
    ax, ay, th = _orientation_lines(P, theta, eps, inst.metric)
    _, sol = best_line_arrays(inst, ax, ay, th)
    guarantee = 1.0 if len(th) == 1 else 1.0 + eps
    return ApproxReport(sol, eps, guarantee, "sampled_lines", len(th), len(th))


def kcenter_1d(xs, k: int) -> tuple[float, list[float]]:
    """Optimal 1-D k-center of sorted values: ``(radius, centers)``.

    At most k centers are returned, one per greedy group.
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    xs = [float(x) for x in xs]
    if not xs:
        raise ValueError("kcenter_1d needs at least one value")
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise ValueError("values must be sorted")
    n = len(xs)

    def groups(r):
        out, start = [], 0
        for i in range(1, n):
            if xs[i] - xs[start] > 2 * r:
                out.append((start, i - 1))
                start = i
        out.append((start, n - 1))
        return out

    feasible = lambda r: r >= 0 and len(groups(r)) <= k
    # entry(a, b) = (xs[b] - xs[n-1-a]) / 2 grows along rows and columns
    r = smallest_feasible_entry(n, n, lambda a, b: 0.5 * (xs[b] - xs[n - 1 - a]), feasible)
    return r, [0.5 * (xs[a] + xs[b]) for a, b in groups(r)]


def constant_factor(inst: ProblemInstance) -> ApproxReport:
    """Cover from the width line: radius r_c with r* <= r_c <= sqrt(2) r*."""
    if inst.metric is not Metric.L2:
        raise ValueError("constant_factor supports only L2")
    P = inst.unique_array()
    if len(P) == 0:
        line = Line(Point(0.0, 0.0), 0.0)
        return ApproxReport(CoverSolution(0.0, line, [line.anchor] * inst.k), 0.0, SQRT2, "constant_factor")
    w, line = width_line(P)
    ts = sorted(line.param(p) for p in P)
    r_w, cs = kcenter_1d(ts, inst.k)
    r_c = w / SQRT2 if r_w <= w / 2 else SQRT2 * r_w
    centers = pad_centers([line.at(t) for t in cs], inst.k, line.anchor)
    return ApproxReport(CoverSolution(r_c, line, centers), 0.0, SQRT2, "constant_factor")


def skinny_slopes(eps: float, rc_scaled: float) -> list[float]:
    """Slopes i * lambda * eps * r_c' with |slope| <= 6 r_c' (r_c' for diameter 1)."""
    step = LAMBDA_SKINNY * eps * rc_scaled
    top = math.floor(6.0 / (LAMBDA_SKINNY * eps))
    return [i * step for i in range(-top, top + 1)]


def fat_angles(eps: float) -> list[float]:
    """Angles i * lambda * eps below pi."""
    step = LAMBDA_FAT * eps
    out, i = [], 0
    while i * step < math.pi:
        out.append(i * step)
        i += 1
    return out


def approx_free_line(inst: ProblemInstance, eps: float) -> ApproxReport:
    """(1 + eps)-approximate k centers on a free line (L2)."""
    if inst.metric is not Metric.L2:
        raise ValueError("approx_free_line supports only L2")
    if not 0 < eps < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    P = inst.unique_array()
    base = constant_factor(inst)
    r_c = base.solution.radius
    if len(P) <= 1 or r_c == 0.0 or width_line(P)[0] == 0.0:
        # collinear input: the spanning line is optimal
        sol = solve_fixed_line(inst, base.solution.line)
        return ApproxReport(sol, eps, 1.0, "constant_factor")
    d, a, b = diameter(P)
    if d >= 3 * r_c:
        branch = "skinny"
        base_angle = math.atan2(b[1] - a[1], b[0] - a[0])
        thetas = [base_angle + math.atan(m) for m in skinny_slopes(eps, r_c / d)]
    else:
        branch = "fat"
        thetas = fat_angles(eps)
    parts = [_orientation_lines(P, th, eps / 3.0, Metric.L2) for th in thetas]
    ax, ay, th = (np.concatenate([p[q] for p in parts]) for q in range(3))
    _, sol = best_line_arrays(inst, ax, ay, th)
    return ApproxReport(sol, eps, 1.0 + eps, branch, len(thetas), len(th))
