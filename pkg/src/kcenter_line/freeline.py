"""k disks centered on an arbitrary line (Euclidean only).

If some line works at radius r, it can be moved until it is pinned by two
constraints, each being tangency to a disk or passage through a point where
two circles cross.  So the decision only has to try three finite families:
bitangents, lines through a crossing tangent to a disk, and lines through two
crossings.  The optimum is found by bisection on r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fixedline import _place, solve_fixed_line
from .geometry import Line, Metric, Point, circle_pairs_batch, line_intervals_batch, spread, width_line
from .model import CoverSolution, ProblemInstance, inflate, pad_centers
from .piercing import piercing_counts
from .search import bisect_threshold

__all__ = ["CandidateLine", "candidate_lines", "decide_free_line", "solve_free_line"]

KINDS = ("bitangent", "intersection_tangent", "double_intersection")
CHUNK = 4096


@dataclass(frozen=True)
class CandidateLine:
    line: Line
    kind: str
    support: tuple[int, ...]


def _require_l2(inst: ProblemInstance):
    if inst.metric is not Metric.L2:
        raise ValueError(f"free-line solver supports only L2, got {inst.metric.value}")


def _bitangents(Q: np.ndarray, r: float):
    I, J = np.triu_indices(len(Q), 1)
    V = Q[J] - Q[I]
    D = np.hypot(V[:, 0], V[:, 1])
    phi = np.arctan2(V[:, 1], V[:, 0])
    nx, ny = -np.sin(phi), np.cos(phi)
    ax, ay, th, sup = [], [], [], []
    for s in (1.0, -1.0):
        ax.append(Q[I, 0] + s * r * nx)
        ay.append(Q[I, 1] + s * r * ny)
        th.append(phi)
        sup.append(np.stack([I, J], axis=1))
    inner = D >= 2 * r
    if inner.any():
        M = 0.5 * (Q[I] + Q[J])[inner]
        alpha = np.arcsin(np.minimum(2 * r / D[inner], 1.0))
        for s in (1.0, -1.0):
            ax.append(M[:, 0])
            ay.append(M[:, 1])
            th.append(phi[inner] + s * alpha)
            sup.append(np.stack([I[inner], J[inner]], axis=1))
    return np.concatenate(ax), np.concatenate(ay), np.concatenate(th), np.concatenate(sup)


def _through_and_tangent(Q, r, X, XI, XJ):
    if len(X) == 0:
        empty = np.zeros(0)
        return empty, empty, empty, np.zeros((0, 3), dtype=int)
    A = np.repeat(np.arange(len(X)), len(Q))
    L = np.tile(np.arange(len(Q)), len(X))
    W = Q[L] - X[A]
    d = np.hypot(W[:, 0], W[:, 1])
    ok = (d >= r) & (d > 0)
    A, L, W, d = A[ok], L[ok], W[ok], d[ok]
    beta = np.arctan2(W[:, 1], W[:, 0])
    alpha = np.arcsin(np.minimum(r / d, 1.0))
    th = np.concatenate([beta + alpha, beta - alpha])
    A2, L2 = np.concatenate([A, A]), np.concatenate([L, L])
    sup = np.stack([XI[A2], XJ[A2], L2], axis=1)
    return X[A2, 0], X[A2, 1], th, sup


def _double_intersections(X, XI, XJ):
    a, b = np.triu_indices(len(X), 1)
    V = X[b] - X[a]
    ok = np.hypot(V[:, 0], V[:, 1]) > 0
    a, b, V = a[ok], b[ok], V[ok]
    th = np.arctan2(V[:, 1], V[:, 0])
    sup = np.stack([XI[a], XJ[a], XI[b], XJ[b]], axis=1)
    return X[a, 0], X[a, 1], th, sup


def _candidate_arrays(Q: np.ndarray, r: float, scale: float):
    """Candidate lines for points ``Q`` (centered near the origin).

    Returns per-kind tuples ``(ax, ay, theta, support)``, deduplicated across
    all kinds keeping the first occurrence in kind order.
    """
    X, XI, XJ = circle_pairs_batch(Q, r)
    parts = [_bitangents(Q, r), _through_and_tangent(Q, r, X, XI, XJ), _double_intersections(X, XI, XJ)]
    th = np.mod(np.concatenate([p[2] for p in parts]), math.pi)
    th[th >= math.pi] = 0.0
    ax = np.concatenate([p[0] for p in parts])
    ay = np.concatenate([p[1] for p in parts])
    c = -ax * np.sin(th) + ay * np.cos(th)
    # lines with angle ~pi and ~0 coincide with the sign of c flipped
    wrap = th > math.pi - 1e-9
    key_th = np.where(wrap, 0.0, th)
    key_c = np.where(wrap, -c, c)
    keys = np.stack([np.round(key_th / 1e-9), np.round(key_c / (1e-9 * (1 + scale)))], axis=1)
    _, first = np.unique(keys, axis=0, return_index=True)
    keep = np.zeros(len(th), dtype=bool)
    keep[first] = True
    out, start = [], 0
    for p in parts:
        sl = slice(start, start + len(p[2]))
        m = keep[sl]
        out.append((ax[sl][m], ay[sl][m], th[sl][m], p[3][m]))
        start += len(p[2])
    return out


def candidate_lines(inst: ProblemInstance, r: float) -> list[CandidateLine]:
    """All extremal candidate lines at radius ``r``, ordered by kind."""
    _require_l2(inst)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    P = inst.unique_array()
    if len(P) < 2:
        return []
    c0 = P.mean(axis=0)
    out = []
    for kind, (ax, ay, th, sup) in zip(KINDS, _candidate_arrays(P - c0, r, spread(P))):
        for x, y, t, s in zip(ax, ay, th, sup):
            out.append(CandidateLine(Line(Point(x + c0[0], y + c0[1]), float(t)), kind,
                                     tuple(int(v) for v in s)))
    return out


def _decide(P: np.ndarray, k: int, r: float, scale: float):
    c0 = P.mean(axis=0)
    Q = P - c0
    r_eff = inflate(r, scale)
    for ax, ay, th, _ in _candidate_arrays(Q, r, scale):
        for s in range(0, len(th), CHUNK):
            lo, hi = line_intervals_batch(Q, ax[s:s + CHUNK], ay[s:s + CHUNK], th[s:s + CHUNK], r_eff)
            for q in np.flatnonzero(piercing_counts(lo, hi) <= k):
                q += s
                line = Line(Point(ax[q] + c0[0], ay[q] + c0[1]), float(th[q]))
                centers = _place(P, line, Metric.L2, r_eff, k)
                if centers is not None:
                    return line, pad_centers(centers, k, line.anchor)
    return None


def decide_free_line(inst: ProblemInstance, r: float):
    """``(line, centers)`` covering the points at radius ``r``, or None."""
    _require_l2(inst)
    if r < 0:
        return None
    P = inst.unique_array()
    if len(P) <= 1:
        anchor = Point(*P[0]) if len(P) else Point(0.0, 0.0)
        return Line(anchor, 0.0), [anchor] * inst.k
    return _decide(P, inst.k, r, spread(P))


def solve_free_line(inst: ProblemInstance, tol: float = 1e-9) -> CoverSolution:
    """Smallest radius for k centers on any line, to relative tolerance ``tol``.

    The bracket is [w/2, r_c] with w the width and r_c the constant-factor
    radius; the witness line at the upper end is then solved exactly.
    """
    from .approx import constant_factor

    _require_l2(inst)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    P = inst.unique_array()
    if len(P) <= 1:
        anchor = Point(*P[0]) if len(P) else Point(0.0, 0.0)
        return CoverSolution(0.0, Line(anchor, 0.0), [anchor] * inst.k)
    w, wline = width_line(P)
    if w == 0.0:
        return solve_fixed_line(inst, wline)
    scale = spread(P)
    feasible = lambda r: _decide(P, inst.k, r, scale) is not None
    lower = 0.5 * w
    if feasible(lower):
        hi = lower
    else:
        hi = constant_factor(inst).solution.radius
        bump = 0
        while not feasible(hi):
            bump += 1
            if bump > 60:
                raise RuntimeError("upper bracket is not feasible")
            hi = hi * (1 + 1e-12 * 4 ** bump)
        _, hi = bisect_threshold(feasible, lower, hi, tol)
    line, _ = _decide(P, inst.k, hi, scale)
    return solve_fixed_line(inst, line)
