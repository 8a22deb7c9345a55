"""Minimum piercing of closed intervals.

The greedy rule (stab at the smallest right endpoint, discard everything that
contains it, repeat) is optimal; it is the decision kernel of every solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .geometry import Interval

ORACLE_LIMIT = 20


@dataclass
class PiercingResult:
    count: int
    points: list[float] = field(default_factory=list)


def min_piercing(intervals: Sequence[Sequence[float]]) -> PiercingResult:
    """Greedy minimum piercing set; endpoints pierce (closed intervals)."""
    ivs = [Interval(float(a), float(b)) for a, b in intervals]
    for iv in ivs:
        if iv.empty:
            raise ValueError(f"cannot pierce empty interval {iv}")
    order = sorted(range(len(ivs)), key=lambda i: (ivs[i].hi, i))
    points: list[float] = []
    for i in order:
        if not points or ivs[i].lo > points[-1]:
            points.append(ivs[i].hi)
    return PiercingResult(len(points), points)


def assign_to_points(intervals, points: Sequence[float]) -> list[int]:
    """Index of the first piercing point inside each interval (-1 if none)."""
    out = []
    for a, b in intervals:
        out.append(next((g for g, p in enumerate(points) if a <= p <= b), -1))
    return out


UNPIERCEABLE = np.iinfo(np.int64).max


def piercing_counts(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Row-wise greedy piercing numbers for stacked interval systems.

    ``lo`` and ``hi`` have shape (L, n).  Rows holding an empty interval
    (``lo > hi``) get the count ``UNPIERCEABLE``, which no k accepts.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    L, n = lo.shape
    if n == 0:
        return np.zeros(L, dtype=int)
    order = np.argsort(hi, axis=1, kind="stable")
    lo_s = np.take_along_axis(lo, order, axis=1)
    hi_s = np.take_along_axis(hi, order, axis=1)
    cur = np.full(L, -np.inf)
    count = np.zeros(L, dtype=int)
    for j in range(n):
        fresh = lo_s[:, j] > cur
        count += fresh
        cur = np.where(fresh, hi_s[:, j], cur)
    bad = (lo > hi).any(axis=1)
    count[bad] = UNPIERCEABLE
    return count


def min_piercing_oracle(intervals: Sequence[Sequence[float]]) -> int:
    """Exact piercing number by exhaustive search over right-endpoint subsets.

    Some optimal piercing set uses only right endpoints (push every point right
    until it hits one), so subsets of those are enough.
    """
    ivs = [(float(a), float(b)) for a, b in intervals]
    if len(ivs) > ORACLE_LIMIT:
        raise ValueError(f"oracle limited to {ORACLE_LIMIT} intervals")
    if any(a > b for a, b in ivs):
        raise ValueError("cannot pierce an empty interval")
    if not ivs:
        return 0
    full = (1 << len(ivs)) - 1
    masks = sorted({sum(1 << i for i, (a, b) in enumerate(ivs) if a <= p <= b)
                    for _, p in ivs})
    for size in range(1, len(masks) + 1):
        for combo in combinations(masks, size):
            acc = 0
            for mk in combo:
                acc |= mk
            if acc == full:
                return size
    raise AssertionError("right endpoints always pierce everything")
