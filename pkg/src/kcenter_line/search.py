"""Searching a monotone feasibility predicate over radii."""
from __future__ import annotations

import math
from bisect import bisect_left
from typing import Callable, Sequence


def smallest_feasible(values: Sequence[float], feasible: Callable[[float], bool]):
    """Index of the first value with ``feasible`` true (values ascending, predicate monotone)."""
    idx = bisect_left(range(len(values)), True, key=lambda i: feasible(values[i]))
    return idx if idx < len(values) else None


def bisect_threshold(feasible: Callable[[float], bool], lo: float, hi: float,
                     tol: float) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` around the feasibility threshold.

    Requires ``feasible(hi)``; ``lo`` is assumed infeasible.  Stops once
    ``hi - lo <= tol * (1 + lo) / 2``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    while hi - lo > 0.5 * tol * (1.0 + abs(lo)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def _column_ranges(rows: int, cols: int, entry, bound: float, strict: bool = False) -> list[int]:
    """For each row, the number of leading entries ``<= bound`` (``< bound`` if strict)."""
    out = []
    j = cols
    for i in range(rows):
        while j > 0 and (entry(i, j - 1) >= bound if strict else entry(i, j - 1) > bound):
            j -= 1
        out.append(j)
    return out


def count_at_most(rows: int, cols: int, entry, bound: float) -> int:
    """Entries ``<= bound`` of a matrix sorted along rows and columns, O(rows + cols)."""
    return sum(_column_ranges(rows, cols, entry, bound))


def _weighted_median(pairs: list[tuple[float, int]]) -> float:
    pairs.sort()
    half = sum(w for _, w in pairs) / 2.0
    acc = 0
    for v, w in pairs:
        acc += w
        if acc >= half:
            return v
    return pairs[-1][0]


def smallest_feasible_entry(rows: int, cols: int, entry: Callable[[int, int], float],
                            feasible: Callable[[float], bool]):
    """Smallest matrix entry accepted by a monotone predicate.

    ``entry(i, j)`` must be nondecreasing in both ``i`` and ``j``.  The matrix
    is never materialized: each round counts the live entries per row with a
    staircase walk, probes the weighted median of the row middles (which
    discards at least a quarter of the live entries) and finishes by sorting
    once at most ``rows + cols`` entries remain.  Returns ``None`` when no
    entry is feasible.
    """
    # invariant: lo is infeasible (or -inf), hi feasible (or +inf); the live
    # entries are those in (lo, hi), and hi is the answer if none is feasible
    lo, hi = -math.inf, math.inf
    while True:
        left = [0] * rows if lo == -math.inf else _column_ranges(rows, cols, entry, lo)
        right = [cols] * rows if hi == math.inf else _column_ranges(rows, cols, entry, hi, strict=True)
        live = [(i, left[i], right[i]) for i in range(rows) if right[i] > left[i]]
        total = sum(b - a for _, a, b in live)
        if total == 0:
            return None if hi == math.inf else hi
        if total <= rows + cols:
            vals = sorted({entry(i, j) for i, a, b in live for j in range(a, b)})
            idx = smallest_feasible(vals, feasible)
            if idx is not None:
                return vals[idx]
            return None if hi == math.inf else hi
        pivot = _weighted_median([(entry(i, (a + b) // 2), b - a) for i, a, b in live])
        if feasible(pivot):
            hi = pivot
        else:
            lo = pivot
