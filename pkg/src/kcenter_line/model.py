"""Problem and solution records shared by the solvers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import Line, Metric, Point, as_points, covering_radius, spread, unique_points

# Decisions at radius r are evaluated at r + DECISION_SLACK * (r + spread) so
# that exact tangencies and endpoint coincidences survive rounding.
DECISION_SLACK = 1e-12


@dataclass
class ProblemInstance:
    points: list
    k: int
    metric: Metric = Metric.L2

    def __post_init__(self):
        self.points = as_points(self.points)
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        self.k = int(self.k)
        self.metric = Metric.parse(self.metric)

    @property
    def n(self) -> int:
        return len(self.points)

    def unique_array(self) -> np.ndarray:
        return np.array(unique_points(self.points), dtype=float).reshape(-1, 2)


@dataclass
class CoverSolution:
    radius: float
    line: Optional[Line]
    centers: list = field(default_factory=list)
    feasible: bool = True

    def covers(self, inst: ProblemInstance, rel: float = 1e-9, abs_tol: float = 1e-12) -> bool:
        """Independent coverage and on-line check of this solution."""
        if not self.feasible or len(self.centers) > inst.k:
            return False
        if inst.n == 0:
            return True
        P = np.asarray(inst.points, dtype=float)
        scale = spread(P) + self.radius
        if self.line is not None:
            for c in self.centers:
                if abs(self.line.offset(c)) > rel * scale + abs_tol:
                    return False
        got = covering_radius(inst.points, self.centers, inst.metric)
        return got <= self.radius * (1 + rel) + rel * scale + abs_tol


def inflate(r: float, scale: float) -> float:
    return r + DECISION_SLACK * (r + scale)


def pad_centers(centers: list[Point], k: int, fallback: Point) -> list[Point]:
    """Extend to exactly k centers by repeating the last one."""
    if not centers:
        return [fallback] * k
    return list(centers) + [centers[-1]] * (k - len(centers))
