"""k congruent balls with collinear centers covering a planar point set.

Solvers for a fixed line, a fixed line direction and a free line, plus
approximation schemes and brute-force oracles for checking them.
"""
from .approx import ApproxReport, approx_fixed_orientation, approx_free_line, constant_factor, kcenter_1d
from .fixedline import (candidate_radii_fixed_line, decide_fixed_line, solve_fixed_line,
                        solve_fixed_line_l1_linf)
from .fixedorient import SweepEvent, decide_fixed_orientation, solve_fixed_orientation, sweep_events
from .freeline import CandidateLine, candidate_lines, decide_free_line, solve_free_line
from .geometry import Interval, Line, Metric, Point
from .model import CoverSolution, ProblemInstance
from .piercing import PiercingResult, min_piercing

__version__ = "0.1.0"

__all__ = [
    "ApproxReport", "CandidateLine", "CoverSolution", "Interval", "Line", "Metric",
    "PiercingResult", "Point", "ProblemInstance", "SweepEvent",
    "approx_fixed_orientation", "approx_free_line", "candidate_lines", "candidate_radii_fixed_line",
    "constant_factor", "decide_fixed_line", "decide_fixed_orientation", "decide_free_line",
    "kcenter_1d", "min_piercing", "solve_fixed_line", "solve_fixed_line_l1_linf",
    "solve_fixed_orientation", "solve_free_line", "sweep_events",
]
