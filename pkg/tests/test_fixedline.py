import math

import numpy as np
import pytest

from kcenter_line import Line, Metric, Point, ProblemInstance
from kcenter_line.fixedline import (best_line, candidate_radii_fixed_line, decide_fixed_line,
                                    solve_fixed_line, solve_fixed_line_l1_linf)
from kcenter_line.geometry import line_distance
from kcenter_line.oracle import oracle_fixed_line

from conftest import random_instance, random_line

X_AXIS = Line.horizontal(0.0)


def test_decide_examples():
    inst = ProblemInstance([(0, 1), (10, 1)], 1)
    assert decide_fixed_line(inst, X_AXIS, 1.0) is None
    assert decide_fixed_line(inst, X_AXIS, math.sqrt(26)) == [pytest.approx((5, 0))]
    got = decide_fixed_line(ProblemInstance([(0, 1), (0, -1)], 1), X_AXIS, 1.0)
    assert got == [pytest.approx((0, 0))]


def test_candidate_examples():
    cands = candidate_radii_fixed_line(ProblemInstance([(0, 1), (2, 1)], 1), X_AXIS)
    assert any(abs(c - 1) < 1e-12 for c in cands)
    assert any(abs(c - math.sqrt(2)) < 1e-12 for c in cands)
    assert candidate_radii_fixed_line(ProblemInstance([(0, 1)], 1), X_AXIS) == [1.0]


def test_solve_examples():
    sol = solve_fixed_line(ProblemInstance([(-1, 1), (1, 1)], 1), X_AXIS)
    assert sol.radius == pytest.approx(math.sqrt(2))
    assert sol.centers == [pytest.approx((0, 0))]
    sol = solve_fixed_line(ProblemInstance([(-1, 1), (1, 1)], 2), X_AXIS)
    assert sol.radius == pytest.approx(1)
    assert sorted(sol.centers) == [pytest.approx((-1, 0)), pytest.approx((1, 0))]


@pytest.mark.parametrize("m, want", [(Metric.L1, 3.0), (Metric.LINF, 2.0)])
def test_l1_linf_examples(m, want):
    sol = solve_fixed_line_l1_linf(ProblemInstance([(0, 1), (4, 1)], 1, m), X_AXIS)
    assert sol.radius == pytest.approx(want)
    assert sol.centers == [pytest.approx((2, 0))]


def test_l1_linf_rejects_l2():
    with pytest.raises(ValueError):
        solve_fixed_line_l1_linf(ProblemInstance([(0, 1)], 1), X_AXIS)


def test_degenerate_inputs():
    assert solve_fixed_line(ProblemInstance([], 2), X_AXIS).radius == 0
    sol = solve_fixed_line(ProblemInstance([(3, 0), (3, 0)], 2), X_AXIS)
    assert sol.radius == 0 and sol.centers == [(3, 0), (3, 0)]
    sol = solve_fixed_line(ProblemInstance([(3, 2)], 1), X_AXIS)
    assert sol.radius == 2 and sol.centers == [(3, 0)]


def test_instance_validation():
    with pytest.raises(ValueError):
        ProblemInstance([(0, 0)], 0)
    with pytest.raises(ValueError):
        ProblemInstance([(0, 0)], True)
    with pytest.raises(ValueError):
        ProblemInstance([(0, math.nan)], 1)


def test_candidates_contain_optimum(rng):
    for _ in range(60):
        inst = random_instance(rng, 1, 8)
        line = random_line(rng)
        r = solve_fixed_line(inst, line).radius
        cands = candidate_radii_fixed_line(inst, line)
        assert min(abs(c - r) for c in cands) <= 1e-9 * (1 + r)


@pytest.mark.parametrize("metric", list(Metric))
def test_solution_properties(rng, metric):
    for _ in range(150):
        inst = random_instance(rng, 1, 12, 1, 4, metric)
        line = random_line(rng)
        sol = solve_fixed_line(inst, line)
        assert len(sol.centers) == inst.k
        assert sol.covers(inst)
        y_max = max(line_distance(p, line, metric) for p in inst.points)
        assert sol.radius >= y_max - 1e-9
        # nothing feasible noticeably below the optimum
        assert decide_fixed_line(inst, line, sol.radius - 1e-6 * (1 + sol.radius)) is None
        assert decide_fixed_line(inst, line, sol.radius) is not None


@pytest.mark.parametrize("metric", list(Metric))
def test_matches_oracle(rng, metric):
    for _ in range(60):
        inst = random_instance(rng, 1, 10, 1, 4, metric)
        line = random_line(rng)
        assert solve_fixed_line(inst, line).radius == pytest.approx(
            oracle_fixed_line(inst, line), abs=1e-7)


@pytest.mark.parametrize("metric", list(Metric))
def test_decision_monotone(rng, metric):
    for _ in range(200):
        inst = random_instance(rng, 1, 8, 1, 3, metric)
        line = random_line(rng)
        r1, r2 = sorted(rng.uniform(0, 2) for _ in range(2))
        if decide_fixed_line(inst, line, r1) is not None:
            assert decide_fixed_line(inst, line, r2) is not None


@pytest.mark.parametrize("metric", list(Metric))
def test_k_at_least_n_gives_y_max(rng, metric):
    for _ in range(50):
        inst = random_instance(rng, 1, 8, 8, 9, metric)
        line = random_line(rng)
        y_max = max(line_distance(p, line, metric) for p in inst.points)
        assert solve_fixed_line(inst, line).radius == pytest.approx(y_max, rel=1e-9, abs=1e-12)


def test_best_line_matches_exhaustive(rng):
    for _ in range(15):
        inst = random_instance(rng, 2, 8)
        th = rng.uniform(0, math.pi)
        lines = [Line(Point(0.5 + y * -math.sin(th), 0.5 + y * math.cos(th)), th)
                 for y in np.linspace(-0.6, 0.6, 80)]
        i, sol = best_line(inst, lines)
        radii = [solve_fixed_line(inst, ln).radius for ln in lines]
        assert sol.radius == pytest.approx(min(radii), rel=1e-12, abs=1e-12)
