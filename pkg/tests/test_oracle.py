import math

import pytest

from kcenter_line import Line, Metric, ProblemInstance
from kcenter_line.geometry import line_distance, width_line
from kcenter_line.oracle import (oracle_fixed_line, oracle_fixed_orientation, oracle_free_line,
                                 oracle_kcenter_1d)

from conftest import UNIT_SQUARE, random_instance, random_line


def test_fixed_line_examples():
    x = Line.horizontal(0.0)
    assert oracle_fixed_line(ProblemInstance([(-1, 1), (1, 1)], 1), x) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert oracle_fixed_line(ProblemInstance([(0, 1)], 1), x) == pytest.approx(1, abs=1e-12)


def test_fixed_orientation_examples():
    assert oracle_fixed_orientation(ProblemInstance([(0, 0), (0, 2)], 1), 0.0) == pytest.approx(1, abs=1e-9)
    assert oracle_fixed_orientation(ProblemInstance([(0, 0), (1, 1), (2, 0)], 1), 0.0) == pytest.approx(1, abs=1e-9)


def test_free_line_examples():
    assert oracle_free_line(ProblemInstance(UNIT_SQUARE, 2)) == pytest.approx(0.5, abs=1e-6)
    assert oracle_free_line(ProblemInstance([(0, 0), (1, 1), (2, 2)], 3)) == pytest.approx(0, abs=1e-9)


def test_kcenter_1d_examples():
    assert oracle_kcenter_1d([0, 10], 1) == 5
    assert oracle_kcenter_1d([0, 10], 2) == 0


def test_size_guards():
    pts = [(i, 0) for i in range(16)]
    with pytest.raises(ValueError):
        oracle_fixed_line(ProblemInstance(pts, 1), Line.horizontal(0))
    with pytest.raises(ValueError):
        oracle_fixed_orientation(ProblemInstance(pts[:11], 1), 0.0)
    with pytest.raises(ValueError):
        oracle_free_line(ProblemInstance(pts[:9], 1))
    with pytest.raises(ValueError):
        oracle_kcenter_1d(range(16), 1)


def test_lower_bounds_and_determinism(rng):
    for _ in range(10):
        metric = rng.choice(list(Metric))
        inst = random_instance(rng, 1, 8, metric=metric)
        line = random_line(rng)
        r = oracle_fixed_line(inst, line)
        assert r >= max(line_distance(p, line, metric) for p in inst.points) - 1e-12
        assert r == oracle_fixed_line(inst, line)
        theta = rng.uniform(0, math.pi)
        r = oracle_fixed_orientation(inst, theta)
        n = (-math.sin(theta), math.cos(theta))
        off = [p[0] * n[0] + p[1] * n[1] for p in inst.points]
        if metric is Metric.L2:
            assert r >= (max(off) - min(off)) / 2 - 1e-12
    inst = random_instance(rng, 3, 5)
    assert oracle_free_line(inst) >= width_line(inst.points)[0] / 2 - 1e-12
