import math
import random
import zlib

import pytest

from kcenter_line import Line, Metric, Point, ProblemInstance

ACCEPTANCE_LINES = []


def record(criterion: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def random_points(rng: random.Random, n: int, grid: bool = None):
    """Uniform points in the unit square, or on a small integer grid (many ties)."""
    if grid is None:
        grid = rng.random() < 0.25
    if grid:
        return [(float(rng.randint(0, 4)), float(rng.randint(0, 4))) for _ in range(n)]
    return [(rng.random(), rng.random()) for _ in range(n)]


def random_instance(rng, n_lo=1, n_hi=8, k_lo=1, k_hi=3, metric=Metric.L2, grid=None):
    n = rng.randint(n_lo, n_hi)
    return ProblemInstance(random_points(rng, n, grid), rng.randint(k_lo, k_hi), metric)


def random_line(rng):
    theta = 0.0 if rng.random() < 0.3 else rng.uniform(0, math.pi)
    return Line(Point(rng.uniform(-0.5, 1.5), rng.uniform(-0.5, 1.5)), theta)


def close(a, b, rel=1e-9, abs_tol=1e-12):
    return abs(a - b) <= rel * max(abs(a), abs(b)) + abs_tol


@pytest.fixture
def rng(request):
    return random.Random(zlib.crc32(request.node.name.encode()))


UNIT_SQUARE = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
