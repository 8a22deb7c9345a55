import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kcenter_line.geometry import (EMPTY, Line, Metric, Point, circle_circle_intersections,
                                   convex_hull, diameter, disk_line_interval, distance,
                                   line_intervals_batch, normalize_angle, width_line)

from conftest import UNIT_SQUARE

coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)


@pytest.mark.parametrize("m, want", [(Metric.L2, 5.0), (Metric.L1, 7.0), (Metric.LINF, 4.0)])
def test_distance_examples(m, want):
    assert distance((0, 0), (3, 4), m) == want


@given(point, point, st.sampled_from(list(Metric)))
def test_distance_symmetric_and_zero(p, q, m):
    assert distance(p, q, m) == distance(q, p, m)
    assert distance(p, p, m) == 0


def test_metric_parse():
    assert Metric.parse("Linf") is Metric.LINF
    assert Metric.parse("l1") is Metric.L1
    with pytest.raises(ValueError):
        Metric.parse("L3")


def test_line_normalizes_angle_and_is_isometric():
    ln = Line(Point(1, 2), math.pi + 0.25)
    assert 0 <= ln.theta < math.pi
    assert math.isclose(ln.theta, 0.25)
    a, b = ln.at(-1.5), ln.at(2.0)
    assert math.isclose(math.dist(a, b), 3.5)
    assert math.isclose(ln.param(b), 2.0)
    assert abs(ln.offset(a)) < 1e-12
    assert normalize_angle(-0.1) == pytest.approx(math.pi - 0.1)


def test_disk_line_interval_examples():
    x = Line.horizontal(0.0)
    assert disk_line_interval((0, 1), 1, x) == (0.0, 0.0)
    lo, hi = disk_line_interval((0, 1), math.sqrt(2), x)
    assert lo == pytest.approx(-1) and hi == pytest.approx(1)
    assert tuple(disk_line_interval((2, 1), 3, x, Metric.L1)) == pytest.approx((0, 4))
    assert disk_line_interval((0, 2), 1, x).empty
    assert EMPTY.empty


@settings(max_examples=300, deadline=None)
@given(point, st.floats(0.01, 50), st.floats(0, math.pi - 1e-9), point, st.sampled_from(list(Metric)))
def test_interval_endpoints_on_ball_boundary(c, r, theta, anchor, m):
    ln = Line(Point(*anchor), theta)
    iv = disk_line_interval(c, r, ln, m)
    d = min(distance(ln.at(t), c, m) for t in np.linspace(ln.param(c) - 3 * r, ln.param(c) + 3 * r, 2001))
    if iv.empty:
        assert d > r - 1e-6 * (1 + r)
        return
    for t in (iv.lo, iv.hi):
        assert distance(ln.at(t), c, m) == pytest.approx(r, rel=1e-7, abs=1e-7)
    assert distance(ln.at(0.5 * (iv.lo + iv.hi)), c, m) <= r * (1 + 1e-9) + 1e-9


def test_batch_intervals_match_scalar():
    rng = random.Random(5)
    P = np.array([(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(9)])
    for m in Metric:
        px = np.array([rng.uniform(-1, 1) for _ in range(20)])
        py = np.array([rng.uniform(-1, 1) for _ in range(20)])
        th = np.array([0.0] * 5 + [math.pi / 2] * 3 + [rng.uniform(0, math.pi) for _ in range(12)])
        lo, hi = line_intervals_batch(P, px, py, th, 2.0, m)
        for q in range(20):
            ln = Line(Point(px[q], py[q]), th[q])
            for i, p in enumerate(P):
                iv = disk_line_interval(p, 2.0, ln, m)
                if iv.empty:
                    assert lo[q, i] > hi[q, i]
                else:
                    assert (lo[q, i], hi[q, i]) == pytest.approx(tuple(iv), abs=1e-9)


def test_circle_intersection_examples():
    assert circle_circle_intersections((0, 0), 1, (2, 0), 1) == [pytest.approx((1, 0))]
    got = sorted(circle_circle_intersections((0, 0), 1, (1, 0), 1), key=lambda p: p[1])
    assert got[0] == pytest.approx((0.5, -math.sqrt(3) / 2))
    assert got[1] == pytest.approx((0.5, math.sqrt(3) / 2))
    assert circle_circle_intersections((0, 0), 1, (4, 0), 1) == []
    assert circle_circle_intersections((1, 1), 2, (1, 1), 2) == []


@settings(max_examples=300, deadline=None)
@given(point, point, st.floats(0.1, 80), st.floats(0.1, 80))
def test_circle_intersections_lie_on_both(c1, c2, r1, r2):
    for p in circle_circle_intersections(c1, r1, c2, r2):
        assert math.dist(p, c1) == pytest.approx(r1, rel=1e-6, abs=1e-6)
        assert math.dist(p, c2) == pytest.approx(r2, rel=1e-6, abs=1e-6)


def test_convex_hull_examples():
    assert sorted(convex_hull(UNIT_SQUARE + [(0.5, 0.5)])) == sorted(UNIT_SQUARE)
    assert sorted(convex_hull([(0, 0), (1, 1), (2, 2)])) == [(0, 0), (2, 2)]
    assert convex_hull([(3, 4)]) == [(3, 4)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-1000, 1000), st.integers(-1000, 1000)), min_size=3, max_size=30))
def test_convex_hull_is_ccw_and_contains_input(pts):
    # integer coordinates keep every orientation test exact
    hull = convex_hull(pts)
    if len(hull) < 3:
        return
    h = len(hull)
    for i in range(h):
        a, b = hull[i], hull[(i + 1) % h]
        assert (b[0] - a[0]) * (hull[(i + 2) % h][1] - a[1]) - (b[1] - a[1]) * (hull[(i + 2) % h][0] - a[0]) > 0
        for p in pts:
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            assert cross >= 0


def test_width_examples():
    w, ln = width_line(UNIT_SQUARE)
    assert w == pytest.approx(1)
    assert ln.theta == 0.0 and ln.anchor.y == pytest.approx(0.5)
    w, ln = width_line([(0, 0), (1, 1), (2, 2)])
    assert w == 0.0 and abs(ln.offset((2, 2))) < 1e-12


def _extent(pts, theta):
    n = (-math.sin(theta), math.cos(theta))
    o = [p[0] * n[0] + p[1] * n[1] for p in pts]
    return max(o) - min(o)


def test_width_triangle_matches_edge_scan():
    pts = [(0, 0), (4, 0), (2, 1)]
    hull = convex_hull(pts)
    want = min(_extent(pts, math.atan2(b[1] - a[1], b[0] - a[0]))
               for a, b in zip(hull, hull[1:] + hull[:1]))
    assert width_line(pts)[0] == pytest.approx(want)


def test_width_line_properties(rng):
    for _ in range(200):
        pts = [(rng.random(), rng.random()) for _ in range(rng.randint(3, 12))]
        w, ln = width_line(pts)
        assert all(abs(ln.offset(p)) <= w / 2 + 1e-9 for p in pts)
        for _ in range(10):
            assert _extent(pts, rng.uniform(0, math.pi)) >= w - 1e-9
        assert diameter(pts)[0] >= w - 1e-12


def test_diameter_examples(rng):
    assert diameter(UNIT_SQUARE)[0] == pytest.approx(math.sqrt(2))
    assert diameter([(1, 1)])[0] == 0
    for _ in range(50):
        pts = [(rng.random(), rng.random()) for _ in range(20)]
        d, a, b = diameter(pts)
        assert d == pytest.approx(max(math.dist(p, q) for p in pts for q in pts), rel=1e-12)
        assert math.dist(a, b) == pytest.approx(d)
