import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kcenter_line.piercing import (assign_to_points, min_piercing, min_piercing_oracle,
                                   piercing_counts)


def random_intervals(rng, n):
    out = []
    for _ in range(n):
        if rng.random() < 0.4:
            a = float(rng.randint(0, 6))
            out.append((a, a + rng.randint(0, 3)))
        else:
            a = rng.uniform(0, 10)
            out.append((a, a + rng.expovariate(0.7)))
    return out


def test_examples():
    res = min_piercing([(0, 1), (0.5, 2), (3, 4)])
    assert res.count == 2 and res.points == [1, 4]
    res = min_piercing([(0, 1)])
    assert res.count == 1 and res.points == [1]
    assert min_piercing([(i, i + 0.5) for i in range(10)]).count == 10
    assert min_piercing([]).count == 0


def test_oracle_examples():
    assert min_piercing_oracle([(0, 1), (2, 3)]) == 2
    assert min_piercing_oracle([(0, 3), (1, 2)]) == 1


def test_closed_endpoints_touch():
    assert min_piercing([(0, 1), (1, 2)]).count == 1
    assert min_piercing([(5, 5), (5, 5)]).count == 1


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        min_piercing([(2, 1)])


def test_matches_oracle(rng):
    for _ in range(300):
        ivs = random_intervals(rng, rng.randint(1, 10))
        assert min_piercing(ivs).count == min_piercing_oracle(ivs)


def test_points_pierce_everything(rng):
    for _ in range(300):
        ivs = random_intervals(rng, rng.randint(1, 15))
        res = min_piercing(ivs)
        assert len(res.points) == res.count
        for lo, hi in ivs:
            assert any(lo <= p <= hi for p in res.points)
        groups = assign_to_points(ivs, res.points)
        for (lo, hi), g in zip(ivs, groups):
            assert lo <= res.points[g] <= hi


def test_widening_never_increases_count(rng):
    for _ in range(300):
        ivs = random_intervals(rng, rng.randint(1, 12))
        base = min_piercing(ivs).count
        i = rng.randrange(len(ivs))
        lo, hi = ivs[i]
        ivs[i] = (lo - rng.random(), hi + rng.random())
        assert min_piercing(ivs).count <= base


def test_vectorized_counts_agree(rng):
    rows = [random_intervals(rng, 7) for _ in range(200)]
    lo = np.array([[a for a, _ in r] for r in rows])
    hi = np.array([[b for _, b in r] for r in rows])
    got = piercing_counts(lo, hi)
    assert list(got) == [min_piercing(r).count for r in rows]
    lo[0, 3], hi[0, 3] = np.inf, -np.inf
    assert piercing_counts(lo, hi)[0] > 10**9


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 20), st.integers(0, 5)), max_size=12))
def test_hypothesis_matches_oracle(pairs):
    ivs = [(a, a + w) for a, w in pairs]
    assert min_piercing(ivs).count == min_piercing_oracle(ivs)
