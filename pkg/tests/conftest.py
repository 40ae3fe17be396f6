"""Shared test helpers: seeded random point-set generators."""

from itertools import combinations

import pytest

from esgrid.geometry import Point, orientation


def make_general_position(rng, n, coord=10 ** 4, distinct_x=False):
    """A random n-point set in general position (seeded, rejection sampling)."""
    pts = []
    while len(pts) < n:
        p = Point(rng.randrange(coord), rng.randrange(coord))
        if p in pts:
            continue
        if distinct_x and any(q.x == p.x for q in pts):
            continue
        if any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        pts.append(p)
    return pts


@pytest.fixture
def gp_sampler():
    return make_general_position
