"""Generators for the extremal point configurations.

Two families are produced, each in a provable baseline variant and a
grid-optimized variant:

* ``build_pr`` / ``build_skl_baseline``: the recursive doubling set and the
  cup/cap-free sets it contains, with closed-form shift values.
* ``build_skl_optimized``: precomputed minimal-grid realizations (frozen in
  ``_tables``, produced by the seeded search in ``tools/refine.py``) for small
  parameters, falling back to the same recursion with sqrt(3)-scaled
  horizontal shifts (computed exactly in Z[sqrt(3)]) and a vertical shift
  found by exact side-of-line conditions plus verifier retry.
* ``build_es_baseline`` / ``build_es_optimized``: the composed sets of
  2^(t-2) points with no convex t-gon, assembled from cup/cap-free blocks
  placed along a descending staircase (precomputed compact offsets for the
  tabulated sizes).
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from ._tables import ES_BLOCK_OFFSETS, SKL_REALIZATIONS
from .errors import ConstructionFailed
from .geometry import (ABOVE, BELOW, Line, Point, QUAD_ONE_PLUS_SQRT3,
                       QUAD_TWO_PLUS_SQRT3, QuadValue, point_side, quad_ceil,
                       quad_floor)
from .pointset import ConstructionParams, Kind, PointSet, normalize


class LevelGeometry(NamedTuple):
    r: int
    delta: int          # horizontal shift applied at this level
    delta_prime: int    # vertical shift applied at this level
    x_extent: int       # largest x-coordinate after this level
    y_extent: int       # largest y-coordinate after this level


def level_geometry(r: int) -> LevelGeometry:
    """Closed-form shifts and extents of the doubling recursion at level r."""
    if r < 0:
        raise ValueError("level index must be non-negative")
    if r == 0:
        return LevelGeometry(0, 0, 0, 0, 0)
    p = 4 ** (r - 1)
    return LevelGeometry(r, 3 * p, (3 * r + 1) * p, 4 ** r - 1, r * 4 ** r)


def _translate(pts, dx: int, dy: int):
    return [Point(p.x + dx, p.y + dy) for p in pts]


def build_pr(r: int) -> PointSet:
    """The 2^r-point doubling set: each level stacks a translated copy of the
    previous level high above and to the right of it."""
    if r < 0:
        raise ValueError("level index must be non-negative")
    pts: List[Point] = [Point(0, 0)]
    for s in range(1, r + 1):
        g = level_geometry(s)
        pts = pts + _translate(pts, g.delta, g.delta_prime)
    return PointSet(tuple(pts), params=ConstructionParams(Kind.PR, r=r))


@functools.lru_cache(maxsize=None)
def _skl_baseline_points(k: int, l: int) -> Tuple[Point, ...]:
    if k <= 2 or l <= 2:
        return (Point(0, 0),)
    g = level_geometry(k + l - 1)
    left = _skl_baseline_points(k - 1, l)
    right = _skl_baseline_points(k, l - 1)
    return left + tuple(_translate(right, g.delta, g.delta_prime))


def build_skl_baseline(k: int, l: int) -> PointSet:
    """Cup/cap-free set with C(k+l-4, k-2) points, shifts borrowed from the
    doubling set at level k+l-1 (so it is literally a subset of it)."""
    if k < 2 or l < 2:
        raise ValueError("k and l must be at least 2")
    return PointSet(_skl_baseline_points(k, l),
                    params=ConstructionParams(Kind.SKL_BASELINE, k=k, l=l))


def optimized_x_extents(r_max: int) -> List[int]:
    """Optimized horizontal extents ceil((2+sqrt(3))^r) for r = 0..r_max."""
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    out = []
    power = QuadValue(1, 0)
    for _ in range(r_max + 1):
        out.append(quad_ceil(power))
        power = power * QUAD_TWO_PLUS_SQRT3
    return out


def _ceil_half(v: QuadValue) -> int:
    """ceil((a + b*sqrt(3)) / 2), exactly."""
    if v.b == 0:
        return -((-v.a) // 2)
    # v is irrational, so ceil(v/2) = floor(v/2) + 1 = floor(v)//2 + 1
    return quad_floor(v) // 2 + 1


def _strict_floor(f: Fraction) -> int:
    """Largest integer strictly less than f."""
    n, d = f.numerator, f.denominator
    return (n - 1) // d


def _rightmost(pts) -> Point:
    return max(pts, key=lambda p: (p.x, p.y))


def _x_sorted_y_increasing(pts) -> bool:
    # distinct x, nondecreasing y: every slope within the set is >= 0, which
    # the composed-set assembly relies on (cross-block slopes are negative)
    ordered = sorted(pts)
    return all(a.x < b.x and a.y <= b.y for a, b in zip(ordered, ordered[1:]))


def _skl_optimized_valid(pts, k: int, l: int) -> bool:
    # final arbiter for the vertical-shift search: exact verifier suite
    from . import verify

    if not _x_sorted_y_increasing(pts):
        return False
    s = PointSet(tuple(pts))
    if not verify.check_general_position(s)[0]:
        return False
    if verify.max_cup(s)[0] > k - 1:
        return False
    if verify.max_cap(s)[0] > l - 1:
        return False
    return True


@functools.lru_cache(maxsize=None)
def _skl_optimized(k: int, l: int, last_unit_sep: bool) \
        -> Tuple[Tuple[Point, ...], Optional[Line]]:
    """Returns (points, split line between the two halves)."""
    if k <= 2 or l <= 2:
        return (Point(0, 0),), None
    if (k, l) in SKL_REALIZATIONS:
        # precomputed minimal realization; it has no recursive split, so no
        # split line is available (parents fall back to the verifier search)
        return tuple(Point(x, y) for x, y in SKL_REALIZATIONS[k, l]), None

    left, ell_left = _skl_optimized(k - 1, l, False)
    right, ell_right = _skl_optimized(k, l - 1, False)
    width_left = max(p.x for p in left)
    width_right = max(p.x for p in right)

    if last_unit_sep:
        delta = width_left + 1
    else:
        span = width_left + width_right
        delta = max(1, _ceil_half(QUAD_ONE_PLUS_SQRT3 * QuadValue(span, 0)))
    assert delta > width_left

    # smallest positive vertical shift putting the translated right half
    # strictly above the left half's split line and the left half's origin
    # strictly below the translated right split line
    dprime = 1
    rm = _rightmost(right)
    if ell_left is not None:
        p, q = ell_left.p, ell_left.q
        bound = Fraction(q.y - p.y, q.x - p.x) * (delta + rm.x - p.x) + p.y - rm.y
        dprime = max(dprime, _strict_floor(bound) + 1)
    if ell_right is not None:
        p, q = ell_right.p, ell_right.q
        bound = Fraction(q.y - p.y, q.x - p.x) * (-p.x - delta) - p.y
        dprime = max(dprime, _strict_floor(bound) + 1)

    limit = level_geometry(k + l - 1).delta_prime
    while True:
        pts = list(left) + _translate(right, delta, dprime)
        translated_ell_right = None if ell_right is None \
            else ell_right.translate(delta, dprime)
        sides_ok = True
        if ell_left is not None:
            sides_ok &= point_side(Point(delta + rm.x, dprime + rm.y),
                                   ell_left) == ABOVE
        if translated_ell_right is not None:
            sides_ok &= point_side(Point(0, 0), translated_ell_right) == BELOW
        if sides_ok and _skl_optimized_valid(pts, k, l):
            break
        dprime += 1
        if dprime > limit:
            raise ConstructionFailed(
                f"no valid vertical shift for ({k},{l}) up to {limit}")

    ell = Line(_rightmost(left), Point(delta, dprime))
    return tuple(pts), ell


def build_skl_optimized(k: int, l: int,
                        last_step_unit_separation: bool = True) -> PointSet:
    """Cup/cap-free set on a far smaller grid than the baseline variant."""
    if k < 2 or l < 2:
        raise ValueError("k and l must be at least 2")
    pts, _ = _skl_optimized(k, l, last_step_unit_separation)
    params = ConstructionParams(
        Kind.SKL_OPTIMIZED, k=k, l=l,
        last_step_unit_separation=last_step_unit_separation)
    return PointSet(pts, params=params)


def _staircase_vectors(t: int) -> List[Tuple[int, int]]:
    """Displacements between consecutive block anchors of the baseline
    composed set: slope -i/(t-i), strictly decreasing."""
    return [(3 * (t - i), -3 * i) for i in range(1, t - 1)]


def build_es_baseline(t: int) -> PointSet:
    """2^(t-2) points in general position where every convex polygon has at
    most t-1 vertices; blocks are placed in scaled unit squares along a
    descending staircase so cross-block triples always turn right."""
    if t < 2:
        raise ValueError("t must be at least 2")
    scale = (t + 1) * 4 ** (t + 1)
    pts: List[Point] = []
    spans = []
    wx = wy = 0
    vectors = _staircase_vectors(t)
    for i in range(t - 1):
        block = _skl_baseline_points(t - i, i + 2)
        start = len(pts)
        pts.extend(_translate(block, scale * wx, scale * wy))
        spans.append((start, len(pts), f"S({t - i},{i + 2})"))
        if i < t - 2:
            wx += vectors[i][0]
            wy += vectors[i][1]
    s = PointSet(tuple(pts), params=ConstructionParams(Kind.ES_BASELINE, t=t),
                 component_spans=tuple(spans))
    return normalize(s)


def _staircase_offsets(dims: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Generic descending-staircase offsets for block bounding boxes.

    Gaps exceed every block width and drops grow geometrically past every
    block height, so cross-block slopes are negative and strictly steepen;
    the small index-dependent jitter avoids aligned (collinear) anchors.
    """
    max_w = max(w for w, _ in dims)
    max_h = max(h for _, h in dims)
    offsets: List[Tuple[int, int]] = []
    x, y = 0, 0
    drop = 4 * max_h + 20
    for i, (w, _) in enumerate(dims):
        offsets.append((x, y))
        x += w + max_w + 40 + 3 * i
        y -= drop + 7 * i + 1
        drop *= 3
    return offsets


def _es_assembly_valid(pts, t: int) -> bool:
    from . import verify

    s = PointSet(tuple(pts))
    if not verify.check_general_position(s)[0]:
        return False
    return verify.max_convex_subset(s)[0] <= t - 1


def build_es_optimized(t: int,
                       last_step_unit_separation: bool = True) -> PointSet:
    """Optimized composed set: blocks on their smallest known grids, packed
    with precomputed compact offsets (generic staircase offsets beyond the
    tabulated sizes); the exact verifier certifies the result."""
    if t < 2:
        raise ValueError("t must be at least 2")
    blocks = []
    for i in range(t - 1):
        block_pts, _ = _skl_optimized(t - i, i + 2, last_step_unit_separation)
        blocks.append(block_pts)
    if t in ES_BLOCK_OFFSETS:
        offsets = list(ES_BLOCK_OFFSETS[t])
    else:
        dims = [(max(p.x for p in b), max(p.y for p in b)) for b in blocks]
        offsets = _staircase_offsets(dims)
    pts: List[Point] = []
    spans = []
    for i, block in enumerate(blocks):
        start = len(pts)
        pts.extend(_translate(block, offsets[i][0], offsets[i][1]))
        spans.append((start, len(pts), f"S({t - i},{i + 2})"))
    if len(pts) > 2 and not _es_assembly_valid(pts, t):
        raise ConstructionFailed(
            f"assembled set for t={t} failed verification")
    params = ConstructionParams(
        Kind.ES_OPTIMIZED, t=t,
        last_step_unit_separation=last_step_unit_separation)
    return normalize(PointSet(tuple(pts), params=params,
                              component_spans=tuple(spans)))
