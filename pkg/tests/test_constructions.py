"""Construction builders: doubling sets, cup/cap-free sets, composed sets."""

import math

import pytest

from esgrid import (bounding_box, build_es_baseline, build_es_optimized,
                    build_pr, build_skl_baseline, build_skl_optimized,
                    check_general_position, level_geometry, max_cap,
                    max_convex_subset, max_cup, optimized_x_extents)
from esgrid.geometry import Point
from esgrid.pointset import Kind


# ------------------------------------------------------------- doubling sets

def test_level_geometry_closed_forms():
    assert level_geometry(0) == (0, 0, 0, 0, 0)
    assert level_geometry(1) == (1, 3, 4, 3, 4)
    assert level_geometry(2) == (2, 12, 28, 15, 32)
    assert level_geometry(3) == (3, 48, 160, 63, 192)
    with pytest.raises(ValueError):
        level_geometry(-1)


def test_level_geometry_extents_accumulate_shifts():
    for r in range(1, 12):
        g, prev = level_geometry(r), level_geometry(r - 1)
        assert g.x_extent == prev.x_extent + g.delta
        assert g.y_extent == prev.y_extent + g.delta_prime


def test_build_pr_small_examples():
    assert build_pr(0).points == (Point(0, 0),)
    assert build_pr(1).points == (Point(0, 0), Point(3, 4))
    assert set(build_pr(2).points) == {Point(0, 0), Point(3, 4),
                                       Point(12, 28), Point(15, 32)}


def test_build_pr_counts_and_extents():
    for r in range(11):
        s = build_pr(r)
        assert len(s) == 2 ** r
        assert bounding_box(s) == (4 ** r - 1, r * 4 ** r)
        assert s.params.kind is Kind.PR and s.params.r == r


def test_build_pr_general_position():
    for r in range(2, 7):
        assert check_general_position(build_pr(r))[0]


def test_build_pr_is_previous_level_plus_shifted_copy():
    for r in range(1, 8):
        prev = build_pr(r - 1).points
        g = level_geometry(r)
        want = prev + tuple(Point(p.x + g.delta, p.y + g.delta_prime)
                            for p in prev)
        assert build_pr(r).points == want


def test_build_pr_rejects_negative_level():
    with pytest.raises(ValueError):
        build_pr(-1)


# --------------------------------------------------- cup/cap-free (baseline)

def test_skl_baseline_counts():
    for k in range(2, 11):
        for l in range(2, 11):
            if k + l > 12:
                continue
            s = build_skl_baseline(k, l)
            assert len(s) == math.comb(k + l - 4, k - 2)


def test_skl_baseline_degenerate_and_first_split():
    assert build_skl_baseline(2, 9).points == (Point(0, 0),)
    assert build_skl_baseline(9, 2).points == (Point(0, 0),)
    assert build_skl_baseline(3, 3).points == (Point(0, 0), Point(768, 4096))


def test_skl_baseline_embeds_in_doubling_set():
    # the shifts are borrowed from the doubling recursion, so each set is a
    # literal coordinate subset of the level-(k+l-1) doubling set
    for k in range(3, 8):
        for l in range(3, 8):
            if k + l > 10:
                continue
            big = set(build_pr(k + l - 1).points)
            assert set(build_skl_baseline(k, l).points) <= big


def test_skl_baseline_cup_cap_free():
    for k in range(2, 9):
        for l in range(2, 9):
            if k + l > 10:
                continue
            s = build_skl_baseline(k, l)
            assert check_general_position(s)[0]
            assert max_cup(s)[0] <= k - 1
            assert max_cap(s)[0] <= l - 1


def test_skl_baseline_rejects_small_parameters():
    with pytest.raises(ValueError):
        build_skl_baseline(1, 5)
    with pytest.raises(ValueError):
        build_skl_baseline(4, 1)


# -------------------------------------------------- cup/cap-free (optimized)

def test_optimized_x_extents_lucas_recurrence():
    # ceil((2+sqrt3)^r) equals the Lucas-type sequence 4L(r-1) - L(r-2)
    # (the recurrence needs both trace terms, so it starts at r = 3)
    ext = optimized_x_extents(20)
    assert ext[0] == 1 and ext[1] == 4 and ext[2] == 14
    for r in range(3, 21):
        assert ext[r] == 4 * ext[r - 1] - ext[r - 2]
    assert ext[:5] == [1, 4, 14, 52, 194]
    with pytest.raises(ValueError):
        optimized_x_extents(-1)


def test_skl_optimized_counts_and_freeness():
    for k in range(2, 9):
        for l in range(2, 9):
            if k + l > 10:
                continue
            s = build_skl_optimized(k, l)
            assert len(s) == math.comb(k + l - 4, k - 2)
            assert check_general_position(s)[0]
            assert max_cup(s)[0] <= k - 1
            assert max_cap(s)[0] <= l - 1


def test_skl_optimized_is_deterministic():
    a = build_skl_optimized(5, 5)
    b = build_skl_optimized(5, 5)
    assert a.points == b.points


def test_skl_optimized_unit_separation_flag_accepted():
    s = build_skl_optimized(5, 4, last_step_unit_separation=False)
    assert len(s) == 10
    assert max_cup(s)[0] <= 4 and max_cap(s)[0] <= 3


def test_skl_optimized_grids_are_much_smaller_than_baseline():
    for (k, l) in ((4, 4), (5, 4), (5, 5), (4, 6)):
        opt = bounding_box(build_skl_optimized(k, l))
        base = bounding_box(build_skl_baseline(k, l))
        assert opt.width * 50 < base.width
        assert opt.height * 50 < base.height


def test_skl_optimized_55_box():
    assert tuple(bounding_box(build_skl_optimized(5, 5))) == (35, 111)


def test_skl_optimized_recursion_beyond_tables():
    # (6,6) has no precomputed realization; the split-line search must build it
    s = build_skl_optimized(6, 6)
    assert len(s) == math.comb(8, 4)
    assert check_general_position(s)[0]
    assert max_cup(s)[0] <= 5 and max_cap(s)[0] <= 5


# --------------------------------------------------- composed sets (baseline)

def test_es_baseline_counts_and_spans():
    for t in range(2, 9):
        s = build_es_baseline(t)
        assert len(s) == 2 ** (t - 2)
        assert len(s.component_spans) == t - 1
        labels = [lab for _, _, lab in s.component_spans]
        assert labels == [f"S({t - i},{i + 2})" for i in range(t - 1)]
        assert s.component_spans[-1][1] == len(s)


def test_es_baseline_trivial_sizes():
    assert len(build_es_baseline(2)) == 1
    assert len(build_es_baseline(3)) == 2
    with pytest.raises(ValueError):
        build_es_baseline(1)


def test_es_baseline_grid_bound():
    for t in range(4, 9):
        s = build_es_baseline(t)
        bound = 3 * t * t * (t + 1) * 4 ** (t + 1)
        assert all(0 <= p.x <= bound and 0 <= p.y <= bound for p in s)


def test_es_baseline_no_large_convex_polygon():
    for t in range(4, 7):
        s = build_es_baseline(t)
        assert check_general_position(s)[0]
        assert max_convex_subset(s)[0] == t - 1


# -------------------------------------------------- composed sets (optimized)

def test_es_optimized_counts_and_spans():
    for t in range(2, 9):
        s = build_es_optimized(t)
        assert len(s) == 2 ** (t - 2)
        labels = [lab for _, _, lab in s.component_spans]
        assert labels == [f"S({t - i},{i + 2})" for i in range(t - 1)]


def test_es_optimized_boxes():
    want = {4: (3, 2), 5: (7, 6), 6: (24, 24), 7: (98, 95)}
    for t, box in want.items():
        assert tuple(bounding_box(build_es_optimized(t))) == box


def test_es_optimized_no_large_convex_polygon():
    for t in range(4, 8):
        s = build_es_optimized(t)
        assert check_general_position(s)[0]
        assert max_convex_subset(s)[0] == t - 1


def test_es_optimized_distinct_x_coordinates():
    # cup/cap reports on composed sets need globally distinct x
    for t in range(4, 9):
        xs = [p.x for p in build_es_optimized(t)]
        assert len(set(xs)) == len(xs)


def test_es_optimized_is_deterministic():
    assert build_es_optimized(6).points == build_es_optimized(6).points


def test_es_optimized_rejects_small_t():
    with pytest.raises(ValueError):
        build_es_optimized(0)
