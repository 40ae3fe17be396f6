"""Offline search for small grid realizations of the optimized constructions.

Runs seeded simulated annealing over candidate integer configurations,
accepting a move only when the exact verifiers certify the configuration
(general position, cup/cap bounds for the cup/cap-free sets, no convex t-gon
for the composed sets).  The winning realizations are frozen into
``esgrid._tables``; rerunning this script with the default seeds reproduces
them.

Usage:  python3 tools/refine.py [--out tables.json]

This is slow (roughly an hour end to end); it is a build-time tool, not part
of the installed package.
"""

import argparse
import json
import math
import random
import sys
from fractions import Fraction
from functools import lru_cache

from esgrid.geometry import Point, QuadValue, QUAD_ONE_PLUS_SQRT3
from esgrid.construct import _ceil_half, _translate
from esgrid.pointset import PointSet
from esgrid import verify


def monotone(pts):
    s = sorted(pts)
    return all(b.y >= a.y for a, b in zip(s, s[1:]))


def skl_valid(pts, k, l):
    if len(set(p.x for p in pts)) != len(pts):
        return False
    if not monotone(pts):
        return False
    s = PointSet(tuple(pts))
    if not verify.check_general_position(s)[0]:
        return False
    if verify.max_cup(s)[0] > k - 1:
        return False
    if verify.max_cap(s)[0] > l - 1:
        return False
    return True


@lru_cache(maxsize=None)
def conditions_build(k, l):
    """Recursion with the split-line shift conditions; used as the start point."""
    if k == 2 or l == 2:
        return (Point(0, 0),), None
    left, ell_l = conditions_build(k - 1, l)
    right, ell_r = conditions_build(k, l - 1)
    xl = max(p.x for p in left)
    xr = max(p.x for p in right)
    delta = max(_ceil_half(QUAD_ONE_PLUS_SQRT3 * QuadValue(xl + xr, 0)), xl + 1)
    bound = Fraction(0)
    rm = max(right, key=lambda p: p.x)
    if ell_l is not None:
        a, b = ell_l
        m = Fraction(b.y - a.y, b.x - a.x)
        bound = max(bound, a.y + m * (rm.x + delta - a.x) - rm.y)
    if ell_r is not None:
        a, b = ell_r
        m = Fraction(b.y - a.y, b.x - a.x)
        bound = max(bound, m * (a.x + delta) - a.y)
    dp = max(bound.numerator // bound.denominator + 1, 1)
    while not skl_valid(list(left) + _translate(right, delta, dp), k, l):
        dp += 1
    pts = list(left) + _translate(right, delta, dp)
    shifted = _translate(right, delta, dp)
    return tuple(pts), (max(left, key=lambda p: p.x), min(shifted, key=lambda p: p.x))


def norm(pts):
    mx = min(p.x for p in pts)
    my = min(p.y for p in pts)
    return [Point(p.x - mx, p.y - my) for p in pts]


def dims(pts):
    return (max(p.x for p in pts) - min(p.x for p in pts),
            max(p.y for p in pts) - min(p.y for p in pts))


def anneal_points(start, valid, score, iters, seed, t0=20.0, t1=0.1):
    rng = random.Random(seed)
    cur = norm(list(start))
    n = len(cur)
    if n <= 2:
        return cur
    cs = score(cur)
    best, bs = cur[:], cs
    for it in range(iters):
        temp = t0 * (t1 / t0) ** (it / iters)
        r = rng.random()
        trial = cur[:]
        if r < 0.5:
            i = rng.randrange(n)
            trial[i] = Point(trial[i].x + rng.choice((0, 0, -1, 1)),
                             trial[i].y + rng.choice((-1, -2, -3, 1, 2, 3)))
        elif r < 0.8:
            th = rng.randrange(1, max(dims(cur)[1], 1) + 1)
            d = rng.choice((-1, -2, -4, 1))
            for i in range(n):
                if cur[i].y >= th:
                    trial[i] = Point(trial[i].x, trial[i].y + d)
        else:
            xt = rng.randrange(1, max(dims(cur)[0], 1) + 1)
            d = rng.choice((-1, 1))
            for i in range(n):
                if cur[i].x >= xt:
                    trial[i] = Point(trial[i].x + d, trial[i].y)
        trial = norm(trial)
        st = score(trial)
        if (st <= cs or rng.random() < math.exp(-(st - cs) / temp)) and valid(trial):
            cur, cs = trial, st
            if st < bs:
                best, bs = trial[:], st
    return norm(best)


def refine_skl(k, l, iters=80000, seed=11):
    start = norm(list(conditions_build(k, l)[0]))
    if len(start) <= 2:
        return start

    def score(pts):
        w, h = dims(pts)
        return w + h + sum(p.y for p in pts) * 1e-4

    return anneal_points(start, lambda ps: skl_valid(ps, k, l), score, iters, seed)


def refine_55():
    """Two-phase multi-seed search for the 20-point set, keeping the aspect
    near the reference 55x109 grid and then pressing the height down."""
    start = norm(list(conditions_build(5, 5)[0]))

    def aspect(pts):
        w, h = dims(pts)
        return max(Fraction(w, 54), Fraction(h, 108)) * 100 + (w + h) * 0.01

    stage1 = None
    for seed in (11, 23, 37, 51):
        ref = anneal_points(start, lambda ps: skl_valid(ps, 5, 5), aspect,
                            500000, seed, t0=30.0)
        if stage1 is None or aspect(ref) < aspect(stage1):
            stage1 = ref

    def height(pts):
        w, h = dims(pts)
        return h * 10 + (1000 if w > 54 else 0) + w * 0.01 \
            + sum(p.y for p in pts) * 1e-4

    best = stage1
    for seed in (3, 9, 27, 81):
        ref = anneal_points(stage1, lambda ps: skl_valid(ps, 5, 5), height,
                            400000, seed, t0=15.0)
        if height(ref) < height(best):
            best = ref
    return best


def staircase_offsets(block_dims):
    """Start configuration: a steeply descending concave staircase whose gaps
    exceed every block width and whose drops outgrow every block height; the
    index-dependent jitter avoids collinear anchors."""
    max_w = max(w for w, _ in block_dims)
    max_h = max(h for _, h in block_dims)
    offs, x, y = [], 0, 0
    drop = 4 * max_h + 20
    for i, (w, _) in enumerate(block_dims):
        offs.append((x, y))
        x += w + max_w + 40 + 3 * i
        y -= drop + 7 * i + 1
        drop *= 3
    return offs


def refine_es(t, blocks, iters, seed=5):
    """Anneal the block offsets of the t-composition."""

    def assemble(offs):
        return [Point(p.x + ox, p.y + oy)
                for (ox, oy), b in zip(offs, blocks) for p in b]

    def es_valid(pts):
        # globally distinct x keeps the cup/cap verifiers applicable to the
        # assembled set (full reports never hit the duplicate-x error)
        xs = [p.x for p in pts]
        if len(set(xs)) != len(xs):
            return False
        s = PointSet(tuple(pts))
        if not verify.check_general_position(s)[0]:
            return False
        return verify.max_convex_subset(s)[0] <= t - 1

    offs = staircase_offsets([dims(b) for b in blocks])
    assert es_valid(assemble(offs)), "staircase start configuration is invalid"

    def score(offs):
        w, h = dims(assemble(offs))
        return max(w, h) + 0.05 * (w + h)

    rng = random.Random(seed)
    cur = list(offs)
    cs = score(cur)
    best, bs = list(cur), cs
    for it in range(iters):
        temp = 60.0 * (0.2 / 60.0) ** (it / iters)
        i = rng.randrange(len(cur))
        trial = list(cur)
        trial[i] = (trial[i][0] + rng.choice((-1, -2, -4, -8, -16, 0, 1, 2, 4)),
                    trial[i][1] + rng.choice((-1, -2, -4, -8, -16, -32,
                                              0, 1, 2, 4, 8)))
        st = score(trial)
        if (st <= cs or rng.random() < math.exp(-(st - cs) / temp)) \
                and es_valid(assemble(trial)):
            cur, cs = trial, st
            if st < bs:
                best, bs = list(trial), st
    pts = assemble(best)
    mx = min(p.x for p in pts)
    my = min(p.y for p in pts)
    return [[ox - mx, oy - my] for ox, oy in best]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables.json")
    args = ap.parse_args(argv)

    tables = {"skl": {}, "es_offsets": {}}
    pairs = [(k, l) for k in range(3, 8) for l in range(3, 8) if k + l <= 10]
    for k, l in pairs:
        ref = refine_55() if (k, l) == (5, 5) else refine_skl(k, l)
        assert len(ref) <= 2 or skl_valid(ref, k, l)
        tables["skl"]["%d,%d" % (k, l)] = [[p.x, p.y] for p in sorted(ref)]
        print("S(%d,%d): n=%d dims=%s" % (k, l, len(ref), dims(ref)), flush=True)

    def block(k, l):
        key = "%d,%d" % (k, l)
        if key in tables["skl"]:
            return [Point(x, y) for x, y in tables["skl"][key]]
        return [Point(0, 0)]

    for t, iters in ((4, 120000), (5, 120000), (6, 250000), (7, 250000),
                     (8, 35000)):
        blocks = [block(t - i, i + 2) for i in range(t - 1)]
        offs = refine_es(t, blocks, iters)
        tables["es_offsets"][str(t)] = offs
        pts = [Point(p.x + ox, p.y + oy)
               for (ox, oy), b in zip(offs, blocks) for p in b]
        print("S_%d: n=%d dims=%s" % (t, len(pts), dims(pts)), flush=True)
        with open(args.out, "w") as fh:
            json.dump(tables, fh, indent=1, sort_keys=True)
    print("wrote", args.out)


if __name__ == "__main__":
    sys.exit(main())
