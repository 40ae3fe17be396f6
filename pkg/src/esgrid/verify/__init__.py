"""Exact verifiers for every claimed property of the constructions:
general position, maximum cups/caps, maximum convex-position subsets,
maximum empty convex subsets, the high-above relation, and an independent
brute-force oracle.

The cubic dynamic programs run on a selectable kernel backend (numba /
numpy / pure python, see ``_backend``); every predicate result is exact
regardless of backend.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DuplicateX, EmptySet, NotGeneralPosition, TooLarge
from ..geometry import (ABOVE, BELOW, LEFT_TURN, RIGHT_TURN, Line, Point,
                        orientation)
from ..pointset import GridBounds, PointSet, bounding_box
from ._backend import fits_int64, kernels_for

__all__ = [
    "VerificationReport", "check_general_position", "max_cup", "max_cap",
    "max_convex_subset", "max_empty_convex_subset", "is_high_above",
    "brute_force_max_convex", "full_report", "convex_hull",
]


def _points(s) -> List[Point]:
    pts = [Point(int(p[0]), int(p[1])) for p in s]
    if not pts:
        raise EmptySet("verification of an empty set")
    return pts


def _translated(pts: List[Point]) -> Tuple[List[int], List[int]]:
    mx = min(p.x for p in pts)
    my = min(p.y for p in pts)
    return [p.x - mx for p in pts], [p.y - my for p in pts]


def check_general_position(s):
    """(True, None) or (False, collinear triple witness)."""
    pts = _points(s)
    xs, ys = _translated(pts)
    _, mod, kx, ky = kernels_for(xs, ys)
    i, j, k = mod.collinear_triple(kx, ky)
    if i < 0:
        return True, None
    return False, (pts[i], pts[j], pts[k])


def _walk_chain(parent, bu: int, bv: int) -> List[int]:
    seq = [bv, bu]
    u, v = bu, bv
    w = int(parent[u][v])
    while w != -1:
        seq.append(w)
        u, v = w, u
        w = int(parent[u][v])
    seq.reverse()
    return seq


def _monotone_chain(s, turn: int):
    pts = _points(s)
    order = sorted(range(len(pts)), key=lambda i: pts[i].x)
    for a, b in zip(order, order[1:]):
        if pts[a].x == pts[b].x:
            raise DuplicateX(f"points {pts[a]} and {pts[b]} share an x-coordinate")
    if len(pts) == 1:
        return 1, [pts[0]]
    xs, ys = _translated(pts)
    sx = [xs[i] for i in order]
    sy = [ys[i] for i in order]
    _, mod, kx, ky = kernels_for(sx, sy)
    best, bi, bj, parent = mod.chain_best(kx, ky, turn)
    chain = [pts[order[i]] for i in _walk_chain(parent, bi, bj)]
    assert len(chain) == best
    assert all(a.x < b.x for a, b in zip(chain, chain[1:]))
    assert all(orientation(a, b, c) == turn
               for a, b, c in zip(chain, chain[1:], chain[2:]))
    return int(best), chain


def max_cup(s):
    """Largest k-cup: x-increasing sequence, consecutive triples turn left."""
    return _monotone_chain(s, LEFT_TURN)


def max_cap(s):
    """Largest k-cap: x-increasing sequence, consecutive triples turn right."""
    return _monotone_chain(s, RIGHT_TURN)


def _angular_order(anchor: Tuple[int, int], idxs, xs, ys) -> List[int]:
    ax, ay = anchor

    def cmp(i: int, j: int) -> int:
        c = (xs[i] - ax) * (ys[j] - ay) - (ys[i] - ay) * (xs[j] - ax)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(idxs, key=functools.cmp_to_key(cmp))


def _anchored_best(pts, empty: bool):
    """Max convex (or empty convex) polygon over all choices of bottom-most
    vertex; every other vertex is lexicographically above the anchor and the
    polygon closes automatically once the chain turns left throughout."""
    n = len(pts)
    xs, ys = _translated(pts)
    best = min(n, 2)
    witness = pts[:best]
    for a in range(n):
        ax, ay = xs[a], ys[a]
        cand = [i for i in range(n) if (ys[i], xs[i]) > (ay, ax)]
        if len(cand) < 2:
            if len(cand) + 1 > best:
                best = len(cand) + 1
                witness = [pts[a]] + [pts[i] for i in cand]
            continue
        order = _angular_order((ax, ay), cand, xs, ys)
        cxs = [xs[i] for i in order]
        cys = [ys[i] for i in order]
        if empty:
            _, mod, kx, ky = kernels_for(xs, ys)
            if isinstance(kx, list):
                kcx, kcy = cxs, cys
            else:
                kcx = np.asarray(cxs, np.int64)
                kcy = np.asarray(cys, np.int64)
            got, bu, bv, parent = mod.empty_convex_chain_best(
                ax, ay, kcx, kcy, kx, ky)
            if got < 2:
                # no empty fan triangle at this anchor; pairs still count
                if 2 > best:
                    best = 2
                    witness = [pts[a], pts[order[0]]]
                continue
        else:
            _, mod, kcx, kcy = kernels_for(cxs, cys)
            got, bu, bv, parent = mod.convex_chain_best(kcx, kcy)
        if got + 1 > best:
            best = got + 1
            chain = _walk_chain(parent, bu, bv)
            witness = [pts[a]] + [pts[order[i]] for i in chain]
    return best, witness


def max_convex_subset(s):
    """Exact maximum number of points in convex position, with one witness
    polygon in counterclockwise order."""
    pts = _points(s)
    ok, wit = check_general_position(pts)
    if not ok:
        raise NotGeneralPosition(wit)
    if len(pts) <= 2:
        return len(pts), pts
    best, witness = _anchored_best(pts, empty=False)
    assert _in_convex_position(witness)
    return best, witness


def max_empty_convex_subset(s):
    """Exact maximum size of a convex polygon with no input point strictly
    inside it."""
    pts = _points(s)
    ok, wit = check_general_position(pts)
    if not ok:
        raise NotGeneralPosition(wit)
    if len(pts) <= 2:
        return len(pts), pts
    best, witness = _anchored_best(pts, empty=True)
    assert _in_convex_position(witness)
    assert not any(_strictly_inside(witness, q) for q in pts)
    return best, witness


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """Strict convex hull in counterclockwise order (collinear boundary
    points are dropped)."""
    ps = sorted(set(Point(int(p[0]), int(p[1])) for p in points))
    if len(ps) <= 2:
        return ps
    lower: List[Point] = []
    for p in ps:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(ps):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _in_convex_position(points: Sequence[Point]) -> bool:
    return len(convex_hull(points)) == len(set(points))


def _strictly_inside(poly: Sequence[Point], q: Point) -> bool:
    hull = convex_hull(poly)
    if len(hull) < 3 or q in hull:
        return False
    return all(orientation(a, b, q) == LEFT_TURN
               for a, b in zip(hull, hull[1:] + hull[:1]))


def brute_force_max_convex(s) -> int:
    """Independent oracle: enumerate subsets largest-first and test convex
    position via the hull. Guarded against exponential blowup."""
    pts = _points(s)
    n = len(pts)
    if n > 20:
        raise TooLarge(f"brute force limited to 20 points, got {n}")
    ok, wit = check_general_position(pts)
    if not ok:
        raise NotGeneralPosition(wit)
    if n <= 2:
        return n
    for size in range(n, 2, -1):
        for sub in itertools.combinations(pts, size):
            if _in_convex_position(sub):
                return size
    return 2


def is_high_above(upper, lower):
    """True iff every line through two upper points passes strictly above all
    lower points, and every line through two lower points passes strictly
    below all upper points."""
    up = _points(upper)
    lo = _points(lower)

    fast = fits_int64(*_translated(up + lo))
    for pts, others, want in ((up, lo, BELOW), (lo, up, ABOVE)):
        if fast and len(pts) >= 2:
            oxs = np.array([p.x for p in others], np.int64)
            oys = np.array([p.y for p in others], np.int64)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                a, b = sorted((pts[i], pts[j]))
                if a.x == b.x:
                    return False, (Line(a, b), others[0])
                if fast:
                    c = (b.x - a.x) * (oys - a.y) - (b.y - a.y) * (oxs - a.x)
                    bad = np.nonzero(c >= 0 if want == BELOW else c <= 0)[0]
                    if bad.size:
                        return False, (Line(a, b), others[int(bad[0])])
                else:
                    for q in others:
                        if orientation(a, b, q) != want:
                            return False, (Line(a, b), q)
    return True, None


@dataclass(frozen=True)
class VerificationReport:
    """The full measured profile of a point set, with certifying witnesses."""

    n: int
    bounds: GridBounds
    general_position: bool
    collinear_witness: Optional[Tuple[Point, Point, Point]]
    max_cup: int
    cup_witness: List[Point]
    max_cap: int
    cap_witness: List[Point]
    max_convex: int
    convex_witness: List[Point]
    max_empty_convex: Optional[int] = None
    empty_witness: Optional[List[Point]] = None

    def summary(self) -> dict:
        d = {
            "n": self.n,
            "width": str(self.bounds.width),
            "height": str(self.bounds.height),
            "general_position": self.general_position,
            "max_cup": self.max_cup,
            "max_cap": self.max_cap,
            "max_convex": self.max_convex,
        }
        if self.max_empty_convex is not None:
            d["max_empty_convex"] = self.max_empty_convex
        return d


def full_report(s, include_empty: bool = False) -> VerificationReport:
    """Run every verifier on s. Propagates DuplicateX / NotGeneralPosition
    from the component operations."""
    pts = _points(s)
    bounds = bounding_box(pts)
    gp, wit = check_general_position(pts)
    cup, cup_w = max_cup(pts)
    cap, cap_w = max_cap(pts)
    convex, convex_w = max_convex_subset(pts)
    empty = empty_w = None
    if include_empty:
        empty, empty_w = max_empty_convex_subset(pts)
    assert max(cup, cap) <= convex <= len(pts)
    if empty is not None:
        assert empty <= convex
    return VerificationReport(
        n=len(pts), bounds=bounds, general_position=gp, collinear_witness=wit,
        max_cup=cup, cup_witness=cup_w, max_cap=cap, cap_witness=cap_w,
        max_convex=convex, convex_witness=convex_w,
        max_empty_convex=empty, empty_witness=empty_w)
