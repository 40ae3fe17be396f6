#!/usr/bin/env python3
"""Times the verification kernels across backends (numba / numpy / python).

Usage: python3 benchmarks/benchmark_backends.py [--repeat N]
"""

import argparse
import os
import random
import time
from itertools import combinations

from esgrid import (build_es_baseline, build_es_optimized, full_report,
                    max_convex_subset)
from esgrid.geometry import Point, orientation


def random_general_position(rng, n, coord=10 ** 5):
    pts = []
    while len(pts) < n:
        p = Point(rng.randrange(coord), rng.randrange(coord))
        if p in pts or any(q.x == p.x for q in pts):
            continue
        if any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        pts.append(p)
    return pts


def backends():
    names = ["numpy", "python"]
    try:
        import numba  # noqa: F401
        names.insert(0, "numba")
    except ImportError:
        pass
    return names


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(1234)
    cases = [
        ("es_baseline(8), n=64", list(build_es_baseline(8))),
        ("es_optimized(8), n=64", list(build_es_optimized(8))),
        ("random n=80", random_general_position(rng, 80)),
    ]

    names = backends()
    print(f"{'case':<24}" + "".join(f"{b:>12}" for b in names))
    for label, pts in cases:
        row = [f"{label:<24}"]
        for backend in names:
            os.environ["ESGRID_BACKEND"] = backend
            max_convex_subset(pts)  # warm up (JIT compilation for numba)
            best = min(
                timed(pts) for _ in range(args.repeat))
            row.append(f"{best * 1000:>10.1f}ms")
        print("".join(row))
    os.environ.pop("ESGRID_BACKEND", None)


def timed(pts):
    t0 = time.perf_counter()
    full_report(pts)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
