"""Vectorized numpy fallbacks for the DP kernels.

Semantics (including witness tie-breaking) match the numba kernels exactly:
np.argmax picks the first maximum, which is the same index the numba loops
keep under strict improvement.
"""

import numpy as np


def collinear_triple(xs, ys):
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            c = (xs[j] - xs[i]) * (ys[j + 1:] - ys[i]) \
                - (ys[j] - ys[i]) * (xs[j + 1:] - xs[i])
            hits = np.nonzero(c == 0)[0]
            if hits.size:
                return i, j, j + 1 + int(hits[0])
    return -1, -1, -1


def chain_best(xs, ys, turn):
    n = len(xs)
    dp = np.full((n, n), 2, np.int64)
    parent = np.full((n, n), -1, np.int64)
    best, bi, bj = 2, 0, 1
    for j in range(1, n):
        dx = xs[j] - xs[:j]
        dy = ys[j] - ys[:j]
        col = dp[:j, j]
        for k in range(j + 1, n):
            c = dx * (ys[k] - ys[:j]) - dy * (xs[k] - xs[:j])
            mask = c > 0 if turn > 0 else c < 0
            if mask.any():
                vals = np.where(mask, col, 1)
                i = int(np.argmax(vals))
                if vals[i] + 1 > 2:
                    dp[j, k] = vals[i] + 1
                    parent[j, k] = i
            if dp[j, k] > best:
                best, bi, bj = int(dp[j, k]), j, k
    return best, bi, bj, parent


def convex_chain_best(cxs, cys):
    m = len(cxs)
    dp = np.full((m, m), 2, np.int64)
    parent = np.full((m, m), -1, np.int64)
    best = 2 if m >= 2 else 0
    bu, bv = 0, 1
    for v in range(m):
        for u in range(1, v):
            c = (cxs[u] - cxs[:u]) * (cys[v] - cys[:u]) \
                - (cys[u] - cys[:u]) * (cxs[v] - cxs[:u])
            mask = c > 0
            if mask.any():
                vals = np.where(mask, dp[:u, u], 1)
                w = int(np.argmax(vals))
                if vals[w] + 1 > 2:
                    dp[u, v] = vals[w] + 1
                    parent[u, v] = w
            if dp[u, v] > best:
                best, bu, bv = int(dp[u, v]), u, v
    return best, bu, bv, parent


def empty_convex_chain_best(ax, ay, cxs, cys, allx, ally):
    m = len(cxs)
    valid = np.zeros((m, m), dtype=bool)
    for u in range(m):
        c1 = (cxs[u] - ax) * (ally - ay) - (cys[u] - ay) * (allx - ax)
        for v in range(u + 1, m):
            c2 = (cxs[v] - cxs[u]) * (ally - cys[u]) \
                - (cys[v] - cys[u]) * (allx - cxs[u])
            c3 = (ax - cxs[v]) * (ally - cys[v]) \
                - (ay - cys[v]) * (allx - cxs[v])
            inside = ((c1 > 0) & (c2 > 0) & (c3 > 0)) \
                | ((c1 < 0) & (c2 < 0) & (c3 < 0))
            valid[u, v] = not inside.any()

    dp = np.zeros((m, m), np.int64)
    parent = np.full((m, m), -1, np.int64)
    best, bu, bv = 0, -1, -1
    for v in range(m):
        for u in range(v):
            if not valid[u, v]:
                continue
            dp[u, v] = 2
            if u > 0:
                c = (cxs[u] - cxs[:u]) * (cys[v] - cys[:u]) \
                    - (cys[u] - cys[:u]) * (cxs[v] - cxs[:u])
                mask = (c > 0) & (dp[:u, u] >= 2)
                if mask.any():
                    vals = np.where(mask, dp[:u, u], 1)
                    w = int(np.argmax(vals))
                    if vals[w] + 1 > 2:
                        dp[u, v] = vals[w] + 1
                        parent[u, v] = w
            if dp[u, v] > best:
                best, bu, bv = int(dp[u, v]), u, v
    return best, bu, bv, parent
