"""Numba-compiled DP kernels. Coordinates must already be certified to fit
int64 without overflow in a single cross product (caller's job)."""

import numpy as np
from numba import njit


@njit(cache=True)
def collinear_triple(xs, ys):
    n = xs.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[j] - xs[i]
            dy = ys[j] - ys[i]
            for k in range(j + 1, n):
                if dx * (ys[k] - ys[i]) - dy * (xs[k] - xs[i]) == 0:
                    return i, j, k
    return -1, -1, -1


@njit(cache=True)
def chain_best(xs, ys, turn):
    """Longest left-to-right chain whose consecutive triples all have
    orientation sign == turn; points are sorted by x."""
    n = xs.shape[0]
    dp = np.full((n, n), 2, np.int64)
    parent = np.full((n, n), -1, np.int64)
    best = 2
    bi = 0
    bj = 1
    for j in range(n):
        for k in range(j + 1, n):
            for i in range(j):
                c = (xs[j] - xs[i]) * (ys[k] - ys[i]) \
                    - (ys[j] - ys[i]) * (xs[k] - xs[i])
                s = 1 if c > 0 else (-1 if c < 0 else 0)
                if s == turn and dp[i, j] + 1 > dp[j, k]:
                    dp[j, k] = dp[i, j] + 1
                    parent[j, k] = i
            if dp[j, k] > best:
                best = dp[j, k]
                bi = j
                bj = k
    return best, bi, bj, parent


@njit(cache=True)
def convex_chain_best(cxs, cys):
    """Longest left-turning chain over candidates sorted by angle around an
    anchor; the anchor itself is implicit (turns at it are automatic)."""
    m = cxs.shape[0]
    dp = np.full((m, m), 2, np.int64)
    parent = np.full((m, m), -1, np.int64)
    best = 2 if m >= 2 else 0
    bu = 0
    bv = 1
    for v in range(m):
        for u in range(v):
            for w in range(u):
                c = (cxs[u] - cxs[w]) * (cys[v] - cys[w]) \
                    - (cys[u] - cys[w]) * (cxs[v] - cxs[w])
                if c > 0 and dp[w, u] + 1 > dp[u, v]:
                    dp[u, v] = dp[w, u] + 1
                    parent[u, v] = w
            if dp[u, v] > best:
                best = dp[u, v]
                bu = u
                bv = v
    return best, bu, bv, parent


@njit(cache=True)
def empty_convex_chain_best(ax, ay, cxs, cys, allx, ally):
    """Like convex_chain_best, but every fan triangle (anchor, u, v) along
    the chain must contain no input point strictly inside."""
    m = cxs.shape[0]
    n = allx.shape[0]
    valid = np.zeros((m, m), np.uint8)
    for u in range(m):
        for v in range(u + 1, m):
            ok = True
            for i in range(n):
                px = allx[i]
                py = ally[i]
                if (px == ax and py == ay) \
                        or (px == cxs[u] and py == cys[u]) \
                        or (px == cxs[v] and py == cys[v]):
                    continue
                c1 = (cxs[u] - ax) * (py - ay) - (cys[u] - ay) * (px - ax)
                c2 = (cxs[v] - cxs[u]) * (py - cys[u]) \
                    - (cys[v] - cys[u]) * (px - cxs[u])
                c3 = (ax - cxs[v]) * (py - cys[v]) \
                    - (ay - cys[v]) * (px - cxs[v])
                if (c1 > 0 and c2 > 0 and c3 > 0) \
                        or (c1 < 0 and c2 < 0 and c3 < 0):
                    ok = False
                    break
            if ok:
                valid[u, v] = 1

    dp = np.zeros((m, m), np.int64)
    parent = np.full((m, m), -1, np.int64)
    best = 0
    bu = -1
    bv = -1
    for v in range(m):
        for u in range(v):
            if valid[u, v] == 0:
                continue
            dp[u, v] = 2
            for w in range(u):
                c = (cxs[u] - cxs[w]) * (cys[v] - cys[w]) \
                    - (cys[u] - cys[w]) * (cxs[v] - cxs[w])
                if c > 0 and dp[w, u] >= 2 and dp[w, u] + 1 > dp[u, v]:
                    dp[u, v] = dp[w, u] + 1
                    parent[u, v] = w
            if dp[u, v] > best:
                best = dp[u, v]
                bu = u
                bv = v
    return best, bu, bv, parent
