"""Pure-Python kernels over arbitrary-precision integers.

This is the always-exact route, used automatically when coordinates are too
large for certified int64 arithmetic. Same semantics and tie-breaking as the
compiled kernels; inputs are plain Python lists of ints.
"""


def collinear_triple(xs, ys):
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[j] - xs[i]
            dy = ys[j] - ys[i]
            for k in range(j + 1, n):
                if dx * (ys[k] - ys[i]) - dy * (xs[k] - xs[i]) == 0:
                    return i, j, k
    return -1, -1, -1


def chain_best(xs, ys, turn):
    n = len(xs)
    dp = [[2] * n for _ in range(n)]
    parent = [[-1] * n for _ in range(n)]
    best, bi, bj = 2, 0, 1
    for j in range(n):
        for k in range(j + 1, n):
            for i in range(j):
                c = (xs[j] - xs[i]) * (ys[k] - ys[i]) \
                    - (ys[j] - ys[i]) * (xs[k] - xs[i])
                s = (c > 0) - (c < 0)
                if s == turn and dp[i][j] + 1 > dp[j][k]:
                    dp[j][k] = dp[i][j] + 1
                    parent[j][k] = i
            if dp[j][k] > best:
                best, bi, bj = dp[j][k], j, k
    return best, bi, bj, parent


def convex_chain_best(cxs, cys):
    m = len(cxs)
    dp = [[2] * m for _ in range(m)]
    parent = [[-1] * m for _ in range(m)]
    best = 2 if m >= 2 else 0
    bu, bv = 0, 1
    for v in range(m):
        for u in range(v):
            for w in range(u):
                c = (cxs[u] - cxs[w]) * (cys[v] - cys[w]) \
                    - (cys[u] - cys[w]) * (cxs[v] - cxs[w])
                if c > 0 and dp[w][u] + 1 > dp[u][v]:
                    dp[u][v] = dp[w][u] + 1
                    parent[u][v] = w
            if dp[u][v] > best:
                best, bu, bv = dp[u][v], u, v
    return best, bu, bv, parent


def empty_convex_chain_best(ax, ay, cxs, cys, allx, ally):
    m = len(cxs)
    n = len(allx)
    valid = [[False] * m for _ in range(m)]
    for u in range(m):
        for v in range(u + 1, m):
            ok = True
            for i in range(n):
                px, py = allx[i], ally[i]
                c1 = (cxs[u] - ax) * (py - ay) - (cys[u] - ay) * (px - ax)
                c2 = (cxs[v] - cxs[u]) * (py - cys[u]) \
                    - (cys[v] - cys[u]) * (px - cxs[u])
                c3 = (ax - cxs[v]) * (py - cys[v]) \
                    - (ay - cys[v]) * (px - cxs[v])
                if (c1 > 0 and c2 > 0 and c3 > 0) \
                        or (c1 < 0 and c2 < 0 and c3 < 0):
                    ok = False
                    break
            valid[u][v] = ok

    dp = [[0] * m for _ in range(m)]
    parent = [[-1] * m for _ in range(m)]
    best, bu, bv = 0, -1, -1
    for v in range(m):
        for u in range(v):
            if not valid[u][v]:
                continue
            dp[u][v] = 2
            for w in range(u):
                c = (cxs[u] - cxs[w]) * (cys[v] - cys[w]) \
                    - (cys[u] - cys[w]) * (cxs[v] - cxs[w])
                if c > 0 and dp[w][u] >= 2 and dp[w][u] + 1 > dp[u][v]:
                    dp[u][v] = dp[w][u] + 1
                    parent[u][v] = w
            if dp[u][v] > best:
                best, bu, bv = dp[u][v], u, v
    return best, bu, bv, parent
