"""numba-compiled enumeration and statistic kernels."""

import numpy as np
from numba import njit

# (pos bit, val bit) per step choice, in the order L1, U, D, L0
_P = np.array([1, 1, 0, 0], dtype=np.int64)
_V = np.array([1, 0, 1, 0], dtype=np.int64)


@njit(cache=True)
def _av321_fill(n, count, P, V):
    out = np.empty((count, n), dtype=np.int64)
    if n == 0:
        return out
    pos = np.zeros(n, dtype=np.int64)
    val = np.zeros(n, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)
    height = np.zeros(n + 1, dtype=np.int64)
    row = 0
    depth = 0
    while depth >= 0:
        choice[depth] += 1
        if choice[depth] > 3:
            choice[depth] = -1
            depth -= 1
            continue
        c = choice[depth]
        p = P[c]
        v = V[c]
        h = height[depth]
        # a value can only be marked after enough positions are marked
        if h + p < 1:
            continue
        nh = h + p - v
        if nh > n - 1 - depth:
            continue
        pos[depth] = p
        val[depth] = v
        height[depth + 1] = nh
        if depth == n - 1:
            if nh == 0:
                vi = 0
                wi = 0
                for j in range(n):
                    if pos[j] == 1:
                        while val[vi] == 0:
                            vi += 1
                        out[row, j] = vi + 1
                        vi += 1
                    else:
                        while val[wi] == 1:
                            wi += 1
                        out[row, j] = wi + 1
                        wi += 1
                row += 1
            continue
        depth += 1
    return out


def av321_array(n, count):
    return _av321_fill(n, count, _P, _V)


@njit(cache=True)
def perm_stats(perms):
    m, n = perms.shape
    out = np.zeros((m, 6), dtype=np.int64)
    for r in range(m):
        inv = 0
        maj = 0
        des = 0
        lrm = 0
        fix = 0
        exc = 0
        best = 0
        for i in range(n):
            a = perms[r, i]
            for j in range(i + 1, n):
                if a > perms[r, j]:
                    inv += 1
            if i + 1 < n and a > perms[r, i + 1]:
                des += 1
                maj += i + 1
            if a > best:
                best = a
                lrm += 1
            if a == i + 1:
                fix += 1
            elif a > i + 1:
                exc += 1
        out[r, 0] = inv
        out[r, 1] = maj
        out[r, 2] = des
        out[r, 3] = lrm
        out[r, 4] = fix
        out[r, 5] = exc
    return out


@njit(cache=True)
def _dyck_fill(n, count):
    out = np.zeros((count, 2 * n), dtype=np.int64)
    if n == 0:
        return out
    bits = np.zeros(2 * n, dtype=np.int64)
    choice = np.full(2 * n, -1, dtype=np.int64)
    height = np.zeros(2 * n + 1, dtype=np.int64)
    row = 0
    depth = 0
    while depth >= 0:
        choice[depth] += 1
        if choice[depth] > 1:
            choice[depth] = -1
            depth -= 1
            continue
        b = choice[depth]
        h = height[depth]
        nh = h + 1 - 2 * b
        if nh < 0 or nh > 2 * n - 1 - depth:
            continue
        bits[depth] = b
        height[depth + 1] = nh
        if depth == 2 * n - 1:
            for j in range(2 * n):
                out[row, j] = bits[j]
            row += 1
            continue
        depth += 1
    return out


def dyck_array(n, count):
    return _dyck_fill(n, count)


@njit(cache=True)
def dyck_stats(paths):
    m, L = paths.shape
    out = np.zeros((m, 7), dtype=np.int64)
    h = np.zeros(L + 1, dtype=np.int64)
    for r in range(m):
        for i in range(L):
            b = paths[r, i]
            h[i + 1] = h[i] + 1 - 2 * b
        des = 0
        maj = 0
        alpha = 0
        beta = 0
        npea = 0
        spea = 0
        stun = 0
        ones = 0
        for i in range(L - 1):
            b = paths[r, i]
            ones += b
            nxt = paths[r, i + 1]
            if b == 1 and nxt == 0:
                des += 1
                maj += i + 1
                alpha += (i + 1) - ones
                beta += ones
                H = h[i + 1]
                k = i
                while h[k] != H:
                    k -= 1
                stun += (i + 1 - k) // 2
            elif b == 0 and nxt == 1:
                npea += 1
                spea += h[i + 1] - 1
        out[r, 0] = des
        out[r, 1] = maj
        out[r, 2] = alpha
        out[r, 3] = beta
        out[r, 4] = npea
        out[r, 5] = spea
        out[r, 6] = stun
    return out
