"""Pure-numpy versions of the kernels: level-by-level expansion instead of DFS."""

import numpy as np

_CHOICES = ((1, 1), (1, 0), (0, 1), (0, 0))  # (pos bit, val bit): L1, U, D, L0


def av321_array(n, count):
    if n == 0:
        return np.empty((1, 0), dtype=np.int64)
    pos = np.zeros((1, 0), dtype=np.int64)
    val = np.zeros((1, 0), dtype=np.int64)
    h = np.zeros(1, dtype=np.int64)
    for i in range(n):
        parts = []
        for p, v in _CHOICES:
            nh = h + p - v
            keep = (h + p >= 1) & (nh <= n - 1 - i)
            if keep.any():
                k = np.count_nonzero(keep)
                parts.append((
                    np.hstack([pos[keep], np.full((k, 1), p, dtype=np.int64)]),
                    np.hstack([val[keep], np.full((k, 1), v, dtype=np.int64)]),
                    nh[keep],
                ))
        pos = np.vstack([a for a, _, _ in parts])
        val = np.vstack([b for _, b, _ in parts])
        h = np.concatenate([c for _, _, c in parts])
    pos, val = pos[h == 0], val[h == 0]
    # LR-maximum positions receive LR-maximum values in increasing order,
    # the remaining positions receive the remaining values in increasing order
    order_pos = np.argsort(1 - pos, axis=1, kind="stable")
    order_val = np.argsort(1 - val, axis=1, kind="stable")
    out = np.empty_like(pos)
    np.put_along_axis(out, order_pos, order_val + 1, axis=1)
    assert out.shape[0] == count
    return out


def perm_stats(perms):
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    out = np.zeros((m, 6), dtype=np.int64)
    if n == 0:
        return out
    idx = np.arange(1, n + 1)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    out[:, 0] = ((perms[:, :, None] > perms[:, None, :]) & upper).sum(axis=(1, 2))
    desc = perms[:, :-1] > perms[:, 1:]
    out[:, 1] = (desc * idx[:-1]).sum(axis=1)
    out[:, 2] = desc.sum(axis=1)
    out[:, 3] = (perms == np.maximum.accumulate(perms, axis=1)).sum(axis=1)
    out[:, 4] = (perms == idx).sum(axis=1)
    out[:, 5] = (perms > idx).sum(axis=1)
    return out


def dyck_array(n, count):
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    L = 2 * n
    bits = np.zeros((1, 0), dtype=np.int64)
    h = np.zeros(1, dtype=np.int64)
    for i in range(L):
        parts = []
        for b in (0, 1):
            nh = h + 1 - 2 * b
            keep = (nh >= 0) & (nh <= L - 1 - i)
            if keep.any():
                k = np.count_nonzero(keep)
                parts.append((np.hstack([bits[keep], np.full((k, 1), b, dtype=np.int64)]), nh[keep]))
        bits = np.vstack([a for a, _ in parts])
        h = np.concatenate([c for _, c in parts])
    assert bits.shape[0] == count
    return bits


def dyck_stats(paths):
    paths = np.asarray(paths, dtype=np.int64)
    m, L = paths.shape
    out = np.zeros((m, 7), dtype=np.int64)
    if L == 0:
        return out
    steps = 1 - 2 * paths
    h = np.zeros((m, L + 1), dtype=np.int64)
    h[:, 1:] = np.cumsum(steps, axis=1)
    ones = np.cumsum(paths, axis=1)
    pref = np.arange(1, L + 1)
    valley = (paths[:, :-1] == 1) & (paths[:, 1:] == 0)
    peak = (paths[:, :-1] == 0) & (paths[:, 1:] == 1)
    out[:, 0] = valley.sum(axis=1)
    out[:, 1] = (valley * pref[:-1]).sum(axis=1)
    out[:, 2] = (valley * (pref[:-1] - ones[:, :-1])).sum(axis=1)
    out[:, 3] = (valley * ones[:, :-1]).sum(axis=1)
    out[:, 4] = peak.sum(axis=1)
    out[:, 5] = (peak * (h[:, 1:-1] - 1)).sum(axis=1)
    stun = np.zeros(m, dtype=np.int64)
    for i in range(L - 1):
        rows = valley[:, i]
        if not rows.any():
            continue
        H = h[rows, i + 1]
        # last earlier point at the valley's height (the walk is continuous, so <= works)
        below = h[rows, : i + 1] <= H[:, None]
        last = i - np.argmax(below[:, ::-1], axis=1)
        stun[rows] += (i + 1 - last) // 2
    out[:, 6] = stun
    return out
