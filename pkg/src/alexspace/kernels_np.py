"""Vectorized numpy versions of the census kernels (the no-numba path)."""
import numpy as np


def _candidates(n, k):
    r = np.arange(1 << n, dtype=np.int64)
    return r[(r >> k) & 1 == 1]


def preorder_rows(n, lo, hi):
    c0 = _candidates(n, 0)
    rows = c0[(c0 >= lo) & (c0 < hi)][:, None]
    for k in range(1, n):
        c = _candidates(n, k)
        base = np.repeat(rows, len(c), axis=0)
        new = np.tile(c, len(rows))
        ok = np.ones(len(new), dtype=bool)
        for i in range(k):
            ri = base[:, i]
            ok &= ~((((ri >> k) & 1) == 1) & ((new & ~ri) != 0))
            ok &= ~((((new >> i) & 1) == 1) & ((ri & ~new) != 0))
        rows = np.column_stack([base[ok], new[ok]])
    return rows.astype(np.int64, copy=False)


def preorder_count(n, lo, hi):
    return len(preorder_rows(n, lo, hi))


def uniformizable_flags(rows):
    m, n = rows.shape
    ok = np.ones(m, dtype=bool)
    for x in range(n):
        for y in range(n):
            ok &= ~((((rows[:, x] >> y) & 1) == 1) & (rows[:, y] != rows[:, x]))
    return ok


def maps_from_index(n, lo, hi):
    idx = np.arange(lo, hi, dtype=np.int64)
    powers = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % n


def map_topology_rows(maps):
    m, n = maps.shape
    out = np.zeros((m, n), dtype=np.int64)
    t = np.arange(m)
    for x in range(n):
        cur = np.full(m, x, dtype=np.int64)
        for _ in range(n):
            out[t, cur] |= np.int64(1) << x
            cur = maps[t, cur]
    return out


def all_periodic_flags(maps):
    m, n = maps.shape
    t = np.arange(m)
    ok = np.ones(m, dtype=bool)
    for x in range(n):
        cur = maps[:, x].copy()
        hit = cur == x
        for _ in range(n - 1):
            cur = maps[t, cur]
            hit |= cur == x
        ok &= hit
    return ok


def row_keys(rows):
    m, n = rows.shape
    shifts = (np.arange(n, dtype=np.int64) * n)
    return np.bitwise_or.reduce(rows << shifts[None, :], axis=1) if n else np.zeros(m, np.int64)
