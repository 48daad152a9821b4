"""Loop kernels compiled with numba.

Rows are int64 bitmasks: ``rows[t, x]`` is ``V(x)`` of topology ``t``.
The same functions run as plain Python if numba is unavailable.
"""
import numpy as np

from ._accel import njit


@njit
def _consistent(rows, k, r):
    for i in range(k):
        ri = rows[i]
        if (ri >> k) & 1 and (r & ~ri) != 0:
            return False
        if (r >> i) & 1 and (ri & ~r) != 0:
            return False
    return True


@njit
def _walk_preorders(n, lo, hi, out, emit):
    full = np.int64(1) << n
    rows = np.zeros(n, dtype=np.int64)
    rows[0] = lo - 1
    count = 0
    k = 0
    while k >= 0:
        r = rows[k] + 1
        limit = hi if k == 0 else full
        found = False
        while r < limit:
            if (r >> k) & 1 and _consistent(rows, k, r):
                found = True
                break
            r += 1
        if not found:
            k -= 1
            continue
        rows[k] = r
        if k == n - 1:
            if emit:
                for i in range(n):
                    out[count, i] = rows[i]
            count += 1
        else:
            k += 1
            rows[k] = -1
    return count


@njit
def preorder_count(n, lo, hi):
    dummy = np.zeros((0, n), dtype=np.int64)
    return _walk_preorders(n, lo, hi, dummy, False)


@njit
def preorder_rows(n, lo, hi):
    m = _walk_preorders(n, lo, hi, np.zeros((0, n), dtype=np.int64), False)
    out = np.zeros((m, n), dtype=np.int64)
    _walk_preorders(n, lo, hi, out, True)
    return out


@njit
def uniformizable_flags(rows):
    m, n = rows.shape
    out = np.ones(m, dtype=np.bool_)
    for t in range(m):
        for x in range(n):
            v = rows[t, x]
            for y in range(n):
                if (v >> y) & 1 and rows[t, y] != v:
                    out[t] = False
                    break
            if not out[t]:
                break
    return out


@njit
def maps_from_index(n, lo, hi):
    out = np.zeros((hi - lo, n), dtype=np.int64)
    for i in range(lo, hi):
        j = i
        for x in range(n - 1, -1, -1):
            out[i - lo, x] = j % n
            j //= n
    return out


@njit
def map_topology_rows(maps):
    m, n = maps.shape
    out = np.zeros((m, n), dtype=np.int64)
    for t in range(m):
        for x in range(n):
            cur = x
            for _ in range(n):
                out[t, cur] |= np.int64(1) << x
                cur = maps[t, cur]
    return out


@njit
def all_periodic_flags(maps):
    m, n = maps.shape
    out = np.ones(m, dtype=np.bool_)
    for t in range(m):
        for x in range(n):
            cur = maps[t, x]
            hit = False
            for _ in range(n):
                if cur == x:
                    hit = True
                    break
                cur = maps[t, cur]
            if not hit:
                out[t] = False
                break
    return out


@njit
def row_keys(rows):
    m, n = rows.shape
    out = np.zeros(m, dtype=np.int64)
    for t in range(m):
        k = np.int64(0)
        for x in range(n):
            k |= rows[t, x] << (x * n)
        out[t] = k
    return out
