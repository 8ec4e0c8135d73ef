"""Compiled twin of the backtracking kernel in search.py.

Same algorithm, same visit order, same node counts; the only difference
is speed.  The kernel is resumable: it stops after at most node_cap
nodes and hands back the exact (p, c) decision point, so the caller can
interleave wall-clock checks without timing calls inside the hot loop.
Requires numba; search.py falls back to the pure-Python loop without it.
"""

import numpy as np
from numba import njit

_BIG = 1 << 62

# result codes
PAUSED, FOUND, REFUTED = 0, 1, 2


@njit(cache=True)
def _kernel(m, r, n, base, colors, p, c, prune, node_cap):  # pragma: no cover
    occ = np.zeros((r + 1, n + 1), dtype=np.int64)  # occ[color, k] = k-th position
    occn = np.zeros(r + 1, dtype=np.int64)
    pm = np.full(n + 1, _BIG, dtype=np.int64)
    maxused = np.zeros(n + 1, dtype=np.int64)
    cnt = np.zeros(r + 1, dtype=np.int64)
    rm1 = r * (m - 1)
    for q in range(1, p):
        col = colors[q]
        k = occn[col] + 1
        occ[col, k] = q
        occn[col] = k
        mu = 2 * q - occ[col, k - m + 1] if k >= m else _BIG
        pm[q] = mu if mu < pm[q - 1] else pm[q - 1]
        maxused[q] = col if col > maxused[q - 1] else maxused[q - 1]
        if q <= rm1:
            cnt[col] += 1
    nodes = 0
    while True:
        if c > r or c > maxused[p - 1] + 1:
            p -= 1
            if p == base:
                return REFUTED, nodes, p, c
            oc = colors[p]
            occn[oc] -= 1
            if p <= rm1:
                cnt[oc] -= 1
            c = oc + 1
            continue
        if nodes >= node_cap:
            return PAUSED, nodes, p, c
        nodes += 1
        if prune and p <= rm1 and cnt[c] >= m - 1:
            c += 1
            continue
        k = occn[c] + 1
        if k >= m:
            y1 = occ[c, k - m + 1] if m > 1 else p
            if pm[y1 - 1] <= p:
                c += 1
                continue
            mu = 2 * p - y1
        else:
            mu = _BIG
        occ[c, k] = p
        occn[c] = k
        colors[p] = c
        pm[p] = mu if mu < pm[p - 1] else pm[p - 1]
        maxused[p] = c if c > maxused[p - 1] else maxused[p - 1]
        if p <= rm1:
            cnt[c] += 1
        if p == n:
            return FOUND, nodes, p, c
        p += 1
        c = 1


def dfs_resumable(m, r, n, prefix, prune, node_cap, deadline,
                  stop=None, chunk=20_000_000):
    """Mirror of search._dfs built on the compiled kernel.

    Runs the kernel in chunks of at most `chunk` nodes, checking the
    wall-clock deadline, the node ceiling and the shared stop flag
    between chunks.  Returns (colors | None, nodes, exhausted).
    """
    import time as _time

    base = len(prefix)
    colors = np.zeros(n + 1, dtype=np.int64)
    for i, col in enumerate(prefix):
        colors[i + 1] = col
    if base == n:
        return list(prefix), 0, False
    p, c = base + 1, 1
    total = 0
    while True:
        if node_cap is not None and total >= node_cap:
            return None, total, True
        if deadline is not None and _time.monotonic() > deadline:
            return None, total, True
        if stop is not None and stop.is_set():
            return None, total, True
        step = chunk if node_cap is None else min(chunk, node_cap - total)
        code, nodes, p, c = _kernel(m, r, n, base, colors, p, c, prune, step)
        total += nodes
        if code == FOUND:
            return [int(x) for x in colors[1:]], total, False
        if code == REFUTED:
            return None, total, False
