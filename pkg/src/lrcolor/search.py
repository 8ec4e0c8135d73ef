"""Exhaustive oracle for the coloring threshold g(m, r).

Backtracking assigns colors to 1, 2, ... in order, rejecting a prefix as
soon as its newest position completes a violation (an O(1) incremental
test) and breaking color symmetry by capping each position's color at
one more than the largest color already used.  g(m, r) is found by
scanning n upward: a violation-free coloring of [1, n] restricts to one
of [1, n-1], so the first refuted n is the answer and the previous n's
witness comes for free.

The optional prune drops prefixes in which some color already occupies
m cells of [1, r(m-1)].  Any refutation it produces is still exhaustive:
a violation-free coloring of [1, n] with such a prefix can be rebuilt
into one whose first r(m-1) cells hold every color exactly m-1 times
(the I1 extension does precisely this), and that rebuilt witness
survives the prune, so prunes never flip an "exists" into "none".
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor, FIRST_COMPLETED, wait
from dataclasses import dataclass
from typing import Optional

from .core import Coloring

_BIG = 1 << 62
_CHECK_EVERY = 8192

try:  # optional compiled kernel; the pure-Python one is the reference
    from ._fastdfs import dfs_resumable as _fast_dfs
except Exception:  # pragma: no cover - numba missing or failed to build
    _fast_dfs = None


class SearchBudgetExceeded(Exception):
    """Raised when the node or wall-clock ceiling fires before an answer."""

    def __init__(self, nodes, message="search budget exhausted"):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class Budget:
    """Node-count ceiling plus wall-clock ceiling (seconds)."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def deadline(self) -> Optional[float]:
        return None if self.max_seconds is None else time.monotonic() + self.max_seconds


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a g(m, r) computation.

    status "exact" means g was determined and witness has length g-1;
    "lower_bound_only" means the scan stopped (budget or n_max) after
    verifying a witness of length n_reached, so g > n_reached.
    """

    m: int
    r: int
    status: str
    g: Optional[int]
    witness: Optional[Coloring]
    n_reached: int
    nodes: int
    elapsed: float
    stop_reason: str = ""

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def _dfs(m, r, n, prefix, prune, node_cap, deadline, stop=None):
    """Depth-first search for a violation-free canonical coloring of [1, n]
    extending `prefix`.  Returns (colors | None, nodes, exhausted)."""
    occ = [[] for _ in range(r + 1)]
    pm = [_BIG] * (n + 1)
    colors = [0] * (n + 1)
    maxused = [0] * (n + 1)
    rm1 = r * (m - 1)
    cnt = [0] * (r + 1)
    base = len(prefix)
    for i, c in enumerate(prefix):
        p = i + 1
        o = occ[c]
        o.append(p)
        mu = 2 * p - o[-m] if len(o) >= m else _BIG
        colors[p] = c
        pm[p] = mu if mu < pm[p - 1] else pm[p - 1]
        maxused[p] = c if c > maxused[p - 1] else maxused[p - 1]
        if p <= rm1:
            cnt[c] += 1
    if base == n:
        return list(prefix), 0, False
    nodes = 0
    p, c = base + 1, 1
    while True:
        if c > r or c > maxused[p - 1] + 1:
            p -= 1
            if p == base:
                return None, nodes, False
            oc = colors[p]
            occ[oc].pop()
            if p <= rm1:
                cnt[oc] -= 1
            c = oc + 1
            continue
        nodes += 1
        if nodes % _CHECK_EVERY == 0:
            if node_cap is not None and nodes > node_cap:
                return None, nodes, True
            if deadline is not None and time.monotonic() > deadline:
                return None, nodes, True
            if stop is not None and stop.is_set():
                return None, nodes, True
        if prune and p <= rm1 and cnt[c] >= m - 1:
            c += 1
            continue
        o = occ[c]
        k = len(o) + 1
        if k >= m:
            y1 = o[k - m] if m > 1 else p
            if pm[y1 - 1] <= p:
                c += 1
                continue
            mu = 2 * p - y1
        else:
            mu = _BIG
        o.append(p)
        colors[p] = c
        pm[p] = mu if mu < pm[p - 1] else pm[p - 1]
        maxused[p] = c if c > maxused[p - 1] else maxused[p - 1]
        if p <= rm1:
            cnt[c] += 1
        if p == n:
            return colors[1:], nodes, False
        p += 1
        c = 1


def _enumerate_prefixes(m, r, depth, prune):
    """All canonical violation-free prefixes of the given depth, DFS order."""
    out = []

    def rec(prefix, occ, pm, maxu, cnt):
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        p = len(prefix) + 1
        rm1 = r * (m - 1)
        for c in range(1, min(r, maxu + 1) + 1):
            if prune and p <= rm1 and cnt[c] >= m - 1:
                continue
            o = occ[c]
            if len(o) + 1 >= m:
                y1 = o[len(o) + 1 - m] if m > 1 else p
                if pm[y1 - 1] <= p:
                    continue
                mu = 2 * p - y1
            else:
                mu = _BIG
            o.append(p)
            if p <= rm1:
                cnt[c] += 1
            pm.append(min(pm[-1], mu))
            prefix.append(c)
            rec(prefix, occ, pm, maxu if c <= maxu else c, cnt)
            prefix.pop()
            pm.pop()
            o.pop()
            if p <= rm1:
                cnt[c] -= 1

    rec([], [[] for _ in range(r + 1)], [_BIG], 0, [0] * (r + 1))
    return out


# Workers share exactly one thing: a monotone "someone found a witness"
# flag, inherited through fork.  A worker that sees it set abandons its
# subtree; the parent only reads such results after recording a witness.
_SHARED_STOP = None


def _run_dfs(m, r, n, prefix, prune, node_cap, deadline, stop=None):
    if _fast_dfs is not None:
        return _fast_dfs(m, r, n, prefix, prune, node_cap, deadline, stop=stop)
    return _dfs(m, r, n, prefix, prune, node_cap, deadline, stop=stop)


def _worker(args):
    m, r, n, prefix, prune, node_cap, deadline = args
    return _run_dfs(m, r, n, prefix, prune, node_cap, deadline,
                    stop=_SHARED_STOP)


def _search_n(m, r, n, prune, budget, threads, deadline):
    """(witness colors | None, nodes, exhausted) for the fixed length n."""
    node_cap = budget.max_nodes if budget else None
    if threads <= 1 or n < 8:
        return _run_dfs(m, r, n, (), prune, node_cap, deadline)
    depth = 0
    prefixes = [()]
    while depth < min(n - 1, 14) and 0 < len(prefixes) < 3 * threads:
        depth += 1
        prefixes = _enumerate_prefixes(m, r, depth, prune)
    if not prefixes:
        return None, 0, False  # every prefix already dies by this depth
    global _SHARED_STOP
    total_nodes = 0
    witness = None
    exhausted = False
    _SHARED_STOP = stop_flag = multiprocessing.Event()
    try:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            pending = {ex.submit(_worker, (m, r, n, pf, prune, node_cap,
                                           deadline)): pf for pf in prefixes}
            try:
                while pending:
                    done, _ = wait(pending, return_when=FIRST_COMPLETED)
                    for fut in done:
                        pending.pop(fut)
                        cols, nodes, exh = fut.result()
                        total_nodes += nodes
                        if exh and witness is None and not stop_flag.is_set():
                            exhausted = True
                        if node_cap is not None and total_nodes > node_cap:
                            exhausted = True
                        if cols is not None and witness is None:
                            witness = cols
                            stop_flag.set()
                    if witness is not None or exhausted:
                        for fut in pending:
                            fut.cancel()
                        break
            finally:
                ex.shutdown(wait=True, cancel_futures=True)
    finally:
        _SHARED_STOP = None
    if witness is not None:
        return witness, total_nodes, False
    return None, total_nodes, exhausted


def prune_hints(m: int, r: int, partial: Coloring) -> bool:
    """False when the prefix provably cannot extend to a violation-free
    coloring of [1, g(m,r)-1]: some color holds m cells of [1, r(m-1)]."""
    rm1 = r * (m - 1)
    counts: dict[int, int] = {}
    for off, c in enumerate(partial.colors):
        p = partial.start + off
        if p <= rm1:
            counts[c] = counts.get(c, 0) + 1
    return all(v <= m - 1 for v in counts.values())


def exists_L_coloring(m: int, r: int, n: int, budget: Optional[Budget] = None,
                      prune: bool = False, threads: int = 1) -> Optional[Coloring]:
    """A violation-free coloring of [1, n], or None if every coloring fails.

    Raises SearchBudgetExceeded when the budget fires first, so "ran out"
    is never conflated with "none exists".
    """
    if m < 1 or r < 1 or n < 1:
        raise ValueError(f"need m, r, n >= 1, got m={m}, r={r}, n={n}")
    deadline = budget.deadline() if budget else None
    cols, nodes, exhausted = _search_n(m, r, n, prune, budget or Budget(),
                                       threads, deadline)
    if exhausted:
        raise SearchBudgetExceeded(nodes)
    return Coloring(1, tuple(cols), r) if cols is not None else None


def compute_g(m: int, r: int, n_max: int = 10 ** 4,
              budget: Optional[Budget] = None, threads: int = 1,
              prune: bool = True) -> SearchResult:
    """Least n such that no violation-free coloring of [1, n] exists.

    Scans n upward; the witness from the last colorable n is returned
    with the answer.  Budget or n_max exhaustion yields the distinct
    status "lower_bound_only" with the largest verified n.
    """
    if m < 1 or r < 1:
        raise ValueError(f"need m, r >= 1, got m={m}, r={r}")
    budget = budget or Budget()
    t0 = time.monotonic()
    deadline = budget.deadline()
    witness = None
    total_nodes = 0
    n_reached = 0
    for n in range(1, n_max + 1):
        cols, nodes, exhausted = _search_n(m, r, n, prune, budget, threads, deadline)
        total_nodes += nodes
        if exhausted or (budget.max_nodes is not None
                         and total_nodes > budget.max_nodes):
            return SearchResult(m, r, "lower_bound_only", None, witness,
                                n_reached, total_nodes, time.monotonic() - t0,
                                stop_reason="budget")
        if cols is None:
            return SearchResult(m, r, "exact", n, witness, n_reached,
                                total_nodes, time.monotonic() - t0)
        witness = Coloring(1, tuple(cols), r)
        n_reached = n
    return SearchResult(m, r, "lower_bound_only", None, witness, n_reached,
                        total_nodes, time.monotonic() - t0, stop_reason="n_max")


# ---------------------------------------------------------------------------
# naive enumerator (independent cross-check for small sizes)


def exists_by_enumeration(m: int, r: int, n: int) -> Optional[Coloring]:
    """Try all r**n colorings; intended as an oracle for tiny n only."""
    from itertools import product

    from .core import find_violation

    for cols in product(range(1, r + 1), repeat=n):
        cand = Coloring(1, cols, r)
        if find_violation(cand, m) is None:
            return cand
    return None


def compute_g_by_enumeration(m: int, r: int, n_max: int = 20) -> Optional[int]:
    for n in range(1, n_max + 1):
        if exists_by_enumeration(m, r, n) is None:
            return n
    return None
