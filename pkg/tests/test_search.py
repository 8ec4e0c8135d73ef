import pytest

from lrcolor.core import Coloring, is_L_coloring
from lrcolor.search import (
    Budget,
    SearchBudgetExceeded,
    compute_g,
    compute_g_by_enumeration,
    exists_by_enumeration,
    exists_L_coloring,
    prune_hints,
)


KNOWN_SMALL = {
    # (m, r): g -- formula-backed for r <= 2, oracle-derived fixtures otherwise
    (1, 1): 2, (1, 2): 2, (1, 3): 2, (1, 4): 2,
    (2, 2): 6, (3, 2): 11, (4, 2): 16,
    (2, 3): 9, (3, 3): 17,
    (2, 4): 12,
    (2, 5): 14,
}


@pytest.mark.parametrize("m,r", sorted(KNOWN_SMALL))
def test_compute_g_small_values(m, r):
    res = compute_g(m, r)
    assert res.exact and res.g == KNOWN_SMALL[(m, r)]
    if res.g > 1:
        assert res.witness is not None and len(res.witness) == res.g - 1
        assert is_L_coloring(res.witness, m)


def test_exists_examples():
    w = exists_L_coloring(2, 2, 5)
    assert w is not None and is_L_coloring(w, 2)
    assert exists_L_coloring(2, 2, 6) is None
    assert exists_L_coloring(1, 1, 1) is not None
    assert exists_L_coloring(1, 1, 2) is None
    with pytest.raises(ValueError):
        exists_L_coloring(0, 1, 1)


def test_budget_exhaustion_is_distinct():
    with pytest.raises(SearchBudgetExceeded):
        exists_L_coloring(4, 3, 24, budget=Budget(max_nodes=2000))
    res = compute_g(4, 3, budget=Budget(max_nodes=5000))
    assert res.status == "lower_bound_only" and res.stop_reason == "budget"
    assert res.g is None and res.n_reached >= 1
    res = compute_g(2, 2, n_max=4)
    assert res.status == "lower_bound_only" and res.stop_reason == "n_max"
    assert res.n_reached == 4


def test_oracle_matches_enumeration():
    # existence answers agree with plain enumeration of all r**n colorings
    for m, r, nmax in [(1, 2, 6), (2, 2, 8), (3, 2, 12), (2, 3, 10)]:
        for n in range(1, nmax + 1):
            fast = exists_L_coloring(m, r, n) is not None
            naive = exists_by_enumeration(m, r, n) is not None
            assert fast == naive, (m, r, n)


def test_oracle_matches_enumeration_full_range():
    # the full small-instance grid: m <= 3, r <= 3, n <= 14
    for m in (1, 2, 3):
        for r in (1, 2, 3):
            for n in range(1, 15):
                fast = exists_L_coloring(m, r, n) is not None
                naive = exists_by_enumeration(m, r, n) is not None
                assert fast == naive, (m, r, n)


def test_compute_g_matches_enumeration():
    assert compute_g_by_enumeration(2, 2) == 6
    assert compute_g_by_enumeration(2, 3) == 9
    assert compute_g_by_enumeration(3, 2) == 11


def test_prefix_closure():
    # once refuted, larger lengths stay refuted
    for m, r in [(2, 2), (2, 3)]:
        g = compute_g(m, r).g
        for extra in range(3):
            assert exists_L_coloring(m, r, g + extra) is None


def test_prune_hints():
    assert prune_hints(2, 2, Coloring(1, (1, 1), 2)) is False
    assert prune_hints(2, 2, Coloring(1, (1, 2), 2)) is True
    assert prune_hints(3, 2, Coloring(1, (1, 1, 2, 1), 2)) is False
    # positions beyond r(m-1) never trigger the hint
    assert prune_hints(2, 2, Coloring(3, (1, 1, 1), 2)) is True


def test_pruned_search_never_flips_existence():
    for m, r in [(2, 2), (3, 2), (2, 3)]:
        g_plain = compute_g(m, r, prune=False)
        g_pruned = compute_g(m, r, prune=True)
        assert g_plain.g == g_pruned.g


def test_no_lexically_valid_prefix_pruned():
    # every coloring of [1, 5] starting (1, 1) fails for m=2, r=2
    from itertools import product
    for tail in product((1, 2), repeat=3):
        c = Coloring(1, (1, 1) + tail, 2)
        assert not is_L_coloring(c, 2)


def test_parallel_matches_serial():
    for m, r in [(2, 3), (3, 2)]:
        s = compute_g(m, r, threads=1)
        p = compute_g(m, r, threads=4)
        assert s.g == p.g
        assert is_L_coloring(p.witness, m)


def test_fast_kernel_matches_reference():
    # the compiled kernel must replicate the pure-Python DFS node for node
    fastdfs = pytest.importorskip("lrcolor._fastdfs")
    from lrcolor.search import _dfs

    cases = [(2, 2, 5), (2, 2, 6), (3, 2, 11), (2, 3, 9), (3, 3, 13), (1, 1, 2)]
    for m, r, n in cases:
        for prune in (False, True):
            ref = _dfs(m, r, n, (), prune, None, None)
            fast = fastdfs.dfs_resumable(m, r, n, (), prune, None, None)
            assert ref[0] == fast[0] and ref[1] == fast[1], (m, r, n, prune)
    # resumption in tiny chunks changes nothing
    ref = _dfs(3, 2, 11, (), True, None, None)
    fast = fastdfs.dfs_resumable(3, 2, 11, (), True, None, None, chunk=97)
    assert ref[0] == fast[0] and ref[1] == fast[1]


def test_witness_validity_random_sizes():
    for m, r, n in [(2, 3, 7), (3, 3, 12), (2, 4, 11)]:
        w = exists_L_coloring(m, r, n, threads=2)
        assert w is not None and is_L_coloring(w, m) and len(w) == n
