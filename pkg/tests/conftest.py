"""Shared test oracles: brute-force violation checking, small samplers.

The brute checker enumerates all pairs of monochromatic m-subsets with
no windowing or last-occurrence shortcuts; per color class it caches the
subset boundary lists so exhaustive sweeps stay affordable.
"""

import random
from bisect import bisect_right
from functools import lru_cache
from itertools import combinations

import pytest

from lrcolor.core import Coloring


@lru_cache(maxsize=None)
def _subset_bounds(positions: tuple, m: int):
    """(first, last) of every m-subset of positions, sorted by first element,
    plus the suffix maxima of the last elements."""
    pairs = sorted((s[0], s[-1]) for s in combinations(positions, m))
    suffix_max = []
    best = -1
    for _, last in reversed(pairs):
        best = max(best, last)
        suffix_max.append(best)
    suffix_max.reverse()
    return pairs, suffix_max


def brute_has_violation(coloring: Coloring, m: int) -> bool:
    """Quantify over every pair of monochromatic m-subsets X, Y directly."""
    classes = {}
    for off, c in enumerate(coloring.colors):
        classes.setdefault(c, []).append(coloring.start + off)
    subsets = [_subset_bounds(tuple(pos), m)
               for pos in classes.values() if len(pos) >= m]
    for x_pairs, _ in subsets:
        for x1, xm in x_pairs:
            need = 2 * xm - x1  # violation iff some Y has y1 > xm, ym >= need
            for y_pairs, y_suffix in subsets:
                firsts = [p[0] for p in y_pairs]
                i = bisect_right(firsts, xm)
                if i < len(y_pairs) and y_suffix[i] >= need:
                    return True
    return False


def random_coloring(rng: random.Random, n: int, r: int, start: int = 1) -> Coloring:
    return Coloring(start, tuple(rng.randint(1, r) for _ in range(n)), r)


def heavy_class_coloring(rng: random.Random, n: int, r: int, heavy_size: int) -> Coloring:
    """Random r-coloring of [1, n] in which one color class has heavy_size cells."""
    heavy = rng.randint(1, r)
    cells = rng.sample(range(1, n + 1), heavy_size)
    others = [c for c in range(1, r + 1) if c != heavy] or [heavy]
    cols = [rng.choice(others) for _ in range(n)]
    for p in cells:
        cols[p - 1] = heavy
    return Coloring(1, tuple(cols), r)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
