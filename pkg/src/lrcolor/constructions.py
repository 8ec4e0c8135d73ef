"""Builders for the explicit extremal colorings.

Each builder returns the coloring on the sub-interval where it is
naturally defined; `extend_full` completes a coloring of I2 u I3 to all
of [1, s] via the I1 extension, after which the core verifier should
accept it.  `witness_for` composes the builders recursively to produce a
longest-known violation-free coloring for any classified color count.
"""

from __future__ import annotations

from .core import Coloring, IntervalTriple, is_L_coloring


def _runs_to_colors(runs):
    out = []
    for color, k in runs:
        if k < 0:
            raise ValueError(f"negative run length {k} for color {color}")
        out.extend([color] * k)
    return tuple(out)


def lower_string(r: int, m: int) -> Coloring:
    """The explicit lower-bound string for r in {2, 3, 4}.

    Intervals are the ones the bound is proved on: [2m, 5m-5] for r=2,
    [3m-1, 7m+ceil(m/2)-7] for r=3, [4m-2, 10m-10] for r=4.
    """
    if r == 2:
        if m < 2:
            raise ValueError(f"r=2 string requires m >= 2, got m={m}")
        runs = [(1, 2 * m - 3), (2, m - 1)]
        start, end = 2 * m, 5 * m - 5
    elif r == 3:
        if m < 4:
            raise ValueError(f"r=3 string requires m >= 4, got m={m}")
        half_dn, half_up = m // 2, (m + 1) // 2
        runs = [(1, m - half_dn - 2), (2, half_dn - 1), (1, 2 * m - 1),
                (2, half_up), (3, m - 1)]
        start, end = 3 * m - 1, 7 * m + half_up - 7
    elif r == 4:
        if m < 3:
            raise ValueError(f"r=4 string requires m >= 3, got m={m}")
        runs = [(1, m - 3), (2, m - 1), (1, 2 * m - 1), (3, m - 1), (4, m - 1)]
        start, end = 4 * m - 2, 10 * m - 10
    else:
        raise ValueError(f"no lower-bound string for r={r}")
    colors = _runs_to_colors(runs)
    assert len(colors) == end - start + 1
    return Coloring(start, colors, r)


def _check_inner(inner: Coloring, lo: int, hi: int, m: int, r: int, what: str):
    if inner.interval != (lo, hi):
        raise ValueError(
            f"{what} must cover exactly [{lo},{hi}], got {inner.interval}")
    if max(inner.colors) > r:
        raise ValueError(f"{what} uses colors above {r}")
    if not is_L_coloring(inner, m):
        raise ValueError(f"{what} is not violation-free for m={m}")


def extend_I1(inner: Coloring, m: int, r: int) -> Coloring:
    """Extend a violation-free coloring of I2 leftward over I1.

    Positions 1 and r(m-1)+1 take the color c that is deficient in the
    inner coloring (smallest such id); the first m-1 occurrences of every
    color are copied down by r(m-1); remaining I1 cells are filled left
    to right with the least color still below m-1 occurrences in
    [1, r(m-1)].  Every color class then meets [1, r(m-1)] exactly m-1
    times, which is what makes the result violation-free.
    """
    q = r * (m - 1)
    if q < 2:
        raise ValueError(f"extension needs r(m-1) >= 2, got {q}")
    _check_inner(inner, q + 2, 2 * q, m, r, "inner coloring")
    counts = {t: 0 for t in range(1, r + 1)}
    for col in inner.colors:
        counts[col] += 1
    c = min(t for t in range(1, r + 1) if counts[t] < m - 1)

    out = [0] * (2 * q)  # 1-based positions 1..2q at offsets 0..2q-1
    out[0] = c
    out[q] = c  # position q+1
    for x in range(q + 2, 2 * q + 1):
        out[x - 1] = inner.color_at(x)
    seen = {t: 0 for t in range(1, r + 1)}
    for x in range(q + 2, 2 * q + 1):
        t = inner.color_at(x)
        seen[t] += 1
        if seen[t] <= m - 1:
            out[x - q - 1] = t

    filled = {t: 0 for t in range(1, r + 1)}
    for x in range(1, q + 1):
        if out[x - 1]:
            filled[out[x - 1]] += 1
    for x in range(1, q + 1):
        if not out[x - 1]:
            i = min(t for t in range(1, r + 1) if filled[t] < m - 1)
            out[x - 1] = i
            filled[i] += 1
    assert all(v == m - 1 for v in filled.values())
    return Coloring(1, tuple(out), r)


def extend_full(inner: Coloring, m: int, r: int) -> Coloring:
    """Complete a coloring of I2 u I3 to [1, s].

    The I2 part must be violation-free and every color used in I3 may
    occur at most m-1 times in I2 u I3; the I1 part comes from
    extend_I1.
    """
    q = r * (m - 1)
    s = inner.end
    if inner.start != q + 2:
        raise ValueError(
            f"inner must start at r(m-1)+2 = {q + 2}, got {inner.start}")
    if s < 2 * q + 1:
        raise ValueError(f"inner must reach into I3 (end >= {2 * q + 1}, got {s})")
    IntervalTriple.from_params(m, r, s)
    i2part = inner.restrict(q + 2, 2 * q)
    counts = {}
    for col in inner.colors:
        counts[col] = counts.get(col, 0) + 1
    i3colors = {inner.color_at(x) for x in range(2 * q + 1, s + 1)}
    heavy = sorted(t for t in i3colors if counts[t] > m - 1)
    if heavy:
        raise ValueError(
            f"colors {heavy} appear in I3 but more than m-1 = {m - 1} times in I2 u I3")
    left = extend_I1(i2part, m, r)  # validates L-hood of the I2 part
    return Coloring(1, left.colors + inner.colors[2 * q + 1 - inner.start:], r)


def _blocks(m: int, r: int, base_color: int, count: int):
    """count blocks of width m-1 after 2r(m-1), block i colored base_color+i."""
    cols = []
    for i in range(1, count + 1):
        cols.extend([base_color + i] * (m - 1))
    return cols


def build_T43(m: int, r: int, j: int, inner_j: Coloring) -> Coloring:
    """Recursion witness: inner L(j)-coloring on I2 plus r-j fresh blocks.

    Yields a coloring of [r(m-1)+2, (3r-j)(m-1)] whose full extension
    witnesses g(m,r) > (3r-j)(m-1).
    """
    if not 1 <= j < r:
        raise ValueError(f"need 1 <= j < r, got j={j}, r={r}")
    q = r * (m - 1)
    _check_inner(inner_j, q + 2, 2 * q, m, j, "inner_j")
    cols = list(inner_j.colors) + _blocks(m, r, j, r - j)
    return Coloring(q + 2, tuple(cols), r)


def build_T45(m: int, r: int, j: int, inner_j: Coloring) -> Coloring:
    """Recursion witness with a padding color j+1 wrapped around inner_j.

    inner_j lives on [(r+1)(m-1)+2, (2r-1)(m-1)]; color j+1 pads m-1
    positions on each side to fill I2, then r-j-1 fresh blocks follow.
    Witnesses g(m,r) > (3r-j-1)(m-1) after full extension.
    """
    if not (1 <= j and j + 1 < r):
        raise ValueError(f"need 1 <= j and j+1 < r, got j={j}, r={r}")
    w = m - 1
    lo, hi = (r + 1) * w + 2, (2 * r - 1) * w
    if lo > hi:
        raise ValueError(f"inner interval [{lo},{hi}] empty at m={m}, r={r}")
    _check_inner(inner_j, lo, hi, m, j, "inner_j")
    cols = [j + 1] * w + list(inner_j.colors) + [j + 1] * w
    cols += _blocks(m, r, j + 1, r - j - 1)
    return Coloring(r * w + 2, tuple(cols), r)


def build_T46(m: int, r: int, j: int, inner_j: Coloring) -> Coloring:
    """Bound witness: short j+1 pad, inner on [(r+1)(m-1)+1, 2r(m-1)],
    fresh blocks, and a final singleton colored j+1.

    Witnesses g(m,r) > (3r-j-1)(m-1)+1 after full extension.
    """
    if not 1 <= j < r:
        raise ValueError(f"need 1 <= j < r, got j={j}, r={r}")
    w = m - 1
    lo, hi = (r + 1) * w + 1, 2 * r * w
    if lo > hi:
        raise ValueError(f"inner interval [{lo},{hi}] empty at m={m}, r={r}")
    _check_inner(inner_j, lo, hi, m, j, "inner_j")
    cols = [j + 1] * (w - 1) + list(inner_j.colors)
    cols += _blocks(m, r, j + 1, r - j - 1)
    cols.append(j + 1)
    return Coloring(r * w + 2, tuple(cols), r)


# ---------------------------------------------------------------------------
# recursive witnesses


def seed_witness(m: int, r: int) -> Coloring:
    """Longest known violation-free coloring of [1, L] for r <= 4."""
    if r == 1:
        if m < 1:
            raise ValueError("m must be >= 1")
        return Coloring(1, (1,) * (2 * m - 1), 1)
    if r in (2, 3, 4):
        return extend_full(lower_string(r, m), m, r)
    raise ValueError(f"no seed witness for r={r}")


def _inner_from_witness(m: int, j: int, lo: int, hi: int) -> Coloring:
    wit = witness_for(m, j)
    need = hi - lo + 1
    if len(wit) < need:
        raise ValueError(
            f"known witness for r={j} has length {len(wit)} < {need}; "
            f"the recursion hypothesis is not constructively available here")
    return wit.restrict(1, need).translate(lo)


def witness_for(m: int, r: int) -> Coloring:
    """Violation-free coloring of [1, L] with L the engine's lower bound for r.

    Seeds handle r <= 4; larger r follow the classification trace,
    building the inner coloring recursively.  Raises if the engine's
    classification for some intermediate r rests on an upper bound only
    (no constructive witness is available there).
    """
    from . import engine  # deferred: engine has no dependency on this module

    if r <= 4:
        return seed_witness(m, r)
    fact = engine.classify_up_to(r)[r]
    j = fact.j
    w = m - 1
    if fact.theorem == "T43":
        inner = _inner_from_witness(m, j, r * w + 2, 2 * r * w)
        part = build_T43(m, r, j, inner)
    elif fact.theorem == "T45":
        inner = _inner_from_witness(m, j, (r + 1) * w + 2, (2 * r - 1) * w)
        part = build_T45(m, r, j, inner)
    elif fact.theorem == "T46":
        inner = _inner_from_witness(m, j, (r + 1) * w + 1, 2 * r * w)
        part = build_T46(m, r, j, inner)
    else:
        raise ValueError(f"no construction for classification {fact.theorem}")
    return extend_full(part, m, r)
