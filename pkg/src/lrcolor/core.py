"""Colorings of integer intervals and the monochromatic-pair violation test.

A coloring assigns colors 1..r to the positions of an interval
[start, start+len-1].  A *violation* for block size m is a pair of
monochromatic m-sets X, Y with every element of X before every element
of Y and 2*(x_m - x_1) <= y_m - x_1.  A coloring with no violation is
called an L(r)-coloring; everything in this package is built around
deciding that predicate and exhibiting certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

_BIG = 1 << 62


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class MSet:
    """Strictly increasing tuple of integer positions."""

    positions: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(self.positions)
        object.__setattr__(self, "positions", pos)
        if len(pos) < 1:
            raise ValueError("m-set must be nonempty")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError(f"m-set positions must be strictly increasing: {pos}")

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def int_i(self, i: int) -> int:
        """i-th element, 1-based."""
        if not 1 <= i <= len(self.positions):
            raise ValueError(f"index {i} out of range 1..{len(self.positions)}")
        return self.positions[i - 1]

    def first_k(self, k: int) -> tuple[int, ...]:
        """First min(k, n) elements."""
        return self.positions[: max(0, min(k, len(self.positions)))]

    def last_k(self, k: int) -> tuple[int, ...]:
        """Last min(k, n) elements."""
        n = len(self.positions)
        return self.positions[max(0, n - k):]

    @property
    def first(self) -> int:
        return self.positions[0]

    @property
    def last(self) -> int:
        return self.positions[-1]

    def precedes(self, other: "MSet") -> bool:
        """Every element of self before every element of other."""
        return self.last < other.first


@dataclass(frozen=True)
class Coloring:
    """Map from the interval [start, start+len(colors)-1] to colors 1..r."""

    start: int
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        cols = tuple(self.colors)
        object.__setattr__(self, "colors", cols)
        if self.start < 1:
            raise ValueError(f"start must be >= 1, got {self.start}")
        if not cols:
            raise ValueError("coloring must cover a nonempty interval")
        if self.r < 1:
            raise ValueError(f"color count must be >= 1, got {self.r}")
        bad = [c for c in cols if not 1 <= c <= self.r]
        if bad:
            raise ValueError(f"colors out of range 1..{self.r}: {bad[:5]}")

    def __len__(self):
        return len(self.colors)

    @property
    def end(self) -> int:
        return self.start + len(self.colors) - 1

    @property
    def interval(self) -> tuple[int, int]:
        return (self.start, self.end)

    def color_at(self, p: int) -> int:
        if not self.start <= p <= self.end:
            raise ValueError(f"position {p} outside [{self.start},{self.end}]")
        return self.colors[p - self.start]

    def translate(self, new_start: int) -> "Coloring":
        return Coloring(new_start, self.colors, self.r)

    def restrict(self, lo: int, hi: int) -> "Coloring":
        """Restriction to [lo, hi], which must lie inside the covered interval."""
        if not (self.start <= lo <= hi <= self.end):
            raise ValueError(
                f"[{lo},{hi}] not inside covered interval [{self.start},{self.end}]")
        return Coloring(lo, self.colors[lo - self.start: hi - self.start + 1], self.r)

    def with_r(self, r: int) -> "Coloring":
        return Coloring(self.start, self.colors, r)

    def to_dict(self) -> dict:
        return {"start": self.start, "r": self.r, "colors": list(self.colors)}

    @staticmethod
    def from_dict(d: dict) -> "Coloring":
        return Coloring(int(d["start"]), tuple(int(c) for c in d["colors"]), int(d["r"]))


@dataclass(frozen=True)
class Violation:
    """Certificate that a coloring is not an L(r)-coloring for block size m."""

    x: MSet
    y: MSet
    color_x: int
    color_y: int

    def __post_init__(self):
        if not self.x.precedes(self.y):
            raise ValueError(f"X must precede Y: {self.x.positions} vs "
                             f"{self.y.positions}")
        if 2 * (self.x.last - self.x.first) > self.y.last - self.x.first:
            raise ValueError("certificate does not satisfy the pair condition")

    def holds_for(self, coloring: Coloring, m: int) -> bool:
        """Re-check every certificate condition from scratch."""
        x, y = self.x.positions, self.y.positions
        if len(x) != m or len(y) != m:
            return False
        if any(coloring.color_at(p) != self.color_x for p in x):
            return False
        if any(coloring.color_at(p) != self.color_y for p in y):
            return False
        if x[-1] >= y[0]:
            return False
        return 2 * (x[-1] - x[0]) <= y[-1] - x[0]


@dataclass(frozen=True)
class IntervalTriple:
    """The canonical split [1, s] = I1 | I2 | I3 used by all constructions."""

    i1: tuple[int, int]
    i2: tuple[int, int]
    i3: tuple[int, int]

    @staticmethod
    def from_params(m: int, r: int, s: int) -> "IntervalTriple":
        if m < 2:
            raise ValueError(f"interval triple requires m >= 2, got m={m}")
        if s < 2 * r * (m - 1) + 1:
            raise ValueError(
                f"interval [1,{s}] too short: need s >= {2 * r * (m - 1) + 1}")
        q = r * (m - 1)
        return IntervalTriple((1, q + 1), (q + 2, 2 * q), (2 * q + 1, s))


# ---------------------------------------------------------------------------
# RLE and structured text formats


def parse_rle(text: str, start: int = 1, r: Optional[int] = None) -> Coloring:
    """Parse run-length tokens like "1^3 2^2" into a Coloring.

    Tokens are whitespace separated, each `c^k` or a bare `c` (k=1).
    A leading `@N` token sets the interval start (overriding `start`).
    The color count defaults to the largest color present; pass `r` to
    declare extra colors.
    """
    tokens = text.split()
    if tokens and tokens[0].startswith("@"):
        try:
            start = int(tokens[0][1:])
        except ValueError:
            raise ValueError(f"malformed start token {tokens[0]!r}")
        tokens = tokens[1:]
    if not tokens:
        raise ValueError("empty RLE input")
    colors = []
    for tok in tokens:
        c_txt, sep, k_txt = tok.partition("^")
        try:
            c = int(c_txt)
            k = int(k_txt) if sep else 1
        except ValueError:
            raise ValueError(f"malformed RLE token {tok!r}")
        if c < 1:
            raise ValueError(f"color must be >= 1 in token {tok!r}")
        if k < 1:
            raise ValueError(f"run length must be >= 1 in token {tok!r}")
        colors.extend([c] * k)
    rmax = max(colors)
    if r is None:
        r = rmax
    elif r < rmax:
        raise ValueError(f"declared r={r} below largest color {rmax}")
    return Coloring(start, tuple(colors), r)


def emit_rle(coloring: Coloring, with_start: bool = False) -> str:
    """Inverse of parse_rle; adjacent equal runs are merged."""
    out = []
    if with_start:
        out.append(f"@{coloring.start}")
    cols = coloring.colors
    i = 0
    while i < len(cols):
        j = i
        while j < len(cols) and cols[j] == cols[i]:
            j += 1
        out.append(f"{cols[i]}^{j - i}" if j - i > 1 else f"{cols[i]}")
        i = j
    return " ".join(out)


# ---------------------------------------------------------------------------
# verifier


def mono_positions(coloring: Coloring, color: int) -> tuple[int, ...]:
    """All positions carrying `color`, increasing; the class may be empty."""
    if not 1 <= color <= coloring.r:
        raise ValueError(f"color {color} out of range 1..{coloring.r}")
    s = coloring.start
    return tuple(p + s for p, c in enumerate(coloring.colors) if c == color)


def _scan(coloring: Coloring, m: int):
    """Position-by-position scan; yields (p, y1) whenever appending position p
    completes a potential violation (y_m = p), along with the live window state.

    State arrays are indexed by offset = p - start:
      win[q]   = (metric, x1, color) of the unique m-window ending at q, or None
      pmin[q]  = min window metric over windows ending at positions <= q
    """
    start = coloring.start
    occ: dict[int, list[int]] = {}
    n = len(coloring.colors)
    win = [None] * n
    pmin = [_BIG] * (n + 1)  # pmin[i] covers offsets < i
    for off, c in enumerate(coloring.colors):
        p = start + off
        lst = occ.setdefault(c, [])
        lst.append(p)
        mu = _BIG
        if len(lst) >= m:
            x1 = lst[-m]
            mu = 2 * p - x1
            win[off] = (mu, x1, c)
            y1 = x1  # the m-th-from-last occurrence is both y1 and the window x1
            if pmin[y1 - start] <= p:
                yield p, y1, c, occ, win, pmin
        pmin[off + 1] = min(pmin[off], mu)


def _certificate(coloring, m, p, y1, cy, occ, win) -> Violation:
    """Build the canonical certificate for the completing position p."""
    start = coloring.start
    best = None  # (x1, color, xm)
    for q in range(start, y1):
        w = win[q - start]
        if w is None:
            continue
        mu, x1, cx = w
        if mu <= p:
            key = (x1, cx, q)
            if best is None or key < best:
                best = key
    x1, cx, xm = best
    xs = [u for u in occ[cx] if x1 <= u <= xm]
    ys = occ[cy][-m:]
    return Violation(MSet(tuple(xs)), MSet(tuple(ys)), cx, cy)


def find_violation(coloring: Coloring, m: int) -> Optional[Violation]:
    """Decide L(r)-hood, returning a certificate if the coloring fails.

    The search is restricted to windows of m consecutive same-color
    occurrences on the X side (largest x_1 for a given x_m) and, per
    color, the last m occurrences up to y_m on the Y side; this loses no
    violations.  Among all violations the certificate minimizes
    (y_m, x_1, color_x, color_y), so outputs are reproducible.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    for p, y1, cy, occ, win, pmin in _scan(coloring, m):
        # p is the least possible y_m; occ holds exactly the positions <= p
        return _certificate(coloring, m, p, y1, cy, occ, win)
    return None


def is_L_coloring(coloring: Coloring, m: int) -> bool:
    """True iff no monochromatic pair X < Y satisfies 2(x_m-x_1) <= y_m-x_1."""
    return find_violation(coloring, m) is None


def violation_with_last(coloring: Coloring, m: int) -> Optional[Violation]:
    """Incremental re-check: violations whose Y ends at the final position.

    Assumes the coloring minus its last position is violation-free; under
    that precondition the result agrees with find_violation.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    last = None
    for hit in _scan(coloring, m):
        last = hit
    if last is None or last[0] != coloring.end:
        return None
    p, y1, cy, occ, win, _ = last
    return _certificate(coloring, m, p, y1, cy, occ, win)


def prop21_witness(coloring: Coloring, m: int) -> Optional[MSet]:
    """Monochromatic m-set inside I2 u I3 ending in I3, if one exists.

    Such a set certifies the coloring of [1, s] is not L(r) without any
    search over X.  Requires the coloring to cover [1, s] whole.
    """
    if coloring.start != 1:
        raise ValueError("prop21_witness applies to colorings of [1, s]")
    s = coloring.end
    triple = IntervalTriple.from_params(m, coloring.r, s)  # validates m, s
    lo2 = triple.i2[0]
    lo3 = triple.i3[0]
    best = None  # (y_m, color, positions)
    for color in range(1, coloring.r + 1):
        pos = [p for p in mono_positions(coloring, color) if p >= lo2]
        for i in range(m - 1, len(pos)):
            if pos[i] >= lo3:
                cand = (pos[i], color, tuple(pos[i - m + 1: i + 1]))
                if best is None or cand[:2] < best[:2]:
                    best = cand
                break
    return MSet(best[2]) if best else None


@dataclass(frozen=True)
class LemmaStatistics:
    """Per-color head/tail counts around the earliest m-th occurrence."""

    a: Optional[int]
    A: dict[int, int]
    B: dict[int, int]
    lemma42_sum: Optional[int]


def lemma_statistics(coloring: Coloring, m: int) -> LemmaStatistics:
    """a = min over colors of the m-th occurrence; A/B count the color class
    strictly before/after a; lemma42_sum = sum_c A_c + min(B_c, m-1).

    If no color occurs m times, a is reported absent and the sum undefined.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    classes = {c: mono_positions(coloring, c) for c in range(1, coloring.r + 1)}
    mths = [pos[m - 1] for pos in classes.values() if len(pos) >= m]
    if not mths:
        return LemmaStatistics(None, {c: len(p) for c, p in classes.items()},
                               {c: 0 for c in classes}, None)
    a = min(mths)
    A = {c: sum(1 for p in pos if p < a) for c, pos in classes.items()}
    B = {c: sum(1 for p in pos if p > a) for c, pos in classes.items()}
    total = sum(A[c] + min(B[c], m - 1) for c in classes)
    return LemmaStatistics(a, A, B, total)
