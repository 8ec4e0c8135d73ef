"""Knowledge base of affine bounds on the coloring threshold g(m, r).

A fact for color count r bounds g(m, r) between two affine forms
a*(m-1)+c valid for all m >= m_min; r=3 additionally carries the exact
nonlinear form 7(m-1)+1+ceil(m/2).  Three recursion rules (T43, T45,
T46) derive a fact for r from facts for smaller color counts:

  T43: if r(m-1) <= g(m,j) <= r(m-1)+n      then g(m,r) = (3r-j)(m-1)+1
  T45: if (r-2)(m-1) <= g(m,j)
       and g(m,j+1) <= (r+1)(m-1)+n         then g(m,r) in ((3r-j-1)(m-1), ..+n]
  T46: if (r-1)(m-1)+1 <= g(m,j) < r(m-1)   then g(m,r) in ((3r-j-1)(m-1)+1, (3r-j)(m-1)]

Hypotheses against the exact r<=4 knowledge are checked at full
precision.  For derived facts the checks run at the level of the
best-known upper form (the fact's "working value"): a bound-only fact is
treated as sitting at its upper envelope.  Under fully pessimistic
checking the recursion dies at r=16 with no rule applicable; the
working-value convention classifies every color count, the three rules
firing in golden-ratio proportions (about 38.2% / 23.6% / 38.2%).
Rules are tried in the fixed order T43, T46, T45 with the smallest
admissible j, which keeps the table deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

_SCAN_LIMIT = 10 ** 6


# ---------------------------------------------------------------------------
# affine bounds


@dataclass(frozen=True)
class AffineBound:
    """The quantity coeff*(m-1)+offset, asserted for all m >= m_min."""

    coeff: int
    offset: int
    m_min: int = 2

    def __post_init__(self):
        if self.coeff < 0:
            raise ValueError(f"coefficient must be >= 0, got {self.coeff}")
        if self.m_min < 1:
            raise ValueError(f"m_min must be >= 1, got {self.m_min}")

    def value(self, m: int) -> int:
        if m < self.m_min:
            raise ValueError(f"bound not asserted below m={self.m_min}")
        return self.coeff * (m - 1) + self.offset


def dominates(b1: AffineBound, b2: AffineBound, from_m: int) -> bool:
    """True iff b1's value is >= b2's value for every m >= from_m."""
    if from_m < max(b1.m_min, b2.m_min):
        raise ValueError(f"from_m={from_m} below the bounds' validity")
    if b1.coeff < b2.coeff:
        return False
    return (b1.coeff - b2.coeff) * (from_m - 1) + b1.offset - b2.offset >= 0


def _thr_aff(a1, c1, a2, c2, base):
    """Least t >= base with a1(m-1)+c1 >= a2(m-1)+c2 for all m >= t, or None."""
    if a1 < a2:
        return None
    if a1 == a2:
        return base if c1 >= c2 else None
    d = c2 - c1
    if d <= 0:
        return base
    return max(base, 1 + -(-d // (a1 - a2)))


# ---------------------------------------------------------------------------
# the r=3 closed form


def g_exact_r3(m: int) -> int:
    """Exact threshold for three colors: 7(m-1)+1+ceil(m/2), m >= 4."""
    if m < 4:
        raise ValueError(f"closed form asserted for m >= 4, got m={m}")
    return 7 * (m - 1) + 1 + (m + 1) // 2


def _thr_closed_ge(a, c, base=4):
    """Least t with g_exact_r3(m) >= a(m-1)+c for all m >= t.

    The difference has steps 7-a or 8-a, so it is monotone nondecreasing
    exactly when a <= 7; for a >= 8 it diverges to -inf and no t exists.
    """
    if a > 7:
        return None
    for m in range(base, _SCAN_LIMIT):
        if g_exact_r3(m) >= a * (m - 1) + c:
            return m
    return None


def _thr_closed_le(a, c, base=4):
    """Least t with a(m-1)+c >= g_exact_r3(m) for all m >= t (needs a >= 8)."""
    if a < 8:
        return None
    for m in range(base, _SCAN_LIMIT):
        if a * (m - 1) + c >= g_exact_r3(m):
            return m
    return None


def r3_lower_envelope(a: int) -> Optional[AffineBound]:
    """Tightest affine lower bound with coefficient a (a <= 7) on g(m,3)."""
    if a > 7:
        return None
    # difference g - a(m-1) is nondecreasing, so the minimum sits at m=4
    c = g_exact_r3(4) - a * 3
    return AffineBound(a, c, 4)


def r3_upper_envelope(a: int) -> Optional[AffineBound]:
    """Tightest affine upper bound with coefficient a (a >= 8) on g(m,3)."""
    if a < 8:
        return None
    c = max(g_exact_r3(m) - a * (m - 1) for m in range(4, 8))
    # difference is nonincreasing for a >= 8, so the max sits at small m
    return AffineBound(a, c, 4)


# ---------------------------------------------------------------------------
# facts


@dataclass(frozen=True)
class GFact:
    """Knowledge-base record for one color count."""

    r: int
    lower: AffineBound
    upper: AffineBound
    kind: str           # Exact | ConstGap | CoeffGap
    theorem: str        # Seed | T43 | T45 | T46
    j: Optional[int] = None
    n: Optional[int] = None
    closed: bool = False  # r=3 only: bounds are envelopes of g_exact_r3

    @property
    def m_min(self) -> int:
        return max(self.lower.m_min, self.upper.m_min)

    def __post_init__(self):
        if not self.closed and not dominates(self.upper, self.lower, self.m_min):
            raise ValueError(
                f"inconsistent fact for r={self.r}: upper below lower at m={self.m_min}")


def seed_kb() -> dict[int, GFact]:
    """Facts for r <= 4: the trivially known r=1 plus the three solved cases."""
    return {
        1: GFact(1, AffineBound(2, 2, 1), AffineBound(2, 2, 1), "Exact", "Seed"),
        2: GFact(2, AffineBound(5, 1, 2), AffineBound(5, 1, 2), "Exact", "Seed"),
        3: GFact(3, r3_lower_envelope(7), r3_upper_envelope(8), "Exact", "Seed",
                 closed=True),
        4: GFact(4, AffineBound(10, 1, 3), AffineBound(10, 1, 3), "Exact", "Seed"),
    }


def _ge_exactly(fact: GFact, a, c):
    """Least t with g(m, fact.r) >= a(m-1)+c for all m >= t, from verified
    knowledge (lower bound; exact values where known)."""
    if fact.closed:
        return _thr_closed_ge(a, c, fact.m_min)
    return _thr_aff(fact.lower.coeff, fact.lower.offset, a, c, fact.m_min)


def _ge_working(fact: GFact, a, c):
    """Like _ge_exactly but a bound-only fact is taken at its upper form."""
    if fact.closed:
        return _thr_closed_ge(a, c, fact.m_min)
    return _thr_aff(fact.upper.coeff, fact.upper.offset, a, c, fact.m_min)


def _le_exactly(fact: GFact, a, c):
    """Least t with g(m, fact.r) <= a(m-1)+c for all m >= t."""
    if fact.closed:
        return _thr_closed_le(a, c, fact.m_min)
    return _thr_aff(a, c, fact.upper.coeff, fact.upper.offset, fact.m_min)


def _min_n_le(fact: GFact, a):
    """Minimal n >= 1 with g(m, fact.r) <= a(m-1)+n eventually; (n, t) or None."""
    if fact.closed:
        t = _thr_closed_le(a, 1, fact.m_min)
        return (1, t) if t is not None else None
    if fact.upper.coeff > a:
        return None
    n = max(1, fact.upper.offset) if fact.upper.coeff == a else 1
    return n, _thr_aff(a, n, fact.upper.coeff, fact.upper.offset, fact.m_min)


# ---------------------------------------------------------------------------
# rules


def apply_T43(r: int, j: int, kb: dict[int, GFact]) -> Optional[GFact]:
    """Exact recursion: needs r(m-1) <= g(m,j) <= r(m-1)+n.

    Emits g(m,r) = (3r-j)(m-1)+1 for m >= max(hypothesis threshold, n+1).
    The lower half of the hypothesis is checked at the fact's working
    value; the upper half is fully verified.
    """
    if not 1 <= j < r or j not in kb:
        return None
    f = kb[j]
    t1 = _ge_working(f, r, 0)
    if t1 is None:
        return None
    hit = _min_n_le(f, r)
    if hit is None:
        return None
    n, t2 = hit
    m_min = max(t1, t2, n + 1)
    b = AffineBound(3 * r - j, 1, m_min)
    return GFact(r, b, b, "Exact", "T43", j=j, n=n)


def apply_T45(r: int, j: int, kb: dict[int, GFact]) -> Optional[GFact]:
    """Constant-width recursion: needs (r-2)(m-1) <= g(m,j) and
    g(m,j+1) <= (r+1)(m-1)+n.

    Emits (3r-j-1)(m-1) < g(m,r) <= (3r-j-1)(m-1)+n; exact when n=1.
    """
    if not (1 <= j and j + 1 < r) or j not in kb or j + 1 not in kb:
        return None
    t1 = _ge_working(kb[j], r - 2, 0)
    if t1 is None:
        return None
    hit = _min_n_le(kb[j + 1], r + 1)
    if hit is None:
        return None
    n, t2 = hit
    m_min = max(t1, t2)
    a = 3 * r - j - 1
    return GFact(r, AffineBound(a, 1, m_min), AffineBound(a, n, m_min),
                 "Exact" if n == 1 else "ConstGap", "T45", j=j, n=n)


def apply_T46(r: int, j: int, kb: dict[int, GFact]) -> Optional[GFact]:
    """Coefficient-bound recursion: needs (r-1)(m-1)+1 <= g(m,j) < r(m-1).

    Emits (3r-j-1)(m-1)+1 < g(m,r) <= (3r-j)(m-1), canonicalized to
    lower offset 2 and upper offset 0.  Against the exact r=3 form both
    hypothesis halves are checked precisely (the strict side first holds
    at m=6 when r=8).  For affine facts the check is at the level of the
    working coefficient: the fact's upper coefficient must equal r-1.
    The emitted m_min also satisfies upper >= lower (first true at m=3).
    """
    if not 1 <= j < r or j not in kb:
        return None
    f = kb[j]
    if f.closed:
        t1 = _thr_closed_ge(r - 1, 1, f.m_min)
        t2 = _thr_closed_le(r, -1, f.m_min)
        if t1 is None or t2 is None:
            return None
        m_min = max(t1, t2, 3)
    else:
        if f.upper.coeff != r - 1:
            return None
        m_min = max(f.m_min, 3)
    return GFact(r, AffineBound(3 * r - j - 1, 2, m_min),
                 AffineBound(3 * r - j, 0, m_min), "CoeffGap", "T46", j=j)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    """Verdict for one color count: the stored fact plus its derivation."""

    r: int
    kind: str            # Exact | ConstGap | CoeffGap | Unclassified
    theorem: str         # Seed | T43 | T45 | T46 | none
    j: Optional[int]
    n: Optional[int]
    lower: Optional[AffineBound]
    upper: Optional[AffineBound]
    m_min: Optional[int]
    trace: str

    @staticmethod
    def from_fact(f: GFact) -> "Classification":
        if f.theorem == "Seed":
            trace = f"seed fact for r={f.r}"
        else:
            trace = (f"{f.theorem}(j={f.j}"
                     + (f", n={f.n}" if f.n is not None else "")
                     + f") from fact r={f.j}; valid m >= {f.m_min}")
        return Classification(f.r, f.kind, f.theorem, f.j, f.n,
                              f.lower, f.upper, f.m_min, trace)


_UNCLASSIFIED = "Unclassified"


def _rule_candidates(r, kb, index):
    """Candidate (rule, j) pairs in decision order.

    index maps upper coefficient -> sorted color counts with that
    coefficient (affine facts only); None falls back to scanning all j.
    """
    if index is None:
        all_j = list(range(1, r))
        return [("T43", all_j), ("T46", all_j), ("T45", all_j)]
    t43 = list(index.get(r, []))
    t46 = list(index.get(r - 1, []))
    t45 = sorted(set(index.get(r - 2, []) + index.get(r - 1, [])))
    if r <= 10 and 3 < r:
        for lst in (t43, t46, t45):
            if 3 not in lst:
                lst.append(3)
        t45.append(2)  # pair (2, 3) reaches the closed form as the upper fact
    return [("T43", sorted(t43)), ("T46", sorted(t46)), ("T45", sorted(set(t45)))]


_RULES = {"T43": apply_T43, "T45": apply_T45, "T46": apply_T46}


def classify(r: int, kb: dict[int, GFact], _index=None) -> Classification:
    """Derive, store and report the fact for color count r.

    Seeded color counts report their seed.  Otherwise rules are tried in
    the order T43, T46, T45, each over ascending j; the first applicable
    one wins and its fact is inserted into kb.
    """
    if r in kb:
        return Classification.from_fact(kb[r])
    for rule, js in _rule_candidates(r, kb, _index):
        for j in js:
            fact = _RULES[rule](r, j, kb)
            if fact is not None:
                kb[r] = fact
                return Classification.from_fact(fact)
    return Classification(r, _UNCLASSIFIED, "none", None, None, None, None, None,
                          f"no rule applicable at r={r}")


@dataclass(frozen=True)
class ClassificationTable:
    """classify_all output: verdicts for r in [2, R] plus both breakdowns."""

    R: int
    rows: dict[int, Classification]
    by_kind: dict[str, int]
    by_theorem: dict[str, int]

    def proportions(self, breakdown: dict[str, int]) -> dict[str, float]:
        denom = self.R - 1
        return {k: 100.0 * v / denom for k, v in breakdown.items()}


def classify_all(R: int) -> ClassificationTable:
    """Classify every color count from 2 to R (deterministic, integer-only)."""
    if R < 2:
        raise ValueError(f"R must be >= 2, got {R}")
    kb = seed_kb()
    index: dict[int, list[int]] = {}
    for rr, f in kb.items():
        if not f.closed:
            index.setdefault(f.upper.coeff, []).append(rr)
    rows = {}
    by_kind: dict[str, int] = {}
    by_theorem: dict[str, int] = {}
    for r in range(2, R + 1):
        verdict = classify(r, kb, _index=index)
        rows[r] = verdict
        by_kind[verdict.kind] = by_kind.get(verdict.kind, 0) + 1
        by_theorem[verdict.theorem] = by_theorem.get(verdict.theorem, 0) + 1
        f = kb.get(r)
        if f is not None and not f.closed:
            index.setdefault(f.upper.coeff, []).append(r)
    return ClassificationTable(R, rows, by_kind, by_theorem)


def classify_up_to(r: int) -> dict[int, GFact]:
    """Knowledge base holding facts for every color count up to r."""
    kb = seed_kb()
    index: dict[int, list[int]] = {}
    for rr, f in kb.items():
        if not f.closed:
            index.setdefault(f.upper.coeff, []).append(rr)
    for rr in range(5, r + 1):
        classify(rr, kb, _index=index)
        f = kb.get(rr)
        if f is not None and not f.closed:
            index.setdefault(f.upper.coeff, []).append(rr)
    return kb


# ---------------------------------------------------------------------------
# integer families solved exactly by the recursion


def fib(n: int) -> int:
    """Fibonacci numbers with f0=0, f1=1, extended to f(-1)=1, f(-2)=-1."""
    if n < -2:
        raise ValueError(f"fib not defined below -2, got {n}")
    if n == -2:
        return -1
    if n == -1:
        return 1
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FamilySpec:
    """Family r_n = 3 r_{n-1} - r_{n-2} with a Fibonacci closed form."""

    name: str
    r0: int
    r1: int
    closed_form: str

    def closed_value(self, n: int) -> int:
        if self.name == "A":
            return fib(2 * n + 3)
        if self.name == "B":
            return 2 * fib(2 * n + 3)
        if self.name == "C":
            return 18 * fib(2 * n) - 7 * fib(2 * n - 2)
        if self.name == "D":
            return 23 * fib(2 * n) - 9 * fib(2 * n - 2)
        raise ValueError(f"unknown family {self.name}")

    def members(self, R: int) -> list[int]:
        out = [self.r0, self.r1]
        while 3 * out[-1] - out[-2] <= R:
            out.append(3 * out[-1] - out[-2])
        for n, v in enumerate(out):
            assert v == self.closed_value(n), (self.name, n, v)
        return [v for v in out if v <= R]


FAMILIES = (
    FamilySpec("A", 2, 5, "f(2n+3)"),
    FamilySpec("B", 4, 10, "2*f(2n+3)"),
    FamilySpec("C", 7, 18, "18*f(2n)-7*f(2n-2)"),
    FamilySpec("D", 9, 23, "23*f(2n)-9*f(2n-2)"),
)


def families(R: int) -> list[tuple[FamilySpec, list[int]]]:
    """The four exactly-solved families with their members up to R."""
    return [(spec, spec.members(R)) for spec in FAMILIES]


# ---------------------------------------------------------------------------
# report output


CSV_COLUMNS = ("r", "kind", "theorem", "j", "lower_coeff", "lower_off",
               "upper_coeff", "upper_off", "m_min")


def table_to_csv(table: ClassificationTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in range(2, table.R + 1):
        v = table.rows[r]
        if v.kind == _UNCLASSIFIED:
            w.writerow([r, v.kind, "", "", "", "", "", "", ""])
        else:
            w.writerow([r, v.kind, v.theorem, v.j if v.j is not None else "",
                        v.lower.coeff, v.lower.offset,
                        v.upper.coeff, v.upper.offset, v.m_min])
    return buf.getvalue()


def table_summary(table: ClassificationTable) -> dict:
    fam = {spec.name: {"initial": [spec.r0, spec.r1],
                       "closed_form": spec.closed_form,
                       "members": members}
           for spec, members in families(table.R)}
    return {
        "R": table.R,
        "denominator": table.R - 1,
        "counts_by_theorem": dict(sorted(table.by_theorem.items())),
        "percent_by_theorem": {k: round(v, 4) for k, v in
                               sorted(table.proportions(table.by_theorem).items())},
        "counts_by_kind": dict(sorted(table.by_kind.items())),
        "percent_by_kind": {k: round(v, 4) for k, v in
                            sorted(table.proportions(table.by_kind).items())},
        "unclassified": sorted(r for r, v in table.rows.items()
                               if v.kind == _UNCLASSIFIED),
        "families": fam,
    }


def summary_to_json(table: ClassificationTable) -> str:
    return json.dumps(table_summary(table), indent=2, sort_keys=False) + "\n"
