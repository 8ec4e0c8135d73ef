"""Tools for interval colorings avoiding close monochromatic pairs.

Core objects: colorings of [start, end] with colors 1..r, the violation
predicate (two monochromatic m-sets X before Y with
2(x_m-x_1) <= y_m-x_1) and its certificates, explicit extremal
constructions, an exhaustive search oracle for the threshold g(m, r),
and a recursion engine classifying g(m, r) for every color count.
"""

from .core import (
    Coloring,
    IntervalTriple,
    LemmaStatistics,
    MSet,
    Violation,
    emit_rle,
    find_violation,
    is_L_coloring,
    lemma_statistics,
    mono_positions,
    parse_rle,
    prop21_witness,
    violation_with_last,
)
from .constructions import (
    build_T43,
    build_T45,
    build_T46,
    extend_I1,
    extend_full,
    lower_string,
    seed_witness,
    witness_for,
)
from .search import (
    Budget,
    SearchBudgetExceeded,
    SearchResult,
    compute_g,
    compute_g_by_enumeration,
    exists_by_enumeration,
    exists_L_coloring,
    prune_hints,
)
from .engine import (
    AffineBound,
    Classification,
    ClassificationTable,
    FAMILIES,
    FamilySpec,
    GFact,
    apply_T43,
    apply_T45,
    apply_T46,
    classify,
    classify_all,
    classify_up_to,
    dominates,
    families,
    fib,
    g_exact_r3,
    seed_kb,
    table_summary,
    table_to_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
