"""
Minimum-weight searches for classical and CSS codes.

Two strategies, chosen by size:

SPAN ENUMERATION:
-----------------
When a basis has r rows and 2^r fits in the budget, every combination is
formed. The rows are split into a low part (at most 16 rows) whose full
span is tabulated once, and a high part whose combinations are XORed
onto the table chunk by chunk. Popcounts go through ``np.bitwise_count``.
Chunks may run on worker threads; the minimum is reduced by (weight,
combination index) so the witness does not depend on scheduling.

BOUNDED SUPPORT SEARCH:
-----------------------
Otherwise supports of weight w = 1, 2, ..., cap are tried in order. For
each (w-1)-subset the syndrome is XORed from column integers and the last
position is looked up in a syndrome -> columns table. A hit at weight w
is exact (all lighter supports were exhausted). Exhausting the cap gives
the certified lower bound cap + 1; exhausting the budget first gives an
uncertified report.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from autgadgets.models.bitmatrix import BitMatrix, BitVector
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.css import CssCode, LogicalBasis

logger = logging.getLogger(__name__)

DEFAULT_CAP = 4
DEFAULT_BUDGET = 2**22
LOW_BITS = 16


@dataclass
class DistanceReport:
    """
    Outcome of one minimum-weight search.

    Attributes:
        label: What was searched, e.g. "d", "d_perp", "d_X".
        value: The exact minimum when ``exact``; otherwise None.
        exact: True when value is the true minimum.
        lower: Certified lower bound (equals value when exact).
        upper: Best known upper bound, e.g. a logical basis row weight.
        method: "enumeration", "bounded" or "none".
        certified: False when the budget ran out before the cap.
        witness: A minimum-weight vector, when one was found.
    """

    label: str
    value: Optional[int] = None
    exact: bool = False
    lower: int = 0
    upper: Optional[int] = None
    method: str = "none"
    certified: bool = True
    witness: Optional[BitVector] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "value": self.value,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "certified": self.certified,
            "witness": self.witness.support() if self.witness is not None else None,
        }

    def interval(self) -> Tuple[int, Optional[int]]:
        if self.exact and self.value is not None:
            return (self.value, self.value)
        return (self.lower, self.upper)


# ----------------------------------------------------------------------
# Span enumeration
# ----------------------------------------------------------------------


def _span_table(rows: NDArray[np.uint64]) -> NDArray[np.uint64]:
    """All 2^r combinations of r packed rows; entry i combines the rows set in i."""
    table = np.zeros((1, rows.shape[1]), dtype=rows.dtype)
    for row in rows:
        table = np.concatenate([table, table ^ row])
    return table


def min_weight_in_span(
    rows: BitMatrix,
    weight_mask: Optional[BitVector] = None,
    require_mask: Optional[BitVector] = None,
    workers: Optional[int] = None,
) -> Tuple[Optional[int], int]:
    """
    Minimum weight over the span of ``rows``.

    Args:
        rows: r x n basis (need not be independent).
        weight_mask: Only these columns count toward the weight.
        require_mask: A combination counts only if it is nonzero on these
            columns; defaults to "nonzero anywhere".
        workers: Threads for the high-part chunks.

    Returns:
        (minimum weight or None if no admissible combination, combination
        bitmask of the first minimizer).
    """
    words = rows.words
    r = rows.rows
    every = np.full(words.shape[1], np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
    wmask = weight_mask.words if weight_mask is not None else every
    rmask = require_mask.words if require_mask is not None else every
    low = min(r, LOW_BITS)
    table = _span_table(words[:low])
    high_rows = words[low:]
    high_count = 2 ** (r - low)

    def chunk(start: int, stop: int) -> Tuple[int, int]:
        best = (np.iinfo(np.int64).max, -1)
        for h in range(start, stop):
            offset = np.zeros(words.shape[1], dtype=np.uint64)
            for bit in range(r - low):
                if (h >> bit) & 1:
                    offset ^= high_rows[bit]
            combos = table ^ offset
            admissible = (combos & rmask).any(axis=1)
            if not admissible.any():
                continue
            weights = np.bitwise_count(combos & wmask).sum(axis=1).astype(np.int64)
            weights[~admissible] = np.iinfo(np.int64).max
            i = int(np.argmin(weights))
            candidate = (int(weights[i]), (h << low) | i)
            if candidate < best:
                best = candidate
        return best

    bounds = np.linspace(0, high_count, num=min(high_count, max(1, (workers or 1) * 4)) + 1, dtype=np.int64)
    spans = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    if workers is not None and workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: chunk(*s), spans))
    else:
        results = [chunk(*s) for s in spans]
    weight, combo = min(results)
    if combo < 0:
        return None, 0
    return weight, combo


def combine(rows: BitMatrix, combo: int) -> BitVector:
    out = np.zeros(rows.words.shape[1], dtype=np.uint64)
    for i in range(rows.rows):
        if (combo >> i) & 1:
            out ^= rows.words[i]
    return BitVector(out, rows.cols)


# ----------------------------------------------------------------------
# Bounded support search
# ----------------------------------------------------------------------


def bounded_search(
    syndromes: Sequence[int],
    signatures: Optional[Sequence[int]],
    cap: int,
    budget: int = DEFAULT_BUDGET,
    positions: Optional[Sequence[int]] = None,
) -> Tuple[Optional[Tuple[int, ...]], int, bool]:
    """
    Lightest support with zero syndrome and nonzero signature.

    Args:
        syndromes: Per position, the check-matrix column as an integer.
        signatures: Per position, the pairing with the logical basis as an
            integer; None means any nonzero vector qualifies.
        cap: Largest support weight to try.
        budget: Maximum number of (w-1)-subsets examined overall.
        positions: Restrict supports to these positions.

    Returns:
        (support or None, last weight fully searched, budget_exhausted).
    """
    pos = list(positions) if positions is not None else list(range(len(syndromes)))
    lookup: Dict[int, List[int]] = {}
    for p in pos:
        lookup.setdefault(syndromes[p], []).append(p)
    spent = 0
    searched = 0
    for w in range(1, cap + 1):
        cost = comb(len(pos), w - 1)
        if spent + cost > budget:
            return None, searched, True
        spent += cost
        for head in combinations(pos, w - 1):
            s = 0
            sig = 0
            for p in head:
                s ^= syndromes[p]
                if signatures is not None:
                    sig ^= signatures[p]
            last = head[-1] if head else -1
            for j in lookup.get(s, ()):
                if j <= last:
                    continue
                if signatures is None or sig ^ signatures[j]:
                    return head + (j,), w, False
        searched = w
    return None, searched, False


# ----------------------------------------------------------------------
# Classical codes
# ----------------------------------------------------------------------


def distance(
    code: ClassicalCode,
    cap: int = 6,
    budget: int = DEFAULT_BUDGET,
    workers: Optional[int] = None,
    label: str = "d",
) -> DistanceReport:
    """Minimum nonzero codeword weight, exact when 2^k fits the budget."""
    if code.k == 0:
        return DistanceReport(label, method="none", exact=True)
    g = code.G
    upper = int(g.row_weights().min())
    if 2**code.k <= budget:
        weight, combo = min_weight_in_span(g, workers=workers)
        assert weight is not None
        return DistanceReport(label, weight, True, weight, weight, "enumeration", True, combine(g, combo))
    logger.info("%s: k=%d too large to enumerate, bounded search to weight %d", code.name, code.k, cap)
    support, searched, exhausted = bounded_search(code.H.to_int_columns(), None, cap, budget)
    if support is not None:
        w = len(support)
        return DistanceReport(label, w, True, w, w, "bounded", True, BitVector.from_support(code.n, support))
    return DistanceReport(label, None, False, searched + 1, upper, "bounded", not exhausted)


def dual_distance(code: ClassicalCode, cap: int = 6, budget: int = DEFAULT_BUDGET, workers: Optional[int] = None) -> DistanceReport:
    """Distance of the code spanned by the rows of H."""
    dual = ClassicalCode(code.G if code.k else BitMatrix.zeros(0, code.n), f"{code.name}^perp")
    return distance(dual, cap, budget, workers, label="d_perp")


# ----------------------------------------------------------------------
# CSS codes
# ----------------------------------------------------------------------


def css_distance(
    code: CssCode,
    pauli: str,
    basis: LogicalBasis,
    cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
) -> DistanceReport:
    """
    Lightest nontrivial logical of one Pauli type.

    X-type logicals lie in ker H_Z and pair nontrivially with some Z
    representative of ``basis``; Z-type symmetrically. The upper bound is
    the lightest representative in ``basis``.
    """
    label = f"d_{pauli}"
    if basis.k == 0:
        return DistanceReport(label, method="none", exact=True)
    if pauli == "X":
        checks, partners, reps = code.H_Z, basis.G_Z, basis.G_X
    elif pauli == "Z":
        checks, partners, reps = code.H_X, basis.G_X, basis.G_Z
    else:
        raise ValueError(f"pauli must be 'X' or 'Z', got {pauli!r}")
    upper = int(reps.row_weights().min())
    support, searched, exhausted = bounded_search(
        checks.to_int_columns(), partners.to_int_columns(), min(cap, upper), budget
    )
    if support is not None:
        w = len(support)
        logger.debug("%s %s = %d", code.name, label, w)
        return DistanceReport(label, w, True, w, w, "bounded", True, BitVector.from_support(code.n, support))
    return DistanceReport(label, None, False, searched + 1, upper, "bounded", not exhausted)


def distance_x(code: CssCode, basis: LogicalBasis, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> DistanceReport:
    return css_distance(code, "X", basis, cap, budget)


def distance_z(code: CssCode, basis: LogicalBasis, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> DistanceReport:
    return css_distance(code, "Z", basis, cap, budget)
