"""
Sector-restricted logical weights and effective-distance certificates.

RESTRICTED WEIGHT:
------------------
For a set S of qubits, the S-restricted weight of an X-type logical x is
|x_S|, and the quantity of interest is its minimum over all x in ker H_Z
that act nontrivially on the kept logicals (x . z != 0 for some kept Z
representative z). Gauge operators have zero signature against kept
logicals, so designating a sector as gauge removes its logicals from the
minimum. Z-type is symmetric.

Every x in ker H_Z is mapped to (x_S, signature). The images span a space
of dimension r; when 2^r fits the budget the minimum is exact by span
enumeration. Otherwise the images are turned into a classical problem on
S: the projection Y (a code on S), a check matrix for Y and a linear
signature map, solved by the bounded support search of ``distance``.

CERTIFICATES:
-------------
A gadget preserves the effective distance under noiseless permutations
when (a) it acts on the protected sector by a permutation and (b) every
nontrivial logical already has protected-sector weight at least the code
distance. Both are checked here; for quantum x quantum products only the
interval [max(d, d'), d d'] is reported.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from autgadgets.analysis.distance import (
    DEFAULT_BUDGET,
    bounded_search,
    combine,
    css_distance,
    distance,
    min_weight_in_span,
)
from autgadgets.analysis.products import as_left_sector
from autgadgets.analysis.validation import canonical_logical_basis
from autgadgets.models.bitmatrix import (
    BitMatrix,
    BitVector,
    hstack,
    independent_rows,
    kernel_basis,
    right_inverse,
)
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.css import CssCode, LogicalBasis
from autgadgets.models.gadget import Gadget, InvertibleCircuit
from autgadgets.models.permutation import Permutation
from autgadgets.models.product import ProductRecord

logger = logging.getLogger(__name__)

DEFAULT_CAP = 6


@dataclass
class SectorWeightReport:
    """
    Minimum restricted weight of nontrivial logicals of one Pauli type.

    Attributes:
        sector: Name of the restricting set ("L", "M", "L|rows L").
        pauli: "X" or "Z".
        achieved: Exact minimum, when ``exact``.
        lower: Certified lower bound.
        upper: Restricted weight of the lightest kept basis row.
        method: "full-coset", "bounded" or "none" (no kept logicals).
        certified: False when a bounded search ran out of budget.
        bound: Formula value this minimum is compared with, if any.
        witness: A logical attaining ``achieved``.
    """

    sector: str
    pauli: str
    achieved: Optional[int] = None
    lower: int = 0
    upper: Optional[int] = None
    method: str = "none"
    certified: bool = True
    bound: Optional[int] = None
    witness: Optional[BitVector] = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.achieved is not None

    @property
    def matches_bound(self) -> Optional[bool]:
        if self.bound is None:
            return None
        if self.exact:
            return self.achieved == self.bound
        return None

    def to_dict(self) -> Dict[str, object]:
        return {
            "sector": self.sector,
            "pauli": self.pauli,
            "bound": self.bound,
            "achieved": self.achieved,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "certified": self.certified,
            "witness": self.witness.support() if self.witness is not None else None,
        }


def _restrict(m: BitMatrix, positions: Sequence[int]) -> BitMatrix:
    return m.select_columns(positions)


def restricted_min_weight(
    code: CssCode,
    kept: LogicalBasis,
    positions: Sequence[int],
    pauli: str,
    label: str,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> SectorWeightReport:
    """Minimum |x restricted to positions| over nontrivial logicals of type ``pauli``."""
    if pauli == "X":
        checks, partners, reps = code.H_Z, kept.G_Z, kept.G_X
    elif pauli == "Z":
        checks, partners, reps = code.H_X, kept.G_X, kept.G_Z
    else:
        raise ValueError(f"pauli must be 'X' or 'Z', got {pauli!r}")
    if kept.k == 0:
        return SectorWeightReport(label, pauli, method="none")
    pos = list(positions)
    upper = int(_restrict(reps, pos).row_weights().min())
    kernel = kernel_basis(checks)
    images = hstack([_restrict(kernel, pos), kernel @ partners.T])
    chosen = independent_rows(images)
    images = images.select_rows(chosen)
    kernel = kernel.select_rows(chosen)
    r = images.rows
    if 2**r <= budget:
        weight_mask = BitVector.from_support(images.cols, range(len(pos)))
        require_mask = BitVector.from_support(images.cols, range(len(pos), images.cols))
        weight, combo = min_weight_in_span(images, weight_mask, require_mask, workers)
        assert weight is not None
        witness = combine(kernel, combo)
        logger.debug("%s %s: full-coset minimum %d over 2^%d images", label, pauli, weight, r)
        return SectorWeightReport(label, pauli, weight, weight, upper, "full-coset", True, witness=witness)
    return _bounded(label, pauli, images, kernel, len(pos), upper, budget, min(cap, upper))


def _bounded(
    label: str,
    pauli: str,
    images: BitMatrix,
    kernel: BitMatrix,
    width: int,
    upper: int,
    budget: int,
    cap: int,
) -> SectorWeightReport:
    projected = images.select_columns(range(width))
    signatures = images.select_columns(range(width, images.cols))
    basis_rows = independent_rows(projected)
    if len(basis_rows) < projected.rows:
        # some image vanishes on the sector yet acts nontrivially
        null = kernel_basis(projected.T)
        for row in null.iter_rows():
            combo = row.to_int()
            if (row.as_row() @ signatures).weight():
                return SectorWeightReport(label, pauli, 0, 0, upper, "bounded", True, witness=combine(kernel, combo))
    y_basis = projected.select_rows(basis_rows)
    y_kernel = kernel.select_rows(basis_rows)
    inverse = right_inverse(y_basis)
    assert inverse is not None
    sig_map = inverse @ signatures.select_rows(basis_rows)
    syndromes = kernel_basis(y_basis).to_int_columns()
    if not syndromes:
        syndromes = [0] * width
    support, searched, exhausted = bounded_search(syndromes, sig_map.to_int_rows(), cap, budget)
    if support is not None:
        y = BitVector.from_support(width, support)
        coeffs = y.as_row() @ inverse
        witness = combine(y_kernel, coeffs.row(0).to_int())
        w = len(support)
        logger.debug("%s %s: bounded minimum %d", label, pauli, w)
        return SectorWeightReport(label, pauli, w, w, upper, "bounded", True, witness=witness)
    logger.info("%s %s: no logical of restricted weight <= %d found", label, pauli, searched)
    if searched >= upper:
        return SectorWeightReport(label, pauli, upper, upper, upper, "bounded", True)
    return SectorWeightReport(label, pauli, None, searched + 1, upper, "bounded", not exhausted)


def sector_min_weight(
    p: ProductRecord,
    sector: str,
    pauli: str,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> SectorWeightReport:
    """Restricted minimum over one named sector of a record's code."""
    positions = p.code.sectors[sector].indices()
    return restricted_min_weight(p.code, p.kept, positions, pauli, sector, budget, cap, workers)


# ----------------------------------------------------------------------
# Formula checks
# ----------------------------------------------------------------------


@dataclass
class SectorCheckReport:
    """
    Restricted minima of both Pauli types against their formula values.

    Attributes:
        kind: Which check produced the report.
        record: Record name.
        reports: Per-Pauli sector weight reports.
        holds: Every exact minimum equals its bound and every lower bound
            is consistent with it; None when nothing was decided.
        note: Free-form remark ("no logicals", interval position).
    """

    kind: str
    record: str
    reports: Dict[str, SectorWeightReport] = field(default_factory=dict)
    holds: Optional[bool] = None
    note: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "record": self.record,
            "holds": self.holds,
            "note": self.note,
            "reports": {k: v.to_dict() for k, v in self.reports.items()},
        }


def exact_distance(code: ClassicalCode) -> int:
    report = distance(code)
    if report.value is None:
        raise ValueError(f"{code.name}: distance undetermined")
    return report.value


def quantum_distances(q: object, cap: int, budget: int) -> Tuple[int, int]:
    """(d_X, d_Z) of a quantum input, exact or the search fails loudly."""
    if isinstance(q, ProductRecord):
        code, basis = q.code, q.kept
    else:
        assert isinstance(q, CssCode)
        code, basis = q, canonical_logical_basis(q)
    dx = css_distance(code, "X", basis, cap, budget)
    dz = css_distance(code, "Z", basis, cap, budget)
    if dx.value is None or dz.value is None:
        raise ValueError(f"{code.name}: input distance exceeds the search cap {cap}")
    return dx.value, dz.value


def _judge(reports: Dict[str, SectorWeightReport]) -> Optional[bool]:
    verdicts = []
    for r in reports.values():
        if r.bound is None or r.method == "none":
            continue
        if r.exact:
            verdicts.append(r.achieved == r.bound)
        elif r.certified:
            verdicts.append(r.lower <= r.bound)
    if not verdicts:
        return None
    return all(verdicts)


def left_sector_distance_check(
    p: ProductRecord,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> SectorCheckReport:
    """
    Left-sector minima against d_X = d2, d_Z = d1 (hgp) or
    d_X = d_X(Q) d_c, d_Z = d_Z(Q) (qc).
    """
    left = as_left_sector(p)
    if p.kind == "hgp":
        c1, c2 = p.factors
        assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
        bounds = {"X": exact_distance(c2) if c2.k else 0, "Z": exact_distance(c1) if c1.k else 0}
    elif p.kind == "qc":
        q, c = p.factors
        assert isinstance(c, ClassicalCode)
        dx, dz = quantum_distances(q, max(cap, 8), budget)
        bounds = {"X": dx * exact_distance(c), "Z": dz}
    else:
        raise ValueError(f"left-sector check needs an hgp or qc record, got {p.kind}")
    report = SectorCheckReport("left-sector", p.name)
    if left.kept.k == 0:
        report.note = "no logicals"
        return report
    for pauli in ("X", "Z"):
        bound = bounds[pauli]
        r = sector_min_weight(left, "L", pauli, budget, max(cap, bound), workers)
        r.bound = bound
        report.reports[pauli] = r
    report.holds = _judge(report.reports)
    if report.holds is False:
        logger.warning("%s: left-sector minima disagree with the formula", p.name)
    return report


def protected_rows(p: ProductRecord) -> List[int]:
    """
    Qubits of the L sector of a qc record whose row index lies in the
    left sector of the quantum input.
    """
    if p.kind != "qc":
        raise ValueError(f"restricted rows need a qc record, got {p.kind}")
    q, c = p.factors
    if not isinstance(q, ProductRecord):
        raise ValueError("restricted rows need a product record as quantum input")
    inner = q.code.sectors["L"]
    outer = p.code.sectors["L"]
    return [outer.index(row, col) for row in inner.indices() for col in range(c.n)]


def restricted_row_weight_check(
    p: ProductRecord,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> SectorCheckReport:
    """Minima restricted to the protected rows of the left sector against d_X d_c and d_Z."""
    q, c = p.factors
    assert isinstance(c, ClassicalCode)
    positions = protected_rows(p)
    dx, dz = quantum_distances(q, max(cap, 8), budget)
    bounds = {"X": dx * exact_distance(c), "Z": dz}
    left = as_left_sector(p)
    report = SectorCheckReport("restricted-rows", p.name)
    if left.kept.k == 0:
        report.note = "no logicals"
        return report
    for pauli in ("X", "Z"):
        r = restricted_min_weight(
            left.code, left.kept, positions, pauli, "L|rows L", budget, max(cap, bounds[pauli]), workers
        )
        r.bound = bounds[pauli]
        report.reports[pauli] = r
    report.holds = _judge(report.reports)
    return report


def middle_sector_bounds_check(
    p: ProductRecord,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> SectorCheckReport:
    """
    Middle-sector minima of a qq record against [max(d, d'), d d'] per
    Pauli type. Records where in the interval each minimum lies.
    """
    if p.kind != "qq":
        raise ValueError(f"middle-sector check needs a qq record, got {p.kind}")
    report = SectorCheckReport("middle-sector", p.name)
    if p.kept.k == 0:
        report.note = "no logicals"
        return report
    a, b = p.factors
    da = quantum_distances(a, max(cap, 8), budget)
    db = quantum_distances(b, max(cap, 8), budget)
    notes = []
    verdicts = []
    for i, pauli in enumerate(("X", "Z")):
        low, high = max(da[i], db[i]), da[i] * db[i]
        r = sector_min_weight(p, "M", pauli, budget, cap, workers)
        r.bound = low
        report.reports[pauli] = r
        if r.exact:
            verdicts.append(low <= r.achieved <= high)
        elif r.certified:
            verdicts.append(r.lower <= high)
        where = f"{r.achieved}" if r.exact else f"[{r.lower},{r.upper}]"
        notes.append(f"{pauli}: {where} in [{low},{high}]")
    report.holds = all(verdicts) if verdicts else None
    report.note = "; ".join(notes)
    return report


# ----------------------------------------------------------------------
# Effective distance
# ----------------------------------------------------------------------


@dataclass
class EffectiveDistanceReport:
    """
    Structural certificate for one gadget.

    Attributes:
        gadget: Gadget provenance.
        record: Record name.
        protected: Description of the protected qubits.
        permutation_on_protected: Hypothesis (a).
        sector_equals_distance: Hypothesis (b), per Pauli type.
        distances: Code distances per Pauli type (exact or None).
        covered: Both hypotheses hold.
        d_eff: Certified effective distance per Pauli type, when covered.
        interval: For qq records, the [max, product] interval per Pauli type.
        reason: Why the certificate does or does not apply.
    """

    gadget: str
    record: str
    protected: str
    permutation_on_protected: bool
    sector_equals_distance: Dict[str, Optional[bool]] = field(default_factory=dict)
    distances: Dict[str, Optional[int]] = field(default_factory=dict)
    covered: bool = False
    d_eff: Dict[str, int] = field(default_factory=dict)
    interval: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    reason: str = ""

    def to_dict(self) -> Dict[str, object]:
        return {
            "gadget": self.gadget,
            "record": self.record,
            "protected": self.protected,
            "permutation_on_protected": self.permutation_on_protected,
            "sector_equals_distance": dict(self.sector_equals_distance),
            "distances": dict(self.distances),
            "covered": self.covered,
            "d_eff": dict(self.d_eff),
            "interval": {k: list(v) for k, v in self.interval.items()},
            "reason": self.reason,
        }


def _is_permutation(action: object) -> bool:
    return isinstance(action, Permutation) or (isinstance(action, InvertibleCircuit) and action.is_permutation())


def _protected_keys(g: Gadget, p: ProductRecord) -> Tuple[str, List[str]]:
    if p.kind == "qq":
        return "M", [k for k, _ in g.actions if k.split(".")[0] == "M"]
    q = p.factors[0]
    if p.kind == "qc" and isinstance(q, ProductRecord) and q.gauge.k:
        keys = [k for k, _ in g.actions if k == "L" or k.startswith("L.L")]
        return "L|rows L", keys
    return "L", [k for k, _ in g.actions if k.split(".")[0] == "L"]


def effective_distance_report(
    g: Gadget,
    p: ProductRecord,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_CAP,
    workers: Optional[int] = None,
) -> EffectiveDistanceReport:
    """Certify d_eff = d (hgp, qc) or the qq interval for a verified gadget."""
    protected, keys = _protected_keys(g, p)
    actions = dict(g.actions)
    permutation = bool(keys) and all(_is_permutation(actions[k]) for k in keys)
    report = EffectiveDistanceReport(g.name, p.name, protected, permutation)
    if not permutation:
        report.reason = "not covered by theorems: gadget is not a permutation on the protected sector"
        return report
    if p.kind == "qq":
        a, b = p.factors
        da = quantum_distances(a, max(cap, 8), budget)
        db = quantum_distances(b, max(cap, 8), budget)
        report.interval = {
            pauli: (max(da[i], db[i]), da[i] * db[i]) for i, pauli in enumerate(("X", "Z"))
        }
        report.reason = "interval only: quantum x quantum effective distance is not certified"
        return report
    left = as_left_sector(p)
    if protected == "L|rows L":
        check = restricted_row_weight_check(p, budget, cap, workers)
    else:
        check = left_sector_distance_check(p, budget, cap, workers)
    for pauli, sector_report in check.reports.items():
        d = css_distance(left.code, pauli, left.kept, max(cap, sector_report.upper or cap), budget)
        report.distances[pauli] = d.value
        equal = None
        if d.value is not None and sector_report.exact:
            equal = sector_report.achieved == d.value
        report.sector_equals_distance[pauli] = equal
        if equal:
            report.d_eff[pauli] = d.value
    report.covered = bool(report.sector_equals_distance) and all(
        v is True for v in report.sector_equals_distance.values()
    )
    report.reason = (
        "permutation on the protected sector and sector weight equals distance"
        if report.covered
        else "sector-restricted minimum undetermined or below the distance"
    )
    return report
