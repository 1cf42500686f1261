"""Product codes together with their per-sector logical bases."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple, Union

from autgadgets.models.bitmatrix import vstack
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.css import CssCode, LogicalBasis

PRODUCT_KINDS = ("hgp", "qc", "qq")


@dataclass(frozen=True, eq=False)
class ProductRecord:
    """
    A product code with the bookkeeping needed to lift automorphisms.

    Attributes:
        kind: "hgp", "qc" or "qq".
        code: The resulting CSS code (sector layout attached).
        factors: The two inputs, classical codes or quantum codes/records.
        kept: Logical basis of the information-carrying logicals.
        gauge: Logical basis of the logicals designated as gauge.
        sector_bases: Canonical basis per sector, before gauge designation.
        gauge_sectors: Sectors whose canonical logicals are gauge.
        inherited_gauge: Gauge logicals carried over from a gauge-designated
            input; always part of ``gauge``.
    """

    kind: str
    code: CssCode
    factors: Tuple[Union[ClassicalCode, CssCode, "ProductRecord"], ...]
    kept: LogicalBasis
    gauge: LogicalBasis
    sector_bases: Dict[str, LogicalBasis] = field(default_factory=dict)
    gauge_sectors: FrozenSet[str] = frozenset()
    inherited_gauge: Optional[LogicalBasis] = None

    def __post_init__(self) -> None:
        if self.kind not in PRODUCT_KINDS:
            raise ValueError(f"unknown product kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k_total(self) -> int:
        return self.kept.k + self.gauge.k

    @property
    def name(self) -> str:
        return self.code.name

    def full_basis(self) -> LogicalBasis:
        """Kept logicals followed by gauge logicals."""
        if self.gauge.k == 0:
            return self.kept
        return LogicalBasis(
            vstack([self.kept.G_X, self.gauge.G_X]),
            vstack([self.kept.G_Z, self.gauge.G_Z]),
            self.kept.labels + self.gauge.labels if self.kept.labels and self.gauge.labels else (),
        )

    def basis(self, sector: str) -> LogicalBasis:
        return self.sector_bases[sector]

    def with_gauge(self, sectors: FrozenSet[str]) -> ProductRecord:
        """
        Re-designate which sectors carry gauge logicals.

        Sector bases are split in layout order; matrices are untouched.
        """
        unknown = set(sectors) - set(self.sector_bases)
        if unknown:
            raise ValueError(f"unknown sectors {sorted(unknown)}")
        kept = [self.sector_bases[s] for s in self.code.sectors.names if s in self.sector_bases and s not in sectors]
        gauge = [self.sector_bases[s] for s in self.code.sectors.names if s in self.sector_bases and s in sectors]
        if self.inherited_gauge is not None:
            gauge.append(self.inherited_gauge)
        return dataclasses.replace(
            self,
            kept=stack_bases(kept, self.n),
            gauge=stack_bases(gauge, self.n),
            gauge_sectors=frozenset(sectors),
        )


def stack_bases(bases: list[LogicalBasis], n: int) -> LogicalBasis:
    """Concatenate bases row-wise; an empty list gives the empty basis."""
    nonempty = [b for b in bases if b.k]
    if not nonempty:
        return LogicalBasis.empty(n)
    labels: Tuple[str, ...] = ()
    if all(b.labels for b in nonempty):
        labels = tuple(label for b in nonempty for label in b.labels)
    return LogicalBasis(
        vstack([b.G_X for b in nonempty]),
        vstack([b.G_Z for b in nonempty]),
        labels,
    )


def restrict_to(basis: LogicalBasis, rows: list[int]) -> LogicalBasis:
    return LogicalBasis(
        basis.G_X.select_rows(rows),
        basis.G_Z.select_rows(rows),
        tuple(basis.labels[i] for i in rows) if basis.labels else (),
    )
