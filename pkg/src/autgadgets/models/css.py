"""
Chain complexes, CSS codes and their sector layouts.

GRADING CONVENTION:
-------------------
A chain complex is stored by its boundary maps, lowest degree first::

    boundaries[i] = d_(i+1) : C_(i+1) -> C_i      shape (dim C_i, dim C_(i+1))

A CSS code sits at a middle degree q of such a complex::

    S_Z = C_(q+1) --H_Z^T--> Q = C_q --H_X--> S_X = C_(q-1)

so H_X = d_q and H_Z = d_(q+1)^T. Outer terms, when present, give the
metachecks M_Z = d_(q+2)^T and M_X = d_(q-1).

SECTORS:
--------
Product codes split their qubits into contiguous named blocks (L, M, R),
each laid out as a row-major grid whose rows index the first Kronecker
factor. A qubit in sector s at grid cell (r, c) has index
``s.start + r * s.cols + c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from autgadgets.errors import DimensionMismatchError, VerificationError
from autgadgets.models.bitmatrix import BitMatrix, rank


@dataclass(frozen=True)
class ChainComplex:
    """
    A finite chain complex over F2.

    Attributes:
        boundaries: d_1, d_2, ... with boundaries[i] : C_(i+1) -> C_i.
        name: Label used in reports.
    """

    boundaries: Tuple[BitMatrix, ...]
    name: str = "complex"

    def __post_init__(self) -> None:
        for i in range(len(self.boundaries) - 1):
            lower, upper = self.boundaries[i], self.boundaries[i + 1]
            if lower.cols != upper.rows:
                raise DimensionMismatchError(expected=(lower.cols,), found=(upper.rows,))
            product = lower @ upper
            if not product.is_zero():
                r, c = _first_one(product)
                raise VerificationError(identity=f"d_{i + 1} d_{i + 2} = 0", location=((r, c),))

    @property
    def length(self) -> int:
        """Number of spaces."""
        return len(self.boundaries) + 1

    @cached_property
    def dimensions(self) -> Tuple[int, ...]:
        if not self.boundaries:
            return (0,)
        return (self.boundaries[0].rows,) + tuple(b.cols for b in self.boundaries)

    def homology_ranks(self) -> Tuple[int, ...]:
        """dim H_i = dim C_i - rank d_i - rank d_(i+1) for every degree i."""
        ranks = [rank(b) for b in self.boundaries]
        out = []
        for i, dim in enumerate(self.dimensions):
            outgoing = ranks[i - 1] if i >= 1 else 0
            incoming = ranks[i] if i < len(ranks) else 0
            out.append(dim - outgoing - incoming)
        return tuple(out)


def _first_one(m: BitMatrix) -> Tuple[int, int]:
    arr = m.to_array()
    rows, cols = arr.nonzero()
    return int(rows[0]), int(cols[0])


@dataclass(frozen=True)
class Sector:
    """
    A contiguous block of qubits laid out as a grid.

    Attributes:
        name: Sector label ("L", "M", "R").
        start: Index of the first qubit.
        rows: Grid rows (first Kronecker factor).
        cols: Grid columns (second Kronecker factor).
        row_label: What grid rows index, e.g. "bits(h1)".
        col_label: What grid columns index.
    """

    name: str
    start: int
    rows: int
    cols: int
    row_label: str = ""
    col_label: str = ""

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def stop(self) -> int:
        return self.start + self.size

    def indices(self) -> range:
        return range(self.start, self.stop)

    def index(self, row: int, col: int) -> int:
        return self.start + row * self.cols + col

    def coordinates(self, qubit: int) -> Tuple[int, int]:
        return divmod(qubit - self.start, self.cols)


@dataclass(frozen=True)
class SectorLayout:
    """An ordered partition of [n] into sectors."""

    sectors: Tuple[Sector, ...]

    def __post_init__(self) -> None:
        position = 0
        for s in self.sectors:
            if s.start != position:
                raise ValueError(f"sector {s.name} starts at {s.start}, expected {position}")
            position = s.stop
        if len({s.name for s in self.sectors}) != len(self.sectors):
            raise ValueError("sector names must be distinct")

    @classmethod
    def single(cls, n: int) -> SectorLayout:
        return cls((Sector("Q", 0, 1, n),))

    @classmethod
    def from_grids(cls, grids: List[Tuple[str, int, int, str, str]]) -> SectorLayout:
        sectors = []
        start = 0
        for name, rows, cols, row_label, col_label in grids:
            sectors.append(Sector(name, start, rows, cols, row_label, col_label))
            start += rows * cols
        return cls(tuple(sectors))

    @property
    def n(self) -> int:
        return sum(s.size for s in self.sectors)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(s.name for s in self.sectors)

    def __getitem__(self, name: str) -> Sector:
        for s in self.sectors:
            if s.name == name:
                return s
        raise KeyError(f"no sector {name!r}; have {self.names}")

    def sector_of(self, qubit: int) -> Sector:
        for s in self.sectors:
            if s.start <= qubit < s.stop:
                return s
        raise IndexError(qubit)


@dataclass(frozen=True)
class LogicalBasis:
    """
    Representatives of k logical qubits, row i of G_X paired with row i of G_Z.

    Attributes:
        G_X: k x n X-type representatives (in ker H_Z).
        G_Z: k x n Z-type representatives (in ker H_X).
        labels: Optional names for the logical qubits.
    """

    G_X: BitMatrix
    G_Z: BitMatrix
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.G_X.shape != self.G_Z.shape:
            raise DimensionMismatchError(expected=self.G_X.shape, found=self.G_Z.shape)
        if self.labels and len(self.labels) != self.G_X.rows:
            raise ValueError(f"{len(self.labels)} labels for {self.G_X.rows} logicals")

    @property
    def k(self) -> int:
        return self.G_X.rows

    @property
    def n(self) -> int:
        return self.G_X.cols

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    @classmethod
    def empty(cls, n: int) -> LogicalBasis:
        return cls(BitMatrix.zeros(0, n), BitMatrix.zeros(0, n))


@dataclass(frozen=True)
class CssCode:
    """
    A CSS code with optional metachecks and a sector layout.

    Attributes:
        H_X: m_X x n X-check matrix.
        H_Z: m_Z x n Z-check matrix.
        name: Label used in reports.
        M_X: Optional metacheck with M_X H_X = 0.
        M_Z: Optional metacheck with M_Z H_Z = 0.
        layout: Sector layout; a single sector when omitted.
    """

    H_X: BitMatrix
    H_Z: BitMatrix
    name: str = "css"
    M_X: Optional[BitMatrix] = None
    M_Z: Optional[BitMatrix] = None
    layout: Optional[SectorLayout] = field(default=None)

    def __post_init__(self) -> None:
        if self.H_X.cols != self.H_Z.cols:
            raise DimensionMismatchError(expected=(self.H_X.cols,), found=(self.H_Z.cols,))
        if self.layout is None:
            object.__setattr__(self, "layout", SectorLayout.single(self.n))
        elif self.layout.n != self.n:
            raise DimensionMismatchError(expected=(self.n,), found=(self.layout.n,))

    @property
    def n(self) -> int:
        return self.H_X.cols

    @property
    def sectors(self) -> SectorLayout:
        assert self.layout is not None
        return self.layout

    @cached_property
    def rank_x(self) -> int:
        return rank(self.H_X)

    @cached_property
    def rank_z(self) -> int:
        return rank(self.H_Z)

    @property
    def k(self) -> int:
        return self.n - self.rank_x - self.rank_z

    def check_weights(self) -> Dict[str, int]:
        wx = self.H_X.row_weights()
        wz = self.H_Z.row_weights()
        return {
            "X": int(wx.max()) if wx.size else 0,
            "Z": int(wz.max()) if wz.size else 0,
        }

    def participation(self) -> Dict[str, int]:
        """Maximum number of checks of each type acting on one qubit."""
        px = self.H_X.column_weights()
        pz = self.H_Z.column_weights()
        return {
            "X": int(px.max()) if px.size else 0,
            "Z": int(pz.max()) if pz.size else 0,
        }

    def __str__(self) -> str:
        return f"{self.name}[[{self.n},{self.k}]]"
