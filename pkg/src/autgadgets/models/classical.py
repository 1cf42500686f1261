"""
Classical binary linear codes.

A code is C = ker H for a parity-check matrix H that may carry redundant
rows. The generator G is derived on first use:

    H G^T = 0,    rows(G) = n - rank(H) = k,    rank(G) = k

G is kept in reduced row echelon form, which is the standard form
(I_k | A) whenever the first k columns are an information set. A caller
may supply its own generator (e.g. one printed in a reference) to express
logical actions in that basis; it is kept as long as it has a unit
information column for every row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

from autgadgets.models.bitmatrix import BitMatrix, kernel_basis, rank, rref


def information_columns(g: BitMatrix) -> Optional[Tuple[int, ...]]:
    """
    For each row i, the lowest column j with g[:, j] = e_i.

    Returns:
        The column tuple, or None if some row has no unit column.
    """
    wanted = {1 << i: i for i in range(g.rows)}
    found: dict[int, int] = {}
    for j, col in enumerate(g.to_int_columns()):
        i = wanted.get(col)
        if i is not None and i not in found:
            found[i] = j
    if len(found) != g.rows:
        return None
    return tuple(found[i] for i in range(g.rows))


@dataclass(frozen=True)
class ClassicalCode:
    """
    A binary linear code given by its parity-check matrix.

    Attributes:
        H: m x n parity-check matrix.
        name: Label used in reports.
        generator: Optional explicit generator; validated on construction.
    """

    H: BitMatrix
    name: str = "code"
    generator: Optional[BitMatrix] = None

    def __post_init__(self) -> None:
        g = self.generator
        if g is None:
            return
        if g.cols != self.n:
            raise ValueError(f"{self.name}: generator has {g.cols} columns, code has {self.n}")
        if not (self.H @ g.T).is_zero():
            raise ValueError(f"{self.name}: generator rows are not codewords")
        if g.rows != self.k or rank(g) != g.rows:
            raise ValueError(
                f"{self.name}: generator must have {self.k} independent rows, got {g.rows} (rank {rank(g)})"
            )
        if information_columns(g) is None:
            object.__setattr__(self, "generator", rref(g)[0])

    @classmethod
    def from_parity_check(
        cls,
        H: BitMatrix,
        generator: Optional[BitMatrix] = None,
        name: str = "code",
    ) -> ClassicalCode:
        return cls(H, name, generator)

    @property
    def n(self) -> int:
        return self.H.cols

    @property
    def m(self) -> int:
        return self.H.rows

    @cached_property
    def rank_h(self) -> int:
        return rank(self.H)

    @property
    def k(self) -> int:
        return self.n - self.rank_h

    @cached_property
    def G(self) -> BitMatrix:
        if self.generator is not None:
            return self.generator
        basis = kernel_basis(self.H)
        if basis.rows == 0:
            return basis
        return rref(basis)[0]

    @cached_property
    def info_set(self) -> Tuple[int, ...]:
        """Unit columns of G, one per logical bit."""
        cols = information_columns(self.G)
        assert cols is not None
        return cols

    @property
    def is_full_rank(self) -> bool:
        return self.rank_h == self.m

    def transpose(self) -> ClassicalCode:
        """The code with parity-check H^T."""
        return ClassicalCode(self.H.T, f"{self.name}^T")

    def __str__(self) -> str:
        return f"{self.name}[{self.n},{self.k}]"
