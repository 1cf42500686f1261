"""
Finite groups given by Cayley tables, and elements of their binary group
algebra.

ELEMENT ORDER:
--------------
    cyclic_group(n)      1, x, x^2, ..., x^(n-1)
    dihedral_group(l)    1, r, ..., r^(l-1), s, sr, ..., sr^(l-1)

with the dihedral presentation <r, s | r^l = s^2 = (rs)^2 = 1>, so that
``r s = s r^-1``. The order is fixed so that a polynomial such as
``1 + r + sr^-1`` always maps to the same matrix.

REGULAR REPRESENTATIONS:
------------------------
The regular matrices act on column vectors indexed by group elements:

    L[g][g*h, h] = 1        (left multiplication)
    R[g][h*g^-1, h] = 1     (right multiplication by g^-1 on rows)

so that L[g] L[g'] = L[g g'] and every L commutes with every R. For the
cyclic group, L[x] is the cyclic shift with P[i+1, i] = 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

import numpy as np
from numpy.typing import NDArray

from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.permutation import Permutation

_TERM = re.compile(r"^(s)?(?:([rx])(?:\^?(-?\d+))?)?$")
_TERM_RS = re.compile(r"^r(?:\^?(-?\d+))?s$")


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group as a multiplication table.

    Attributes:
        name: Short label, e.g. "Z7" or "D6".
        cayley: order x order table, cayley[a, b] = index of a*b.
        labels: Element labels in index order.
        identity: Index of the identity element.
    """

    name: str
    cayley: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]
    identity: int = 0

    def __post_init__(self) -> None:
        table = self.table
        n = self.order
        if table.shape != (n, n) or len(self.labels) != n:
            raise ValueError(f"{self.name}: table shape {table.shape} != ({n}, {n})")
        expected = np.arange(n)
        for i in range(n):
            if not (np.array_equal(np.sort(table[i]), expected) and np.array_equal(np.sort(table[:, i]), expected)):
                raise ValueError(f"{self.name}: row/column {i} is not a permutation")
        if n <= 24:
            left = table[table[:, :, None], np.arange(n)[None, None, :]]
            right = table[np.arange(n)[:, None, None], table[None, :, :]]
            if not np.array_equal(left, right):
                raise ValueError(f"{self.name}: table is not associative")

    @property
    def order(self) -> int:
        return len(self.cayley)

    @property
    def table(self) -> NDArray[np.intp]:
        return np.asarray(self.cayley, dtype=np.intp)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inverse(self, a: int) -> int:
        return self.cayley[a].index(self.identity)

    def is_abelian(self) -> bool:
        t = self.table
        return bool(np.array_equal(t, t.T))

    def element(self, term: str) -> int:
        """
        Index of a single term such as ``1``, ``x3``, ``r^2``, ``sr^-1`` or ``rs``.

        Raises:
            ValueError: If the term does not name an element of this group.
        """
        text = term.strip().replace(" ", "")
        if text == "1":
            return self.identity
        if text in self.labels:
            return self.labels.index(text)
        dihedral = self.name.startswith("D")
        match = _TERM_RS.match(text)
        if match and dihedral:
            power = int(match.group(1) or 1)
            return self._dihedral_index(1, -power)
        match = _TERM.match(text)
        if not match or not text:
            raise ValueError(f"cannot parse group element {term!r}")
        flip, gen, power = match.group(1), match.group(2), match.group(3)
        exponent = int(power) if power is not None else (1 if gen else 0)
        if dihedral:
            if gen == "x":
                raise ValueError(f"{self.name} uses generators r and s, got {term!r}")
            return self._dihedral_index(1 if flip else 0, exponent)
        if flip or gen == "r":
            raise ValueError(f"{self.name} uses generator x, got {term!r}")
        return exponent % self.order

    def _dihedral_index(self, flip: int, power: int) -> int:
        ell = self.order // 2
        return flip * ell + power % ell


def _label(prefix: str, gen: str, power: int, caret: str = "^") -> str:
    if power == 0:
        return prefix or "1"
    if power == 1:
        return f"{prefix}{gen}"
    return f"{prefix}{gen}{caret}{power}"


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with elements 1, x, x2 .. x(n-1), as written in polynomials like 1+x+x3."""
    if n < 1:
        raise ValueError(f"cyclic group needs n >= 1, got {n}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(f"Z{n}", table, tuple(_label("", "x", p, caret="") for p in range(n)))


def dihedral_group(ell: int) -> FiniteGroup:
    """D_ell of order 2*ell: r^0..r^(ell-1), then s r^0 .. s r^(ell-1)."""
    if ell < 3:
        raise ValueError(f"dihedral group needs ell >= 3, got {ell}")

    def mul(a: int, b: int) -> int:
        fa, pa = divmod(a, ell)
        fb, pb = divmod(b, ell)
        # (s^fa r^pa)(s^fb r^pb) = s^(fa+fb) r^((-1)^fb pa + pb)
        power = (-pa if fb else pa) + pb
        return ((fa + fb) % 2) * ell + power % ell

    table = tuple(tuple(mul(a, b) for b in range(2 * ell)) for a in range(2 * ell))
    labels = tuple(_label("", "r", p) for p in range(ell)) + tuple(
        _label("s", "r", p) for p in range(ell)
    )
    return FiniteGroup(f"D{ell}", table, labels)


def regular_representation(group: FiniteGroup, element: int, side: str = "left") -> Permutation:
    """
    Permutation whose matrix is L[element] or R[element].

    Raises:
        ValueError: On an unknown side or element index.
    """
    if not 0 <= element < group.order:
        raise ValueError(f"element {element} outside group of order {group.order}")
    if side == "left":
        # L[g][g*h, h] = 1, so row i = g*h holds its one at column h = g^-1 * i
        ginv = group.inverse(element)
        return Permutation(tuple(group.mul(ginv, i) for i in range(group.order)))
    if side == "right":
        # R[g][h*g^-1, h] = 1, so row i holds its one at column i*g
        return Permutation(tuple(group.mul(i, element) for i in range(group.order)))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


@dataclass(frozen=True)
class GroupAlgebraElement:
    """
    A formal F2-sum of group elements.

    Attributes:
        group: The underlying group.
        support: Indices of elements with coefficient 1.
    """

    group: FiniteGroup
    support: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        bad = [i for i in self.support if not 0 <= i < self.group.order]
        if bad:
            raise ValueError(f"support {bad} outside group of order {self.group.order}")

    @classmethod
    def from_terms(cls, group: FiniteGroup, text: str) -> GroupAlgebraElement:
        """Parse ``1+r+sr^-1``; repeated terms cancel in pairs."""
        support: set[int] = set()
        for term in text.split("+"):
            support ^= {group.element(term)}
        return cls(group, frozenset(support))

    def matrix(self, side: str = "left") -> BitMatrix:
        """Sum of the regular matrices of the support."""
        n = self.group.order
        out = np.zeros((n, n), dtype=np.uint8)
        for g in sorted(self.support):
            out ^= regular_representation(self.group, g, side).as_matrix().to_array()
        return BitMatrix.from_array(out)

    def __str__(self) -> str:
        return "+".join(self.group.labels[i] for i in sorted(self.support)) or "0"
