"""
Permutations of code coordinates.

CONVENTIONS:
------------
A permutation pi on [n] is stored by its images, ``images[i] = pi(i)``.
Its matrix has ``P[i, pi(i)] = 1``, so a row vector x is moved by
``x -> x P`` (coordinate i goes to position pi(i)).

Products read left to right, ``(p * q)(i) = q(p(i))``, which is the
sympy.combinatorics convention and makes

    as_matrix(p * q) = as_matrix(p) @ as_matrix(q)

Cycle notation is 1-indexed as in the literature: ``(15)(34)`` swaps
coordinates 0<->4 and 2<->3. Cycles with multi-digit points are written
with spaces: ``(1 10)(3 4)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from autgadgets.errors import DimensionMismatchError
from autgadgets.models.bitmatrix import BitMatrix

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """
    A bijection on {0, ..., n-1}.

    Attributes:
        images: Tuple with images[i] = pi(i).
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_array(cls, images: Sequence[int] | NDArray[np.intp]) -> Permutation:
        return cls(tuple(int(i) for i in images))

    @classmethod
    def from_matrix(cls, m: BitMatrix) -> Permutation:
        if not m.is_permutation():
            raise ValueError("matrix is not a permutation matrix")
        return cls(tuple(int(j) for j in np.argmax(m.to_array(), axis=1)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> Permutation:
        """
        Parse 1-indexed cycle notation such as ``(15)(34)`` or ``(1 10)``.

        Raises:
            ValueError: On malformed text or points outside [1, n].
        """
        images = list(range(n))
        stripped = text.strip()
        if stripped in ("", "()", "e", "id"):
            return cls(tuple(images))
        if _CYCLE.sub("", stripped).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        seen: set[int] = set()
        for body in _CYCLE.findall(stripped):
            tokens = re.split(r"[\s,]+", body.strip()) if re.search(r"[\s,]", body.strip()) else list(body.strip())
            points = [int(tok) - 1 for tok in tokens if tok]
            for p in points:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + 1} outside 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p + 1} appears twice")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        if other.n != self.n:
            raise DimensionMismatchError(expected=(self.n,), found=(other.n,))
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def as_array(self) -> NDArray[np.intp]:
        return np.asarray(self.images, dtype=np.intp)

    def as_matrix(self) -> BitMatrix:
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        m[np.arange(self.n), self.as_array()] = 1
        return BitMatrix.from_array(m)

    def apply_columns(self, m: BitMatrix) -> BitMatrix:
        """M P without forming P: column i of M moves to column pi(i)."""
        if m.cols != self.n:
            raise DimensionMismatchError(expected=(self.n,), found=(m.cols,))
        arr = m.to_array()
        out = np.empty_like(arr)
        out[:, self.as_array()] = arr
        return BitMatrix.from_array(out)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, 0-indexed, each starting at its smallest point."""
        seen = [False] * self.n
        out: List[Tuple[int, ...]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = int(np.lcm(result, len(c)))
        return result

    def to_cycles(self) -> str:
        """1-indexed cycle notation; ``()`` for the identity."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        sep = "" if self.n <= 9 else " "
        return "".join("(" + sep.join(str(p + 1) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.to_cycles()


def kron_identity(p: Permutation, size: int, left: bool = True) -> Permutation:
    """
    Permutation of P (x) I_size (``left=True``) or I_size (x) P.

    Index (i, j) of a Kronecker product maps to i * dim2 + j.
    """
    if left:
        return Permutation(
            tuple(p.images[i] * size + j for i in range(p.n) for j in range(size))
        )
    return Permutation(
        tuple(i * p.n + p.images[j] for i in range(size) for j in range(p.n))
    )


def concatenate(parts: Iterable[Permutation]) -> Permutation:
    """Direct sum of permutations acting on consecutive blocks."""
    images: List[int] = []
    offset = 0
    for p in parts:
        images.extend(offset + i for i in p.images)
        offset += p.n
    return Permutation(tuple(images))
