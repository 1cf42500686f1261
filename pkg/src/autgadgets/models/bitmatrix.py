"""
Dense bit-packed vectors and matrices over F2.

Every parity-check matrix, generator matrix, Kronecker block and logical
action in the package is a BitMatrix. Values are immutable: operations
always return new objects, so matrices can be shared freely between
worker threads.

STORAGE:
--------
Rows are packed little-endian into 64-bit words (numpy ``<u8``)::

    column j  ->  word j // 64, bit j % 64

A matrix with ``rows x cols`` bits stores a ``rows x ceil(cols / 64)``
word array. Row operations (XOR of whole rows) are vectorized over the
words; column operations go through the transpose.

ELIMINATION:
------------
All linear algebra reduces to one routine, ``_rref``, which computes the
reduced row echelon form column by column (leftmost pivot first) and can
track the row transformation T with T M = RREF(M). From it:

    rank            number of pivots
    kernel_basis    one vector per free column
    right_inverse   inverse of the leftmost pivot columns, embedded
    solve_left      coefficients over a fixed set of pivot rows
    express_modulo  coefficients over a basis, modulo a second row space

The routine is deterministic, so results do not depend on thread count or
call order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from autgadgets.errors import DimensionMismatchError, SingularMatrixError

WORD = 64
WORD_DTYPE = np.dtype("<u8")


def _words_for(cols: int) -> int:
    return max(1, -(-cols // WORD))


def _pack(bits: NDArray[np.uint8]) -> NDArray[np.uint64]:
    """Pack a 2-D 0/1 array into row-major little-endian words."""
    rows, cols = bits.shape
    width = _words_for(cols) * WORD
    padded = np.zeros((rows, width), dtype=np.uint8)
    padded[:, :cols] = bits & 1
    return np.packbits(padded, axis=-1, bitorder="little").view(WORD_DTYPE)


def _unpack(words: NDArray[np.uint64], cols: int) -> NDArray[np.uint8]:
    """Inverse of ``_pack``."""
    raw = np.ascontiguousarray(words, dtype=WORD_DTYPE).view(np.uint8)
    return np.unpackbits(raw, axis=-1, bitorder="little")[:, :cols]


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False, repr=False, slots=True)
class BitVector:
    """
    A vector in F2^n.

    Attributes:
        length: Number of bits.
        words: Packed payload (read-only).
    """

    words: NDArray[np.uint64]
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", _freeze(np.array(self.words, dtype=WORD_DTYPE).reshape(-1)))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        arr = np.asarray(list(bits), dtype=np.uint8).reshape(1, -1)
        return cls(_pack(arr)[0], arr.shape[1])

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitVector:
        arr = np.zeros((1, length), dtype=np.uint8)
        for i in support:
            arr[0, i] = 1
        return cls(_pack(arr)[0], length)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        return cls.from_bits(int(ch) for ch in text.strip())

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(np.zeros(_words_for(length), dtype=WORD_DTYPE), length)

    def to_array(self) -> NDArray[np.uint8]:
        return _unpack(self.words.reshape(1, -1), self.length)[0]

    def to_int(self) -> int:
        """Bits as a Python integer, bit j = coordinate j."""
        return int.from_bytes(self.words.tobytes(), "little")

    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def support(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.to_array())]

    def dot(self, other: BitVector) -> int:
        if other.length != self.length:
            raise DimensionMismatchError(expected=(self.length,), found=(other.length,))
        return int(np.bitwise_count(self.words & other.words).sum()) & 1

    def as_row(self) -> BitMatrix:
        return BitMatrix(self.words.reshape(1, -1), 1, self.length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        w, b = divmod(index, WORD)
        return int(self.words[w] >> np.uint64(b)) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if other.length != self.length:
            raise DimensionMismatchError(expected=(self.length,), found=(other.length,))
        return BitVector(self.words ^ other.words, self.length)

    __add__ = __xor__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self.to_array())

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


@dataclass(frozen=True, eq=False, repr=False, slots=True)
class BitMatrix:
    """
    An immutable rows x cols matrix over F2.

    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        words: Packed payload, shape (rows, ceil(cols / 64)), read-only.
    """

    words: NDArray[np.uint64]
    rows: int
    cols: int

    def __post_init__(self) -> None:
        packed = np.array(self.words, dtype=WORD_DTYPE).reshape(self.rows, _words_for(self.cols))
        object.__setattr__(self, "words", _freeze(packed))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_array(cls, array: np.ndarray) -> BitMatrix:
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise DimensionMismatchError(
                message=f"expected a 2-D array, got {arr.ndim}-D"
            )
        arr = (arr.astype(np.int64) & 1).astype(np.uint8)
        return cls(_pack(arr), arr.shape[0], arr.shape[1])

    @classmethod
    def from_rows(cls, rows: Sequence[str | Sequence[int]], cols: Optional[int] = None) -> BitMatrix:
        """Build from '0101' strings or 0/1 sequences; empty input needs ``cols``."""
        if not rows:
            return cls.zeros(0, cols or 0)
        parsed = [[int(ch) for ch in r.strip()] if isinstance(r, str) else list(r) for r in rows]
        return cls.from_array(np.array(parsed, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros((rows, _words_for(cols)), dtype=WORD_DTYPE), rows, cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_array(np.eye(n, dtype=np.uint8))

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_array(self) -> NDArray[np.uint8]:
        return _unpack(self.words, self.cols)

    def row(self, index: int) -> BitVector:
        return BitVector(self.words[index], self.cols)

    def iter_rows(self) -> Iterator[BitVector]:
        for i in range(self.rows):
            yield self.row(i)

    def to_int_rows(self) -> List[int]:
        """Rows as Python integers (bit j = column j)."""
        return [int.from_bytes(self.words[i].tobytes(), "little") for i in range(self.rows)]

    def to_int_columns(self) -> List[int]:
        return self.T.to_int_rows()

    def row_weights(self) -> NDArray[np.int64]:
        return np.bitwise_count(self.words).sum(axis=1).astype(np.int64)

    def column_weights(self) -> NDArray[np.int64]:
        return self.to_array().sum(axis=0).astype(np.int64)

    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def select_rows(self, indices: Sequence[int]) -> BitMatrix:
        idx = list(indices)
        return BitMatrix(self.words[idx], len(idx), self.cols)

    def select_columns(self, indices: Sequence[int]) -> BitMatrix:
        idx = list(indices)
        return BitMatrix.from_array(self.to_array()[:, idx])

    def is_zero(self) -> bool:
        return not self.words.any()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == BitMatrix.identity(self.rows)

    def is_permutation(self) -> bool:
        """Exactly one 1 in every row and every column."""
        if not self.is_square():
            return False
        arr = self.to_array()
        return bool((arr.sum(axis=0) == 1).all() and (arr.sum(axis=1) == 1).all())

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @property
    def T(self) -> BitMatrix:
        return BitMatrix.from_array(self.to_array().T)

    def transpose(self) -> BitMatrix:
        return self.T

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if isinstance(other, BitVector):
            return self @ other.as_row().T
        if self.cols != other.rows:
            raise DimensionMismatchError(expected=(self.cols,), found=(other.rows,))
        # uint8 accumulation wraps mod 256, which preserves parity
        product = self.to_array() @ other.to_array()
        return BitMatrix.from_array(product & 1)

    def __xor__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(expected=self.shape, found=other.shape)
        return BitMatrix(self.words ^ other.words, self.rows, self.cols)

    __add__ = __xor__

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        w, b = divmod(j, WORD)
        return int(self.words[i, w] >> np.uint64(b)) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.words.tobytes()))

    def key(self) -> bytes:
        """Stable hashable identity, used to deduplicate group elements."""
        return self.rows.to_bytes(4, "little") + self.cols.to_bytes(4, "little") + self.words.tobytes()

    def inverse(self) -> BitMatrix:
        """
        Inverse over F2.

        Raises:
            SingularMatrixError: If the matrix is not invertible.
        """
        if not self.is_square():
            raise DimensionMismatchError(expected=(self.rows, self.rows), found=self.shape)
        _, pivots, transform = _rref(self.words, self.cols, track=True)
        if len(pivots) != self.rows:
            raise SingularMatrixError(size=self.rows, rank=len(pivots))
        return BitMatrix(transform, self.rows, self.rows)

    def is_invertible(self) -> bool:
        return self.is_square() and rank(self) == self.rows

    def __str__(self) -> str:
        return "\n".join("".join(str(int(b)) for b in r) for r in self.to_array())

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


# ----------------------------------------------------------------------
# Elimination core
# ----------------------------------------------------------------------


def _rref(
    words: NDArray[np.uint64],
    cols: int,
    track: bool = False,
) -> Tuple[NDArray[np.uint64], List[int], Optional[NDArray[np.uint64]]]:
    """
    Reduced row echelon form of packed rows.

    Args:
        words: Packed rows (not modified).
        cols: Number of meaningful columns.
        track: Also return T (packed, rows x rows) with T M = RREF.

    Returns:
        Tuple of (reduced words, pivot columns, transform or None). The
        first ``len(pivots)`` rows of the reduced words are the nonzero
        echelon rows; the remainder are zero.
    """
    a = np.array(words, dtype=WORD_DTYPE, copy=True)
    nrows = a.shape[0]
    t: Optional[NDArray[np.uint64]] = None
    if track:
        t = _pack(np.eye(nrows, dtype=np.uint8))
    pivots: List[int] = []
    r = 0
    for col in range(cols):
        if r == nrows:
            break
        w, b = divmod(col, WORD)
        mask = np.uint64(1) << np.uint64(b)
        hits = np.flatnonzero(a[r:, w] & mask)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
            if t is not None:
                t[[r, p]] = t[[p, r]]
        clear = np.flatnonzero(a[:, w] & mask)
        clear = clear[clear != r]
        if clear.size:
            a[clear] ^= a[r]
            if t is not None:
                t[clear] ^= t[r]
        pivots.append(col)
        r += 1
    return a, pivots, t


def rref(m: BitMatrix) -> Tuple[BitMatrix, Tuple[int, ...]]:
    """
    Reduced row echelon form with zero rows dropped.

    Returns:
        Tuple of (echelon rows, pivot columns).
    """
    a, pivots, _ = _rref(m.words, m.cols)
    return BitMatrix(a[: len(pivots)], len(pivots), m.cols), tuple(pivots)


def row_transform(m: BitMatrix) -> BitMatrix:
    """Invertible T (rows x rows) with T M = RREF(M), zero rows last."""
    _, _, t = _rref(m.words, m.cols, track=True)
    assert t is not None
    return BitMatrix(t, m.rows, m.rows)


def rank(m: BitMatrix) -> int:
    """Row rank over F2 (equal to the column rank)."""
    _, pivots, _ = _rref(m.words, m.cols)
    return len(pivots)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """
    Basis of {x : M x^T = 0}, one row per free column in ascending order.

    Each row has a 1 in its own free column and zeros in every other free
    column, so the rows are independent by construction.
    """
    echelon, pivots = rref(m)
    taken = set(pivots)
    free = [c for c in range(m.cols) if c not in taken]
    if not free:
        return BitMatrix.zeros(0, m.cols)
    ech = echelon.to_array()
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = ech[r, f]
    return BitMatrix.from_array(basis)


def left_kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {y : y M = 0}."""
    return kernel_basis(m.T)


def independent_rows(m: BitMatrix) -> Tuple[int, ...]:
    """Indices of the first maximal independent subset of rows (greedy, top-down)."""
    _, pivots = rref(m.T)
    return pivots


def row_space_contains(m: BitMatrix, v: BitVector) -> bool:
    """
    True iff v is an F2 combination of the rows of M.

    Raises:
        DimensionMismatchError: If len(v) != cols(M).
    """
    if len(v) != m.cols:
        raise DimensionMismatchError(expected=(m.cols,), found=(len(v),))
    return RowReducer(m).contains(v)


def right_inverse(m: BitMatrix) -> Optional[BitMatrix]:
    """
    R with M R = I, or None when M lacks full row rank.

    The leftmost pivot columns of M carry the inverse of M restricted to
    them; every other row of R is zero.
    """
    echelon, pivots = rref(m)
    if len(pivots) != m.rows:
        return None
    block = m.select_columns(pivots).inverse()
    out = np.zeros((m.cols, m.rows), dtype=np.uint8)
    out[list(pivots), :] = block.to_array()
    return BitMatrix.from_array(out)


def solve_left(h: BitMatrix, m: BitMatrix) -> Optional[BitMatrix]:
    """
    W with W H = M, or None if some row of M is outside rowspace(H).

    Canonical form: a row of M that equals a row of H takes the lowest
    such row index; every other row is expressed over the fixed pivot row
    set of H with zero coefficients on the remaining rows.
    """
    if h.cols != m.cols or h.rows != m.rows:
        raise DimensionMismatchError(expected=h.shape, found=m.shape)
    lookup = {}
    for i, key in enumerate(h.to_int_rows()):
        lookup.setdefault(key, i)
    pivot_rows = independent_rows(h)
    basis = h.select_rows(pivot_rows)
    inverse = right_inverse(basis) if pivot_rows else None
    out = np.zeros((m.rows, h.rows), dtype=np.uint8)
    target = m.to_array()
    for r, key in enumerate(m.to_int_rows()):
        if key in lookup:
            out[r, lookup[key]] = 1
            continue
        if key == 0:
            continue
        if inverse is None:
            return None
        coeffs = (target[r : r + 1] @ inverse.to_array()) & 1
        if not np.array_equal((coeffs @ basis.to_array()) & 1, target[r : r + 1]):
            return None
        out[r, list(pivot_rows)] = coeffs[0]
    return BitMatrix.from_array(out)


def express_modulo(
    targets: BitMatrix,
    basis: BitMatrix,
    modulo: Optional[BitMatrix] = None,
) -> Optional[BitMatrix]:
    """
    Coefficients C with targets = C basis + (rows of rowspace(modulo)).

    The basis rows must be independent modulo rowspace(modulo), which makes
    C unique.

    Returns:
        C as a (targets.rows x basis.rows) matrix, or None when some target
        is not expressible.
    """
    if modulo is None:
        modulo = BitMatrix.zeros(0, basis.cols)
    stacked = vstack([modulo, basis])
    a, pivots, t = _rref(stacked.words, stacked.cols, track=True)
    r = len(pivots)
    echelon = _unpack(a[:r], stacked.cols)
    transform = _unpack(t[:r], stacked.rows)
    tgt = targets.to_array()
    coeffs = tgt[:, list(pivots)]
    if not np.array_equal((coeffs @ echelon) & 1, tgt):
        return None
    combo = (coeffs @ transform) & 1
    return BitMatrix.from_array(combo[:, modulo.rows :])


class RowReducer:
    """
    Fast membership and reduction against a fixed row space.

    Rows are kept as Python integers in reduced echelon form, so reducing
    a vector is one pass over the pivots. Used inside search loops where
    BitMatrix construction would dominate.
    """

    def __init__(self, m: BitMatrix):
        echelon, pivots = rref(m)
        self.cols = m.cols
        self.pivots = pivots
        self.rows = echelon.to_int_rows()
        self.rank = len(pivots)

    def reduce_int(self, value: int) -> int:
        for pivot, row in zip(self.pivots, self.rows):
            if (value >> pivot) & 1:
                value ^= row
        return value

    def contains_int(self, value: int) -> bool:
        return self.reduce_int(value) == 0

    def contains(self, v: BitVector) -> bool:
        return self.contains_int(v.to_int())


# ----------------------------------------------------------------------
# Assembly
# ----------------------------------------------------------------------


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product, entry[(i,j),(k,l)] = A[i,k] B[j,l]."""
    return BitMatrix.from_array(np.kron(a.to_array(), b.to_array()))


def direct_sum(blocks: Sequence[BitMatrix]) -> BitMatrix:
    """Block-diagonal assembly."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = np.zeros((rows, cols), dtype=np.uint8)
    r = c = 0
    for block in blocks:
        out[r : r + block.rows, c : c + block.cols] = block.to_array()
        r += block.rows
        c += block.cols
    return BitMatrix.from_array(out)


def hstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    rows = {b.rows for b in blocks}
    if len(rows) > 1:
        raise DimensionMismatchError(message=f"row counts differ: {sorted(rows)}")
    return BitMatrix.from_array(np.hstack([b.to_array() for b in blocks]))


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    cols = {b.cols for b in blocks}
    if len(cols) > 1:
        raise DimensionMismatchError(message=f"column counts differ: {sorted(cols)}")
    width = blocks[0].cols
    return BitMatrix(
        np.vstack([b.words for b in blocks]), sum(b.rows for b in blocks), width
    )


def block_matrix(grid: Sequence[Sequence[Optional[BitMatrix]]]) -> BitMatrix:
    """
    Assemble a block matrix; ``None`` entries are zero blocks sized from
    their row and column neighbours.
    """
    heights = []
    for row in grid:
        sizes = {b.rows for b in row if b is not None}
        heights.append(sizes.pop())
    widths = []
    for j in range(len(grid[0])):
        sizes = {row[j].cols for row in grid if row[j] is not None}
        widths.append(sizes.pop())
    return vstack(
        [
            hstack(
                [
                    block if block is not None else BitMatrix.zeros(heights[i], widths[j])
                    for j, block in enumerate(row)
                ]
            )
            for i, row in enumerate(grid)
        ]
    )
