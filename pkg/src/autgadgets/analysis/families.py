"""
Builders for the classical code families.

FAMILIES:
---------
    repetition(n)            [n, 1, n], checks x_i + x_(i+1)
    cycle_code(G)            [|E|, |E|-|V|+1, girth(G)], bits on edges
    group_algebra_code(a)    H = sum of left-regular matrices of a
    lifted_code(H0, m, l)    every entry replaced by an l x l circulant
    hamming(r)               [2^r-1, 2^r-r-1, 3]
    simplex(r)               [2^r-1, r, 2^(r-1)]
    reed_muller(r, m)        [2^m, sum C(m,i), 2^(m-r)]
    punctured_rm(r, m)       [2^m-1, sum C(m,i), 2^(m-r)-1]

CIRCULANTS:
-----------
A polynomial a(x) = sum a_i x^i over Z_l becomes the l x l matrix
sum a_i P^i, where P is the cyclic shift with P[i+1, i] = 1. Entry
(r, c) of the block is therefore a_((r - c) mod l).

EVALUATION ORDER:
-----------------
Reed-Muller points y in F2^m are listed in ascending binary order with y_1
the most significant bit. Monomials are listed by degree, then
lexicographically by variable set.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence

import numpy as np

from autgadgets.errors import CapExceededError, DimensionMismatchError
from autgadgets.analysis.graphs import incidence_matrix
from autgadgets.models.bitmatrix import BitMatrix, independent_rows, kernel_basis
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.graph import SimpleGraph
from autgadgets.models.group import GroupAlgebraElement, cyclic_group

logger = logging.getLogger(__name__)

DUAL_ENUMERATION_LIMIT = 20

# Primitive polynomials giving the cyclic simplex forms.
_CYCLIC_SIMPLEX = {3: "1+x+x3", 4: "1+x+x4"}


def repetition(n: int) -> ClassicalCode:
    """Full-rank repetition code with checks on neighbouring bits."""
    if n < 1:
        raise ValueError(f"repetition code needs n >= 1, got {n}")
    h = np.zeros((n - 1, n), dtype=np.uint8)
    for i in range(n - 1):
        h[i, i] = h[i, i + 1] = 1
    return ClassicalCode(BitMatrix.from_array(h), f"rep{n}")


def cycle_code(graph: SimpleGraph) -> ClassicalCode:
    """
    Raises:
        ValueError: If the graph is not connected.
    """
    if not graph.is_connected():
        raise ValueError(f"cycle code needs a connected graph, {graph.name} is not")
    return ClassicalCode(incidence_matrix(graph), f"cycle:{graph.name}")


def group_algebra_code(element: GroupAlgebraElement) -> ClassicalCode:
    """
    The code with H = B[a], the left-regular image of a.

    Raises:
        ValueError: If the element is zero.
    """
    if not element.support:
        raise ValueError("group algebra element has empty support")
    return ClassicalCode(element.matrix("left"), f"ga:{element.group.name}:{element}")


def circulant(exponents: Sequence[int], ell: int) -> BitMatrix:
    """sum_i P^(e_i) for the cyclic shift P[i+1, i] = 1; repeated exponents cancel."""
    block = np.zeros((ell, ell), dtype=np.uint8)
    rows = np.arange(ell)
    for e in exponents:
        block[(rows + e) % ell, rows] ^= 1
    return BitMatrix.from_array(block)


def lifted_code(
    base: BitMatrix,
    shifts: Sequence[Sequence[Optional[Sequence[int]]]],
    ell: int,
    name: str = "lift",
) -> ClassicalCode:
    """
    Shift l-lift of a base matrix.

    Args:
        base: m0 x n0 protograph matrix H0.
        shifts: m0 x n0 grid; each entry lists the exponents of a
            polynomial in x (empty or None for the zero polynomial).
        ell: Lift size.

    Raises:
        DimensionMismatchError: If the grid shape differs from H0.
    """
    if ell < 1:
        raise ValueError(f"lift size must be >= 1, got {ell}")
    if len(shifts) != base.rows or any(len(row) != base.cols for row in shifts):
        found = (len(shifts), len(shifts[0]) if shifts else 0)
        raise DimensionMismatchError(expected=base.shape, found=found)
    out = np.zeros((base.rows * ell, base.cols * ell), dtype=np.uint8)
    for i in range(base.rows):
        for j in range(base.cols):
            if not base[i, j] or not shifts[i][j]:
                continue
            out[i * ell : (i + 1) * ell, j * ell : (j + 1) * ell] = circulant(shifts[i][j], ell).to_array()
    return ClassicalCode(BitMatrix.from_array(out), name)


def hamming(r: int) -> ClassicalCode:
    """Columns of H are the nonzero r-bit strings in ascending order, bit i in row i."""
    if r < 2:
        raise ValueError(f"Hamming code needs r >= 2, got {r}")
    n = 2**r - 1
    cols = np.arange(1, n + 1)
    h = ((cols[None, :] >> np.arange(r)[:, None]) & 1).astype(np.uint8)
    return ClassicalCode(BitMatrix.from_array(h), f"hamming{r}")


def simplex(r: int) -> ClassicalCode:
    """
    Cyclic form B[1+x+x^3] or B[1+x+x^4] for r = 3, 4; otherwise the dual
    of the Hamming code, with the Hamming generator as parity check.
    """
    if r < 2:
        raise ValueError(f"simplex code needs r >= 2, got {r}")
    if r in _CYCLIC_SIMPLEX:
        group = cyclic_group(2**r - 1)
        code = group_algebra_code(GroupAlgebraElement.from_terms(group, _CYCLIC_SIMPLEX[r]))
        return ClassicalCode(code.H, f"simplex{r}")
    return ClassicalCode(hamming(r).G, f"simplex{r}")


def rm_generator(r: int, m: int) -> BitMatrix:
    """Evaluation vectors of all monomials of degree <= r."""
    if not 0 <= r <= m:
        raise ValueError(f"Reed-Muller needs 0 <= r <= m, got r={r}, m={m}")
    points = np.arange(2**m)
    values = [((points >> (m - 1 - i)) & 1).astype(np.uint8) for i in range(m)]
    rows: List[np.ndarray] = []
    for degree in range(r + 1):
        for subset in combinations(range(m), degree):
            row = np.ones(2**m, dtype=np.uint8)
            for i in subset:
                row &= values[i]
            rows.append(row)
    return BitMatrix.from_array(np.array(rows, dtype=np.uint8))


def reed_muller(r: int, m: int) -> ClassicalCode:
    g = rm_generator(r, m)
    return ClassicalCode(kernel_basis(g), f"rm({r},{m})", g)


def punctured_rm(r: int, m: int) -> ClassicalCode:
    """
    RM(r, m) with the all-zero evaluation point deleted.

    For r = 1 the all-ones row is removed as well, which gives the
    [2^m-1, m, 2^(m-1)] simplex code.
    """
    g = rm_generator(r, m).to_array()[:, 1:]
    if r == 1:
        g = g[1:]
    gm = BitMatrix.from_array(g)
    return ClassicalCode(kernel_basis(gm), f"rm*({r},{m})", gm)


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, i) for i in range(r + 1))


def transpose_code(code: ClassicalCode) -> ClassicalCode:
    return code.transpose()


def all_dual_codewords_check_matrix(code: ClassicalCode) -> BitMatrix:
    """
    Every nonzero dual codeword as a row.

    Each code automorphism permutes these rows, so it is a Tanner
    automorphism of this (highly redundant) parity-check matrix.

    Raises:
        CapExceededError: If n - k exceeds the enumeration limit.
    """
    r = code.rank_h
    if r > DUAL_ENUMERATION_LIMIT:
        raise CapExceededError(what="dual dimension", limit=DUAL_ENUMERATION_LIMIT, requested=r)
    if r == 0:
        return BitMatrix.zeros(0, code.n)
    basis = code.H.select_rows(independent_rows(code.H)).to_array()
    masks = np.arange(1, 2**r, dtype=np.int64)
    coeffs = ((masks[:, None] >> np.arange(r)[None, :]) & 1).astype(np.uint8)
    return BitMatrix.from_array((coeffs @ basis) & 1)
