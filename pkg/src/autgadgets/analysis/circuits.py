"""
Decomposition of invertible F2 matrices into SWAP and CNOT steps.

Gauss-Jordan elimination by left row operations E_r ... E_1 M = I gives
M = E_1 E_2 ... E_r, since every elementary operation is its own inverse.
Per column: one SWAP to bring up a pivot, then one CNOT per remaining 1.
The row operation "row t += row c" is I + E[t, c], i.e. CNOT(t, c) in
the row-vector convention of ``models.gadget``. At most r(r-1) CNOTs and
r-1 SWAPs are emitted for an r x r matrix.
"""

from __future__ import annotations

from typing import List

import numpy as np

from autgadgets.errors import DimensionMismatchError, SingularMatrixError
from autgadgets.models.bitmatrix import BitMatrix, rank
from autgadgets.models.gadget import CircuitStep, InvertibleCircuit


def elementary_steps(m: BitMatrix) -> List[CircuitStep]:
    """
    Raises:
        SingularMatrixError: If m is not invertible.
    """
    if not m.is_square():
        raise DimensionMismatchError(expected=(m.rows, m.rows), found=m.shape)
    a = m.to_array().copy()
    size = m.rows
    steps: List[CircuitStep] = []
    for col in range(size):
        hits = np.flatnonzero(a[col:, col])
        if hits.size == 0:
            raise SingularMatrixError(size=size, rank=rank(m))
        pivot = col + int(hits[0])
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            steps.append(CircuitStep("swap", col, pivot))
        for row in np.flatnonzero(a[:, col]):
            if row != col:
                a[row] ^= a[col]
                steps.append(CircuitStep("cnot", int(row), col))
    return steps


def decompose(m: BitMatrix) -> InvertibleCircuit:
    """Invertible circuit whose replay equals m."""
    return InvertibleCircuit(m, tuple(elementary_steps(m)))
