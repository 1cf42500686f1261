"""
Structural checks for CSS codes, chain complexes and logical bases.

A CSS code is valid when H_X H_Z^T = 0 and, when metachecks are attached,
M_X H_X = 0 and M_Z H_Z = 0. A logical basis (G_X, G_Z) is valid for a
code when

    H_Z G_X^T = 0,  H_X G_Z^T = 0        representatives commute with checks
    rank [H_X; G_X] = rank H_X + k       X rows independent mod stabilizers
    rank [H_Z; G_Z] = rank H_Z + k       same for Z
    G_X G_Z^T = I                        symplectic pairing

``validate`` raises VerificationError at the first failing identity and
otherwise returns a ValidationReport with check weights and qubit
participation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from autgadgets.errors import VerificationError
from autgadgets.models.bitmatrix import BitMatrix, RowReducer, kernel_basis, rank, vstack
from autgadgets.models.css import ChainComplex, CssCode, LogicalBasis

logger = logging.getLogger(__name__)

MAX_LOCATIONS = 4


@dataclass
class ValidationReport:
    """
    Summary of a valid CSS code.

    Attributes:
        name: Code name.
        n: Physical qubits.
        k: Logical qubits.
        rank_x: rank H_X.
        rank_z: rank H_Z.
        check_weights: Maximum row weight per Pauli type.
        participation: Maximum number of checks per qubit per Pauli type.
        metachecks: Metacheck identities verified ("M_X", "M_Z").
        basis_checked: A logical basis was verified as well.
    """

    name: str
    n: int
    k: int
    rank_x: int
    rank_z: int
    check_weights: Dict[str, int]
    participation: Dict[str, int]
    metachecks: List[str] = field(default_factory=list)
    basis_checked: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "rank_x": self.rank_x,
            "rank_z": self.rank_z,
            "check_weights": dict(self.check_weights),
            "participation": dict(self.participation),
            "metachecks": list(self.metachecks),
            "basis_checked": self.basis_checked,
        }


def _nonzero_entries(m: BitMatrix) -> Tuple[Tuple[int, int], ...]:
    rows, cols = np.nonzero(m.to_array())
    return tuple((int(r), int(c)) for r, c in zip(rows[:MAX_LOCATIONS], cols[:MAX_LOCATIONS]))


def _require_zero(product: BitMatrix, identity: str) -> None:
    if not product.is_zero():
        locations = _nonzero_entries(product)
        logger.warning("%s fails at %s", identity, locations)
        raise VerificationError(identity=identity, location=locations)


def validate(code: CssCode, basis: Optional[LogicalBasis] = None) -> ValidationReport:
    """
    Check commutation, metachecks and (optionally) a logical basis.

    Raises:
        VerificationError: With the offending (X row, Z row) pairs for a
            commutation failure, or the failing basis identity.
    """
    _require_zero(code.H_X @ code.H_Z.T, "H_X H_Z^T = 0")
    metachecks = []
    if code.M_X is not None:
        _require_zero(code.M_X @ code.H_X, "M_X H_X = 0")
        metachecks.append("M_X")
    if code.M_Z is not None:
        _require_zero(code.M_Z @ code.H_Z, "M_Z H_Z = 0")
        metachecks.append("M_Z")
    if basis is not None:
        check_logical_basis(code, basis)
    return ValidationReport(
        name=code.name,
        n=code.n,
        k=code.k,
        rank_x=code.rank_x,
        rank_z=code.rank_z,
        check_weights=code.check_weights(),
        participation=code.participation(),
        metachecks=metachecks,
        basis_checked=basis is not None,
    )


def num_logicals(code: CssCode) -> int:
    return code.k


def check_logical_basis(code: CssCode, basis: LogicalBasis, paired: bool = True) -> None:
    """
    Raises:
        VerificationError: If some basis identity fails.
    """
    if basis.k == 0:
        return
    _require_zero(code.H_Z @ basis.G_X.T, "H_Z G_X^T = 0")
    _require_zero(code.H_X @ basis.G_Z.T, "H_X G_Z^T = 0")
    if not logicals_independent(code.H_X, basis.G_X):
        raise VerificationError(identity="G_X independent modulo rowspace(H_X)")
    if not logicals_independent(code.H_Z, basis.G_Z):
        raise VerificationError(identity="G_Z independent modulo rowspace(H_Z)")
    if paired:
        violations = symplectic_violations(basis)
        if violations:
            raise VerificationError(identity="G_X G_Z^T = I", location=tuple(violations[:MAX_LOCATIONS]))


def logicals_independent(stabilizers: BitMatrix, logicals: BitMatrix) -> bool:
    """No nonzero combination of ``logicals`` lies in rowspace(stabilizers)."""
    if logicals.rows == 0:
        return True
    return rank(vstack([stabilizers, logicals])) == rank(stabilizers) + logicals.rows


def symplectic_violations(basis: LogicalBasis) -> List[Tuple[int, int]]:
    """Entries (i, j) where G_X G_Z^T differs from the identity."""
    if basis.k == 0:
        return []
    pairing = (basis.G_X @ basis.G_Z.T) ^ BitMatrix.identity(basis.k)
    rows, cols = np.nonzero(pairing.to_array())
    return [(int(r), int(c)) for r, c in zip(rows, cols)]


def symplectic_check(basis: LogicalBasis) -> bool:
    violations = symplectic_violations(basis)
    if violations:
        logger.debug("symplectic pairing fails at %s", violations[:MAX_LOCATIONS])
    return not violations


def _complement(kernel: BitMatrix, stabilizers: BitMatrix) -> BitMatrix:
    """Kernel rows, in order, that are new modulo rowspace(stabilizers)."""
    reducer = RowReducer(stabilizers)
    pivots = list(reducer.pivots)
    rows = list(reducer.rows)
    chosen = []
    for i, value in enumerate(kernel.to_int_rows()):
        for pivot, row in zip(pivots, rows):
            if (value >> pivot) & 1:
                value ^= row
        if value == 0:
            continue
        low = (value & -value).bit_length() - 1
        for j, row in enumerate(rows):
            if (row >> low) & 1:
                rows[j] = row ^ value
        pivots.append(low)
        rows.append(value)
        chosen.append(i)
    return kernel.select_rows(chosen)


def canonical_logical_basis(code: CssCode) -> LogicalBasis:
    """
    A symplectic basis for any CSS code.

    X representatives are the first kernel rows of H_Z new modulo
    rowspace(H_X), Z representatives likewise; the Z rows are then
    recombined by the inverse pairing matrix so that G_X G_Z^T = I.
    """
    lx = _complement(kernel_basis(code.H_Z), code.H_X)
    lz = _complement(kernel_basis(code.H_X), code.H_Z)
    if lx.rows == 0:
        return LogicalBasis.empty(code.n)
    pairing = lx @ lz.T
    gz = pairing.inverse().T @ lz
    return LogicalBasis(lx, gz)


def css_from_chain(cc: ChainComplex, qubit_index: int, name: Optional[str] = None) -> CssCode:
    """
    The CSS code at degree ``qubit_index`` of a chain complex.

    H_X = d_q, H_Z = d_(q+1)^T; metachecks M_X = d_(q-1) and
    M_Z = d_(q+2)^T are attached when those maps exist.

    Raises:
        ValueError: If C_q lacks a neighbour on either side.
    """
    q = qubit_index
    if not 1 <= q <= len(cc.boundaries) - 1:
        raise ValueError(
            f"degree {q} needs both neighbours; complex has degrees 0..{len(cc.boundaries)}"
        )
    b = cc.boundaries
    return CssCode(
        H_X=b[q - 1],
        H_Z=b[q].T,
        name=name or f"{cc.name}@{q}",
        M_X=b[q - 2] if q >= 2 else None,
        M_Z=b[q + 1].T if q + 1 < len(b) else None,
    )
