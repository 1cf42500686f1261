"""
Exception models for code construction and verification.

Every failure the library can raise is a dataclass exception carrying the
data needed to locate the problem, in the same shape throughout:
fields describing the offending object, a default message filled in by
``__post_init__`` and a one-line ``__str__``.

SIZE ERRORS:
------------
Raised when operands do not conform (matrix/vector shapes, permutation
domains) or when a search is asked to exceed a configured cap.

VERIFICATION ERRORS:
--------------------
Raised when an identity that must hold by construction fails, e.g. the
gadget conditions H_X U = W H_X and H_Z U^-T = W' H_Z, a product's
commutation relation, or code-space preservation by a CZ circuit. These
indicate either an invalid input automorphism or a bug and map to CLI
exit code 2.

Budget exhaustion in distance searches is NOT an exception: searches
return a report flagged as uncertified instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass
class AnalysisError(Exception):
    """
    Base class for all library errors.

    Attributes:
        message: Human-readable description.
    """

    message: str = ""

    def __str__(self) -> str:
        return f"{self.__class__.__name__}: {self.message}"


@dataclass
class DimensionMismatchError(AnalysisError):
    """
    Operand shapes do not conform.

    Attributes:
        expected: Shape or length required by the operation.
        found: Shape or length actually supplied.
    """

    expected: Tuple[int, ...] = ()
    found: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.message:
            self.message = f"expected {self.expected}, found {self.found}"


@dataclass
class CapExceededError(AnalysisError):
    """
    A search was asked to run beyond its configured cap.

    Attributes:
        what: Name of the capped quantity (vertices, bits, group order).
        limit: The configured cap.
        requested: The size that was requested.
    """

    what: str = ""
    limit: int = 0
    requested: int = 0

    def __post_init__(self) -> None:
        if not self.message:
            self.message = (
                f"{self.what} = {self.requested} exceeds cap {self.limit}"
            )


@dataclass
class NotAnAutomorphismError(AnalysisError):
    """
    A supplied permutation does not preserve the code space.

    Attributes:
        cycles: The permutation in 1-indexed cycle notation.
    """

    cycles: str = ""

    def __post_init__(self) -> None:
        if not self.message:
            self.message = f"{self.cycles} is not a code automorphism"


@dataclass
class VerificationError(AnalysisError):
    """
    An identity that must hold by construction failed.

    Attributes:
        identity: Name of the violated identity (e.g. "H_X U = W H_X").
        location: Offending (row, column) entries, at most a few.
    """

    identity: str = ""
    location: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.message:
            where = ", ".join(f"({r},{c})" for r, c in self.location)
            self.message = f"{self.identity} violated" + (f" at {where}" if where else "")


@dataclass
class CodeNotPreservedError(AnalysisError):
    """
    A transformed operator left the code space.

    Attributes:
        kind: Which operator family failed ("stabilizer", "logical").
        row: Index of the first offending row.
    """

    kind: str = "stabilizer"
    row: int = -1

    def __post_init__(self) -> None:
        if not self.message:
            self.message = f"image of {self.kind} row {self.row} is outside the code"


@dataclass
class SingularMatrixError(AnalysisError):
    """
    An invertible matrix was required.

    Attributes:
        size: Dimension of the square matrix.
        rank: Its rank over F2.
    """

    size: int = 0
    rank: int = 0

    def __post_init__(self) -> None:
        if not self.message:
            self.message = f"{self.size}x{self.size} matrix has rank {self.rank}"


@dataclass
class OrientationError(AnalysisError):
    """
    An edge orientation violates the Leibniz condition.

    Attributes:
        vertex: First vertex with odd in+out degree, if known.
    """

    vertex: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.message:
            self.message = f"odd directed degree at vertex {self.vertex}"
