"""
Automorphism gadgets and the CNOT circuits inside them.

CIRCUIT CONVENTION:
-------------------
Circuits act on row vectors, x -> x M. The elementary steps are

    CNOT(c, t)    I + E[c, t]         adds bit c into bit t
    SWAP(a, b)    transposition       exchanges bits a and b

and a circuit's matrix is the product of its step matrices in order.

DEPTH:
------
Steps are layered greedily in program order. Two steps conflict if they
touch a common qubit, except CNOTs that share only their control (a
fan-out), which commute and may share a layer. A step lands one layer
after the latest earlier step it conflicts with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import numpy as np

from autgadgets.models.bitmatrix import BitMatrix, kron
from autgadgets.models.permutation import Permutation


@dataclass(frozen=True)
class CircuitStep:
    """
    One elementary operation.

    Attributes:
        kind: "cnot" or "swap".
        a: Control (cnot) or first qubit (swap).
        b: Target (cnot) or second qubit (swap).
    """

    kind: str
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.kind not in ("cnot", "swap"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.a == self.b:
            raise ValueError(f"{self.kind} on a single qubit {self.a}")

    def conflicts(self, other: CircuitStep) -> bool:
        shared = {self.a, self.b} & {other.a, other.b}
        if not shared:
            return False
        fan_out = (
            self.kind == other.kind == "cnot"
            and self.a == other.a
            and self.b != other.b
        )
        return not fan_out

    def apply(self, array: np.ndarray) -> None:
        """Right-multiply a 0/1 array in place by this step's matrix."""
        if self.kind == "cnot":
            array[:, self.b] ^= array[:, self.a]
        else:
            array[:, [self.a, self.b]] = array[:, [self.b, self.a]]

    def __str__(self) -> str:
        if self.kind == "cnot":
            return f"CNOT({self.a}->{self.b})"
        return f"SWAP({self.a},{self.b})"


def schedule(steps: Tuple[CircuitStep, ...]) -> List[int]:
    """Greedy layer index for every step."""
    layers: List[int] = []
    for i, step in enumerate(steps):
        layer = 0
        for j in range(i):
            if layers[j] + 1 > layer and step.conflicts(steps[j]):
                layer = layers[j] + 1
        layers.append(layer)
    return layers


@dataclass(frozen=True)
class InvertibleCircuit:
    """
    An invertible F2 matrix with an elementary-step decomposition.

    Attributes:
        matrix: The size x size matrix realized by the steps.
        steps: SWAP/CNOT steps, product in order equals matrix.
    """

    matrix: BitMatrix
    steps: Tuple[CircuitStep, ...]

    @property
    def size(self) -> int:
        return self.matrix.rows

    @property
    def depth(self) -> int:
        layers = schedule(self.steps)
        return max(layers) + 1 if layers else 0

    @property
    def cnot_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "cnot")

    def replay(self) -> BitMatrix:
        out = np.eye(self.size, dtype=np.uint8)
        for step in self.steps:
            step.apply(out)
        return BitMatrix.from_array(out)

    def is_permutation(self) -> bool:
        return all(s.kind == "swap" for s in self.steps)

    def kron_identity(self, size: int, left: bool = True) -> InvertibleCircuit:
        """
        The circuit for M (x) I_size (``left=True``) or I_size (x) M.

        Every step is copied onto each of the ``size`` disjoint blocks, so
        the layering and hence the depth are unchanged.
        """
        n = self.size
        ident = BitMatrix.identity(size)
        expanded: List[CircuitStep] = []
        for step in self.steps:
            for j in range(size):
                if left:
                    expanded.append(CircuitStep(step.kind, step.a * size + j, step.b * size + j))
                else:
                    expanded.append(CircuitStep(step.kind, j * n + step.a, j * n + step.b))
        matrix = kron(self.matrix, ident) if left else kron(ident, self.matrix)
        return InvertibleCircuit(matrix, tuple(expanded))


SectorAction = Union[Permutation, InvertibleCircuit]


@dataclass(frozen=True)
class Gadget:
    """
    A lifted logical operation on a product code.

    Attributes:
        name: Provenance, e.g. "hgp first (15)(26)".
        U: n x n invertible matrix, X-type vectors move as x -> x U.
        W: Check-side action with H_X U = W H_X.
        W_prime: Check-side action with H_Z U^-T = W' H_Z.
        V_bar: Action on the kept logicals, G_X U = V_bar G_X mod stabilizers.
        actions: Per-sector structured action, in sector order.
    """

    name: str
    U: BitMatrix
    W: BitMatrix
    W_prime: BitMatrix
    V_bar: BitMatrix
    actions: Tuple[Tuple[str, SectorAction], ...] = ()

    @property
    def n(self) -> int:
        return self.U.rows

    def action(self, sector: str) -> SectorAction:
        return dict(self.actions)[sector]

    def sector_kinds(self) -> Dict[str, str]:
        return {
            name: "permutation" if isinstance(act, Permutation) or act.is_permutation() else "circuit"
            for name, act in self.actions
        }

    def is_permutation_only(self) -> bool:
        return self.U.is_permutation()

    def circuit_depth(self) -> int:
        """Largest depth over the circuit sectors (0 for pure permutations)."""
        depths = [act.depth for _, act in self.actions if isinstance(act, InvertibleCircuit)]
        return max(depths, default=0)
