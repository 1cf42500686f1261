"""
Copy-cup CZ circuits between two blocks of a hypergraph product of cycle codes.

PRODUCT GRAPH:
--------------
For c1 = cycle(G1) and c2 = cycle(G2)^T the record hgp(c1, c2) lives on
the Cartesian product G1 x G2. Vertices (u, v) carry X checks and every
qubit is an edge:

    L qubit (e, v)   edge e of G1 copied at vertex v of G2
    R qubit (u, f)   edge f of G2 copied at vertex u of G1

An orientation of each factor orients the product edges by copying. Two
directed edges from different factors are consecutive when the head of
the first is the tail of the second; each such pair receives a physical
CZ between the first edge on block 1 and the second edge on block 2. Both
orders (L then R, R then L) contribute, so swapping the blocks transposes
the resulting logical adjacency.

VERIFICATION:
-------------
With A the n x n pairing matrix, conjugation by the circuit sends

    X_a (block 1) -> X_a Z^(e_a A)    X_b (block 2) -> X_b Z^(e_b A^T)

The circuit preserves the code when every X stabilizer maps its Z pattern
into rowspace(H_Z). The logical CZ adjacency is read off by expressing the
patterns of the kept X logicals in the Z logical basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from autgadgets.analysis.graphs import incidence_matrix
from autgadgets.errors import CodeNotPreservedError, DimensionMismatchError, OrientationError
from autgadgets.models.bitmatrix import BitMatrix, BitVector, RowReducer, express_modulo
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.graph import SimpleGraph
from autgadgets.models.orientation import BACKWARD, FORWARD, FREE, CzPairing, Orientation
from autgadgets.models.permutation import Permutation
from autgadgets.models.product import ProductRecord

logger = logging.getLogger(__name__)


def orient_from_codeword(graph: SimpleGraph, codeword: BitVector) -> Optional[Orientation]:
    """
    Orient the edges of a cycle-code codeword as one directed cycle.

    The walk starts at the smallest vertex on the cycle and leaves along
    its smaller neighbour. Edges outside the support stay free.

    Returns:
        The orientation, or None when the support is not a single cycle.
    """
    if len(codeword) != graph.num_edges:
        raise DimensionMismatchError(expected=(graph.num_edges,), found=(len(codeword),))
    support = codeword.support()
    if not support:
        return None
    around: Dict[int, List[int]] = {}
    for e in support:
        u, v = graph.edges[e]
        around.setdefault(u, []).append(v)
        around.setdefault(v, []).append(u)
    if any(len(nbrs) != 2 for nbrs in around.values()):
        return None
    directions = [FREE] * graph.num_edges
    start = min(around)
    prev, here = start, min(around[start])
    visited = 1
    while True:
        a, b = prev, here
        directions[graph.edge_index(a, b)] = FORWARD if a < b else BACKWARD
        if here == start:
            break
        nxt = [w for w in around[here] if w != prev]
        prev, here = here, nxt[0]
        visited += 1
    if visited != len(support):
        return None
    orientation = Orientation(graph, tuple(directions))
    assert orientation.is_leibniz()
    return orientation


def _require_cycle_factors(p: ProductRecord, o1: Orientation, o2: Orientation) -> None:
    if p.kind != "hgp":
        raise ValueError(f"copy-cup needs an hgp record, got {p.kind}")
    c1, c2 = p.factors
    assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
    if c1.H != incidence_matrix(o1.graph):
        raise ValueError(f"first factor {c1.name} is not the cycle code of {o1.graph.name}")
    if c2.H != incidence_matrix(o2.graph).T:
        raise ValueError(f"second factor {c2.name} is not the transposed cycle code of {o2.graph.name}")


def czpairs(
    p: ProductRecord,
    o1: Orientation,
    o2: Orientation,
    require_leibniz: bool = True,
) -> CzPairing:
    """
    Physical CZ pairs of the copy-cup circuit on hgp(cycle(G1), cycle(G2)^T).

    Raises:
        OrientationError: If ``require_leibniz`` and either orientation has
            a vertex of odd directed degree.
        ValueError: If the record is not built from the two graphs.
    """
    _require_cycle_factors(p, o1, o2)
    if require_leibniz:
        for o in (o1, o2):
            bad = o.violations()
            if bad:
                raise OrientationError(vertex=bad[0])
    left = p.code.sectors["L"]
    right = p.code.sectors["R"]
    pairs: List[Tuple[int, int]] = []
    for e1, t1, h1 in o1.directed_edges():
        for e2, t2, h2 in o2.directed_edges():
            # (t1,t2) -> (h1,t2) -> (h1,h2)
            pairs.append((left.index(e1, t2), right.index(h1, e2)))
            # (t1,t2) -> (t1,h2) -> (h1,h2)
            pairs.append((right.index(t1, e2), left.index(e1, h2)))
    pairing = CzPairing(p.n, tuple(pairs))
    logger.debug("%s: %d copy-cup CZ pairs", p.name, len(pairing))
    return pairing


def pairing_matrix(pairing: CzPairing) -> BitMatrix:
    a = np.zeros((pairing.n, pairing.n), dtype=np.uint8)
    for i, j in pairing.pairs:
        a[i, j] = 1
    return BitMatrix.from_array(a)


@dataclass
class CzReport:
    """
    Logical effect of a verified CZ circuit.

    Attributes:
        record: Record name.
        gates: Number of physical CZ gates.
        adjacency: k x k matrix; entry (i, j) = 1 means logical CZ between
            kept logical i on block 1 and kept logical j on block 2.
        labels: Kept logical labels.
    """

    record: str
    gates: int
    adjacency: BitMatrix
    labels: Tuple[str, ...] = ()

    def pairs(self) -> List[Tuple[str, str]]:
        rows, cols = np.nonzero(self.adjacency.to_array())
        name = (lambda i: self.labels[i]) if self.labels else str
        return [(name(int(i)), name(int(j))) for i, j in zip(rows, cols)]

    def to_dict(self) -> Dict[str, object]:
        return {
            "record": self.record,
            "gates": self.gates,
            "logical_cz": [list(pair) for pair in self.pairs()],
        }


def verify_cz(p: ProductRecord, pairing: CzPairing) -> CzReport:
    """
    Check code preservation and compute the logical CZ adjacency.

    Raises:
        CodeNotPreservedError: If an X stabilizer's Z pattern (on either
            block) is outside rowspace(H_Z), or a logical's pattern is not
            a Z logical.
    """
    if pairing.n != p.n:
        raise DimensionMismatchError(expected=(p.n,), found=(pairing.n,))
    a = pairing_matrix(pairing)
    h_x, h_z = p.code.H_X, p.code.H_Z
    stabilizers = RowReducer(h_z)
    for kind, pattern in (("X stabilizer", h_x @ a), ("X stabilizer (block 2)", h_x @ a.T)):
        for row, value in enumerate(pattern.to_int_rows()):
            if not stabilizers.contains_int(value):
                logger.warning("%s: Z pattern of %s %d leaves the stabilizer group", p.name, kind, row)
                raise CodeNotPreservedError(kind=kind, row=row)
    kept = p.kept
    if kept.k == 0:
        return CzReport(p.name, len(pairing), BitMatrix.zeros(0, 0), ())
    full = p.full_basis()
    patterns = kept.G_X @ a
    coeffs = express_modulo(patterns, full.G_Z, h_z)
    if coeffs is None:
        for row in range(patterns.rows):
            if express_modulo(patterns.select_rows([row]), full.G_Z, h_z) is None:
                raise CodeNotPreservedError(kind="X logical", row=row)
        raise CodeNotPreservedError(kind="X logical")
    adjacency = coeffs.select_columns(range(kept.k))
    return CzReport(p.name, len(pairing), adjacency, kept.labels)


def permute_pairing(
    pairing: CzPairing,
    first: Optional[Permutation] = None,
    second: Optional[Permutation] = None,
) -> CzPairing:
    """Relabel block-1 qubits by ``first`` and block-2 qubits by ``second``."""
    first = first or Permutation.identity(pairing.n)
    second = second or Permutation.identity(pairing.n)
    return CzPairing(pairing.n, tuple((first(i), second(j)) for i, j in pairing.pairs))


def conjugate_adjacency(
    adjacency: BitMatrix,
    first: Optional[BitMatrix] = None,
    second: Optional[BitMatrix] = None,
) -> BitMatrix:
    """
    Logical adjacency after permuting the blocks by gadgets acting as
    ``first`` and ``second`` on the kept X logicals: V1^-1 A V2^-T.
    """
    k = adjacency.rows
    v1 = first if first is not None else BitMatrix.identity(k)
    v2 = second if second is not None else BitMatrix.identity(k)
    return v1.inverse() @ adjacency @ v2.inverse().T
