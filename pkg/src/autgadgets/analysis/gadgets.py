"""
Automorphism gadgets inherited by product codes.

A gadget is an invertible U on the qubits (X-type vectors move as
x -> x U, Z-type as z -> z U^-T) together with check-side actions

    H_X U = W H_X        H_Z U^-T = W' H_Z

so both stabilizer groups are preserved. Each construction below is a
direct sum over sectors of Kronecker products with an identity:

    hgp first    (P1 (x) I)  (+) (W1 (x) I)
    hgp second   (I (x) P2)  (+) (I (x) W2^-T)
    qc classical (I (x) P)   (+) (I (x) w^-T)
    qc quantum   (U (x) I)   (+) (W (x) I)
    qq first     (W1'^-T (x) I) (+) (U1 (x) I) (+) (W1 (x) I)
    qq second    (I (x) W2)     (+) (I (x) U2) (+) (I (x) W2'^-T)

A sector action is a Permutation when its matrix is a permutation and an
InvertibleCircuit otherwise. Kronecker products with an identity copy each
circuit step across disjoint blocks, which keeps the depth of the input
circuit.

Actions are keyed by sector name, optionally with the input sector they
came from ("L.R": the input's R action lifted into the new L sector).
Every action acts on the local indices of its parent sector.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from autgadgets.analysis.automorph import close_matrix_group, tanner_permutation
from autgadgets.analysis.circuits import decompose
from autgadgets.analysis.products import transpose_record
from autgadgets.errors import CodeNotPreservedError, VerificationError
from autgadgets.models.automorphism import CodeAutomorphism
from autgadgets.models.bitmatrix import BitMatrix, direct_sum, express_modulo, kron, vstack
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.css import CssCode, LogicalBasis, SectorLayout
from autgadgets.models.gadget import CircuitStep, Gadget, InvertibleCircuit, SectorAction
from autgadgets.models.permutation import Permutation, kron_identity
from autgadgets.models.product import ProductRecord

logger = logging.getLogger(__name__)

__all__ = [
    "GadgetReport",
    "decompose",
    "from_transpose",
    "lift_hgp",
    "lift_hgp_right",
    "lift_qc",
    "lift_qq",
    "logical_action",
    "logical_group_order",
    "record_logical_action",
    "verify",
    "verify_many",
]


# ----------------------------------------------------------------------
# Sector actions
# ----------------------------------------------------------------------


def _as_action(m: BitMatrix) -> SectorAction:
    if m.is_permutation():
        return Permutation.from_matrix(m)
    return decompose(m)


def _action_matrix(action: SectorAction) -> BitMatrix:
    if isinstance(action, Permutation):
        return action.as_matrix()
    return action.matrix


def _kron_action(action: SectorAction, size: int, left: bool) -> SectorAction:
    if isinstance(action, Permutation):
        return kron_identity(action, size, left)
    return action.kron_identity(size, left)


def _embed(action: SectorAction, offset: int, total: int) -> SectorAction:
    """Extend an action on [offset, offset + size) by the identity to [0, total)."""
    if isinstance(action, Permutation):
        images = list(range(total))
        for i, j in enumerate(action.images):
            images[offset + i] = offset + j
        return Permutation(tuple(images))
    tail = total - offset - action.size
    matrix = direct_sum([BitMatrix.identity(offset), action.matrix, BitMatrix.identity(tail)])
    steps = tuple(CircuitStep(s.kind, s.a + offset, s.b + offset) for s in action.steps)
    return InvertibleCircuit(matrix, steps)


def _relabel(action: SectorAction, local: Permutation) -> SectorAction:
    """Conjugate an action by a relabeling ``local`` (old index -> new index)."""
    if isinstance(action, Permutation):
        return local * action * local.inverse()
    inv = local.inverse()
    matrix = local.as_matrix() @ action.matrix @ local.as_matrix().T
    steps = tuple(CircuitStep(s.kind, inv(s.a), inv(s.b)) for s in action.steps)
    return InvertibleCircuit(matrix, steps)


def _input_actions(g: Gadget, layout: SectorLayout) -> List[Tuple[str, SectorAction]]:
    """Input gadget actions embedded into the full input index range."""
    out = []
    for key, action in g.actions:
        sector = layout[key.split(".")[0]]
        out.append((key, _embed(action, sector.start, layout.n)))
    return out


def _assemble(actions: Sequence[Tuple[str, SectorAction]], layout: SectorLayout) -> BitMatrix:
    """Dense U from sector actions; actions sharing a sector multiply in order."""
    blocks = []
    for sector in layout.sectors:
        block = BitMatrix.identity(sector.size)
        for key, action in actions:
            if key.split(".")[0] == sector.name:
                block = block @ _action_matrix(action)
        blocks.append(block)
    return direct_sum(blocks)


# ----------------------------------------------------------------------
# Logical actions
# ----------------------------------------------------------------------


def logical_action(
    g: Gadget,
    code: CssCode,
    basis: LogicalBasis,
    pauli: str = "X",
    gauge: Optional[LogicalBasis] = None,
) -> BitMatrix:
    """
    V with (basis rows) U = V (basis rows) modulo stabilizers (and gauge
    operators of the same type, when given).

    X rows move by U, Z rows by U^-T.

    Raises:
        CodeNotPreservedError: If some image is not expressible.
    """
    if basis.k == 0:
        return BitMatrix.zeros(0, 0)
    if pauli == "X":
        reps, moved, stabilizers = basis.G_X, basis.G_X @ g.U, code.H_X
        extra = gauge.G_X if gauge is not None and gauge.k else None
    else:
        reps, moved, stabilizers = basis.G_Z, basis.G_Z @ g.U.inverse().T, code.H_Z
        extra = gauge.G_Z if gauge is not None and gauge.k else None
    modulo = vstack([stabilizers, extra]) if extra is not None else stabilizers
    coeffs = express_modulo(moved, reps, modulo)
    if coeffs is None:
        for row in range(moved.rows):
            if express_modulo(moved.select_rows([row]), reps, modulo) is None:
                raise CodeNotPreservedError(kind=f"{pauli} logical", row=row)
        raise CodeNotPreservedError(kind=f"{pauli} logical")
    return coeffs


def record_logical_action(g: Gadget, p: ProductRecord, pauli: str = "X") -> BitMatrix:
    """Action on the kept logicals of a record, modulo its gauge operators."""
    return logical_action(g, p.code, p.kept, pauli, gauge=p.gauge)


def _build(
    name: str,
    p: ProductRecord,
    u: BitMatrix,
    w: BitMatrix,
    w_prime: BitMatrix,
    actions: Sequence[Tuple[str, SectorAction]],
) -> Gadget:
    draft = Gadget(name, u, w, w_prime, BitMatrix.zeros(0, 0), tuple(actions))
    v_bar = record_logical_action(draft, p)
    gadget = Gadget(name, u, w, w_prime, v_bar, tuple(actions))
    verify(gadget, p)
    logger.debug("%s: built, depth %d, permutation-only %s", name, gadget.circuit_depth(), gadget.is_permutation_only())
    return gadget


# ----------------------------------------------------------------------
# Lifts
# ----------------------------------------------------------------------


def _check_input(code: ClassicalCode, aut: CodeAutomorphism) -> None:
    p = aut.sigma.as_matrix()
    if aut.sigma.n != code.n or code.H @ p != aut.W @ code.H:
        raise VerificationError(identity=f"H sigma = W H for {code.name} {aut.sigma.to_cycles()}")
    if code.k and code.G @ p != aut.V @ code.G:
        raise VerificationError(identity=f"G sigma = V G for {code.name} {aut.sigma.to_cycles()}")


def _check_side(code: ClassicalCode, aut: CodeAutomorphism, prefer_tanner: bool) -> BitMatrix:
    """The check action to lift: a permutation when one exists and is preferred."""
    if prefer_tanner and not aut.W.is_permutation():
        w = tanner_permutation(code, aut.sigma)
        if w is not None:
            return w.as_matrix()
    return aut.W


def lift_hgp(p: ProductRecord, which: str, aut: CodeAutomorphism, prefer_tanner: bool = True) -> Gadget:
    """
    Lift an automorphism of the first or second input of an hgp record.

    Raises:
        VerificationError: If ``aut`` does not belong to that input or a
            gadget identity fails.
    """
    if p.kind != "hgp":
        raise ValueError(f"lift_hgp needs an hgp record, got {p.kind}")
    c1, c2 = p.factors
    assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
    if which == "first":
        _check_input(c1, aut)
        w1 = _check_side(c1, aut, prefer_tanner)
        left: SectorAction = kron_identity(aut.sigma, c2.n, left=True)
        right = _kron_action(_as_action(w1), c2.m, left=True)
        w = kron(w1, BitMatrix.identity(c2.n))
        w_prime = kron(aut.sigma.as_matrix(), BitMatrix.identity(c2.m))
    elif which == "second":
        _check_input(c2, aut)
        w2 = _check_side(c2, aut, prefer_tanner)
        left = kron_identity(aut.sigma, c1.n, left=False)
        right = _kron_action(_as_action(w2.inverse().T), c1.m, left=False)
        w = kron(BitMatrix.identity(c1.m), aut.sigma.as_matrix())
        w_prime = kron(BitMatrix.identity(c1.n), w2)
    else:
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    actions = [("L", left), ("R", right)]
    u = _assemble(actions, p.code.sectors)
    return _build(f"hgp {which} {aut.sigma.to_cycles()}", p, u, w, w_prime, actions)


def swap_axes(rows: int, cols: int) -> Permutation:
    """Index x * cols + y of a rows x cols grid -> y * rows + x of its transpose."""
    return Permutation(tuple(y * rows + x for x in range(rows) for y in range(cols)))


def from_transpose(g: Gadget, p: ProductRecord) -> Gadget:
    """
    Express a gadget lifted on ``transpose_record(p)`` on the code of p.

    The transposed record holds the same code with L and R exchanged and
    every grid (qubits and both check types) transposed.
    """
    c1, c2 = p.factors
    assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
    n1, m1, n2, m2 = c1.n, c1.m, c2.n, c2.m
    left_local, right_local = swap_axes(n1, n2), swap_axes(m1, m2)
    qubits = Permutation(
        tuple(m1 * m2 + left_local(i) for i in range(n1 * n2))
        + tuple(right_local(j) for j in range(m1 * m2))
    )
    pq = qubits.as_matrix()
    px = swap_axes(m1, n2).as_matrix()
    pz = swap_axes(n1, m2).as_matrix()
    u = pq @ g.U @ pq.T
    w = px @ g.W @ px.T
    w_prime = pz @ g.W_prime @ pz.T
    swapped = {"L": ("R", right_local), "R": ("L", left_local)}
    actions = []
    for key, action in g.actions:
        parent, _, rest = key.partition(".")
        target, local = swapped[parent]
        actions.append((target + ("." + rest if rest else ""), _relabel(action, local)))
    actions.sort(key=lambda item: p.code.sectors.names.index(item[0].split(".")[0]))
    return _build(f"{g.name} (transposed)", p, u, w, w_prime, actions)


def lift_hgp_right(p: ProductRecord, which: str, aut: CodeAutomorphism) -> Gadget:
    """Right-sector gadget: lift on the transposed record and pull back."""
    return from_transpose(lift_hgp(transpose_record(p), which, aut), p)


def lift_qc(
    p: ProductRecord,
    side: str,
    source: Union[CodeAutomorphism, Gadget],
    prefer_tanner: bool = True,
) -> Gadget:
    """
    Lift a classical automorphism (``side="classical"``) or a gadget of
    the quantum input (``side="quantum"``) to a qc record.

    Raises:
        VerificationError: If a gadget identity fails.
    """
    if p.kind != "qc":
        raise ValueError(f"lift_qc needs a qc record, got {p.kind}")
    q, c = p.factors
    assert isinstance(c, ClassicalCode)
    code_q = q.code if isinstance(q, ProductRecord) else q
    assert isinstance(code_q, CssCode)
    n_q, m_x, m_z = code_q.n, code_q.H_X.rows, code_q.H_Z.rows
    n_c, m_c = c.n, c.m
    if side == "classical":
        assert isinstance(source, CodeAutomorphism)
        _check_input(c, source)
        wc = _check_side(c, source, prefer_tanner)
        perm = source.sigma.as_matrix()
        actions: List[Tuple[str, SectorAction]] = [
            ("L", kron_identity(source.sigma, n_q, left=False)),
            ("R", _kron_action(_as_action(wc.inverse().T), m_x, left=False)),
        ]
        w = kron(BitMatrix.identity(m_x), perm)
        w_prime = direct_sum([kron(BitMatrix.identity(m_z), perm), kron(BitMatrix.identity(n_q), wc)])
        name = f"qc classical {source.sigma.to_cycles()}"
    elif side == "quantum":
        assert isinstance(source, Gadget)
        actions = [
            (f"L.{key}", _kron_action(action, n_c, left=True))
            for key, action in _input_actions(source, code_q.sectors)
        ]
        actions.append(("R", _kron_action(_as_action(source.W), m_c, left=True)))
        w = kron(source.W, BitMatrix.identity(n_c))
        w_prime = direct_sum(
            [kron(source.W_prime, BitMatrix.identity(n_c)), kron(source.U.inverse().T, BitMatrix.identity(m_c))]
        )
        name = f"qc quantum [{source.name}]"
    else:
        raise ValueError(f"side must be 'classical' or 'quantum', got {side!r}")
    u = _assemble(actions, p.code.sectors)
    return _build(name, p, u, w, w_prime, actions)


def lift_qq(p: ProductRecord, which: str, source: Gadget) -> Gadget:
    """
    Lift a gadget of the first or second quantum input to a qq record.

    Raises:
        VerificationError: If a gadget identity fails.
    """
    if p.kind != "qq":
        raise ValueError(f"lift_qq needs a qq record, got {p.kind}")
    a, b = (f.code if isinstance(f, ProductRecord) else f for f in p.factors)
    assert isinstance(a, CssCode) and isinstance(b, CssCode)
    eye = BitMatrix.identity
    if which == "first":
        m_x2, n2, m_z2 = b.H_X.rows, b.n, b.H_Z.rows
        actions: List[Tuple[str, SectorAction]] = [
            ("L", _kron_action(_as_action(source.W_prime.inverse().T), m_x2, left=True))
        ]
        actions += [
            (f"M.{key}", _kron_action(action, n2, left=True))
            for key, action in _input_actions(source, a.sectors)
        ]
        actions.append(("R", _kron_action(_as_action(source.W), m_z2, left=True)))
        w = direct_sum([kron(source.U, eye(m_x2)), kron(source.W, eye(n2))])
        w_prime = direct_sum([kron(source.W_prime, eye(n2)), kron(source.U.inverse().T, eye(m_z2))])
    elif which == "second":
        n, m_x, m_z = a.n, a.H_X.rows, a.H_Z.rows
        actions = [("L", _kron_action(_as_action(source.W), m_z, left=False))]
        actions += [
            (f"M.{key}", _kron_action(action, n, left=False))
            for key, action in _input_actions(source, b.sectors)
        ]
        actions.append(("R", _kron_action(_as_action(source.W_prime.inverse().T), m_x, left=False)))
        w = direct_sum([kron(eye(n), source.W), kron(eye(m_x), source.U)])
        w_prime = direct_sum([kron(eye(m_z), source.U.inverse().T), kron(eye(n), source.W_prime)])
    else:
        raise ValueError(f"which must be 'first' or 'second', got {which!r}")
    u = _assemble(actions, p.code.sectors)
    return _build(f"qq {which} [{source.name}]", p, u, w, w_prime, actions)


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------


@dataclass
class GadgetReport:
    """
    Result of re-verifying a gadget from scratch.

    Attributes:
        name: Gadget provenance.
        permutation_only: U is a permutation matrix.
        depth: Largest circuit depth over the sectors.
        sector_kinds: "permutation" or "circuit" per action key.
        V_bar: Recomputed logical X action.
    """

    name: str
    permutation_only: bool
    depth: int
    sector_kinds: Dict[str, str] = field(default_factory=dict)
    V_bar: Optional[BitMatrix] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "permutation_only": self.permutation_only,
            "depth": self.depth,
            "sector_kinds": dict(self.sector_kinds),
            "V_bar": str(self.V_bar).splitlines() if self.V_bar is not None else None,
        }


def _require_equal(left: BitMatrix, right: BitMatrix, identity: str) -> None:
    if left != right:
        diff = (left ^ right).to_array()
        rows, cols = np.nonzero(diff)
        location = tuple((int(r), int(c)) for r, c in zip(rows[:4], cols[:4]))
        logger.warning("%s fails at %s", identity, location)
        raise VerificationError(identity=identity, location=location)


def verify(g: Gadget, p: ProductRecord) -> GadgetReport:
    """
    Recheck a gadget against a record.

    Raises:
        VerificationError: On any failed identity.
        CodeNotPreservedError: If a logical image leaves the code.
    """
    code = p.code
    if not g.U.is_invertible():
        raise VerificationError(identity="U invertible")
    _require_equal(code.H_X @ g.U, g.W @ code.H_X, "H_X U = W H_X")
    _require_equal(code.H_Z @ g.U.inverse().T, g.W_prime @ code.H_Z, "H_Z U^-T = W' H_Z")
    if g.actions:
        _require_equal(_assemble(g.actions, code.sectors), g.U, "U = sector actions")
    v_bar = record_logical_action(g, p, "X")
    v_prime = record_logical_action(g, p, "Z")
    if v_bar.rows:
        if not v_bar.is_invertible():
            raise VerificationError(identity="V_bar invertible")
        _require_equal(v_prime, v_bar.inverse().T, "V_bar' = V_bar^-T")
    if g.V_bar.rows:
        _require_equal(g.V_bar, v_bar, "stored V_bar = recomputed V_bar")
    return GadgetReport(g.name, g.is_permutation_only(), g.circuit_depth(), g.sector_kinds(), v_bar)


def verify_many(gadgets: Sequence[Gadget], p: ProductRecord, workers: Optional[int] = None) -> List[GadgetReport]:
    if workers is not None and workers > 1 and len(gadgets) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda g: verify(g, p), gadgets))
    return [verify(g, p) for g in gadgets]


def logical_group_order(gadgets: Sequence[Gadget], order_cap: int = 100_000) -> int:
    """Order of the group generated by the gadgets' logical actions."""
    matrices = [g.V_bar for g in gadgets if g.V_bar.rows]
    if not matrices:
        return 1
    return len(close_matrix_group(matrices, order_cap))
