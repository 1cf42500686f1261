"""
Product constructions: hypergraph, quantum x classical and quantum x
quantum homological products.

BLOCK LAYOUT:
-------------
Every product is the middle of a tensor product of chain complexes, with
the components of each degree ordered by the degree of the first factor,
highest first. Kronecker index (i, j) of a block maps to i * dim2 + j, so
every sector is a row-major grid whose rows index the first factor.

    hgp(h1, h2)      L = bits1 x bits2          R = checks1 x checks2
        H_X = ( h1 (x) I | I (x) h2^T )
        H_Z = ( I (x) h2 | h1^T (x) I )

    qc(Q, h)         L = qubits x bits          R = xchecks x checks
        H_X = ( H_X (x) I | I (x) h^T )
        H_Z = ( H_Z (x) I |      0      )
              ( I (x) h   | H_X^T (x) I )
        M_Z = ( I (x) h   | H_Z (x) I )

    qq(Q, Q')        L = zchecks x xchecks'     M = qubits x qubits'
                     R = xchecks x zchecks'
        H_X = ( H_Z^T (x) I | I (x) H'_X  |      0        )
              (      0      | H_X (x) I   | I (x) H'_Z^T  )
        H_Z = ( I (x) H'_X^T | H_Z (x) I  |      0        )
              (      0       | I (x) H'_Z | H_X^T (x) I   )
        M_X = ( H_X (x) I | I (x) H'_X )
        M_Z = ( I (x) H'_Z | H_Z (x) I )

CANONICAL BASES:
----------------
Unit vectors outside a row space are taken at an information set of the
complementary code: for a code C = ker h with generator g, the columns J
where g restricts to the identity satisfy e_J + rowspace(h) = F2^n. Pairing
g-rows with e_J-rows then gives G_X G_Z^T = I without recombination.

    hgp L:   X = e_J1 (x) g2              Z = g1 (x) e_J2
    hgp R:   X = g1^T (x) e_J2^T          Z = e_J1^T (x) g2^T
    qc  L:   X = G_X (x) g                Z = G_Z (x) e_J
    qc  R:   X = t_X (x) e_J^T            Z = e_{J_X} (x) g^T    (gauge)
    qq  M:   X = G_X (x) G'_X             Z = G_Z (x) G'_Z
    qq  L/R: spurious pairs from the outer homology                (gauge)

where g^T generates ker h^T and t_X generates ker H_X^T.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from autgadgets.analysis.validation import canonical_logical_basis, validate
from autgadgets.errors import VerificationError
from autgadgets.models.bitmatrix import (
    BitMatrix,
    block_matrix,
    hstack,
    kron,
)
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.css import ChainComplex, CssCode, LogicalBasis, SectorLayout
from autgadgets.models.product import ProductRecord, restrict_to, stack_bases

logger = logging.getLogger(__name__)

QuantumInput = Union[CssCode, ProductRecord]


def _identity(n: int) -> BitMatrix:
    return BitMatrix.identity(n)


def unit_rows(n: int, columns: Sequence[int]) -> BitMatrix:
    """Rows e_c for every c in ``columns``."""
    out = [[0] * n for _ in columns]
    for i, c in enumerate(columns):
        out[i][c] = 1
    return BitMatrix.from_rows(out, n)


def _pad(m: BitMatrix, before: int, after: int) -> BitMatrix:
    blocks = []
    if before:
        blocks.append(BitMatrix.zeros(m.rows, before))
    blocks.append(m)
    if after:
        blocks.append(BitMatrix.zeros(m.rows, after))
    return hstack(blocks) if len(blocks) > 1 else m


def _sector_basis(
    gx: BitMatrix,
    gz: BitMatrix,
    before: int,
    after: int,
    prefix: str,
    grid: Tuple[int, int],
) -> LogicalBasis:
    labels = tuple(f"{prefix}{a + 1},{b + 1}" for a in range(grid[0]) for b in range(grid[1]))
    return LogicalBasis(_pad(gx, before, after), _pad(gz, before, after), labels)


def _outer_pair(first: ClassicalCode, second: ClassicalCode) -> Tuple[BitMatrix, BitMatrix]:
    """(first.G (x) e_J(second), e_J(first) (x) second.G); paired row by row."""
    return (
        kron(first.G, unit_rows(second.n, second.info_set)),
        kron(unit_rows(first.n, first.info_set), second.G),
    )


def _quantum_parts(q: QuantumInput) -> Tuple[CssCode, LogicalBasis, Optional[LogicalBasis]]:
    """The code, its kept basis and its gauge basis (if any)."""
    if isinstance(q, ProductRecord):
        return q.code, q.kept, q.gauge if q.gauge.k else None
    return q, canonical_logical_basis(q), None


def _finish(record: ProductRecord) -> ProductRecord:
    try:
        validate(record.code, record.full_basis())
    except VerificationError:
        logger.warning("%s: product failed validation", record.name)
        raise
    logger.debug(
        "%s: n=%d k=%d (kept %d, gauge %d)",
        record.name, record.n, record.code.k, record.kept.k, record.gauge.k,
    )
    return record


# ----------------------------------------------------------------------
# Hypergraph product
# ----------------------------------------------------------------------


def hgp(c1: ClassicalCode, c2: ClassicalCode, name: Optional[str] = None) -> ProductRecord:
    """
    Hypergraph product with left (n1 x n2) and right (m1 x m2) sectors.

    Both sectors are kept; ``as_left_sector`` designates R as gauge.
    """
    h1, h2 = c1.H, c2.H
    m1, n1 = h1.shape
    m2, n2 = h2.shape
    h_x = hstack([kron(h1, _identity(n2)), kron(_identity(m1), h2.T)])
    h_z = hstack([kron(_identity(n1), h2), kron(h1.T, _identity(m2))])
    layout = SectorLayout.from_grids(
        [
            ("L", n1, n2, f"bits({c1.name})", f"bits({c2.name})"),
            ("R", m1, m2, f"checks({c1.name})", f"checks({c2.name})"),
        ]
    )
    code = CssCode(h_x, h_z, name or f"hgp({c1.name},{c2.name})", layout=layout)
    left_x = kron(unit_rows(n1, c1.info_set), c2.G)
    left_z = kron(c1.G, unit_rows(n2, c2.info_set))
    t1, t2 = c1.transpose(), c2.transpose()
    right_x, right_z = _outer_pair(t1, t2)
    bases = {
        "L": _sector_basis(left_x, left_z, 0, m1 * m2, "L", (c1.k, c2.k)),
        "R": _sector_basis(right_x, right_z, n1 * n2, 0, "R", (t1.k, t2.k)),
    }
    record = ProductRecord(
        kind="hgp",
        code=code,
        factors=(c1, c2),
        kept=stack_bases([bases["L"], bases["R"]], code.n),
        gauge=LogicalBasis.empty(code.n),
        sector_bases=bases,
    )
    return _finish(record)


def transpose_record(p: ProductRecord) -> ProductRecord:
    """
    hgp(c2^T, c1^T): the same code with sectors exchanged and both grids
    transposed, so lifts from this record act with circuits on the
    original left sector and permutations on the original right sector.
    """
    if p.kind != "hgp":
        raise ValueError(f"transpose_record needs an hgp record, got {p.kind}")
    c1, c2 = p.factors
    assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
    return hgp(c2.transpose(), c1.transpose(), name=f"{p.name}^T")


def subsystem_generators(p: ProductRecord) -> Tuple[BitMatrix, BitMatrix]:
    """
    H'_X = (I (x) g2) H_X = (h1 (x) g2 | 0) and H'_Z = (g1 (x) I) H_Z = (g1 (x) h2 | 0).
    """
    if p.kind != "hgp":
        raise ValueError(f"subsystem generators need an hgp record, got {p.kind}")
    c1, c2 = p.factors
    assert isinstance(c1, ClassicalCode) and isinstance(c2, ClassicalCode)
    left_x = kron(_identity(c1.m), c2.G) @ p.code.H_X
    left_z = kron(c1.G, _identity(c2.m)) @ p.code.H_Z
    return left_x, left_z


# ----------------------------------------------------------------------
# Homological products
# ----------------------------------------------------------------------


def homprod_qc(q: QuantumInput, c: ClassicalCode, name: Optional[str] = None) -> ProductRecord:
    """
    Quantum x classical product extending the Z logicals of ``q``.

    A gauge-designated input carries its gauge logicals over as inherited
    gauge; when h has redundant rows the R sector holds spurious logicals,
    designated gauge.
    """
    code_q, kept_q, gauge_q = _quantum_parts(q)
    h_x, h_z = code_q.H_X, code_q.H_Z
    m_x, n_q = h_x.shape
    m_z = h_z.rows
    h = c.H
    m_c, n_c = h.shape
    new_x = hstack([kron(h_x, _identity(n_c)), kron(_identity(m_x), h.T)])
    new_z = block_matrix(
        [
            [kron(h_z, _identity(n_c)), None],
            [kron(_identity(n_q), h), kron(h_x.T, _identity(m_c))],
        ]
    )
    meta_z = hstack([kron(_identity(m_z), h), kron(h_z, _identity(m_c))])
    layout = SectorLayout.from_grids(
        [
            ("L", n_q, n_c, f"qubits({code_q.name})", f"bits({c.name})"),
            ("R", m_x, m_c, f"xchecks({code_q.name})", f"checks({c.name})"),
        ]
    )
    code = CssCode(new_x, new_z, name or f"qc({code_q.name},{c.name})", M_Z=meta_z, layout=layout)
    e_c = unit_rows(n_c, c.info_set)
    right_size = m_x * m_c

    def extend(basis: LogicalBasis, prefix: str) -> LogicalBasis:
        return _sector_basis(
            kron(basis.G_X, c.G), kron(basis.G_Z, e_c), 0, right_size, prefix, (basis.k, c.k)
        )

    t_x = ClassicalCode(h_x.T, f"ker {code_q.name} H_X^T")
    ct = c.transpose()
    spurious_x = kron(t_x.G, unit_rows(m_c, ct.info_set))
    spurious_z = kron(unit_rows(m_x, t_x.info_set), ct.G)
    bases = {
        "L": extend(kept_q, "L"),
        "R": _sector_basis(spurious_x, spurious_z, n_q * n_c, 0, "R", (t_x.k, ct.k)),
    }
    inherited = extend(gauge_q, "L*") if gauge_q is not None else None
    gauge_parts = [bases["R"]] + ([inherited] if inherited is not None else [])
    record = ProductRecord(
        kind="qc",
        code=code,
        factors=(q, c),
        kept=bases["L"],
        gauge=stack_bases(gauge_parts, code.n),
        sector_bases=bases,
        gauge_sectors=frozenset({"R"}),
        inherited_gauge=inherited,
    )
    if bases["R"].k:
        logger.info("%s: %d spurious logicals in R designated gauge", record.name, bases["R"].k)
    return _finish(record)


def homprod_qq(q1: QuantumInput, q2: QuantumInput, name: Optional[str] = None) -> ProductRecord:
    """
    Quantum x quantum product; the middle sector carries the kept
    logicals, the outer sectors any spurious ones (gauge).
    """
    a, kept_a, gauge_a = _quantum_parts(q1)
    b, kept_b, gauge_b = _quantum_parts(q2)
    hx, hz = a.H_X, a.H_Z
    hx2, hz2 = b.H_X, b.H_Z
    m_x, n = hx.shape
    m_z = hz.rows
    m_x2, n2 = hx2.shape
    m_z2 = hz2.rows
    new_x = block_matrix(
        [
            [kron(hz.T, _identity(m_x2)), kron(_identity(n), hx2), None],
            [None, kron(hx, _identity(n2)), kron(_identity(m_x), hz2.T)],
        ]
    )
    new_z = block_matrix(
        [
            [kron(_identity(m_z), hx2.T), kron(hz, _identity(n2)), None],
            [None, kron(_identity(n), hz2), kron(hx.T, _identity(m_z2))],
        ]
    )
    meta_x = hstack([kron(hx, _identity(m_x2)), kron(_identity(m_x), hx2)])
    meta_z = hstack([kron(_identity(m_z), hz2), kron(hz, _identity(m_z2))])
    layout = SectorLayout.from_grids(
        [
            ("L", m_z, m_x2, f"zchecks({a.name})", f"xchecks({b.name})"),
            ("M", n, n2, f"qubits({a.name})", f"qubits({b.name})"),
            ("R", m_x, m_z2, f"xchecks({a.name})", f"zchecks({b.name})"),
        ]
    )
    code = CssCode(new_x, new_z, name or f"qq({a.name},{b.name})", M_X=meta_x, M_Z=meta_z, layout=layout)
    size_l, size_m, size_r = m_z * m_x2, n * n2, m_x * m_z2

    full_a = stack_bases([kept_a] + ([gauge_a] if gauge_a is not None else []), n)
    full_b = stack_bases([kept_b] + ([gauge_b] if gauge_b is not None else []), n2)
    middle = _sector_basis(
        kron(full_a.G_X, full_b.G_X),
        kron(full_a.G_Z, full_b.G_Z),
        size_l,
        size_r,
        "M",
        (full_a.k, full_b.k),
    )
    kept_rows = [r * full_b.k + s for r in range(kept_a.k) for s in range(kept_b.k)]
    kept_set = set(kept_rows)
    other_rows = [i for i in range(middle.k) if i not in kept_set]

    tz, tx2 = ClassicalCode(hz.T, f"ker {a.name} H_Z^T"), ClassicalCode(hx2.T, f"ker {b.name} H_X^T")
    tx, tz2 = ClassicalCode(hx.T, f"ker {a.name} H_X^T"), ClassicalCode(hz2.T, f"ker {b.name} H_Z^T")
    left_z, left_x = _outer_pair(tz, tx2)
    right_x, right_z = _outer_pair(tx, tz2)
    bases = {
        "L": _sector_basis(left_x, left_z, 0, size_m + size_r, "L", (tz.k, tx2.k)),
        "M": restrict_to(middle, kept_rows),
        "R": _sector_basis(right_x, right_z, size_l + size_m, 0, "R", (tx.k, tz2.k)),
    }
    inherited = restrict_to(middle, other_rows) if other_rows else None
    gauge_parts = [bases["L"], bases["R"]] + ([inherited] if inherited is not None else [])
    record = ProductRecord(
        kind="qq",
        code=code,
        factors=(q1, q2),
        kept=bases["M"],
        gauge=stack_bases(gauge_parts, code.n),
        sector_bases=bases,
        gauge_sectors=frozenset({"L", "R"}),
        inherited_gauge=inherited,
    )
    return _finish(record)


def as_left_sector(p: ProductRecord) -> ProductRecord:
    """Designate every sector except the protected one as gauge."""
    protected = "M" if p.kind == "qq" else "L"
    return p.with_gauge(frozenset(s for s in p.code.sectors.names if s != protected))


# ----------------------------------------------------------------------
# Chain complexes and Kunneth counting
# ----------------------------------------------------------------------


def classical_complex(code: ClassicalCode, transpose: bool = False) -> ChainComplex:
    """
    bits (degree 1) -> checks (degree 0) via H, or with ``transpose``
    checks (degree 1) -> bits (degree 0) via H^T.
    """
    if transpose:
        return ChainComplex((code.H.T,), f"{code.name}^T")
    return ChainComplex((code.H,), code.name)


def css_complex(code: CssCode) -> ChainComplex:
    """zchecks (2) -> qubits (1) -> xchecks (0)."""
    return ChainComplex((code.H_X, code.H_Z.T), code.name)


def _components(dims_a: Sequence[int], dims_b: Sequence[int], degree: int) -> List[Tuple[int, int]]:
    top_a, top_b = len(dims_a) - 1, len(dims_b) - 1
    return [(i, degree - i) for i in range(min(top_a, degree), max(0, degree - top_b) - 1, -1)]


def tensor_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """
    A (x) B with d(x (x) y) = dx (x) y + x (x) dy; each degree lists its
    components by the degree of the A factor, highest first.
    """
    dims_a, dims_b = a.dimensions, b.dimensions
    top = len(dims_a) + len(dims_b) - 2
    boundaries = []
    for degree in range(1, top + 1):
        sources = _components(dims_a, dims_b, degree)
        targets = _components(dims_a, dims_b, degree - 1)
        grid: List[List[Optional[BitMatrix]]] = []
        for ti, tj in targets:
            row: List[Optional[BitMatrix]] = []
            for si, sj in sources:
                if (ti, tj) == (si - 1, sj):
                    row.append(kron(a.boundaries[si - 1], _identity(dims_b[sj])))
                elif (ti, tj) == (si, sj - 1):
                    row.append(kron(_identity(dims_a[si]), b.boundaries[sj - 1]))
                else:
                    row.append(BitMatrix.zeros(dims_a[ti] * dims_b[tj], dims_a[si] * dims_b[sj]))
            grid.append(row)
        boundaries.append(block_matrix(grid))
    return ChainComplex(tuple(boundaries), f"{a.name}(x){b.name}")


def kunneth_k(a: ChainComplex, b: ChainComplex) -> Tuple[int, ...]:
    """dim H_t(A (x) B) = sum_j dim H_j(A) dim H_(t-j)(B), per degree t."""
    ha, hb = a.homology_ranks(), b.homology_ranks()
    return tuple(
        sum(ha[i] * hb[t - i] for i in range(len(ha)) if 0 <= t - i < len(hb))
        for t in range(len(ha) + len(hb) - 1)
    )


def input_complexes(p: ProductRecord) -> Tuple[ChainComplex, ChainComplex, int]:
    """The two factor complexes of a record and the qubit degree."""
    first, second = p.factors
    if p.kind == "hgp":
        assert isinstance(first, ClassicalCode) and isinstance(second, ClassicalCode)
        return classical_complex(first), classical_complex(second, transpose=True), 1
    code_a = first.code if isinstance(first, ProductRecord) else first
    assert isinstance(code_a, CssCode)
    if p.kind == "qc":
        assert isinstance(second, ClassicalCode)
        return css_complex(code_a), classical_complex(second, transpose=True), 1
    code_b = second.code if isinstance(second, ProductRecord) else second
    assert isinstance(code_b, CssCode)
    return css_complex(code_a), css_complex(code_b), 2


def kunneth_check(p: ProductRecord) -> Dict[str, int]:
    """
    Compare the Kunneth count at the qubit degree with the built code.

    Raises:
        VerificationError: If they differ.
    """
    a, b, degree = input_complexes(p)
    predicted = kunneth_k(a, b)[degree]
    if predicted != p.code.k or p.k_total != p.code.k:
        logger.warning("%s: Kunneth predicts %d, code has k=%d", p.name, predicted, p.code.k)
        raise VerificationError(identity=f"Kunneth k = {predicted} vs built k = {p.code.k}")
    return {"predicted": predicted, "k": p.code.k, "kept": p.kept.k, "gauge": p.gauge.k}
