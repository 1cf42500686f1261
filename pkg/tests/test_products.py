import pytest

from autgadgets.analysis.families import repetition
from autgadgets.analysis.products import (
    as_left_sector,
    classical_complex,
    css_complex,
    hgp,
    homprod_qc,
    homprod_qq,
    kunneth_check,
    kunneth_k,
    subsystem_generators,
    tensor_complex,
    transpose_record,
)
from autgadgets.analysis.validation import symplectic_check, validate
from autgadgets.errors import VerificationError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.css import ChainComplex


def test_hgp_k4_parameters(hgp_k4):
    assert hgp_k4.name == "hgp(cycle:K4,cycle:K4)"
    assert hgp_k4.n == 52
    assert hgp_k4.code.k == 10
    assert hgp_k4.basis("L").k == 9
    assert hgp_k4.basis("R").k == 1
    layout = hgp_k4.code.sectors
    assert layout.names == ("L", "R")
    assert layout["L"].size == 36
    assert layout["R"].start == 36
    assert hgp_k4.code.check_weights() == {"X": 5, "Z": 5}


def test_hgp_sector_grid(hgp_k4):
    left = hgp_k4.code.sectors["L"]
    assert left.index(2, 5) == 2 * 6 + 5
    assert left.coordinates(17) == (2, 5)
    assert hgp_k4.code.sectors.sector_of(40).name == "R"


def test_hgp_commutes_and_pairs(hgp_k4):
    code = hgp_k4.code
    assert (code.H_X @ code.H_Z.T).is_zero()
    basis = hgp_k4.full_basis()
    assert symplectic_check(basis)
    assert (basis.G_X @ basis.G_Z.T).is_identity()


def test_cup_record_labels(cup_k4):
    assert cup_k4.n == 48
    assert cup_k4.code.k == 6
    assert cup_k4.kept.labels == ("L1,1", "L2,1", "L3,1", "R1,1", "R1,2", "R1,3")
    report = validate(cup_k4.code, cup_k4.full_basis())
    assert report.check_weights == {"X": 6, "Z": 4}
    assert report.participation == {"X": 2, "Z": 3}


def test_kunneth(hgp_k4):
    assert kunneth_check(hgp_k4) == {"predicted": 10, "k": 10, "kept": 10, "gauge": 0}
    a = classical_complex(hgp_k4.factors[0])
    b = classical_complex(hgp_k4.factors[1], transpose=True)
    assert a.homology_ranks() == (1, 3)
    assert kunneth_k(a, b) == (3, 10, 3)


def test_tensor_complex_middle_is_hgp(hgp_k4):
    a = classical_complex(hgp_k4.factors[0])
    b = classical_complex(hgp_k4.factors[1], transpose=True)
    product = tensor_complex(a, b)
    assert product.dimensions == (24, 52, 24)
    assert product.homology_ranks()[1] == hgp_k4.code.k


def test_chain_complex_rejects_nonzero_composition():
    d1 = BitMatrix.from_rows(["11"])
    d2 = BitMatrix.from_rows(["1", "0"])
    with pytest.raises(VerificationError):
        ChainComplex((d1, d2))


def test_left_sector_designation(hgp_k4):
    left = as_left_sector(hgp_k4)
    assert left.gauge_sectors == frozenset({"R"})
    assert left.kept.k == 9
    assert left.gauge.k == 1
    assert left.code is hgp_k4.code
    with pytest.raises(ValueError):
        hgp_k4.with_gauge(frozenset({"Q"}))


def test_subsystem_generators(hgp_k4):
    left_x, left_z = subsystem_generators(hgp_k4)
    assert left_x.select_columns(range(36, 52)).is_zero()
    assert left_z.select_columns(range(36, 52)).is_zero()
    assert (left_x @ hgp_k4.code.H_Z.T).is_zero()


def test_transpose_record(hgp_k4):
    t = transpose_record(hgp_k4)
    assert t.name == "hgp(cycle:K4,cycle:K4)^T"
    assert t.n == 52
    assert t.code.sectors["L"].size == 16
    assert t.code.k == 10


def test_qc_product(cup_k4, k4_code):
    qc = homprod_qc(cup_k4, k4_code.transpose())
    assert qc.kind == "qc"
    assert qc.n == 288
    assert qc.code.k == 9
    assert qc.kept.k == 6
    assert qc.gauge.k == 3
    assert qc.gauge_sectors == frozenset({"R"})
    assert qc.code.M_Z is not None
    assert (qc.code.M_Z @ qc.code.H_Z).is_zero()
    assert kunneth_check(qc)["predicted"] == 9


def test_qq_product():
    rep3 = repetition(3)
    inner = hgp(rep3, rep3)
    qq = homprod_qq(inner, inner)
    assert qq.n == 241
    assert qq.code.k == 1
    assert qq.kept.k == 1
    assert qq.code.sectors.names == ("L", "M", "R")
    assert qq.code.sectors["M"].size == 169
    assert (qq.code.M_X @ qq.code.H_X).is_zero()
    assert kunneth_check(qq)["k"] == 1


def test_css_complex_of_hgp_has_one_logical():
    rep3 = repetition(3)
    complex_ = css_complex(hgp(rep3, rep3).code)
    assert complex_.homology_ranks() == (0, 1, 0)
