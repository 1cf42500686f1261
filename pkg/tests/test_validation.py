import pytest

from autgadgets.analysis.distance import distance_x, distance_z
from autgadgets.analysis.families import hamming, repetition
from autgadgets.analysis.products import classical_complex, hgp, tensor_complex
from autgadgets.analysis.validation import (
    canonical_logical_basis,
    check_logical_basis,
    css_from_chain,
    num_logicals,
    symplectic_check,
    validate,
)
from autgadgets.errors import VerificationError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.css import CssCode, LogicalBasis


@pytest.fixture
def steane():
    h = hamming(3).H
    return CssCode(h, h, "steane")


def test_steane_report(steane):
    report = validate(steane)
    assert report.k == 1
    assert report.rank_x == 3
    assert report.check_weights == {"X": 4, "Z": 4}
    assert report.participation == {"X": 3, "Z": 3}
    assert not report.basis_checked
    assert str(steane) == "steane[[7,1]]"


def test_canonical_basis(steane):
    basis = canonical_logical_basis(steane)
    assert basis.k == 1
    assert symplectic_check(basis)
    assert validate(steane, basis).basis_checked


def test_commutation_failure_reports_location():
    code = CssCode(BitMatrix.from_rows(["110"]), BitMatrix.from_rows(["100"]), "bad")
    with pytest.raises(VerificationError) as excinfo:
        validate(code)
    assert excinfo.value.location == ((0, 0),)
    assert "H_X H_Z^T = 0" in str(excinfo.value)


def test_stabilizer_is_not_a_logical(steane):
    row = steane.H_X.select_rows([0])
    with pytest.raises(VerificationError):
        check_logical_basis(steane, LogicalBasis(row, canonical_logical_basis(steane).G_Z))


def test_unpaired_basis_rejected():
    code = hgp(repetition(3), repetition(3))
    basis = code.full_basis()
    swapped = LogicalBasis(basis.G_X, basis.G_Z ^ basis.G_Z)
    assert not symplectic_check(swapped)


def test_css_from_chain_matches_hgp():
    rep3 = repetition(3)
    record = hgp(rep3, rep3)
    product = tensor_complex(classical_complex(rep3), classical_complex(rep3, transpose=True))
    code = css_from_chain(product, 1)
    assert code.H_X == record.code.H_X
    assert code.H_Z == record.code.H_Z
    with pytest.raises(ValueError):
        css_from_chain(product, 2)


def test_steane_distances(steane):
    basis = canonical_logical_basis(steane)
    assert num_logicals(steane) == 1
    assert distance_x(steane, basis).value == 3
    assert distance_z(steane, basis).value == 3
