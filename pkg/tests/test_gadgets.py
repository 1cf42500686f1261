import dataclasses

import pytest

from autgadgets.analysis import gadgets
from autgadgets.analysis.automorph import check_automorphism
from autgadgets.analysis.families import hamming, repetition
from autgadgets.analysis.products import hgp, homprod_qc, homprod_qq
from autgadgets.analysis.workbench import Workbench
from autgadgets.errors import NotAnAutomorphismError, VerificationError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.permutation import Permutation


def _aut(code, text):
    aut = check_automorphism(code, Permutation.from_cycles(text, code.n))
    assert aut is not None
    return aut


@pytest.fixture(scope="module")
def bench():
    return Workbench()


def test_tanner_lift_is_permutation_only(hgp_k4, k4_code):
    g = gadgets.lift_hgp(hgp_k4, "first", _aut(k4_code, "(12)(56)"))
    report = gadgets.verify(g, hgp_k4)
    assert report.permutation_only
    assert report.depth == 0
    assert report.sector_kinds == {"L": "permutation", "R": "permutation"}
    assert report.V_bar.is_permutation()
    assert not report.V_bar.is_identity()
    assert g.n == 52


def test_non_permutation_logical_action(hgp_k4, k4_code):
    g = gadgets.lift_hgp(hgp_k4, "first", _aut(k4_code, "(15)(26)"))
    assert g.is_permutation_only()
    assert not g.V_bar.is_permutation()
    assert g.V_bar.is_invertible()


def test_first_and_second_lifts_commute(hgp_k4, k4_code):
    first = gadgets.lift_hgp(hgp_k4, "first", _aut(k4_code, "(15)(26)"))
    second = gadgets.lift_hgp(hgp_k4, "second", _aut(k4_code, "(1463)(25)"))
    assert first.V_bar @ second.V_bar == second.V_bar @ first.V_bar
    assert first.U @ second.U == second.U @ first.U


def test_logical_group_of_both_inputs(hgp_k4, bench):
    lifts = [
        bench.lift(hgp_k4, which, Permutation.from_cycles(text, 6))[0]
        for which in ("first", "second")
        for text in ("(12)(56)", "(1463)(25)")
    ]
    assert bench.logical_group_order(lifts) == 576
    assert gadgets.logical_group_order([]) == 1


def test_circuit_sector_keeps_depth():
    code = hamming(3)
    aut = _aut(code, "(13)(57)")
    assert aut.W == BitMatrix.from_rows(["100", "110", "001"])
    record = hgp(code, repetition(3))
    g = gadgets.lift_hgp(record, "first", aut)
    assert not g.is_permutation_only()
    assert g.sector_kinds() == {"L": "permutation", "R": "circuit"}
    assert g.circuit_depth() == 1

    qc = homprod_qc(record, repetition(3))
    lifted = gadgets.lift_qc(qc, "quantum", g)
    assert lifted.circuit_depth() == 1
    assert gadgets.verify(lifted, qc).depth == 1


def test_right_sector_lift(cup_k4, bench):
    g, report = bench.lift(cup_k4, "right-first", Permutation.from_cycles("(12)(56)", 6))
    assert g.n == 48
    assert report.permutation_only
    assert g.name.endswith("(transposed)")
    assert {key.split(".")[0] for key, _ in g.actions} == {"L", "R"}


def test_qc_lifts(cup_k4, k4_code, bench):
    qc = bench.product("qc", [k4_code, k4_code.transpose(), k4_code.transpose()])
    assert qc.n == 288
    classical, report = bench.lift(qc, "classical", Permutation.from_cycles("(12)", 4))
    assert report.permutation_only
    assert classical.V_bar.rows == 6
    quantum, _ = bench.lift(qc, "first", Permutation.from_cycles("(12)(56)", 6))
    assert quantum.is_permutation_only()
    assert {key for key, _ in quantum.actions} == {"L.L", "L.R", "R"}


def test_qq_lift():
    rep3 = repetition(3)
    inner = hgp(rep3, rep3)
    qq = homprod_qq(inner, inner)
    source = gadgets.lift_hgp(inner, "first", _aut(rep3, "(13)"))
    g = gadgets.lift_qq(qq, "first", source)
    report = gadgets.verify(g, qq)
    assert report.permutation_only
    assert report.V_bar == BitMatrix.identity(1)
    second = gadgets.lift_qq(qq, "second", source)
    assert gadgets.verify_many([g, second], qq, workers=2)[1].permutation_only


def test_verify_rejects_tampered_gadget(hgp_k4, k4_code):
    g = gadgets.lift_hgp(hgp_k4, "first", _aut(k4_code, "(12)(56)"))
    tampered = dataclasses.replace(g, W=BitMatrix.identity(g.W.rows))
    with pytest.raises(VerificationError):
        gadgets.verify(tampered, hgp_k4)


def test_automorphism_of_another_code_is_rejected(hgp_k4, figure_h):
    relabelled = ClassicalCode(figure_h, "k4-relabelled")
    with pytest.raises(VerificationError):
        gadgets.lift_hgp(hgp_k4, "first", _aut(relabelled, "(25)(46)"))


def test_lift_argument_errors(hgp_k4, k4_code, bench):
    aut = _aut(k4_code, "(12)(56)")
    with pytest.raises(ValueError):
        gadgets.lift_hgp(hgp_k4, "third", aut)
    with pytest.raises(ValueError):
        gadgets.lift_qc(hgp_k4, "classical", aut)
    with pytest.raises(NotAnAutomorphismError):
        bench.lift(hgp_k4, "first", Permutation.from_cycles("(15)(34)", 6))
    with pytest.raises(ValueError):
        bench.lift(hgp_k4, "classical", Permutation.from_cycles("(12)(56)", 6))
