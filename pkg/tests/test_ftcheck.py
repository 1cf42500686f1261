import pytest

from autgadgets.analysis import ftcheck, gadgets
from autgadgets.analysis.automorph import check_automorphism
from autgadgets.analysis.families import hamming, repetition
from autgadgets.analysis.products import as_left_sector, hgp, homprod_qc, homprod_qq
from autgadgets.analysis.workbench import Workbench
from autgadgets.models.permutation import Permutation


@pytest.fixture(scope="module")
def rep3_hgp():
    rep3 = repetition(3)
    return hgp(rep3, rep3)


def _lift(record, text):
    code = record.factors[0]
    aut = check_automorphism(code, Permutation.from_cycles(text, code.n))
    return gadgets.lift_hgp(record, "first", aut)


def test_left_sector_small(rep3_hgp):
    report = ftcheck.left_sector_distance_check(rep3_hgp)
    assert report.holds is True
    for pauli in ("X", "Z"):
        r = report.reports[pauli]
        assert r.achieved == 3
        assert r.bound == 3
        assert r.matches_bound
        assert r.witness is not None
    assert report.to_dict()["reports"]["X"]["achieved"] == 3


def test_left_sector_bounds_follow_the_factors(cup_k4):
    report = ftcheck.left_sector_distance_check(cup_k4)
    assert report.reports["X"].bound == 4
    assert report.reports["Z"].bound == 3
    assert report.holds is True


def test_restricted_minimum_sees_every_sector(rep3_hgp):
    left = as_left_sector(rep3_hgp)
    r = ftcheck.sector_min_weight(left, "L", "X")
    assert r.exact and r.certified
    assert r.upper >= r.achieved == 3
    with pytest.raises(ValueError):
        ftcheck.restricted_min_weight(left.code, left.kept, [0], "Y", "L")


def test_weight_report_properties():
    r = ftcheck.SectorWeightReport("L", "X", lower=2, upper=5, certified=False)
    assert not r.exact
    assert r.matches_bound is None
    r.bound = 3
    assert r.matches_bound is None
    exact = ftcheck.SectorWeightReport("L", "X", achieved=3, lower=3, upper=3, bound=4)
    assert exact.matches_bound is False


def test_permutation_gadget_is_certified(hgp_k4):
    g = _lift(hgp_k4, "(12)(56)")
    report = ftcheck.effective_distance_report(g, hgp_k4)
    assert report.permutation_on_protected
    assert report.covered
    assert report.d_eff == {"X": 3, "Z": 3}
    assert report.to_dict()["covered"] is True


def test_circuit_on_protected_rows_is_not_covered():
    record = hgp(hamming(3), repetition(3))
    qc = homprod_qc(record, repetition(3))
    g = gadgets.lift_qc(qc, "quantum", _lift(record, "(13)(57)"))
    report = ftcheck.effective_distance_report(g, qc)
    assert not report.permutation_on_protected
    assert not report.covered
    assert report.reason.startswith("not covered by theorems")


def test_qq_reports_interval(rep3_hgp):
    qq = homprod_qq(rep3_hgp, rep3_hgp)
    g = gadgets.lift_qq(qq, "first", _lift(rep3_hgp, "(13)"))
    report = ftcheck.effective_distance_report(g, qq)
    assert report.protected == "M"
    assert report.interval == {"X": (3, 9), "Z": (3, 9)}
    assert not report.covered
    assert report.reason.startswith("interval only")


def test_protected_rows():
    bench = Workbench()
    rep3 = repetition(3)
    qc = bench.product("qc", [rep3, rep3, rep3], left=True)
    rows = ftcheck.protected_rows(qc)
    assert len(rows) == 9 * 3
    assert set(rows) <= set(qc.code.sectors["L"].indices())
    with pytest.raises(ValueError):
        ftcheck.protected_rows(qc.factors[0])


def test_check_kind_errors(hgp_k4):
    with pytest.raises(ValueError):
        ftcheck.middle_sector_bounds_check(hgp_k4)
    with pytest.raises(ValueError):
        Workbench().sector_check(hgp_k4, "diagonal")


def test_restricted_rows_match_formula():
    rep3, rep2 = repetition(3), repetition(2)
    qc = homprod_qc(as_left_sector(hgp(rep3, rep3)), rep2)
    report = ftcheck.restricted_row_weight_check(qc)
    assert report.reports["X"].bound == 6
    assert report.reports["Z"].bound == 3
    assert report.holds is True
