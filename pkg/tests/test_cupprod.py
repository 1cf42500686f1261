import pytest

from autgadgets.analysis import cupprod
from autgadgets.analysis.workbench import Workbench
from autgadgets.errors import OrientationError
from autgadgets.models.bitmatrix import BitMatrix, BitVector
from autgadgets.models.orientation import CzPairing, Orientation
from autgadgets.models.permutation import Permutation


@pytest.fixture(scope="module")
def bench():
    return Workbench()


@pytest.fixture(scope="module")
def triangle(k4, k4_code):
    return cupprod.orient_from_codeword(k4, k4_code.G.row(0))


def test_orientation_symbols(k4):
    o = Orientation.from_symbols(k4, "f. b.f.")
    assert o.to_symbols() == "f.b.f."
    assert o.directed_edges() == [(0, 0, 1), (2, 3, 0), (4, 1, 3)]
    assert o.head(2) == 0 and o.tail(2) == 3
    assert o.head(1) is None
    assert o.reversed().to_symbols() == "b.f.b."
    with pytest.raises(ValueError):
        Orientation.from_symbols(k4, "fxb...")
    with pytest.raises(ValueError):
        Orientation.from_symbols(k4, "ff")


def test_leibniz_violations(k4):
    assert Orientation.from_symbols(k4, "f.....").violations() == [0, 1]
    assert Orientation.free(k4).is_leibniz()


def test_codeword_orientation(triangle):
    assert triangle.to_symbols() == "f.b.f."
    assert triangle.is_leibniz()


def test_codeword_that_is_not_a_cycle(k4, bench):
    path = BitVector.from_string("110000")
    assert cupprod.orient_from_codeword(k4, path) is None
    assert cupprod.orient_from_codeword(k4, BitVector.zeros(6)) is None
    with pytest.raises(ValueError):
        bench.codeword_orientation(k4, path)


def test_pairing_cancels_repeats():
    pairing = CzPairing(4, ((1, 2), (0, 3), (1, 2), (2, 2)))
    assert pairing.pairs == ((0, 3), (2, 2))
    assert len(pairing) == 2
    assert pairing.swapped().pairs == ((2, 2), (3, 0))
    with pytest.raises(ValueError):
        CzPairing(2, ((0, 2),))


def test_copy_cup_on_triangles(cup_k4, triangle, bench):
    pairing, report = bench.cup(cup_k4, triangle, triangle)
    assert report.gates == len(pairing) > 0
    assert set(report.pairs()) == {("L1,1", "R1,1"), ("R1,1", "L1,1")}
    swapped = cupprod.verify_cz(cup_k4, pairing.swapped())
    assert swapped.adjacency == report.adjacency.T


def test_gadget_relabelling_conjugates_adjacency(cup_k4, triangle, bench):
    pairing, report = bench.cup(cup_k4, triangle, triangle)
    g, _ = bench.lift(cup_k4, "first", Permutation.from_cycles("(12)(56)", 6))
    moved, consistent = bench.permuted_cup(cup_k4, pairing, report, g)
    assert consistent
    assert moved.gates == report.gates


def test_conjugate_adjacency_defaults():
    a = BitMatrix.from_rows(["10", "01"])
    assert cupprod.conjugate_adjacency(a) == a
    swap = BitMatrix.from_rows(["01", "10"])
    assert cupprod.conjugate_adjacency(a, swap, swap) == a


def test_odd_orientation_rejected(cup_k4, k4, triangle):
    odd = Orientation.from_symbols(k4, "f.....")
    with pytest.raises(OrientationError):
        cupprod.czpairs(cup_k4, odd, triangle)
    assert len(cupprod.czpairs(cup_k4, odd, triangle, require_leibniz=False)) > 0


def test_copy_cup_needs_cycle_factors(hgp_k4, triangle):
    with pytest.raises(ValueError):
        cupprod.czpairs(hgp_k4, triangle, triangle)


def test_permute_pairing_identity(cup_k4, triangle):
    pairing = cupprod.czpairs(cup_k4, triangle, triangle)
    assert cupprod.permute_pairing(pairing) == pairing
