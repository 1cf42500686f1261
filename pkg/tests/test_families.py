import pytest

from autgadgets.analysis.distance import distance, dual_distance
from autgadgets.analysis.families import (
    all_dual_codewords_check_matrix,
    circulant,
    cycle_code,
    group_algebra_code,
    hamming,
    lifted_code,
    punctured_rm,
    reed_muller,
    repetition,
    rm_dimension,
    rm_generator,
    simplex,
    transpose_code,
)
from autgadgets.errors import DimensionMismatchError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.graph import SimpleGraph, complete_bipartite, petersen
from autgadgets.models.group import GroupAlgebraElement, cyclic_group, dihedral_group


def _params(code):
    return code.n, code.k, distance(code).value


def test_repetition():
    code = repetition(3)
    assert code.H == BitMatrix.from_rows(["110", "011"])
    assert _params(code) == (3, 1, 3)
    assert code.is_full_rank


def test_k4_cycle_code(k4_code):
    assert k4_code.name == "cycle:K4"
    assert _params(k4_code) == (6, 3, 3)
    assert dual_distance(k4_code).value == 3
    assert k4_code.G == BitMatrix.from_rows(["101010", "011001", "000111"])
    assert k4_code.info_set == (0, 1, 3)
    assert not k4_code.is_full_rank


@pytest.mark.parametrize(
    "graph, params",
    [(complete_bipartite(3, 3), (9, 4, 4)), (petersen(), (15, 6, 5))],
)
def test_cycle_code_parameters(graph, params):
    assert _params(cycle_code(graph)) == params


def test_cycle_code_needs_connected_graph():
    with pytest.raises(ValueError):
        cycle_code(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))


def test_transpose(k4_code):
    t = transpose_code(k4_code)
    assert t.name == "cycle:K4^T"
    assert t.H == k4_code.H.T
    assert t.n == 4


def test_explicit_generator_kept(figure_code):
    assert figure_code.G == BitMatrix.from_rows(["110100", "011010", "001101"])
    assert figure_code.info_set == (0, 4, 5)


def test_generator_must_span_the_code(k4_code):
    with pytest.raises(ValueError):
        ClassicalCode(k4_code.H, "bad", BitMatrix.from_rows(["101010", "011001"]))
    with pytest.raises(ValueError):
        ClassicalCode(k4_code.H, "bad", BitMatrix.from_rows(["100000", "011001", "000111"]))


def test_circulant_shift():
    block = circulant([1], 4)
    assert block == BitMatrix.from_rows(["0001", "1000", "0100", "0010"])
    assert circulant([0, 0], 4).is_zero()


def test_lifted_code():
    base = BitMatrix.from_rows(["110", "101"])
    shifts = [[[1], [0, 2], [3]], [[], [1], [2]]]
    code = lifted_code(base, shifts, 4, "golden")
    assert code.H == BitMatrix.from_rows(
        [
            "000110100000",
            "100001010000",
            "010010100000",
            "001001010000",
            "000000000010",
            "000000000001",
            "000000001000",
            "000000000100",
        ]
    )
    with pytest.raises(DimensionMismatchError):
        lifted_code(base, shifts[:1], 4)


def test_group_algebra_code():
    z7 = cyclic_group(7)
    code = group_algebra_code(GroupAlgebraElement.from_terms(z7, "1+x+x3"))
    assert code.name == "ga:Z7:1+x+x3"
    assert _params(code) == (7, 3, 4)


def test_dihedral_terms():
    d6 = dihedral_group(6)
    assert d6.order == 12
    assert not d6.is_abelian()
    element = GroupAlgebraElement.from_terms(d6, "1+r+sr^-1")
    assert len(element.support) == 3
    assert GroupAlgebraElement.from_terms(d6, "r+r").support == frozenset()
    with pytest.raises(ValueError):
        d6.element("x2")


def test_hamming_and_simplex():
    assert _params(hamming(3)) == (7, 4, 3)
    assert _params(simplex(3)) == (7, 3, 4)
    assert _params(simplex(4)) == (15, 4, 8)


def test_rm_generator_rows():
    assert rm_generator(2, 3) == BitMatrix.from_rows(
        ["11111111", "00001111", "00110011", "01010101", "00000011", "00000101", "00010001"]
    )


def test_reed_muller():
    assert _params(reed_muller(2, 3)) == (8, 7, 2)
    assert _params(reed_muller(1, 3)) == (8, 4, 4)
    assert rm_dimension(1, 3) == 4
    assert _params(punctured_rm(1, 3)) == (7, 3, 4)
    assert _params(punctured_rm(1, 4)) == (15, 4, 8)
    assert _params(punctured_rm(2, 4)) == (15, 11, 3)


def test_all_dual_codewords(k4_code):
    h = all_dual_codewords_check_matrix(k4_code)
    assert h.rows == 7
    redundant = ClassicalCode(h, "k4-all-checks")
    assert redundant.k == 3
    assert (h @ k4_code.G.T).is_zero()


@pytest.mark.parametrize(
    "ell, poly, params, d_perp",
    [
        (6, "1+r+sr^-1", (12, 2, 8), 2),
        (8, "1+r^2+r^3+sr^-1", (16, 4, 8), 2),
    ],
)
def test_dihedral_code_parameters(ell, poly, params, d_perp):
    code = group_algebra_code(GroupAlgebraElement.from_terms(dihedral_group(ell), poly))
    assert _params(code) == params
    assert dual_distance(code).value == d_perp


def test_group_labels():
    assert cyclic_group(4).labels == ("1", "x", "x2", "x3")
    assert dihedral_group(3).labels == ("1", "r", "r^2", "s", "sr", "sr^2")
    d3 = dihedral_group(3)
    assert str(GroupAlgebraElement.from_terms(d3, "1+r+sr^-1")) == "1+r+sr^2"
    assert cyclic_group(7).element("x^3") == cyclic_group(7).element("x3") == 3
