import pytest

from autgadgets.analysis import automorph
from autgadgets.analysis.families import (
    all_dual_codewords_check_matrix,
    cycle_code,
    hamming,
    simplex,
)
from autgadgets.analysis.graphs import graph_automorphisms
from autgadgets.errors import CapExceededError, DimensionMismatchError, NotAnAutomorphismError
from autgadgets.io.parser import build_code, spec_generators
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.gadget import InvertibleCircuit
from autgadgets.models.graph import complete_bipartite, petersen
from autgadgets.models.permutation import Permutation


def _sigma(text, n=6):
    return Permutation.from_cycles(text, n)


def test_vertex_swap_is_a_logical_swap(k4_code):
    aut = automorph.check_automorphism(k4_code, _sigma("(12)(56)"))
    assert aut is not None
    assert aut.V == BitMatrix.from_rows(["010", "100", "001"])
    assert aut.W == Permutation.from_cycles("(23)", 4).as_matrix()
    assert automorph.is_tanner(k4_code, aut)


def test_logical_action_need_not_be_a_permutation(k4_code):
    aut = automorph.check_automorphism(k4_code, _sigma("(15)(26)"))
    assert aut is not None
    assert aut.V == BitMatrix.from_rows(["100", "010", "111"])
    assert not aut.V.is_permutation()
    assert aut.W == Permutation.from_cycles("(14)", 4).as_matrix()


def test_relabelled_figure_actions(figure_code):
    swap = automorph.check_automorphism(figure_code, _sigma("(15)(34)"))
    assert swap is not None
    assert swap.V == BitMatrix.from_rows(["010", "100", "001"])
    cnot = automorph.check_automorphism(figure_code, _sigma("(25)(46)"))
    assert cnot is not None
    assert cnot.V == BitMatrix.from_rows(["111", "010", "001"])


def test_non_automorphism(k4_code):
    assert automorph.check_automorphism(k4_code, _sigma("(15)(34)")) is None
    assert automorph.check_automorphism(k4_code, _sigma("(12)")) is None
    with pytest.raises(DimensionMismatchError):
        automorph.check_automorphism(k4_code, _sigma("(12)", 5))


def test_tanner_permutation_matches_rows(k4_code):
    w = automorph.tanner_permutation(k4_code, _sigma("(1463)(25)"))
    assert w is not None
    moved = _sigma("(1463)(25)").apply_columns(k4_code.H)
    assert w.as_matrix() @ k4_code.H == moved


@pytest.mark.parametrize(
    "code, order",
    [
        (cycle_code(complete_bipartite(3, 3)), 72),
        (hamming(3), 168),
        (simplex(3), 168),
    ],
)
def test_exhaustive_orders(code, order):
    group = automorph.enumerate_automorphisms(code)
    assert group.order == order
    assert group.complete


def test_k4_group(k4_code):
    group = automorph.enumerate_automorphisms(k4_code, workers=4)
    assert group.order == 24
    assert group.elements[0].is_identity
    assert len(group.tanner_elements()) == 24
    logical = automorph.logical_group(group)
    assert logical.order == 24
    assert logical.kernel_size == 1
    assert logical.homomorphism
    assert automorph.affine_check(group).holds
    bound = automorph.dual_bound_check(k4_code, group, 3, 3)
    assert bound.holds
    assert bound.equivalent
    assert bound.dual_order == 24


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        automorph.enumerate_automorphisms(cycle_code(petersen()), n_cap=10)


def test_petersen_closure():
    graph = petersen()
    code = cycle_code(graph)
    edge_perms = [a.edge_perm for a in graph_automorphisms(graph)]
    group = automorph.close_group(code, edge_perms)
    assert group.order == 120
    assert not group.complete
    assert group.find(edge_perms[-1]) is not None


def test_closure_rejects_non_automorphism(k4_code):
    with pytest.raises(NotAnAutomorphismError):
        automorph.close_group(k4_code, [_sigma("(12)")])


def test_closure_order_cap(k4_code):
    with pytest.raises(CapExceededError):
        automorph.close_group(k4_code, [_sigma("(12)(56)"), _sigma("(1463)(25)")], order_cap=10)


def test_close_matrix_group():
    swap = BitMatrix.from_rows(["01", "10"])
    cnot = BitMatrix.from_rows(["11", "01"])
    assert len(automorph.close_matrix_group([swap, cnot])) == 6
    assert automorph.close_matrix_group([]) == []


def test_every_automorphism_is_tanner_on_all_dual_codewords(k4_code):
    redundant = ClassicalCode(all_dual_codewords_check_matrix(k4_code), "k4-all-checks")
    group = automorph.enumerate_automorphisms(k4_code)
    for aut in group:
        assert automorph.tanner_permutation(redundant, aut.sigma) is not None


def test_hamming_decompose_replays():
    w = BitMatrix.from_rows(["011", "110", "100"])
    steps = automorph.hamming_decompose(w)
    assert steps
    assert InvertibleCircuit(w, tuple(steps)).replay() == w


@pytest.mark.parametrize(
    "spec, order",
    [
        ("ga:d6:1+r+sr^-1", 12),
        ("ga:d8:1+r^2+r^3+sr^-1", 16),
    ],
)
def test_dihedral_closure_lower_bound(spec, order):
    code = build_code(spec)
    generators = spec_generators(spec)
    group = automorph.close_group(code, generators)
    assert group.order >= order
    assert not group.complete
    assert group.find(Permutation.identity(code.n)) is not None
    for sigma in generators:
        aut = group.find(sigma)
        assert aut is not None
        assert automorph.is_tanner(code, aut)


def test_closure_composes_actions(k4_code):
    group = automorph.close_group(k4_code, [_sigma("(12)(56)"), _sigma("(15)(26)")])
    for aut in group:
        assert aut.V @ k4_code.G == aut.sigma.apply_columns(k4_code.G)
        assert aut.W @ k4_code.H == aut.sigma.apply_columns(k4_code.H)
