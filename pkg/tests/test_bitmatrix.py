import dataclasses

import numpy as np
import pytest

from autgadgets.errors import DimensionMismatchError, SingularMatrixError
from autgadgets.models.bitmatrix import (
    BitMatrix,
    BitVector,
    express_modulo,
    independent_rows,
    kernel_basis,
    kron,
    rank,
    right_inverse,
    row_space_contains,
    row_transform,
    rref,
    solve_left,
)
from autgadgets.models.permutation import Permutation, concatenate, kron_identity


def test_pack_roundtrip_across_words():
    rng = np.random.default_rng(7)
    a = rng.integers(0, 2, size=(5, 130), dtype=np.uint8)
    m = BitMatrix.from_array(a)
    assert m.shape == (5, 130)
    assert np.array_equal(m.to_array(), a)
    assert m[4, 129] == a[4, 129]


def test_int_rows_use_column_as_bit():
    m = BitMatrix.from_rows(["101", "010"])
    assert m.to_int_rows() == [5, 2]
    assert m.to_int_columns() == [1, 2, 1]


def test_rank_and_kernel(k4_code):
    h = k4_code.H
    assert rank(h) == 3
    basis = kernel_basis(h)
    assert basis.rows == 3
    assert (h @ basis.T).is_zero()
    assert rank(basis) == 3


def test_rref_drops_zero_rows():
    m = BitMatrix.from_rows(["110", "011", "101"])
    echelon, pivots = rref(m)
    assert pivots == (0, 1)
    assert echelon == BitMatrix.from_rows(["101", "011"])
    assert independent_rows(m) == (0, 1)


def test_row_transform_reaches_echelon_form():
    m = BitMatrix.from_rows(["011", "110", "101"])
    t = row_transform(m)
    assert t.is_invertible()
    reduced = t @ m
    echelon, _ = rref(m)
    assert reduced.select_rows(range(echelon.rows)) == echelon
    assert reduced.select_rows([2]).is_zero()


def test_inverse():
    m = BitMatrix.from_rows(["110", "010", "011"])
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(SingularMatrixError):
        BitMatrix.from_rows(["11", "11"]).inverse()


def test_right_inverse():
    m = BitMatrix.from_rows(["1100", "0110"])
    r = right_inverse(m)
    assert r is not None
    assert (m @ r).is_identity()
    assert right_inverse(BitMatrix.from_rows(["11", "11"])) is None


def test_solve_left_relabelled_incidence(figure_h):
    # edge swap (25)(46) is the vertex swap 2 <-> 3
    moved = Permutation.from_cycles("(25)(46)", 6).apply_columns(figure_h)
    w = solve_left(figure_h, moved)
    assert w == Permutation.from_cycles("(23)", 4).as_matrix()


def test_solve_left_outside_rowspace():
    h = BitMatrix.from_rows(["110", "011"])
    assert solve_left(h, BitMatrix.from_rows(["100", "011"])) is None


def test_express_modulo():
    modulo = BitMatrix.from_rows(["1100"])
    basis = BitMatrix.from_rows(["1000", "0011"])
    targets = BitMatrix.from_rows(["0100", "0111"])
    coeffs = express_modulo(targets, basis, modulo)
    assert coeffs == BitMatrix.from_rows(["10", "11"])
    assert express_modulo(BitMatrix.from_rows(["0010"]), basis, modulo) is None


def test_row_space_contains():
    m = BitMatrix.from_rows(["110", "011"])
    assert row_space_contains(m, BitVector.from_string("101"))
    assert not row_space_contains(m, BitVector.from_string("100"))
    with pytest.raises(DimensionMismatchError):
        row_space_contains(m, BitVector.from_string("10"))


def test_kron_index_order():
    a = BitMatrix.from_rows(["01", "10"])
    b = BitMatrix.identity(3)
    k = kron(a, b)
    # (i, j) -> i * 3 + j
    assert k[0 * 3 + 2, 1 * 3 + 2] == 1
    assert k[0, 0] == 0


def test_bitvector_basics():
    v = BitVector.from_support(70, [0, 65])
    assert v.weight() == 2
    assert v.support() == [0, 65]
    assert v.dot(BitVector.from_support(70, [65])) == 1
    assert (v ^ v) == BitVector.zeros(70)
    assert str(BitVector.from_string("0110")) == "0110"


def test_permutation_composition_order():
    p = Permutation.from_cycles("(12)", 3)
    q = Permutation.from_cycles("(23)", 3)
    # p first, then q: 0 -> 1 -> 2
    assert (p * q)(0) == 2
    assert (p * q).as_matrix() == p.as_matrix() @ q.as_matrix()
    assert (p * p.inverse()).is_identity()


def test_permutation_cycle_notation():
    sigma = Permutation.from_cycles("(1463)(25)", 6)
    assert sigma.images == (3, 4, 0, 5, 1, 2)
    assert sigma.to_cycles() == "(1463)(25)"
    assert sigma.order() == 4
    assert Permutation.from_cycles("(1 10)", 10).to_cycles() == "(1 10)"
    with pytest.raises(ValueError):
        Permutation.from_cycles("(17)", 6)
    with pytest.raises(ValueError):
        Permutation.from_cycles("(12)(23)", 3)


def test_permutation_acts_on_row_vectors():
    sigma = Permutation.from_cycles("(123)", 3)
    x = BitMatrix.from_rows(["100"])
    assert x @ sigma.as_matrix() == BitMatrix.from_rows(["010"])
    assert sigma.apply_columns(x) == x @ sigma.as_matrix()
    assert Permutation.from_matrix(sigma.as_matrix()) == sigma


def test_kron_identity_and_concatenate():
    p = Permutation.from_cycles("(12)", 2)
    assert kron_identity(p, 3, left=True).as_matrix() == kron(p.as_matrix(), BitMatrix.identity(3))
    assert kron_identity(p, 3, left=False).as_matrix() == kron(BitMatrix.identity(3), p.as_matrix())
    joined = concatenate([p, Permutation.identity(2)])
    assert joined.images == (1, 0, 2, 3)


def test_values_are_frozen():
    m = BitMatrix.from_rows(["10", "01"])
    v = BitVector.from_string("01")
    with pytest.raises(dataclasses.FrozenInstanceError):
        m.rows = 3
    with pytest.raises(dataclasses.FrozenInstanceError):
        v.length = 5
    with pytest.raises(ValueError):
        m.words[0, 0] = 0
    assert m == BitMatrix(m.words, 2, 2)
    assert hash(v) == hash(BitVector.from_bits([0, 1]))
