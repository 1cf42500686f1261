import numpy as np
import pytest

from autgadgets.analysis.circuits import decompose, elementary_steps
from autgadgets.errors import DimensionMismatchError, SingularMatrixError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.gadget import CircuitStep, InvertibleCircuit, schedule
from autgadgets.models.permutation import Permutation


def test_fan_out_has_depth_one():
    v = BitMatrix.from_rows(["111", "010", "001"])
    circuit = decompose(v)
    assert [str(s) for s in circuit.steps] == ["CNOT(0->1)", "CNOT(0->2)"]
    assert circuit.cnot_count == 2
    assert circuit.depth == 1
    assert circuit.replay() == v
    assert not circuit.is_permutation()


def test_permutation_uses_swaps_only():
    p = Permutation.from_cycles("(123)", 3).as_matrix()
    circuit = decompose(p)
    assert circuit.is_permutation()
    assert circuit.replay() == p


def test_identity_is_empty():
    circuit = decompose(BitMatrix.identity(4))
    assert circuit.steps == ()
    assert circuit.depth == 0


def test_singular_and_non_square():
    with pytest.raises(SingularMatrixError):
        elementary_steps(BitMatrix.from_rows(["110", "110", "001"]))
    with pytest.raises(DimensionMismatchError):
        elementary_steps(BitMatrix.from_rows(["110"]))


def test_schedule_conflicts():
    steps = (CircuitStep("cnot", 0, 1), CircuitStep("cnot", 1, 2), CircuitStep("cnot", 3, 4))
    assert schedule(steps) == [0, 1, 0]
    with pytest.raises(ValueError):
        CircuitStep("cz", 0, 1)
    with pytest.raises(ValueError):
        CircuitStep("cnot", 2, 2)


def test_kron_identity_keeps_depth():
    circuit = decompose(BitMatrix.from_rows(["100", "110", "001"]))
    for left in (True, False):
        wide = circuit.kron_identity(4, left=left)
        assert wide.depth == circuit.depth
        assert wide.replay() == wide.matrix
        assert wide.size == 12


def test_random_replay():
    rng = np.random.default_rng(3)
    found = 0
    while found < 5:
        m = BitMatrix.from_array(rng.integers(0, 2, size=(6, 6), dtype=np.uint8))
        if not m.is_invertible():
            continue
        found += 1
        assert InvertibleCircuit(m, tuple(elementary_steps(m))).replay() == m
