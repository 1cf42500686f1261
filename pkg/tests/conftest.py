"""Shared fixtures: the K4 cycle code and the products built from it."""

import pytest

from autgadgets.analysis.families import cycle_code
from autgadgets.models.graph import complete
from autgadgets.analysis.products import hgp
from autgadgets.models.bitmatrix import BitMatrix, kernel_basis
from autgadgets.models.classical import ClassicalCode

# K4 incidence with edges ordered (0,3),(0,1),(1,2),(2,3),(0,2),(1,3).
FIGURE_H = ["110010", "011001", "001110", "100101"]
# Generator with unit columns 0, 4 and 5.
FIGURE_G = ["110100", "011010", "001101"]


@pytest.fixture(scope="session")
def k4():
    return complete(4)


@pytest.fixture(scope="session")
def k4_code(k4):
    return cycle_code(k4)


@pytest.fixture(scope="session")
def figure_h():
    return BitMatrix.from_rows(FIGURE_H)


@pytest.fixture(scope="session")
def figure_code():
    g = BitMatrix.from_rows(FIGURE_G)
    return ClassicalCode.from_parity_check(kernel_basis(g), generator=g, name="k4-figure")


@pytest.fixture(scope="session")
def hgp_k4(k4_code):
    return hgp(k4_code, k4_code)


@pytest.fixture(scope="session")
def cup_k4(k4_code):
    return hgp(k4_code, k4_code.transpose())
