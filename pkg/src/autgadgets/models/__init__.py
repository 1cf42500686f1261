"""Immutable value types: F2 matrices, permutations, graphs, groups and codes."""

from autgadgets.models.bitmatrix import (
    BitMatrix,
    BitVector,
    RowReducer,
    block_matrix,
    direct_sum,
    express_modulo,
    hstack,
    independent_rows,
    kernel_basis,
    kron,
    left_kernel_basis,
    rank,
    right_inverse,
    row_space_contains,
    row_transform,
    rref,
    solve_left,
    vstack,
)
from autgadgets.models.permutation import Permutation, concatenate, kron_identity
from autgadgets.models.graph import (
    GraphAutomorphism,
    SimpleGraph,
    complete,
    complete_bipartite,
    path,
    petersen,
    ring,
)
from autgadgets.models.group import (
    FiniteGroup,
    GroupAlgebraElement,
    cyclic_group,
    dihedral_group,
    regular_representation,
)
from autgadgets.models.classical import ClassicalCode, information_columns
from autgadgets.models.css import (
    ChainComplex,
    CssCode,
    LogicalBasis,
    Sector,
    SectorLayout,
)
from autgadgets.models.automorphism import AutomorphismGroup, CodeAutomorphism
from autgadgets.models.gadget import CircuitStep, Gadget, InvertibleCircuit
from autgadgets.models.orientation import CzPairing, Orientation
from autgadgets.models.product import ProductRecord, stack_bases

__all__ = [
    "BitMatrix",
    "BitVector",
    "RowReducer",
    "block_matrix",
    "direct_sum",
    "express_modulo",
    "hstack",
    "independent_rows",
    "kernel_basis",
    "kron",
    "left_kernel_basis",
    "rank",
    "right_inverse",
    "row_space_contains",
    "row_transform",
    "rref",
    "solve_left",
    "vstack",
    "Permutation",
    "concatenate",
    "kron_identity",
    "GraphAutomorphism",
    "SimpleGraph",
    "complete",
    "complete_bipartite",
    "path",
    "petersen",
    "ring",
    "FiniteGroup",
    "GroupAlgebraElement",
    "cyclic_group",
    "dihedral_group",
    "regular_representation",
    "ClassicalCode",
    "information_columns",
    "ChainComplex",
    "CssCode",
    "LogicalBasis",
    "Sector",
    "SectorLayout",
    "AutomorphismGroup",
    "CodeAutomorphism",
    "CircuitStep",
    "Gadget",
    "InvertibleCircuit",
    "CzPairing",
    "Orientation",
    "ProductRecord",
    "stack_bases",
]
