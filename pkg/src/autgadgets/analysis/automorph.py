"""
Code automorphisms: verification, Tanner detection, enumeration and
group closure.

THE TRIPLE (sigma, W, V):
-------------------------
A bit permutation sigma (matrix P, x -> x P) is an automorphism of
C = ker H = rowspace G iff every row of G P lies in rowspace G. Then

    G P = V G      V unique (G has full rank)
    H P = W H      W canonical per ``solve_left``; if that W is singular
                   (redundant checks), W = T_M^-1 T_H from the two
                   eliminations to the common RREF is used instead

sigma is a Tanner automorphism when some permutation W works, i.e. the
rows of H P are a rearrangement of the rows of H.

ENUMERATION:
------------
Exhaustive backtracking over bit images for n <= n_cap. A bit may only
map to a bit in the same class, where the class of bit j is the vector
(number of codewords of weight w containing j)_w. A partial map on
positions j_1..j_t survives only if the projection of the codeword set
onto (j_1..j_t) equals its projection onto the images.

CLOSURE:
--------
``sympy.combinatorics.PermutationGroup`` sizes the closure first, so an
oversized request fails before anything is materialized. The closure is
then built breadth first with V and W multiplied along (the maps
sigma -> V and sigma -> W are homomorphisms for the product convention
of ``Permutation``).
"""

from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from autgadgets.analysis.circuits import elementary_steps
from autgadgets.errors import (
    CapExceededError,
    DimensionMismatchError,
    NotAnAutomorphismError,
)
from autgadgets.models.automorphism import AutomorphismGroup, CodeAutomorphism
from autgadgets.models.bitmatrix import (
    BitMatrix,
    independent_rows,
    row_transform,
    solve_left,
)
from autgadgets.models.classical import ClassicalCode
from autgadgets.models.gadget import CircuitStep
from autgadgets.models.permutation import Permutation

logger = logging.getLogger(__name__)

DEFAULT_N_CAP = 10
DEFAULT_ORDER_CAP = 100_000


def _check_action(h: BitMatrix, moved: BitMatrix) -> Optional[BitMatrix]:
    """Invertible W with W H = moved, preferring the canonical solution."""
    w = solve_left(h, moved)
    if w is None:
        return None
    if w.is_invertible():
        return w
    return row_transform(moved).inverse() @ row_transform(h)


def check_automorphism(code: ClassicalCode, sigma: Permutation) -> Optional[CodeAutomorphism]:
    """
    The triple (sigma, W, V), or None if sigma does not preserve the code.

    Raises:
        DimensionMismatchError: If sigma does not act on n bits.
    """
    if sigma.n != code.n:
        raise DimensionMismatchError(expected=(code.n,), found=(sigma.n,))
    g = code.G
    v = solve_left(g, sigma.apply_columns(g)) if g.rows else BitMatrix.zeros(0, 0)
    if v is None:
        return None
    w = _check_action(code.H, sigma.apply_columns(code.H)) if code.m else BitMatrix.zeros(0, 0)
    if w is None:
        return None
    return CodeAutomorphism(sigma, w, v)


def tanner_permutation(code: ClassicalCode, sigma: Permutation) -> Optional[Permutation]:
    """
    Permutation W with W H = H P, matching equal rows lowest index first.
    """
    moved = sigma.apply_columns(code.H).to_int_rows()
    available: Dict[int, deque[int]] = {}
    for j, key in enumerate(code.H.to_int_rows()):
        available.setdefault(key, deque()).append(j)
    images = []
    for key in moved:
        queue = available.get(key)
        if not queue:
            return None
        images.append(queue.popleft())
    return Permutation(tuple(images))


def is_tanner(code: ClassicalCode, aut: CodeAutomorphism) -> bool:
    return tanner_permutation(code, aut.sigma) is not None


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------


def codeword_array(code: ClassicalCode) -> np.ndarray:
    """All 2^k codewords as a (2^k x n) 0/1 array, index = combination mask."""
    g = code.G.to_array()
    k = g.shape[0]
    masks = np.arange(2**k, dtype=np.int64)
    coeffs = ((masks[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)
    return (coeffs @ g) & 1


def _column_classes(words: np.ndarray) -> List[Tuple[int, ...]]:
    weights = words.sum(axis=1)
    n = words.shape[1]
    classes = []
    for j in range(n):
        counts = np.bincount(weights[words[:, j] == 1], minlength=n + 1)
        classes.append(tuple(int(c) for c in counts))
    return classes


class _BitSearch:
    def __init__(self, code: ClassicalCode):
        self.n = code.n
        self.words = codeword_array(code)
        self.classes = _column_classes(self.words)

    def _projection(self, positions: Sequence[int]) -> frozenset:
        cols = self.words[:, list(positions)]
        return frozenset(bytes(row) for row in np.packbits(cols, axis=1))

    def subtree(self, first_image: int) -> List[Tuple[int, ...]]:
        found: List[Tuple[int, ...]] = []
        if self.classes[first_image] != self.classes[0]:
            return found
        mapping = [first_image]
        used = {first_image}
        if self._projection([0]) == self._projection(mapping):
            self._extend(mapping, used, found)
        return found

    def _extend(self, mapping: List[int], used: set, found: List[Tuple[int, ...]]) -> None:
        depth = len(mapping)
        if depth == self.n:
            found.append(tuple(mapping))
            return
        source = self._projection(range(depth + 1))
        for w in range(self.n):
            if w in used or self.classes[w] != self.classes[depth]:
                continue
            mapping.append(w)
            if self._projection(mapping) == source:
                used.add(w)
                self._extend(mapping, used, found)
                used.discard(w)
            mapping.pop()


def enumerate_automorphisms(
    code: ClassicalCode,
    n_cap: int = DEFAULT_N_CAP,
    workers: Optional[int] = None,
) -> AutomorphismGroup:
    """
    Every automorphism of a short code.

    Raises:
        CapExceededError: If n exceeds ``n_cap``.
    """
    if code.n > n_cap:
        raise CapExceededError(what="code length", limit=n_cap, requested=code.n)
    search = _BitSearch(code)
    images = range(code.n)
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(search.subtree, images))
    else:
        chunks = [search.subtree(w) for w in images]
    perms = sorted(p for chunk in chunks for p in chunk)
    elements = []
    for images_ in perms:
        aut = check_automorphism(code, Permutation(images_))
        assert aut is not None, f"search produced a non-automorphism {images_}"
        elements.append(aut)
    logger.debug("%s: %d automorphisms by exhaustive search", code.name, len(elements))
    return AutomorphismGroup(code.name, tuple(elements), complete=True, order_hint=len(elements))


# ----------------------------------------------------------------------
# Closure
# ----------------------------------------------------------------------


def permutation_group_order(generators: Sequence[Permutation], n: int) -> int:
    if not generators:
        return 1
    group = PermutationGroup([SymPermutation(list(g.images), size=n) for g in generators])
    return int(group.order())


def close_group(
    code: ClassicalCode,
    generators: Sequence[Permutation],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> AutomorphismGroup:
    """
    The group generated by code automorphisms, breadth first from identity.

    Raises:
        NotAnAutomorphismError: If a generator does not preserve the code.
        CapExceededError: If the group order exceeds ``order_cap``.
    """
    gens: List[CodeAutomorphism] = []
    for g in generators:
        aut = check_automorphism(code, g)
        if aut is None:
            raise NotAnAutomorphismError(cycles=g.to_cycles())
        gens.append(aut)
    order = permutation_group_order([a.sigma for a in gens], code.n)
    if order > order_cap:
        raise CapExceededError(what="group order", limit=order_cap, requested=order)
    identity = check_automorphism(code, Permutation.identity(code.n))
    assert identity is not None
    seen: Dict[Tuple[int, ...], CodeAutomorphism] = {identity.sigma.images: identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            sigma = current.sigma * g.sigma
            if sigma.images in seen:
                continue
            product = CodeAutomorphism(sigma, current.W @ g.W, current.V @ g.V)
            seen[sigma.images] = product
            queue.append(product)
    elements = tuple(seen[key] for key in sorted(seen))
    logger.debug("%s: closure of %d generators has order %d", code.name, len(gens), len(elements))
    return AutomorphismGroup(
        code.name,
        elements,
        generators=tuple(a.sigma for a in gens),
        complete=False,
        order_hint=order,
    )


def close_matrix_group(generators: Sequence[BitMatrix], order_cap: int = DEFAULT_ORDER_CAP) -> List[BitMatrix]:
    """
    All products of invertible matrices, breadth first.

    Raises:
        CapExceededError: If more than ``order_cap`` elements appear.
    """
    if not generators:
        return []
    size = generators[0].rows
    identity = BitMatrix.identity(size)
    seen: Dict[bytes, BitMatrix] = {identity.key(): identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = current @ g
            key = product.key()
            if key in seen:
                continue
            if len(seen) >= order_cap:
                raise CapExceededError(what="matrix group order", limit=order_cap, requested=len(seen) + 1)
            seen[key] = product
            queue.append(product)
    return [seen[key] for key in sorted(seen)]


# ----------------------------------------------------------------------
# Group reports
# ----------------------------------------------------------------------


@dataclass
class LogicalGroupReport:
    """
    Image of sigma -> V on a group.

    Attributes:
        order: |{V}|.
        kernel_size: |group| / |{V}|.
        homomorphism: V(s t) = V(s) V(t) held on every checked pair.
        matrices: Distinct V in canonical order.
    """

    order: int
    kernel_size: int
    homomorphism: bool
    matrices: List[BitMatrix] = field(default_factory=list, repr=False)


def logical_group(group: AutomorphismGroup) -> LogicalGroupReport:
    distinct: Dict[bytes, BitMatrix] = {}
    for aut in group:
        distinct.setdefault(aut.V.key(), aut.V)
    checks = list(group.generators) or [a.sigma for a in group.elements[:8]]
    homomorphism = True
    for s in checks:
        a = group.find(s)
        for t in checks:
            b = group.find(t)
            ab = group.find(s * t)
            if a is None or b is None or ab is None:
                continue
            if ab.V != a.V @ b.V:
                homomorphism = False
    order = len(distinct)
    return LogicalGroupReport(
        order=order,
        kernel_size=group.order // order if order else 0,
        homomorphism=homomorphism,
        matrices=[distinct[k] for k in sorted(distinct)],
    )


@dataclass
class AffineReport:
    checked: int
    invertible: int
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def affine_check(group: AutomorphismGroup) -> AffineReport:
    """Every logical action must be an invertible linear map."""
    violations = [str(a) for a in group if not a.V.is_invertible()]
    return AffineReport(group.order, group.order - len(violations), violations)


def dual_action(code: ClassicalCode, sigma: Permutation) -> BitMatrix:
    """The action on an independent basis B of rowspace(H): B P = V_perp B."""
    basis = code.H.select_rows(independent_rows(code.H))
    if basis.rows == 0:
        return BitMatrix.zeros(0, 0)
    v = solve_left(basis, sigma.apply_columns(basis))
    if v is None:
        raise NotAnAutomorphismError(cycles=sigma.to_cycles())
    return v


@dataclass
class DualBoundReport:
    """
    Sizes of Aut(C) and of its logical and dual-logical images.

    Attributes:
        applicable: d >= 3 (the injectivity statements need it).
        group_order: |Aut(C)|.
        logical_order: |{V}|.
        dual_order: |{V_perp}|.
        dual_injective: sigma -> V_perp is injective.
        equivalent: |{V}| = |{V_perp}| = |Aut|, required when d_perp >= 3 too.
    """

    applicable: bool
    group_order: int
    logical_order: int
    dual_order: int
    dual_injective: bool
    equivalent: Optional[bool]

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return True
        return self.dual_injective and self.equivalent is not False


def dual_bound_check(
    code: ClassicalCode,
    group: AutomorphismGroup,
    d: Optional[int],
    d_perp: Optional[int],
) -> DualBoundReport:
    logical = {a.V.key() for a in group}
    dual = {dual_action(code, a.sigma).key() for a in group}
    applicable = d is not None and d >= 3
    injective = len(dual) == group.order
    equivalent: Optional[bool] = None
    if applicable and d_perp is not None and d_perp >= 3:
        equivalent = len(logical) == len(dual) == group.order
    if applicable and not (injective and equivalent is not False):
        logger.warning("%s: dual automorphism bound fails", code.name)
    return DualBoundReport(applicable, group.order, len(logical), len(dual), injective, equivalent)


def hamming_decompose(w: BitMatrix) -> List[CircuitStep]:
    """
    SWAP/CNOT steps whose product is w; every prefix is invertible, so
    error correction can run between steps.

    Raises:
        SingularMatrixError: If w is singular.
    """
    steps = elementary_steps(w)
    assert len(steps) <= w.rows * w.rows
    return steps
