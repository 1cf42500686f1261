"""Code automorphisms and the groups they form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.permutation import Permutation


@dataclass(frozen=True)
class CodeAutomorphism:
    """
    A bit permutation with its check-side and logical actions.

    Attributes:
        sigma: Permutation of the n bits.
        W: m x m invertible matrix with H sigma = W H.
        V: k x k invertible matrix with G sigma = V G.
    """

    sigma: Permutation
    W: BitMatrix
    V: BitMatrix

    @property
    def is_identity(self) -> bool:
        return self.sigma.is_identity()

    @property
    def w_is_permutation(self) -> bool:
        return self.W.is_permutation()

    def __str__(self) -> str:
        return self.sigma.to_cycles()


@dataclass(frozen=True)
class AutomorphismGroup:
    """
    A set of automorphisms of one code, closed under composition.

    Attributes:
        code_name: Name of the code the group acts on.
        elements: Automorphisms in canonical (image-tuple) order.
        generators: Permutations the group was closed from, if any.
        complete: True when the elements are all of Aut(C).
        order_hint: Group order computed before materializing, if known.
    """

    code_name: str
    elements: Tuple[CodeAutomorphism, ...]
    generators: Tuple[Permutation, ...] = ()
    complete: bool = False
    order_hint: Optional[int] = None
    _by_sigma: Dict[Tuple[int, ...], CodeAutomorphism] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_sigma", {a.sigma.images: a for a in self.elements})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[CodeAutomorphism]:
        return iter(self.elements)

    def find(self, sigma: Permutation) -> Optional[CodeAutomorphism]:
        return self._by_sigma.get(sigma.images)

    def permutations(self) -> List[Permutation]:
        return [a.sigma for a in self.elements]

    def tanner_elements(self) -> List[CodeAutomorphism]:
        """Elements whose canonical W is already a permutation."""
        return [a for a in self.elements if a.w_is_permutation]
