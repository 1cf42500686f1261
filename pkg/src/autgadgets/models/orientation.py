"""
Edge orientations and copy-cup CZ pairings.

An orientation assigns every edge (u, v), u < v, of a graph one of

    'f'   forward, u -> v
    'b'   backward, v -> u
    '.'   free (undirected)

It satisfies the Leibniz condition when every vertex meets an even number
of directed edges (in-degree plus out-degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from autgadgets.models.graph import SimpleGraph

FORWARD, BACKWARD, FREE = 1, -1, 0
_SYMBOLS = {"f": FORWARD, "b": BACKWARD, ".": FREE}


@dataclass(frozen=True)
class Orientation:
    """
    Per-edge directions on a fixed graph.

    Attributes:
        graph: The undirected graph.
        directions: FORWARD, BACKWARD or FREE per canonical edge index.
    """

    graph: SimpleGraph
    directions: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.directions) != self.graph.num_edges:
            raise ValueError(
                f"{len(self.directions)} directions for {self.graph.num_edges} edges"
            )
        if any(d not in (FORWARD, BACKWARD, FREE) for d in self.directions):
            raise ValueError(f"directions must be in (1, -1, 0): {self.directions}")

    @classmethod
    def free(cls, graph: SimpleGraph) -> Orientation:
        return cls(graph, (FREE,) * graph.num_edges)

    @classmethod
    def from_symbols(cls, graph: SimpleGraph, symbols: str) -> Orientation:
        """Parse a string such as ``"ff.b.."`` (whitespace ignored)."""
        cleaned = "".join(symbols.split())
        try:
            return cls(graph, tuple(_SYMBOLS[ch] for ch in cleaned))
        except KeyError as exc:
            raise ValueError(f"orientation symbols must be f, b or '.', got {exc.args[0]!r}") from None

    def to_symbols(self) -> str:
        lookup = {v: k for k, v in _SYMBOLS.items()}
        return "".join(lookup[d] for d in self.directions)

    def directed_edges(self) -> List[Tuple[int, int, int]]:
        """(edge index, tail, head) for every directed edge."""
        out = []
        for i, ((u, v), d) in enumerate(zip(self.graph.edges, self.directions)):
            if d == FORWARD:
                out.append((i, u, v))
            elif d == BACKWARD:
                out.append((i, v, u))
        return out

    def head(self, edge: int) -> Optional[int]:
        u, v = self.graph.edges[edge]
        d = self.directions[edge]
        return v if d == FORWARD else u if d == BACKWARD else None

    def tail(self, edge: int) -> Optional[int]:
        u, v = self.graph.edges[edge]
        d = self.directions[edge]
        return u if d == FORWARD else v if d == BACKWARD else None

    def violations(self) -> List[int]:
        """Vertices meeting an odd number of directed edges."""
        parity = [0] * self.graph.num_vertices
        for _, tail, head in self.directed_edges():
            parity[tail] ^= 1
            parity[head] ^= 1
        return [v for v, p in enumerate(parity) if p]

    def is_leibniz(self) -> bool:
        return not self.violations()

    def reversed(self) -> Orientation:
        return Orientation(self.graph, tuple(-d for d in self.directions))


@dataclass(frozen=True)
class CzPairing:
    """
    Qubit pairs (a on block 1, b on block 2) receiving a physical CZ.

    Attributes:
        n: Qubits per block.
        pairs: Sorted pairs; a pair listed twice cancels (CZ^2 = I).
    """

    n: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        odd: set[Tuple[int, int]] = set()
        for pair in self.pairs:
            odd ^= {(int(pair[0]), int(pair[1]))}
        ordered = tuple(sorted(odd))
        for a, b in ordered:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"pair ({a},{b}) outside {self.n} qubits")
        object.__setattr__(self, "pairs", ordered)

    def __len__(self) -> int:
        return len(self.pairs)

    def swapped(self) -> CzPairing:
        """The same gate set with the two blocks exchanged."""
        return CzPairing(self.n, tuple((b, a) for a, b in self.pairs))
