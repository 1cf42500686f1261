"""
Simple undirected graphs used as seeds for cycle codes.

Bits of a cycle code live on edges and parity checks on vertices. The
bit-to-edge map is fixed by sorting edges lexicographically, so every
matrix derived from a graph is reproducible.

BUILDERS:
---------
    complete(n)               K_n
    complete_bipartite(a, b)  K_{a,b}; left part 0..a-1, right part a..a+b-1
    petersen()                outer 5-cycle 0..4, spokes i--i+5, inner pentagram
    ring(n)                   the n-cycle
    path(n)                   n vertices in a line
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from autgadgets.models.permutation import Permutation

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """
    An undirected graph without loops or parallel edges.

    Attributes:
        num_vertices: Vertex count.
        edges: Lexicographically sorted pairs (u, v) with u < v.
        name: Label used in reports.
    """

    num_vertices: int
    edges: Tuple[Edge, ...]
    name: str = "graph"
    _index: Dict[Edge, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            if not 0 <= a < b < self.num_vertices:
                raise ValueError(f"edge ({u},{v}) outside {self.num_vertices} vertices")
            normalized.append((a, b))
        ordered = tuple(sorted(normalized))
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(ordered)})

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Sequence[Edge], name: str = "graph") -> SimpleGraph:
        return cls(num_vertices, tuple(tuple(e) for e in edges), name)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def neighbours(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        return [len(a) for a in self.neighbours()]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.num_vertices))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        return self.num_vertices > 0 and nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class GraphAutomorphism:
    """
    A vertex relabeling that maps the edge set to itself.

    Attributes:
        vertex_perm: Permutation of vertices.
        edge_perm: The induced permutation of canonical edge indices.
    """

    vertex_perm: Permutation
    edge_perm: Permutation

    @classmethod
    def from_vertex_perm(cls, graph: SimpleGraph, vertex_perm: Permutation) -> GraphAutomorphism:
        """
        Raises:
            ValueError: If vertex_perm does not preserve the edge set.
        """
        images = []
        for u, v in graph.edges:
            a, b = vertex_perm(u), vertex_perm(v)
            if not graph.has_edge(a, b):
                raise ValueError(f"edge ({u},{v}) maps to non-edge ({a},{b})")
            images.append(graph.edge_index(a, b))
        return cls(vertex_perm, Permutation(tuple(images)))


def complete(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError(f"complete graph needs n >= 3, got {n}")
    return SimpleGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)), f"K{n}")


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1 or a + b < 3:
        raise ValueError(f"degenerate complete bipartite graph K{a},{b}")
    edges = tuple((u, a + v) for u in range(a) for v in range(b))
    return SimpleGraph(a + b, edges, f"K{a}{b}")


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, tuple(outer + spokes + inner), "petersen")


def ring(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError(f"ring needs n >= 3, got {n}")
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)), f"ring{n}")


def path(n: int) -> SimpleGraph:
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)), f"path{n}")
