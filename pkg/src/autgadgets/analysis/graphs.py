"""
Graph algorithms behind cycle codes.

INCIDENCE:
----------
The cycle code of G = (V, E) puts bits on edges and checks on vertices:
H[v, e] = 1 iff v is an endpoint of e. Every column has weight 2 and the
rows sum to zero, so rank(H) = |V| - (#components).

GIRTH:
------
Breadth-first search from every vertex. A non-tree edge (u, w) seen from
root r closes a cycle of length at most dist[u] + dist[w] + 1, and the
minimum over all roots is exact. O(|V| |E|).

AUTOMORPHISMS:
--------------
Backtracking over vertex bijections in BFS order. A partial map is
extended with an image w for the next vertex v only if deg(w) = deg(v)
and adjacency to every already-mapped vertex is preserved. Subtrees are
split by the image of the first vertex and may run on worker threads;
the result is sorted by vertex images so it never depends on scheduling.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Union

import numpy as np

from autgadgets.errors import CapExceededError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.graph import GraphAutomorphism, SimpleGraph
from autgadgets.models.permutation import Permutation

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 12


def incidence_matrix(graph: SimpleGraph) -> BitMatrix:
    """|V| x |E| vertex-edge incidence matrix in canonical edge order."""
    h = np.zeros((graph.num_vertices, graph.num_edges), dtype=np.uint8)
    for e, (u, v) in enumerate(graph.edges):
        h[u, e] = 1
        h[v, e] = 1
    return BitMatrix.from_array(h)


def girth(graph: SimpleGraph) -> Union[int, float]:
    """Length of the shortest cycle, ``math.inf`` for a forest."""
    adj = graph.neighbours()
    best: Union[int, float] = math.inf
    for root in range(graph.num_vertices):
        dist = [-1] * graph.num_vertices
        parent = [-1] * graph.num_vertices
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _bfs_order(graph: SimpleGraph) -> List[int]:
    adj = graph.neighbours()
    order: List[int] = []
    seen = [False] * graph.num_vertices
    for start in range(graph.num_vertices):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class _VertexSearch:
    """Backtracking state shared by all subtrees of one search."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.n = graph.num_vertices
        self.order = _bfs_order(graph)
        self.degrees = graph.degrees()
        self.adjacent = [[False] * self.n for _ in range(self.n)]
        for u, v in graph.edges:
            self.adjacent[u][v] = self.adjacent[v][u] = True

    def candidates(self, mapping: List[int], used: List[bool], depth: int) -> List[int]:
        v = self.order[depth]
        out = []
        for w in range(self.n):
            if used[w] or self.degrees[w] != self.degrees[v]:
                continue
            ok = True
            for earlier in self.order[:depth]:
                if self.adjacent[v][earlier] != self.adjacent[w][mapping[earlier]]:
                    ok = False
                    break
            if ok:
                out.append(w)
        return out

    def subtree(self, first_image: int) -> List[List[int]]:
        mapping = [-1] * self.n
        used = [False] * self.n
        found: List[List[int]] = []
        v0 = self.order[0]
        if self.degrees[first_image] != self.degrees[v0]:
            return found
        mapping[v0] = first_image
        used[first_image] = True
        self._extend(mapping, used, 1, found)
        return found

    def _extend(self, mapping: List[int], used: List[bool], depth: int, found: List[List[int]]) -> None:
        if depth == self.n:
            found.append(list(mapping))
            return
        v = self.order[depth]
        for w in self.candidates(mapping, used, depth):
            mapping[v] = w
            used[w] = True
            self._extend(mapping, used, depth + 1, found)
            used[w] = False
            mapping[v] = -1


def graph_automorphisms(
    graph: SimpleGraph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: Optional[int] = None,
) -> List[GraphAutomorphism]:
    """
    All automorphisms of a graph with at most ``vertex_cap`` vertices.

    Args:
        graph: The graph to search.
        vertex_cap: Refuse graphs larger than this.
        workers: Thread count for the top-level fan-out (1 = serial).

    Returns:
        Automorphisms sorted by vertex images, identity first.

    Raises:
        CapExceededError: If the graph has more than ``vertex_cap`` vertices.
    """
    if graph.num_vertices > vertex_cap:
        raise CapExceededError(what="vertices", limit=vertex_cap, requested=graph.num_vertices)
    if graph.num_vertices == 0:
        return []
    search = _VertexSearch(graph)
    images = range(graph.num_vertices)
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(search.subtree, images))
    else:
        chunks = [search.subtree(w) for w in images]
    maps = sorted(tuple(m) for chunk in chunks for m in chunk)
    logger.debug("%s: %d vertex automorphisms", graph.name, len(maps))
    return [GraphAutomorphism.from_vertex_perm(graph, Permutation(m)) for m in maps]
