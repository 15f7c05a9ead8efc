"""Finite simple graphs and their basic invariants."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ..errors import DegreeMismatchError, GraphError
from ..perm.group import PermutationGroup

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on vertices 0..n-1.

    Edges are stored as pairs (u, v) with u < v; adjacency[v] is the sorted
    neighbour tuple of v.
    """

    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Raises:
            GraphError: loops, repeated edges or vertices out of range
        """
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        normalized = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise GraphError(f"repeated edge ({pair[0]}, {pair[1]})")
            normalized.add(pair)
        neighbours: List[List[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return cls(n, frozenset(normalized), tuple(tuple(sorted(a)) for a in neighbours))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(g.number_of_nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree_of(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a


# =============================================================================
# Invariants
# =============================================================================

def _sparse(graph: Graph) -> csr_matrix:
    pairs = np.array(graph.sorted_edges(), dtype=np.int64).reshape(-1, 2)
    data = np.ones(len(pairs), dtype=np.float64)
    return csr_matrix((data, (pairs[:, 0], pairs[:, 1])), shape=(graph.n, graph.n))


def distance_matrix(graph: Graph) -> np.ndarray:
    """All-pairs distances; unreachable pairs are -1."""
    dist = shortest_path(_sparse(graph), directed=False, unweighted=True)
    dist[np.isinf(dist)] = -1
    return dist.astype(np.int64)


def is_connected(graph: Graph) -> bool:
    count, _ = connected_components(_sparse(graph), directed=False)
    return count == 1


def diameter(graph: Graph) -> int:
    if not is_connected(graph):
        raise GraphError("diameter of a disconnected graph")
    return int(distance_matrix(graph).max())


def girth(graph: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(graph: Graph) -> bool:
    return nx.is_bipartite(graph.to_networkx())


def valency(graph: Graph) -> Optional[int]:
    """Common vertex degree, or None if the graph is not regular."""
    degrees = {len(a) for a in graph.adjacency}
    return degrees.pop() if len(degrees) == 1 else None


def is_invariant(graph: Graph, G: PermutationGroup) -> bool:
    """True iff every generator of G maps edges to edges."""
    if G.degree != graph.n:
        raise DegreeMismatchError(f"group degree {G.degree} differs from vertex count {graph.n}")
    for g in G.generators:
        img = g.images
        for u, v in graph.edges:
            if not graph.has_edge(img[u], img[v]):
                return False
    return True


def distance_two_graph(graph: Graph, vertex_subset: Iterable[int]) -> Graph:
    """
    Graph on the sorted subset, adjacent iff at distance exactly 2 in `graph`.
    Vertex i of the result is the i-th smallest member of the subset.
    """
    subset = sorted(set(vertex_subset))
    if not subset:
        raise GraphError("distance-2 graph needs a nonempty vertex subset")
    dist = distance_matrix(graph)
    edges = [(i, j) for i, u in enumerate(subset) for j, v in enumerate(subset)
             if i < j and dist[u, v] == 2]
    return Graph.from_edges(len(subset), edges)


def induced_subgraph(graph: Graph, vertex_subset: Iterable[int]) -> Graph:
    subset = sorted(set(vertex_subset))
    position = {v: i for i, v in enumerate(subset)}
    edges = [(position[u], position[v]) for u, v in graph.edges
             if u in position and v in position]
    return Graph.from_edges(len(subset), edges)
