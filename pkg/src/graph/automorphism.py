"""
Graph automorphisms and isomorphism by backtracking over ordered partitions.

Ordered partitions are refined to equitable ones (every vertex of a cell has
the same number of neighbours in every cell); the refinement trace records
which splits happened, so two branches can only lead to matching leaves when
their traces agree. The automorphism group is built level by level along the
leftmost branch: at level i every vertex of the target cell either already lies
in the orbit of v_i under the generators found so far, or is tested by an
exhaustive search for an automorphism fixing v_0..v_{i-1} and sending v_i to
it. The group order is then the product of the level orbit sizes.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, List, Optional, Tuple

from .. import config
from ..errors import CapExceededError, InternalCheckError
from ..perm.group import PermutationGroup
from ..perm.permutation import Permutation
from .graph import Graph

logger = logging.getLogger(__name__)

Cells = List[List[int]]


# =============================================================================
# Partition refinement
# =============================================================================

def _degree_partition(graph: Graph) -> Tuple[Cells, Tuple]:
    degrees = sorted({len(a) for a in graph.adjacency})
    cells = [[v for v in range(graph.n) if len(graph.adjacency[v]) == d] for d in degrees]
    return cells, tuple((d, len(c)) for d, c in zip(degrees, cells))


def _refine(adj: List[FrozenSet[int]], cells: Cells) -> Tuple[Cells, Tuple]:
    """Equitable refinement; new cells are ordered by neighbour count into the splitter."""
    cells = [list(c) for c in cells]
    trace = []
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            splitter = frozenset(cells[si])
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                counts = {v: len(adj[v] & splitter) for v in cell}
                values = sorted(set(counts.values()))
                if len(values) == 1:
                    continue
                pieces = [[v for v in cell if counts[v] == c] for c in values]
                cells[ci:ci + 1] = pieces
                trace.append((si, ci, tuple((c, len(p)) for c, p in zip(values, pieces))))
                changed = True
                break
            if changed:
                break
    return cells, tuple(trace)


def _first_open(cells: Cells) -> Optional[int]:
    for index, cell in enumerate(cells):
        if len(cell) > 1:
            return index
    return None


def _individualize(adj: List[FrozenSet[int]], cells: Cells, target: int,
                   x: int) -> Tuple[Cells, Tuple]:
    rest = [y for y in cells[target] if y != x]
    return _refine(adj, cells[:target] + [[x], rest] + cells[target + 1:])


def _check_size(graph: Graph):
    if graph.n > config.GRAPH_MAX:
        raise CapExceededError(f"graph too large: {graph.n} vertices exceed GRAPH_MAX="
                               f"{config.GRAPH_MAX}", graph.n, config.GRAPH_MAX)


# =============================================================================
# Search
# =============================================================================

class _LeftmostPath:
    """The leftmost branch of the search tree of one graph, with its traces."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.adj = [frozenset(a) for a in graph.adjacency]
        start, signature = _degree_partition(graph)
        cells, trace = _refine(self.adj, start)
        self.partitions: List[Cells] = [cells]
        self.traces: List[Tuple] = [(signature, trace)]
        self.targets: List[int] = []
        self.base: List[int] = []
        while True:
            target = _first_open(cells)
            if target is None:
                break
            v = cells[target][0]
            cells, trace = _individualize(self.adj, cells, target, v)
            self.targets.append(target)
            self.base.append(v)
            self.partitions.append(cells)
            self.traces.append(trace)
        self.visited = 0

    @property
    def depth(self) -> int:
        return len(self.targets)

    def match(self, adj: List[FrozenSet[int]], cells: Cells, level: int,
              accept: Callable[[List[int]], bool]) -> Optional[List[int]]:
        """First leaf below `cells` whose traces follow the path and whose map is accepted."""
        self.visited += 1
        if level == self.depth:
            mapping = [0] * self.graph.n
            for mine, theirs in zip(self.partitions[-1], cells):
                mapping[mine[0]] = theirs[0]
            return mapping if accept(mapping) else None
        target = self.targets[level]
        for x in cells[target]:
            following, trace = _individualize(adj, cells, target, x)
            if trace != self.traces[level + 1]:
                continue
            found = self.match(adj, following, level + 1, accept)
            if found is not None:
                return found
        return None


def _orbit(point: int, generators: List[Permutation]) -> List[int]:
    seen = {point}
    queue = [point]
    for x in queue:
        for g in generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return queue


@dataclass
class AutomorphismSearch:
    group: PermutationGroup = field(repr=False)
    generators: List[Permutation]
    base: List[int]
    orbit_sizes: List[int]
    order: int
    nodes_visited: int

    def to_dict(self) -> dict:
        return {"order": self.order, "base": [v + 1 for v in self.base],
                "orbit_sizes": self.orbit_sizes,
                "generators": [str(g) for g in self.generators]}


def automorphism_search(graph: Graph) -> AutomorphismSearch:
    """
    Raises:
        CapExceededError: more than GRAPH_MAX vertices
        InternalCheckError: the generated group disagrees with the level orbit sizes
    """
    _check_size(graph)
    path = _LeftmostPath(graph)
    edges = graph.edges

    def is_automorphism(mapping: List[int]) -> bool:
        return all(graph.has_edge(mapping[u], mapping[v]) for u, v in edges)

    generators: List[Permutation] = []
    orbit_sizes = [1] * path.depth
    for level in reversed(range(path.depth)):
        v = path.base[level]
        target = path.targets[level]
        orbit = set(_orbit(v, generators))
        for w in path.partitions[level][target]:
            if w in orbit:
                continue
            cells, trace = _individualize(path.adj, path.partitions[level], target, w)
            if trace != path.traces[level + 1]:
                continue
            mapping = path.match(path.adj, cells, level + 1, is_automorphism)
            if mapping is not None:
                generators.append(Permutation(tuple(mapping)))
                orbit = set(_orbit(v, generators))
        orbit_sizes[level] = len(orbit)

    order = 1
    for size in orbit_sizes:
        order *= size
    group = PermutationGroup(generators) if generators else PermutationGroup.trivial(graph.n)
    if group.order() != order:
        raise InternalCheckError(f"automorphism search: generated order {group.order()} "
                                 f"differs from orbit product {order}")
    logger.info("[Aut] %d vertices: order %d, %d generators, %d nodes",
                graph.n, order, len(generators), path.visited)
    return AutomorphismSearch(group=group, generators=generators, base=list(path.base),
                              orbit_sizes=orbit_sizes, order=order, nodes_visited=path.visited)


def automorphism_group(graph: Graph) -> PermutationGroup:
    return automorphism_search(graph).group


def are_isomorphic(first: Graph, second: Graph) -> Tuple[bool, Optional[Permutation]]:
    """
    Returns:
        (True, witness) with witness[v] the image of vertex v of `first`, or (False, None)

    Raises:
        CapExceededError: either graph exceeds GRAPH_MAX vertices
    """
    _check_size(first)
    _check_size(second)
    if first.n != second.n or first.edge_count != second.edge_count:
        return False, None
    path = _LeftmostPath(first)
    adj = [frozenset(a) for a in second.adjacency]
    start, signature = _degree_partition(second)
    cells, trace = _refine(adj, start)
    if (signature, trace) != path.traces[0]:
        return False, None

    def is_isomorphism(mapping: List[int]) -> bool:
        return all(second.has_edge(mapping[u], mapping[v]) for u, v in first.edges)

    mapping = path.match(adj, cells, 0, is_isomorphism)
    if mapping is None:
        return False, None
    return True, Permutation(tuple(mapping))
