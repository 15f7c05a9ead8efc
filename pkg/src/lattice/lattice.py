"""
Lattices of subgroups between a point stabilizer G_alpha and G.

L1 holds every overgroup of G_alpha (through the block correspondence), L2 the
fixed point of "G_alpha N for N normal in a member", and L3 the products G_alpha N
for subnormal N normalized by G_alpha. Nodes are deduplicated by mutual
containment and sorted by (order, block alpha^H).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..errors import InternalCheckError, NotTransitiveError
from ..perm.group import PermutationGroup, dedup_subgroups, join, same_subgroup
from ..structure.blocks import block_stabilizer, blocks_containing
from ..structure.normal import normal_subgroups, normalizes

logger = logging.getLogger(__name__)


class LatticeKind(Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"


@dataclass
class LatticeNode:
    index: int
    group: PermutationGroup
    block: FrozenSet[int]       # alpha^H

    @property
    def order(self) -> int:
        return self.group.order()


@dataclass
class SubgroupLattice:
    kind: LatticeKind
    ambient: PermutationGroup
    base_point: int
    nodes: List[LatticeNode]
    edges: List[Tuple[int, int]]                     # cover pairs (lower, upper)
    below: List[List[bool]] = field(repr=False)      # below[i][j]: node i < node j

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def index_of(self, H: PermutationGroup) -> Optional[int]:
        for node in self.nodes:
            if same_subgroup(node.group, H):
                return node.index
        return None

    def less(self, i: int, j: int) -> bool:
        return self.below[i][j]

    def upper_covers(self, i: int) -> List[int]:
        return [k for (j, k) in self.edges if j == i]

    def __len__(self) -> int:
        return len(self.nodes)


def _assemble(kind: LatticeKind, G: PermutationGroup, alpha: int,
              groups: Sequence[PermutationGroup]) -> SubgroupLattice:
    stabilizer = G.stabilizer(alpha)
    groups = dedup_subgroups(groups)
    for H in groups:
        if not H.contains_group(stabilizer) or not G.contains_group(H):
            raise InternalCheckError(f"{kind.value} node is not between G_alpha and G")
    keyed = sorted(((H.order(), tuple(H.orbit(alpha)), H) for H in groups),
                   key=lambda item: (item[0], item[1]))
    nodes = [LatticeNode(i, H, frozenset(block)) for i, (_, block, H) in enumerate(keyed)]

    n = len(nodes)
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            oi, oj = nodes[i].order, nodes[j].order
            if oi < oj and oj % oi == 0 and nodes[j].group.contains_group(nodes[i].group):
                below[i][j] = True
    edges = [(i, j) for i in range(n) for j in range(n)
             if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n))]
    lattice = SubgroupLattice(kind, G, alpha, nodes, edges, below)
    logger.info("[Lattice] %s: %d nodes, %d covers", kind.value, n, len(edges))
    return lattice


def _require_transitive(G: PermutationGroup):
    if not G.is_transitive():
        raise NotTransitiveError()


# =============================================================================
# The three lattices
# =============================================================================

def lattice_L1(G: PermutationGroup, alpha: int = 0) -> SubgroupLattice:
    """All subgroups containing G_alpha, as setwise stabilizers of blocks through alpha."""
    _require_transitive(G)
    groups = [block_stabilizer(G, block, alpha) for block in blocks_containing(G, alpha)]
    return _assemble(LatticeKind.L1, G, alpha, groups)


def lattice_L2(G: PermutationGroup, alpha: int = 0, cap: Optional[int] = None) -> SubgroupLattice:
    """
    Least family containing G and closed under K -> G_alpha N for N normal in K.

    Raises:
        CapExceededError: a member is too large for normal subgroup enumeration
    """
    _require_transitive(G)
    stabilizer = G.stabilizer(alpha)
    found = [G]
    for K in found:
        for N in normal_subgroups(K, cap).members:
            H = join(stabilizer, N)
            if not any(same_subgroup(H, M) for M in found):
                found.append(H)
    return _assemble(LatticeKind.L2, G, alpha, found)


def subnormal_subgroups(G: PermutationGroup, cap: Optional[int] = None) -> List[PermutationGroup]:
    """Fixed point of taking normal subgroups, starting from G."""
    found = [G]
    for K in found:
        for N in normal_subgroups(K, cap).members:
            if not any(same_subgroup(N, M) for M in found):
                found.append(N)
    return found


def lattice_L3(G: PermutationGroup, alpha: int = 0, cap: Optional[int] = None) -> SubgroupLattice:
    """Products G_alpha N over subnormal N normalized by G_alpha."""
    _require_transitive(G)
    stabilizer = G.stabilizer(alpha)
    products = [join(stabilizer, N) for N in subnormal_subgroups(G, cap)
                if normalizes(stabilizer, N)]
    return _assemble(LatticeKind.L3, G, alpha, products)


def build_lattice(G: PermutationGroup, alpha: int, kind: LatticeKind,
                  cap: Optional[int] = None) -> SubgroupLattice:
    if kind is LatticeKind.L1:
        return lattice_L1(G, alpha)
    if kind is LatticeKind.L2:
        return lattice_L2(G, alpha, cap)
    return lattice_L3(G, alpha, cap)


# =============================================================================
# Order relations
# =============================================================================

def covers(L: SubgroupLattice) -> List[Tuple[int, int]]:
    return list(L.edges)


def comparable_pairs(L: SubgroupLattice) -> List[Tuple[int, int]]:
    n = len(L.nodes)
    return [(i, j) for i in range(n) for j in range(n) if L.below[i][j]]


def maximal_chains(L: SubgroupLattice) -> List[List[int]]:
    """Every chain bottom -> top along cover edges, in lexicographic node order."""
    chains: List[List[int]] = []

    def walk(path: List[int]):
        last = path[-1]
        if last == L.top:
            chains.append(list(path))
            return
        for nxt in sorted(L.upper_covers(last)):
            path.append(nxt)
            walk(path)
            path.pop()

    walk([L.bottom])
    return chains
