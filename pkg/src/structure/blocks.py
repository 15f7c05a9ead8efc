"""Orbits, blocks of imprimitivity and primitivity."""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..errors import NotTransitiveError, PreconditionError
from ..perm.group import PermutationGroup
from .union_find import UnionFind, find_orbits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockSystem:
    """A partition of the points into blocks of equal size."""

    degree: int
    block_of: Tuple[int, ...]
    blocks: Tuple[FrozenSet[int], ...]

    @classmethod
    def from_blocks(cls, degree: int, blocks: Iterable[Iterable[int]]) -> "BlockSystem":
        parts = sorted((frozenset(b) for b in blocks), key=min)
        block_of = [-1] * degree
        for index, part in enumerate(parts):
            for x in part:
                if block_of[x] != -1:
                    raise ValueError(f"point {x} lies in two blocks")
                block_of[x] = index
        if -1 in block_of:
            raise ValueError("blocks do not cover every point")
        if len({len(p) for p in parts}) > 1:
            raise ValueError("blocks have different sizes")
        return cls(degree, tuple(block_of), tuple(parts))

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_containing(self, point: int) -> FrozenSet[int]:
        return self.blocks[self.block_of[point]]

    def is_invariant(self, G: PermutationGroup) -> bool:
        for g in G.generators:
            for block in self.blocks:
                targets = {self.block_of[g.images[x]] for x in block}
                if len(targets) != 1:
                    return False
        return True

    def is_trivial(self) -> bool:
        return self.count == 1 or self.block_size == 1


# =============================================================================
# Orbits
# =============================================================================

def orbits(G: PermutationGroup) -> List[FrozenSet[int]]:
    """G-orbits sorted by smallest point."""
    return find_orbits(G.degree, (g.images for g in G.generators))


def suborbits(G: PermutationGroup, alpha: int) -> List[FrozenSet[int]]:
    """Orbits of the point stabilizer G_alpha."""
    return orbits(G.stabilizer(alpha))


def subdegrees(G: PermutationGroup, alpha: int = 0) -> List[int]:
    return sorted(len(s) for s in suborbits(G, alpha))


def _require_transitive(G: PermutationGroup):
    if not G.is_transitive():
        raise NotTransitiveError()


# =============================================================================
# Blocks
# =============================================================================

def _block_closure(G: PermutationGroup, alpha: int, points: Iterable[int]) -> UnionFind:
    """Finest G-invariant partition with every given point in the class of alpha."""
    uf = UnionFind(G.degree)
    queue = [(alpha, p) for p in points if uf.union(alpha, p)]
    images = [g.images for g in G.generators]
    while queue:
        x, y = queue.pop()
        for img in images:
            a, b = img[x], img[y]
            if uf.union(a, b):
                queue.append((a, b))
    return uf


def minimal_block(G: PermutationGroup, alpha: int, beta: int) -> FrozenSet[int]:
    """
    Smallest block of imprimitivity containing alpha and beta.

    Raises:
        NotTransitiveError: G is intransitive
        PreconditionError: alpha == beta
    """
    _require_transitive(G)
    if alpha == beta:
        raise PreconditionError("minimal_block needs two distinct points")
    return _block_closure(G, alpha, [beta]).class_of(alpha)


def _suborbit_representatives(G: PermutationGroup, alpha: int) -> List[int]:
    return [min(s) for s in suborbits(G, alpha) if alpha not in s]


def is_primitive(G: PermutationGroup) -> bool:
    _require_transitive(G)
    if G.degree <= 2:
        return True
    return all(len(minimal_block(G, 0, beta)) == G.degree
               for beta in _suborbit_representatives(G, 0))


def blocks_containing(G: PermutationGroup, alpha: int) -> List[FrozenSet[int]]:
    """
    Every block containing alpha, from {alpha} to the whole point set.

    Seeds are the minimal blocks over suborbit representatives; the set is then
    closed under joins. Sorted by (size, contents).
    """
    _require_transitive(G)
    found = {frozenset([alpha]), frozenset(range(G.degree))}
    for beta in _suborbit_representatives(G, alpha):
        found.add(minimal_block(G, alpha, beta))
    queue = list(found)
    for block in queue:
        for other in list(found):
            if block <= other or other <= block:
                continue
            joined = _block_closure(G, alpha, block | other).class_of(alpha)
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    result = sorted(found, key=lambda b: (len(b), sorted(b)))
    logger.debug("[Blocks] %d blocks contain point %d", len(result), alpha)
    return result


def block_system(G: PermutationGroup, block: Iterable[int]) -> BlockSystem:
    """
    The block system generated by a block.

    Raises:
        PreconditionError: the set is empty or not a block of G
    """
    _require_transitive(G)
    block = frozenset(block)
    if not block:
        raise PreconditionError("empty block")
    alpha = min(block)
    uf = _block_closure(G, alpha, block)
    if uf.class_of(alpha) != block:
        raise PreconditionError("point set is not a block of imprimitivity")
    return BlockSystem.from_blocks(G.degree, uf.classes())


def block_stabilizer(G: PermutationGroup, block: Iterable[int], alpha: int) -> PermutationGroup:
    """
    Setwise stabilizer of a block containing alpha: G_alpha together with one
    element mapping alpha to each point of the block not yet reached.
    """
    block = frozenset(block)
    if alpha not in block:
        raise PreconditionError(f"point {alpha} is not in the block")
    gens = [g for g in G.stabilizer(alpha).generators if not g.is_identity()]
    reached = {alpha}
    for beta in sorted(block):
        if beta in reached:
            continue
        u = G.transversal_element(alpha, beta)
        if u is None:
            raise PreconditionError(f"point {beta} is outside the orbit of {alpha}")
        gens.append(u)
        reached = set(PermutationGroup(gens).orbit(alpha))
    if reached != set(block):
        raise PreconditionError("point set is not a block of imprimitivity")
    return PermutationGroup(gens, degree=G.degree)
