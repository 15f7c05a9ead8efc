"""Permutation group handles backed by a stabilizer chain, and induced coset actions."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .. import config
from ..errors import (CapExceededError, DegreeMismatchError, InternalCheckError,
                      NotSubgroupError)
from .chain import StabilizerChain, perm_dtype
from .permutation import Permutation, format_cycles

logger = logging.getLogger(__name__)


def to_array(p: Permutation, dtype) -> np.ndarray:
    return np.asarray(p.images, dtype=dtype)


def from_array(a: np.ndarray) -> Permutation:
    return Permutation.from_trusted(a.tolist())


class PermutationGroup:
    """
    A finitely generated permutation group.

    The stabilizer chain is built on first use; chains with a prescribed first
    base point are cached per point for stabilizer and transversal queries.

    Args:
        generators: Permutations of equal degree (may be empty when degree is given)
        degree: Degree of the trivial group when no generators are supplied
        chain: A chain already known to describe this group
    """

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None,
                 chain: Optional[StabilizerChain] = None):
        gens = list(generators)
        if not gens:
            if degree is None:
                raise ValueError("empty generator list")
            gens = [Permutation.identity(degree)]
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise DegreeMismatchError(f"generators have mixed degrees {sorted(degrees)}")
        if degree is not None and degree not in degrees:
            raise DegreeMismatchError(f"generators have degree {gens[0].degree}, expected {degree}")
        self.degree = gens[0].degree
        self.generators: Tuple[Permutation, ...] = tuple(gens)
        self._chain = chain
        self._prefixed: Dict[int, StabilizerChain] = {}
        self._stabilizers: Dict[int, "PermutationGroup"] = {}
        self.cache: Dict[str, object] = {}

    @classmethod
    def trivial(cls, degree: int) -> "PermutationGroup":
        return cls([], degree=degree)

    # -------------------------------------------------------------------------
    # Chain access
    # -------------------------------------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generator_arrays())
        return self._chain

    def generator_arrays(self) -> List[np.ndarray]:
        dtype = perm_dtype(self.degree)
        return [to_array(g, dtype) for g in self.generators]

    def chain_with_base(self, point: int) -> StabilizerChain:
        """A chain whose first base point is `point`."""
        self._check_point(point)
        chain = self.chain
        if chain.levels and chain.base[0] == point:
            return chain
        if point not in self._prefixed:
            self._prefixed[point] = StabilizerChain(self.degree, self.generator_arrays(),
                                                    base_prefix=[point])
        return self._prefixed[point]

    def _check_point(self, point: int):
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range 0..{self.degree - 1}")

    # -------------------------------------------------------------------------
    # Order, membership, elements
    # -------------------------------------------------------------------------

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self.chain.contains(to_array(p, self.chain.dtype))

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def iter_arrays(self) -> Iterator[np.ndarray]:
        return self.chain.iter_elements()

    def elements(self, cap: Optional[int] = None) -> List[Permutation]:
        cap = config.ENUM_CAP if cap is None else cap
        size = self.order()
        if size > cap:
            raise CapExceededError(f"group too large: order {size} exceeds cap {cap}", size, cap)
        return [from_array(a) for a in self.iter_arrays()]

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    # -------------------------------------------------------------------------
    # Orbits and stabilizers
    # -------------------------------------------------------------------------

    def orbit(self, point: int) -> List[int]:
        self._check_point(point)
        images = [g.images for g in self.generators]
        seen = {point}
        queue = [point]
        for x in queue:
            for img in images:
                y = img[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def stabilizer(self, point: int) -> "PermutationGroup":
        if point not in self._stabilizers:
            chain = self.chain_with_base(point)
            tail = chain.tail(1)
            gens = [from_array(a) for a in tail.strong_generators()]
            self._stabilizers[point] = PermutationGroup(gens, degree=self.degree, chain=tail)
        return self._stabilizers[point]

    def transversal_element(self, alpha: int, beta: int) -> Optional[Permutation]:
        """An element mapping alpha to beta, or None if beta is outside the orbit."""
        if alpha == beta:
            return Permutation.identity(self.degree)
        u = self.chain_with_base(alpha).transversal_element(0, beta)
        return None if u is None else from_array(u)

    # -------------------------------------------------------------------------
    # Subgroup relations
    # -------------------------------------------------------------------------

    def contains_group(self, other: "PermutationGroup") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermutationGroup(degree={self.degree}, generators=[{gens}])"


GroupHandle = PermutationGroup


# =============================================================================
# Functional interface
# =============================================================================

def build_group(generators: Sequence[Permutation]) -> PermutationGroup:
    """
    Build a group and confirm its chain by a strip test.

    Raises:
        ValueError: empty generator list
        DegreeMismatchError: generators of different degrees
        InternalCheckError: the chain fails its own strip test
    """
    if not generators:
        raise ValueError("empty generator list")
    group = PermutationGroup(generators)
    group.chain.verify(group.generator_arrays())
    logger.info("[Group] degree=%d generators=%d order=%d",
                group.degree, len(group.generators), group.order())
    return group


def order(G: PermutationGroup) -> int:
    return G.order()


def contains(G: PermutationGroup, p: Permutation) -> bool:
    return G.contains(p)


def elements(G: PermutationGroup, cap: Optional[int] = None) -> List[Permutation]:
    return G.elements(cap)


def orbit(G: PermutationGroup, point: int) -> List[int]:
    return G.orbit(point)


def is_transitive(G: PermutationGroup) -> bool:
    return G.is_transitive()


def point_stabilizer(G: PermutationGroup, point: int) -> PermutationGroup:
    return G.stabilizer(point)


def is_subgroup(H: PermutationGroup, G: PermutationGroup) -> bool:
    if H.degree != G.degree:
        raise DegreeMismatchError(f"degree mismatch: {H.degree} vs {G.degree}")
    return G.contains_group(H)


def same_subgroup(H: PermutationGroup, K: PermutationGroup) -> bool:
    """Equality of subgroups by order and generator membership."""
    if H.degree != K.degree or H.order() != K.order():
        return False
    return K.contains_group(H)


def join(H: PermutationGroup, K: PermutationGroup) -> PermutationGroup:
    if H.degree != K.degree:
        raise DegreeMismatchError(f"degree mismatch: {H.degree} vs {K.degree}")
    if H.contains_group(K):
        return H
    if K.contains_group(H):
        return K
    gens = [g for g in H.generators + K.generators if not g.is_identity()]
    return PermutationGroup(gens, degree=H.degree)


def dedup_subgroups(groups: Sequence[PermutationGroup]) -> List[PermutationGroup]:
    """Drop repeats, deciding equality by mutual containment; first occurrence wins."""
    kept: List[PermutationGroup] = []
    for group in groups:
        if not any(same_subgroup(group, other) for other in kept):
            kept.append(group)
    return kept


# =============================================================================
# Coset action
# =============================================================================

@dataclass
class ActionImage:
    """Action of `source` on the right cosets of `subgroup`, as a permutation group."""

    source: PermutationGroup
    subgroup: PermutationGroup
    image: PermutationGroup
    kernel_order: int
    point_labels: List[str]
    home: int = 0                                   # the point labelled by the subgroup itself
    parts: Optional[Tuple[FrozenSet[int], ...]] = None
    mapper: Callable[[np.ndarray], List[int]] = field(default=None, repr=False)

    @property
    def degree(self) -> int:
        return self.image.degree

    def map_element(self, g: Permutation) -> Permutation:
        """Image of an element of the source group under the action."""
        return Permutation.from_trusted(self.mapper(to_array(g, self.source.chain.dtype)))


def _block_action(G: PermutationGroup, H: PermutationGroup, point: int):
    seed = frozenset(H.orbit(point))
    found = {seed}
    queue = [seed]
    images = [g.images for g in G.generators]
    for block in queue:
        for img in images:
            moved = frozenset(img[x] for x in block)
            if moved not in found:
                found.add(moved)
                queue.append(moved)
    parts = tuple(sorted(found, key=min))
    block_of = {x: i for i, part in enumerate(parts) for x in part}
    anchors = [min(part) for part in parts]

    def mapper(a: np.ndarray) -> List[int]:
        return [block_of[int(a[x])] for x in anchors]

    labels = ["{" + " ".join(str(x + 1) for x in sorted(part)) + "}" for part in parts]
    return parts, block_of[point], labels, mapper


def _canonical_coset_action(G: PermutationGroup, H: PermutationGroup, cap: int):
    size = H.order()
    if size > cap:
        raise CapExceededError(f"group too large: subgroup order {size} exceeds cap {cap}",
                               size, cap)
    chain = G.chain
    base = np.asarray(chain.base, dtype=np.intp)
    h_base = np.array([h[base] for h in H.iter_arrays()], dtype=np.intp)

    def canon(x: np.ndarray) -> Tuple[int, ...]:
        # Smallest base image over the coset {h x}.
        if base.size == 0:
            return ()
        return min(map(tuple, x[h_base].tolist()))

    gens = G.generator_arrays()
    reps = [chain.identity]
    index = {canon(chain.identity): 0}
    for x in reps:
        for g in gens:
            y = g[x]
            key = canon(y)
            if key not in index:
                index[key] = len(reps)
                reps.append(y)
                if len(reps) > config.MAX_DEGREE:
                    raise CapExceededError(
                        f"coset action degree exceeds MAX_DEGREE={config.MAX_DEGREE}",
                        len(reps), config.MAX_DEGREE)

    def mapper(a: np.ndarray) -> List[int]:
        return [index[canon(a[x])] for x in reps]

    labels = ["H" if i == 0 else "H*" + format_cycles(from_array(x)) for i, x in enumerate(reps)]
    return labels, mapper


def coset_action(G: PermutationGroup, H: PermutationGroup, alpha: Optional[int] = None,
                 cap: Optional[int] = None) -> ActionImage:
    """
    Action of G on the right cosets of H.

    When G_alpha <= H for alpha (or, if alpha is omitted, for the first base
    point of G) the cosets are identified with the G-images of the block
    alpha^H, ordered by smallest point. Otherwise each coset is labelled by the
    smallest base image of its elements, which needs |H| <= cap.

    Raises:
        NotSubgroupError: H is not contained in G
        CapExceededError: |H| too large for coset labelling
    """
    cap = config.ENUM_CAP if cap is None else cap
    if not is_subgroup(H, G):
        raise NotSubgroupError("subgroup is not contained in the acting group")

    point = alpha
    if point is None:
        point = G.chain.base[0] if G.chain.levels else 0
    parts = None
    if H.contains_group(G.stabilizer(point)):
        parts, home, labels, mapper = _block_action(G, H, point)
    else:
        home = 0
        labels, mapper = _canonical_coset_action(G, H, cap)

    gens = [Permutation.from_trusted(mapper(a)) for a in G.generator_arrays()]
    image = PermutationGroup(gens)
    kernel_order = G.order() // image.order()
    action = ActionImage(source=G, subgroup=H, image=image, kernel_order=kernel_order,
                         point_labels=labels, home=home, parts=parts, mapper=mapper)

    if image.stabilizer(home).order() * kernel_order != H.order():
        raise InternalCheckError("coset action: stabilizer of the home coset is not the subgroup")
    logger.debug("[Action] degree %d -> %d, image order %d, kernel %d",
                 G.degree, image.degree, image.order(), kernel_order)
    return action
