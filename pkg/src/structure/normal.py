"""
Normal structure: conjugacy classes, normal closures, normal and minimal
normal subgroups, the socle and the basicness predicates.

Elements are keyed by their base images under the group's stabilizer chain,
so a class is stored as a set of short tuples rather than full permutations.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .. import config
from ..errors import CapExceededError, NotSubgroupError, NotTransitiveError
from ..perm.chain import StabilizerChain, invert_array
from ..perm.group import (PermutationGroup, dedup_subgroups, from_array, is_subgroup, join,
                          same_subgroup, to_array)
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass
class ConjugacyClass:
    representative: Permutation
    size: int
    keys: FrozenSet[Tuple[int, ...]] = field(repr=False)

    def elements(self, G: PermutationGroup) -> List[Permutation]:
        chain = G.chain
        return [from_array(chain.element_from_base_image(k)) for k in sorted(self.keys)]


@dataclass
class NormalSubgroupSet:
    parent: PermutationGroup
    members: List[PermutationGroup]
    minimal_flags: List[bool]
    socle: Optional[PermutationGroup] = None

    def minimal(self) -> List[PermutationGroup]:
        return [m for m, flag in zip(self.members, self.minimal_flags) if flag]

    def orders(self) -> List[int]:
        return [m.order() for m in self.members]

    def __len__(self) -> int:
        return len(self.members)


def _check_cap(G: PermutationGroup, cap: Optional[int]):
    cap = config.ENUM_CAP if cap is None else cap
    size = G.order()
    if size > cap:
        raise CapExceededError(f"group too large: order {size} exceeds cap {cap}", size, cap)


# =============================================================================
# Conjugacy classes
# =============================================================================

def conjugacy_classes(G: PermutationGroup, cap: Optional[int] = None) -> List[ConjugacyClass]:
    """
    Partition of G into conjugacy classes; the identity class comes first and the
    remaining classes follow the chain's element enumeration order.

    Raises:
        CapExceededError: order(G) exceeds the enumeration cap
    """
    _check_cap(G, cap)
    chain = G.chain
    base = np.asarray(chain.base, dtype=np.intp)
    gens = G.generator_arrays()
    inverses = [invert_array(g) for g in gens]

    def key(a: np.ndarray) -> Tuple[int, ...]:
        return tuple(a[base].tolist())

    assigned = set()
    classes: List[ConjugacyClass] = []
    for x in itertools.chain([chain.identity], chain.iter_elements()):
        k = key(x)
        if k in assigned:
            continue
        members = {k}
        queue = [x]
        for y in queue:
            for g, g_inv in zip(gens, inverses):
                z = g[y[g_inv]]
                kz = key(z)
                if kz not in members:
                    members.add(kz)
                    queue.append(z)
        assigned |= members
        classes.append(ConjugacyClass(from_array(x), len(members), frozenset(members)))
    logger.debug("[Normal] %d conjugacy classes in a group of order %d", len(classes), G.order())
    return classes


# =============================================================================
# Normal closures and normality
# =============================================================================

def normal_closure(G: PermutationGroup, S: Sequence[Permutation]) -> PermutationGroup:
    """
    Smallest normal subgroup of G containing S.

    Raises:
        NotSubgroupError: some element of S is not in G
    """
    for s in S:
        if not G.contains(s):
            raise NotSubgroupError(f"{s} is not an element of the group")
    dtype = G.chain.dtype
    members = [to_array(s, dtype) for s in S if not s.is_identity()]
    if not members:
        return PermutationGroup.trivial(G.degree)
    chain = StabilizerChain(G.degree, members)
    gens = G.generator_arrays()
    inverses = [invert_array(g) for g in gens]
    queue = list(members)
    for y in queue:
        for g, g_inv in zip(gens, inverses):
            z = g[y[g_inv]]
            if chain.add_generator(z):
                members.append(z)
                queue.append(z)
    return PermutationGroup([from_array(m) for m in members], chain=chain)


def normalizes(K: PermutationGroup, N: PermutationGroup) -> bool:
    """True iff every generator of K conjugates N into itself."""
    return all(N.contains(n.conjugate(k)) for k in K.generators for n in N.generators)


def is_normal(G: PermutationGroup, N: PermutationGroup) -> bool:
    return is_subgroup(N, G) and normalizes(G, N)


def _class_closures(G: PermutationGroup, cap: Optional[int]) -> List[PermutationGroup]:
    _check_cap(G, cap)
    if "class_closures" not in G.cache:
        reps = [c.representative for c in conjugacy_classes(G, cap)[1:]]
        closures = dedup_subgroups([normal_closure(G, [r]) for r in reps])
        G.cache["class_closures"] = closures
    return G.cache["class_closures"]


def normal_subgroups(G: PermutationGroup, cap: Optional[int] = None) -> NormalSubgroupSet:
    """
    Every normal subgroup of G, sorted by order, trivial group and G included.

    Built from the normal closures of conjugacy class representatives, closed
    under joins.

    Raises:
        CapExceededError: order(G) exceeds the enumeration cap
    """
    _check_cap(G, cap)
    if "normal_subgroups" in G.cache:
        return G.cache["normal_subgroups"]
    closures = _class_closures(G, cap)
    members = [PermutationGroup.trivial(G.degree)] + list(closures)
    queue = list(members)
    for A in queue:
        for C in closures:
            J = join(A, C)
            if not any(same_subgroup(J, M) for M in members):
                members.append(J)
                queue.append(J)
    members.sort(key=lambda M: M.order())
    flags = []
    for M in members:
        smaller = [D for D in members if 1 < D.order() < M.order()]
        flags.append(M.order() > 1 and not any(M.contains_group(D) for D in smaller))
    result = NormalSubgroupSet(parent=G, members=members, minimal_flags=flags)
    logger.info("[Normal] order %d: normal subgroup orders %s", G.order(), result.orders())
    G.cache["normal_subgroups"] = result
    return result


def minimal_normal_subgroups(G: PermutationGroup, cap: Optional[int] = None) -> NormalSubgroupSet:
    """
    The minimal normal subgroups of G, with their join as the socle.

    Every minimal normal subgroup is the normal closure of any of its non-identity
    elements, so the minimal members among the class closures are exactly these.
    """
    _check_cap(G, cap)
    if "minimal_normal" in G.cache:
        return G.cache["minimal_normal"]
    closures = _class_closures(G, cap)
    minimal = [C for C in closures
               if not any(D.order() < C.order() and C.contains_group(D) for D in closures)]
    minimal.sort(key=lambda M: M.order())
    socle = PermutationGroup.trivial(G.degree)
    for M in minimal:
        socle = join(socle, M)
    result = NormalSubgroupSet(parent=G, members=minimal, minimal_flags=[True] * len(minimal),
                               socle=socle)
    G.cache["minimal_normal"] = result
    return result


def socle(G: PermutationGroup, cap: Optional[int] = None) -> PermutationGroup:
    return minimal_normal_subgroups(G, cap).socle


def is_simple(G: PermutationGroup, cap: Optional[int] = None) -> bool:
    """Nontrivial with no normal subgroups besides 1 and G."""
    if G.order() == 1:
        return False
    return all(C.order() == G.order() for C in _class_closures(G, cap))


# =============================================================================
# Basicness predicates
# =============================================================================

def is_quasiprimitive(G: PermutationGroup, cap: Optional[int] = None) -> bool:
    """
    Every nontrivial normal subgroup is transitive.

    Decided on minimal normal subgroups: each nontrivial normal subgroup contains
    a minimal one, and an overgroup of a transitive group is transitive.
    """
    if not G.is_transitive():
        raise NotTransitiveError()
    if G.degree == 1:
        return True
    return all(M.is_transitive() for M in minimal_normal_subgroups(G, cap).members)


def is_innately_transitive(G: PermutationGroup, cap: Optional[int] = None) -> bool:
    """Some minimal normal subgroup is transitive."""
    if not G.is_transitive():
        raise NotTransitiveError()
    if G.degree == 1:
        return True
    return any(M.is_transitive() for M in minimal_normal_subgroups(G, cap).members)
