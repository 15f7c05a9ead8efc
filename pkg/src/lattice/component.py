"""Components: the action of K on the K-translates of alpha^H, for G_alpha <= H < K <= G."""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from ..errors import CapExceededError, ClassificationError, NotSubgroupError, PreconditionError
from ..perm.group import ActionImage, PermutationGroup, coset_action, is_subgroup
from ..structure.blocks import is_primitive
from ..structure.normal import is_innately_transitive, is_quasiprimitive
from ..structure.onan_scott import onan_scott_type
from .lattice import LatticeKind, SubgroupLattice, build_lattice

logger = logging.getLogger(__name__)


@dataclass
class Component:
    upper: PermutationGroup                     # K
    lower: PermutationGroup                     # H
    alpha: int
    parts: Tuple[FrozenSet[int], ...]           # K-images of alpha^H, by smallest point
    action: ActionImage
    pair: Optional[Tuple[int, int]] = None      # (H node, K node) when taken from a lattice

    @property
    def degree(self) -> int:
        return self.action.degree

    @property
    def group(self) -> PermutationGroup:
        return self.action.image

    def order(self) -> int:
        return self.action.image.order()


def component(G: PermutationGroup, K: PermutationGroup, H: PermutationGroup,
              alpha: int) -> Component:
    """
    Comp(K, H): the transitive group induced by K on the K-images of alpha^H.

    Raises:
        NotSubgroupError: the chain G_alpha <= H <= K <= G is broken
        PreconditionError: H == K
    """
    if not is_subgroup(K, G):
        raise NotSubgroupError("K is not contained in G")
    if not is_subgroup(H, K):
        raise NotSubgroupError("H is not contained in K")
    if not H.contains_group(G.stabilizer(alpha)):
        raise NotSubgroupError("H does not contain the point stabilizer")
    if H.order() == K.order():
        raise PreconditionError("a component needs H to be a proper subgroup of K")
    action = coset_action(K, H, alpha=alpha)
    if action.degree != K.order() // H.order():
        raise PreconditionError("component degree differs from the index [K:H]")
    return Component(upper=K, lower=H, alpha=alpha, parts=action.parts, action=action)


def lattice_component(L: SubgroupLattice, lower: int, upper: int) -> Component:
    comp = component(L.ambient, L.nodes[upper].group, L.nodes[lower].group, L.base_point)
    comp.pair = (lower, upper)
    return comp


def basic_components(G: PermutationGroup, alpha: int, kind: LatticeKind,
                     cap: Optional[int] = None,
                     lattice: Optional[SubgroupLattice] = None) -> List[Component]:
    """One component per cover pair of the selected lattice."""
    L = lattice if lattice is not None else build_lattice(G, alpha, kind, cap)
    return [lattice_component(L, i, j) for (i, j) in L.edges]


@dataclass
class ComponentProfile:
    """Basicness flags of a component's group."""

    degree: int
    order: int
    primitive: bool
    quasiprimitive: Optional[bool]
    innately_transitive: Optional[bool]
    onan_scott: Optional[str]

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def profile_component(comp: Component, cap: Optional[int] = None) -> ComponentProfile:
    """Primitivity always; normal-structure flags are None when the cap is exceeded."""
    group = comp.group
    quasi = innate = tag = None
    try:
        quasi = is_quasiprimitive(group, cap)
        innate = is_innately_transitive(group, cap)
        tag = onan_scott_type(group, cap=cap).tag.value if quasi else None
    except (CapExceededError, ClassificationError) as err:
        logger.warning("[Component] degree %d: %s", comp.degree, err)
    return ComponentProfile(comp.degree, group.order(), is_primitive(group), quasi, innate, tag)


def converse_observations(G: PermutationGroup, alpha: int = 0, cap: Optional[int] = None,
                          lattice: Optional[SubgroupLattice] = None) -> List[Tuple[int, int]]:
    """
    Comparable pairs of L2 that are not covers yet whose component is quasiprimitive.

    Recorded for inspection only; nothing is asserted about them.
    """
    L = lattice if lattice is not None else build_lattice(G, alpha, LatticeKind.L2, cap)
    edges = set(L.edges)
    found = []
    n = len(L.nodes)
    for i in range(n):
        for j in range(n):
            if L.below[i][j] and (i, j) not in edges:
                if is_quasiprimitive(lattice_component(L, i, j).group, cap):
                    found.append((i, j))
    return found
