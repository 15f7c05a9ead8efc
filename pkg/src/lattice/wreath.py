"""
Embedding of G into the iterated wreath product of the components along a
maximal chain G_alpha = G_0 < G_1 < ... < G_r = G of L1.

Each point gets an address (a_r, ..., a_1): a_i is the label, inside the
level-i block D containing the point, of the level-(i-1) block containing it.
Labels are read through x_D, the transversal element sending alpha to min(D),
so that a_i indexes a part of the component Comp(G_i, G_{i-1}). Addresses are
flattened in mixed radix with a_1 least significant.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..errors import ChainError, InternalCheckError
from ..perm.group import PermutationGroup
from ..perm.permutation import Permutation
from ..structure.blocks import block_system
from .component import Component, lattice_component
from .lattice import LatticeKind, SubgroupLattice, lattice_L1

logger = logging.getLogger(__name__)


@dataclass
class WreathWitness:
    generator: Permutation
    relabeled: Permutation
    member: bool


@dataclass
class WreathEmbeddingCertificate:
    chain: List[int]
    radices: List[int]                      # [G_i : G_{i-1}] for i = 1..r
    component_orders: List[int]
    addresses: List[Tuple[int, ...]]        # per point, (a_r, ..., a_1)
    relabeling: List[int]                   # point -> flattened address
    wreath: PermutationGroup = field(repr=False)
    wreath_order: int = 1
    witnesses: List[WreathWitness] = field(default_factory=list)
    bijective: bool = False

    @property
    def verified(self) -> bool:
        return self.bijective and all(w.member for w in self.witnesses)


def _validate_chain(L: SubgroupLattice, chain: Sequence[int]):
    if L.kind is not LatticeKind.L1:
        raise ChainError("wreath embedding needs a chain of L1")
    if not chain or chain[0] != L.bottom or chain[-1] != L.top:
        raise ChainError("chain must run from the point stabilizer to the whole group")
    edges = set(L.edges)
    for lower, upper in zip(chain, chain[1:]):
        if (lower, upper) not in edges:
            raise ChainError(f"nodes {lower} < {upper} are not a cover pair; chain is not maximal")


def iterated_wreath(components: Sequence[Component]) -> PermutationGroup:
    """
    W_1 = C_1 and W_i = W_{i-1} wr C_i in its imprimitive action, top group on the
    most significant coordinate. Generated by W_{i-1} acting on the block a_i = 0
    together with C_i permuting the blocks.
    """
    if not components:
        return PermutationGroup.trivial(1)
    gens = list(components[0].group.generators)
    inner = components[0].degree
    for comp in components[1:]:
        m = comp.degree
        degree = inner * m
        lifted = []
        for w in gens:
            lifted.append(Permutation(tuple(w.images[p] if p < inner else p for p in range(degree))))
        for c in comp.group.generators:
            lifted.append(Permutation(tuple(c.images[p // inner] * inner + p % inner
                                            for p in range(degree))))
        gens = lifted
        inner = degree
    return PermutationGroup(gens)


def wreath_embedding(G: PermutationGroup, chain: Sequence[int],
                     lattice: Optional[SubgroupLattice] = None,
                     alpha: int = 0) -> WreathEmbeddingCertificate:
    """
    Relabel G onto addresses and certify it lies in the iterated wreath product.

    Raises:
        ChainError: chain not maximal or endpoints wrong
        InternalCheckError: the relabeling is not a bijection or a generator fails to sift
    """
    L = lattice if lattice is not None else lattice_L1(G, alpha)
    _validate_chain(L, chain)
    alpha = L.base_point
    n = G.degree
    r = len(chain) - 1

    components = [lattice_component(L, chain[i - 1], chain[i]) for i in range(1, r + 1)]
    radices = [c.degree for c in components]
    part_index = []
    for comp in components:
        part_index.append({x: k for k, part in enumerate(comp.parts) for x in part})
    systems = [block_system(G, L.nodes[chain[i]].block) for i in range(1, r + 1)]

    # x_D^-1 for the block D of each level, cached by its smallest point
    inverse_of = {}

    def x_inv(point: int) -> Permutation:
        if point not in inverse_of:
            inverse_of[point] = G.transversal_element(alpha, point).inverse()
        return inverse_of[point]

    addresses = []
    relabeling = []
    for omega in range(n):
        digits = []
        for i in range(r):
            block = systems[i].block_containing(omega)
            digits.append(part_index[i][x_inv(min(block)).images[omega]])
        flat, weight = 0, 1
        for digit, m in zip(digits, radices):
            flat += digit * weight
            weight *= m
        addresses.append(tuple(reversed(digits)))
        relabeling.append(flat)

    bijective = sorted(relabeling) == list(range(n))
    W = iterated_wreath(components)
    expected = 1
    for comp in components:
        expected = expected ** comp.degree * comp.order()
    if W.order() != expected:
        raise InternalCheckError(f"iterated wreath product has order {W.order()}, expected {expected}")

    witnesses = []
    if bijective:
        for g in G.generators:
            images = [0] * n
            for omega in range(n):
                images[relabeling[omega]] = relabeling[g.images[omega]]
            relabeled = Permutation(tuple(images))
            witnesses.append(WreathWitness(g, relabeled, W.contains(relabeled)))

    cert = WreathEmbeddingCertificate(chain=list(chain), radices=radices,
                                      component_orders=[c.order() for c in components],
                                      addresses=addresses, relabeling=relabeling, wreath=W,
                                      wreath_order=W.order(), witnesses=witnesses,
                                      bijective=bijective)
    if not cert.verified:
        raise InternalCheckError("wreath embedding failed: relabeled group is not inside W")
    logger.info("[Wreath] chain %s radices %s |W|=%d", list(chain), radices, cert.wreath_order)
    return cert
