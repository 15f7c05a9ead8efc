"""
Explicit permutation group constructions used by the catalog and the tests.

Natural actions of S_n, A_n, C_n and D_2n, plus small examples of each
quasiprimitive shape built from A5: A5 x A5 acting on the 60 elements of A5,
its extension by the swap (diagonal type), the product action of A5 wr C2 on
25 points, and the twisted wreath group of degree 3600 obtained as a coset
action of A5 wr C2.
"""

import logging
from typing import Callable, Dict, List

from ..perm.group import PermutationGroup, build_group, coset_action
from ..perm.permutation import Permutation, parse_cycles

logger = logging.getLogger(__name__)


def _cycle(points: List[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree) if len(points) > 1 else Permutation.identity(degree)


# =============================================================================
# Natural actions
# =============================================================================

def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return build_group([Permutation.identity(1)])
    return build_group([_cycle([0, 1], n), _cycle(list(range(n)), n)])


def alternating_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("degree must be positive")
    if n < 3:
        return build_group([Permutation.identity(n)])
    gens = [_cycle([0, 1, 2], n)]
    if n > 3:
        gens.append(_cycle(list(range(n)) if n % 2 else list(range(1, n)), n))
    return build_group(gens)


def cyclic_group(n: int) -> PermutationGroup:
    if n < 1:
        raise ValueError("degree must be positive")
    return build_group([_cycle(list(range(n)), n)])


def dihedral_group(n: int) -> PermutationGroup:
    """D_2n acting on the n vertices of a polygon (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral action needs at least 3 points")
    reflection = Permutation(tuple((n - i) % n for i in range(n)))
    return build_group([_cycle(list(range(n)), n), reflection])


def agl_1_5() -> PermutationGroup:
    return build_group([parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)])


# =============================================================================
# A5-based examples
# =============================================================================

def _a5_generators() -> List[Permutation]:
    return [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)]


def _regular_permutation(elements: List[Permutation], index: Dict[Permutation, int],
                         f: Callable[[Permutation], Permutation]) -> Permutation:
    return Permutation(tuple(index[f(x)] for x in elements))


def a5_coset_c5() -> PermutationGroup:
    """A5 on the 12 cosets of a Sylow 5-subgroup."""
    a5 = build_group(_a5_generators())
    c5 = PermutationGroup([parse_cycles("(1 2 3 4 5)", 5)])
    return build_group(list(coset_action(a5, c5).image.generators))


def a5_times_c3_on_15() -> PermutationGroup:
    """
    A5 x C3 on the 15 cosets V4*x of the Klein subgroup of A5: A5 acts by right
    multiplication and t = (1 2 3), which normalizes V4, by left multiplication.
    """
    a5 = build_group(_a5_generators())
    elements = a5.elements()
    v4 = [Permutation.identity(5)] + [parse_cycles(s, 5) for s in
                                      ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")]
    coset_of: Dict[Permutation, int] = {}
    reps: List[Permutation] = []
    for x in elements:
        if x in coset_of:
            continue
        for v in v4:
            coset_of[v * x] = len(reps)
        reps.append(x)
    t = parse_cycles("(1 2 3)", 5)
    gens = [Permutation(tuple(coset_of[r * g] for r in reps)) for g in a5.generators]
    gens.append(Permutation(tuple(coset_of[t * r] for r in reps)))
    return build_group(gens)


def a5_squared_on_a5() -> PermutationGroup:
    """A5 x A5 on the 60 elements of A5 by x -> t1^-1 x t2 (two regular minimal normals)."""
    return build_group(_two_sided_generators(with_inversion=False))


def a5_squared_swap_on_a5() -> PermutationGroup:
    """The group above extended by x -> x^-1, which swaps the two factors."""
    return build_group(_two_sided_generators(with_inversion=True))


def _two_sided_generators(with_inversion: bool) -> List[Permutation]:
    elements = build_group(_a5_generators()).elements()
    index = {x: i for i, x in enumerate(elements)}
    gens = []
    for a in _a5_generators():
        a_inv = a.inverse()
        gens.append(_regular_permutation(elements, index, lambda x, a_inv=a_inv: a_inv * x))
        gens.append(_regular_permutation(elements, index, lambda x, a=a: x * a))
    if with_inversion:
        gens.append(_regular_permutation(elements, index, lambda x: x.inverse()))
    return gens


def a5_wreath_c2_product_action() -> PermutationGroup:
    """A5 wr C2 on 25 = 5 x 5 points in product action, (i, j) -> 5i + j."""
    gens = []
    for a in _a5_generators():
        gens.append(Permutation(tuple(5 * a.images[i] + j for i in range(5) for j in range(5))))
    gens.append(Permutation(tuple(5 * j + i for i in range(5) for j in range(5))))
    return build_group(gens)


def a5_wreath_c2_imprimitive() -> PermutationGroup:
    """A5 wr C2 on 10 points: A5 on the first five, the swap exchanging the halves."""
    gens = [Permutation(g.images + tuple(range(5, 10))) for g in _a5_generators()]
    gens.append(Permutation(tuple(list(range(5, 10)) + list(range(5)))))
    return build_group(gens)


def twisted_wreath_3600() -> PermutationGroup:
    """
    A5 wr C2 acting on the cosets of the swap subgroup: A5 x A5 is regular on the
    3600 cosets and the point stabilizer is the swap involution.
    """
    G = a5_wreath_c2_imprimitive()
    swap = PermutationGroup([G.generators[-1]])
    action = coset_action(G, swap)
    logger.info("[Catalog] twisted wreath construction: degree %d", action.degree)
    return build_group(list(action.image.generators))
