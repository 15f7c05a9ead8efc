"""
Recognition of the O'Nan-Scott type of a quasiprimitive group.

The decision uses only the minimal normal subgroups, their simple direct
factors (the minimal normal subgroups of a minimal normal subgroup M = T^k)
and the projections of the point stabilizer M_alpha onto those factors.
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import List, Optional

from .. import config
from ..errors import CapExceededError, ClassificationError, NotTransitiveError
from ..perm.group import PermutationGroup, join
from .normal import minimal_normal_subgroups

logger = logging.getLogger(__name__)


class OnanScottTag(Enum):
    HA = "HA"
    HS = "HS"
    HC = "HC"
    AS = "AS"
    TW = "TW"
    SD = "SD"
    CD = "CD"
    PA = "PA"
    NOT_QUASIPRIMITIVE = "NOT_QUASIPRIMITIVE"


@dataclass
class OnanScottEvidence:
    minimal_normal_orders: List[int] = field(default_factory=list)
    minimal_normal_transitive: List[bool] = field(default_factory=list)
    socle_order: int = 1
    factor_count: int = 0          # k with M = T^k
    factor_order: int = 0          # |T|
    stabilizer_order: int = 0      # |M_alpha|
    projections: List[str] = field(default_factory=list)   # "full" / "proper" per factor
    degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class OnanScottType:
    tag: OnanScottTag
    evidence: OnanScottEvidence

    @property
    def is_quasiprimitive(self) -> bool:
        return self.tag is not OnanScottTag.NOT_QUASIPRIMITIVE


def _prime_power(n: int):
    """(p, k) with n = p^k, or None."""
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def _simple_factors(M: PermutationGroup, cap: Optional[int]) -> List[PermutationGroup]:
    return minimal_normal_subgroups(M, cap).members


def _projection_pattern(M: PermutationGroup, factors: List[PermutationGroup],
                        stabilizer: PermutationGroup) -> List[str]:
    """
    For each factor T_i, whether the projection of M_alpha onto T_i is all of T_i.

    The projection of x is the unique t in T_i with t^-1 x in the product of the
    other factors, found by searching T_i.
    """
    pattern = []
    for i, T in enumerate(factors):
        if T.order() > config.PROJECTION_CAP:
            raise CapExceededError(
                f"simple factor of order {T.order()} exceeds PROJECTION_CAP={config.PROJECTION_CAP}",
                T.order(), config.PROJECTION_CAP)
        complement = PermutationGroup.trivial(M.degree)
        for j, other in enumerate(factors):
            if j != i:
                complement = join(complement, other)
        elements = T.elements(cap=config.PROJECTION_CAP)
        images = []
        for x in stabilizer.generators:
            t = next((t for t in elements if complement.contains(t.inverse() * x)), None)
            if t is None:
                raise ClassificationError("stabilizer element has no projection onto a simple factor")
            images.append(t)
        projected = PermutationGroup(images, degree=M.degree)
        pattern.append("full" if projected.order() == T.order() else "proper")
    return pattern


def onan_scott_type(G: PermutationGroup, alpha: int = 0,
                    cap: Optional[int] = None) -> OnanScottType:
    """
    Classify a transitive group as HA, HS, HC, AS, TW, SD, CD, PA or NOT_QUASIPRIMITIVE.

    Raises:
        NotTransitiveError: G is intransitive
        CapExceededError: normal structure or projections exceed their caps
        ClassificationError: the data fits no branch
    """
    if not G.is_transitive():
        raise NotTransitiveError()
    evidence = OnanScottEvidence()
    if G.degree == 1:
        evidence.degenerate = True
        return OnanScottType(OnanScottTag.HA, evidence)

    found = minimal_normal_subgroups(G, cap)
    minimal = found.members
    evidence.minimal_normal_orders = [M.order() for M in minimal]
    evidence.minimal_normal_transitive = [M.is_transitive() for M in minimal]
    evidence.socle_order = found.socle.order()

    if not all(evidence.minimal_normal_transitive):
        return OnanScottType(OnanScottTag.NOT_QUASIPRIMITIVE, evidence)

    if len(minimal) == 2:
        factor_lists = [_simple_factors(M, cap) for M in minimal]
        evidence.factor_count = len(factor_lists[0])
        evidence.factor_order = factor_lists[0][0].order()
        evidence.stabilizer_order = minimal[0].stabilizer(alpha).order()
        simple = all(len(f) == 1 for f in factor_lists)
        tag = OnanScottTag.HS if simple else OnanScottTag.HC
        logger.info("[OnanScott] two minimal normal subgroups -> %s", tag.value)
        return OnanScottType(tag, evidence)
    if len(minimal) != 1:
        raise ClassificationError(
            f"quasiprimitive group with {len(minimal)} minimal normal subgroups")

    M = minimal[0]
    M_alpha = M.stabilizer(alpha)
    evidence.stabilizer_order = M_alpha.order()
    if M.is_abelian():
        p, k = _prime_power(M.order()) or (0, 0)
        evidence.factor_count = k
        evidence.factor_order = p
        return OnanScottType(OnanScottTag.HA, evidence)

    factors = _simple_factors(M, cap)
    k = len(factors)
    t = factors[0].order()
    evidence.factor_count = k
    evidence.factor_order = t
    if k == 1:
        return OnanScottType(OnanScottTag.AS, evidence)
    if M_alpha.order() == 1:
        return OnanScottType(OnanScottTag.TW, evidence)

    evidence.projections = _projection_pattern(M, factors, M_alpha)
    if all(p == "full" for p in evidence.projections):
        stab = M_alpha.order()
        if stab == t:
            return OnanScottType(OnanScottTag.SD, evidence)
        if any(stab == t ** l for l in range(2, k)):
            return OnanScottType(OnanScottTag.CD, evidence)
        raise ClassificationError(
            f"full projections but |M_alpha|={stab} is not a power T^l with 1 <= l < k")
    if all(p == "proper" for p in evidence.projections):
        return OnanScottType(OnanScottTag.PA, evidence)
    raise ClassificationError(f"mixed projection pattern {evidence.projections}")
