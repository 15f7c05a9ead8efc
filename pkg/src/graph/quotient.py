"""
Quotient graphs, normal quotients and covers, and the two reduction pipelines:
normal quotients down to a quasiprimitive action, and quotient / distance-2
graphs down to a primitive distance-transitive action.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import (CapExceededError, ClassificationError, GraphError, InternalCheckError,
                      NotInvariantError, NotNormalError, NotSubgroupError, NotTransitiveError,
                      PreconditionError)
from ..perm.group import ActionImage, PermutationGroup, coset_action, is_subgroup, join
from ..perm.permutation import Permutation
from ..structure.blocks import BlockSystem, is_primitive, orbits
from ..structure.normal import is_quasiprimitive, normal_subgroups, normalizes
from ..structure.onan_scott import onan_scott_type
from ..lattice.lattice import lattice_L1
from .arcs import is_distance_transitive, s_arc_verdict, ArcVerdict
from .graph import Graph, distance_two_graph, is_connected, is_invariant

logger = logging.getLogger(__name__)


@dataclass
class QuotientResult:
    quotient: Graph
    parts: BlockSystem
    induced_group: ActionImage
    is_cover: bool
    notes: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "vertices": self.quotient.n,
            "edges": self.quotient.edge_count,
            "parts": [[x + 1 for x in sorted(p)] for p in self.parts.blocks],
            "induced_order": self.induced_group.image.order(),
            "kernel_order": self.induced_group.kernel_order,
            "is_cover": self.is_cover,
            "notes": dict(self.notes),
        }


# =============================================================================
# Quotients
# =============================================================================

def _cover_test(graph: Graph, block_of: List[int], quotient: Graph) -> bool:
    """Each vertex has exactly one neighbour in every adjacent part and none in its own."""
    for v in range(graph.n):
        hits: Dict[int, int] = {}
        for w in graph.adjacency[v]:
            hits[block_of[w]] = hits.get(block_of[w], 0) + 1
        if block_of[v] in hits:
            return False
        if sorted(hits) != list(quotient.adjacency[block_of[v]]):
            return False
        if any(c != 1 for c in hits.values()):
            return False
    return True


def quotient_graph(graph: Graph, G: PermutationGroup, H: PermutationGroup,
                   alpha: int) -> QuotientResult:
    """
    Gamma_H: vertices are the G-images of alpha^H, labelled in order of their
    smallest vertex; two parts are adjacent when some members are.

    Raises:
        NotInvariantError: G does not preserve the edge set
        NotTransitiveError: G is intransitive
        NotSubgroupError: G_alpha <= H <= G fails
    """
    if not is_invariant(graph, G):
        raise NotInvariantError("group does not preserve the edge set")
    if not G.is_transitive():
        raise NotTransitiveError()
    if not is_subgroup(H, G):
        raise NotSubgroupError("H is not contained in G")
    if not H.contains_group(G.stabilizer(alpha)):
        raise NotSubgroupError("H does not contain the point stabilizer")

    action = coset_action(G, H, alpha=alpha)
    parts = BlockSystem.from_blocks(graph.n, action.parts)
    block_of = list(parts.block_of)
    quotient_edges = set()
    inside = 0
    for u, v in graph.edges:
        a, b = block_of[u], block_of[v]
        if a == b:
            inside += 1
        else:
            quotient_edges.add((min(a, b), max(a, b)))
    quotient = Graph.from_edges(parts.count, quotient_edges)
    if not is_invariant(quotient, action.image):
        raise InternalCheckError("induced group does not preserve the quotient edges")

    arc_transitive = False
    if quotient.edge_count:
        arc_transitive = s_arc_verdict(quotient, action.image, 1) is ArcVerdict.TRANSITIVE
    notes = {
        "two_vertex": quotient.n == 2,
        "bipartite_obstruction": quotient.n == 2 and quotient.edge_count == 1 and inside == 0,
        "connected": is_connected(quotient),
        "vertex_primitive": is_primitive(action.image),
        "arc_transitive": arc_transitive,
        "edges_within_parts": inside,
    }
    result = QuotientResult(quotient=quotient, parts=parts, induced_group=action,
                            is_cover=_cover_test(graph, block_of, quotient), notes=notes)
    logger.debug("[Quotient] %d -> %d vertices, cover=%s", graph.n, quotient.n, result.is_cover)
    return result


def normal_quotient(graph: Graph, G: PermutationGroup, N: PermutationGroup,
                    alpha: int = 0) -> QuotientResult:
    """
    Quotient by the N-orbits, i.e. Gamma_H for H = G_alpha N.

    Raises:
        NotSubgroupError: N is not contained in G
        NotNormalError: N is not normal in G
    """
    if not is_subgroup(N, G):
        raise NotSubgroupError("N is not contained in G")
    if not normalizes(G, N):
        raise NotNormalError("N is not normal in G")
    H = join(G.stabilizer(alpha), N)
    return quotient_graph(graph, G, H, alpha)


def is_normal_cover(graph: Graph, result: QuotientResult) -> bool:
    return _cover_test(graph, list(result.parts.block_of), result.quotient)


# =============================================================================
# Reduction to a quasiprimitive action
# =============================================================================

@dataclass
class NormalCandidate:
    order: int
    orbit_count: int
    generators: List[Permutation] = field(repr=False, default_factory=list)
    quotient: Optional[QuotientResult] = None       # filled when every candidate is explored

    def to_dict(self) -> dict:
        data = {"order": self.order, "orbits": self.orbit_count,
                "generators": [str(g) for g in self.generators]}
        if self.quotient is not None:
            data["quotient"] = self.quotient.to_dict()
        return data


@dataclass
class ReductionStep:
    chosen: NormalCandidate
    candidates: List[NormalCandidate]
    result: QuotientResult
    s_arc_transitive: bool

    def to_dict(self) -> dict:
        return {"normal_subgroup": self.chosen.to_dict(),
                "candidates": [c.to_dict() for c in self.candidates],
                "quotient": self.result.to_dict(),
                "s_arc_transitive": self.s_arc_transitive}


@dataclass
class ReductionTerminal:
    graph: Graph
    group: PermutationGroup = field(repr=False)
    quasiprimitive: bool
    s_arc_transitive: bool
    bipartite_obstruction: bool
    onan_scott: Optional[str] = None

    def to_dict(self) -> dict:
        return {"vertices": self.graph.n, "edges": self.graph.edge_count,
                "group_order": self.group.order(), "quasiprimitive": self.quasiprimitive,
                "s_arc_transitive": self.s_arc_transitive,
                "bipartite_obstruction": self.bipartite_obstruction,
                "onan_scott": self.onan_scott}


@dataclass
class ReductionTrace:
    s: int
    steps: List[ReductionStep] = field(default_factory=list)
    terminal: Optional[ReductionTerminal] = None

    def to_dict(self) -> dict:
        return {"s": self.s, "steps": [st.to_dict() for st in self.steps],
                "terminal": self.terminal.to_dict() if self.terminal else None}


def _s_arc_holds(graph: Graph, G: PermutationGroup, s: int) -> bool:
    return s_arc_verdict(graph, G, s) is ArcVerdict.TRANSITIVE


def _maximal_intransitive(G: PermutationGroup, cap: Optional[int]
                          ) -> Tuple[List[NormalCandidate], List[PermutationGroup]]:
    """Maximal intransitive normal subgroups, largest order first, then lattice order."""
    members = normal_subgroups(G, cap).members
    intransitive = [(i, M) for i, M in enumerate(members) if not M.is_transitive()]
    found = []
    for i, M in intransitive:
        if any(D.order() > M.order() and D.contains_group(M) for _, D in intransitive):
            continue
        found.append((i, M))
    found.sort(key=lambda item: (-item[1].order(), item[0]))
    return [NormalCandidate(order=M.order(), orbit_count=len(orbits(M)),
                            generators=list(M.generators)) for _, M in found], [M for _, M in found]


def _terminal_tag(G: PermutationGroup, cap: Optional[int]) -> Optional[str]:
    try:
        return onan_scott_type(G, cap=cap).tag.value
    except (CapExceededError, ClassificationError) as err:
        logger.warning("[Reduce] terminal group not classified: %s", err)
        return None


def reduce_to_quasiprimitive(graph: Graph, G: PermutationGroup, s: int,
                             explore_all: bool = False,
                             cap: Optional[int] = None) -> ReductionTrace:
    """
    Repeatedly quotient by a maximal intransitive normal subgroup with at least
    three orbits until the induced group is quasiprimitive, or every maximal
    intransitive normal subgroup has at most two orbits (bipartite obstruction).

    Every step re-checks the cover property and s-arc transitivity.

    Raises:
        PreconditionError: s < 2, or G not s-arc-transitive
        GraphError: disconnected graph
        NotTransitiveError, NotInvariantError: G unsuitable
        CapExceededError: normal structure beyond the cap
        InternalCheckError: a step loses the cover property or s-arc transitivity
    """
    if s < 2:
        raise PreconditionError(f"reduction needs s >= 2, got s={s}")
    if not is_connected(graph):
        raise GraphError("reduction needs a connected graph")
    if not G.is_transitive():
        raise NotTransitiveError()
    verdict = s_arc_verdict(graph, G, s)
    if verdict is not ArcVerdict.TRANSITIVE:
        raise PreconditionError(f"group is not {s}-arc-transitive on the graph ({verdict.value})")

    trace = ReductionTrace(s=s)
    current_graph, current_group = graph, G
    while True:
        if is_quasiprimitive(current_group, cap):
            trace.terminal = ReductionTerminal(
                graph=current_graph, group=current_group, quasiprimitive=True,
                s_arc_transitive=_s_arc_holds(current_graph, current_group, s),
                bipartite_obstruction=False, onan_scott=_terminal_tag(current_group, cap))
            break

        candidates, subgroups = _maximal_intransitive(current_group, cap)
        usable = [k for k, c in enumerate(candidates) if c.orbit_count >= 3]
        if not usable:
            logger.info("[Reduce] every maximal intransitive normal subgroup has <= 2 orbits")
            trace.terminal = ReductionTerminal(
                graph=current_graph, group=current_group, quasiprimitive=False,
                s_arc_transitive=_s_arc_holds(current_graph, current_group, s),
                bipartite_obstruction=True)
            break

        if explore_all:
            for k in usable:
                candidates[k].quotient = normal_quotient(current_graph, current_group,
                                                         subgroups[k])
        pick = usable[0]
        result = candidates[pick].quotient or normal_quotient(current_graph, current_group,
                                                              subgroups[pick])
        if not result.is_cover:
            raise InternalCheckError("normal quotient by a subgroup with >= 3 orbits is not a cover")
        induced = result.induced_group.image
        holds = _s_arc_holds(result.quotient, induced, s)
        if not holds:
            raise InternalCheckError(f"induced group on the quotient is not {s}-arc-transitive")
        trace.steps.append(ReductionStep(chosen=candidates[pick], candidates=candidates,
                                         result=result, s_arc_transitive=holds))
        logger.info("[Reduce] step %d: |N|=%d, %d -> %d vertices, induced order %d",
                    len(trace.steps), candidates[pick].order, current_graph.n,
                    result.quotient.n, induced.order())
        current_graph, current_group = result.quotient, induced
    return trace


# =============================================================================
# Distance-transitive reduction
# =============================================================================

@dataclass
class DistanceStep:
    kind: str                    # "quotient" or "distance_two"
    subgroup_order: int
    index: int
    graph: Graph
    group: PermutationGroup = field(repr=False)
    distance_transitive: bool = True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "subgroup_order": self.subgroup_order, "index": self.index,
                "vertices": self.graph.n, "edges": self.graph.edge_count,
                "group_order": self.group.order(),
                "distance_transitive": self.distance_transitive}


@dataclass
class DistanceReductionTrace:
    steps: List[DistanceStep] = field(default_factory=list)
    terminal_graph: Optional[Graph] = None
    terminal_group: Optional[PermutationGroup] = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {"steps": [st.to_dict() for st in self.steps],
                "terminal": {"vertices": self.terminal_graph.n,
                             "edges": self.terminal_graph.edge_count,
                             "group_order": self.terminal_group.order(),
                             "primitive": True}}


def _restrict(H: PermutationGroup, subset: List[int]) -> PermutationGroup:
    position = {v: i for i, v in enumerate(subset)}
    gens = [Permutation(tuple(position[h.images[v]] for v in subset)) for h in H.generators]
    return PermutationGroup(gens, degree=len(subset))


def reduce_distance_transitive(graph: Graph, G: PermutationGroup,
                               alpha: int = 0) -> DistanceReductionTrace:
    """
    While G is imprimitive take the first maximal overgroup H of G_alpha and pass
    to Gamma_H with Comp(G, H) when [G:H] > 2, or else to the distance-2 graph on
    alpha^H with H acting on alpha^H.

    Raises:
        PreconditionError: G is not distance-transitive on the graph
        InternalCheckError: a step loses distance transitivity
    """
    if not is_distance_transitive(graph, G):
        raise PreconditionError("group is not distance-transitive on the graph")
    trace = DistanceReductionTrace()
    current_graph, current_group, point = graph, G, alpha
    while not is_primitive(current_group):
        L = lattice_L1(current_group, point)
        coatom = next(i for i in range(len(L.nodes)) if i != L.top and L.top in L.upper_covers(i))
        H = L.nodes[coatom].group
        index = current_group.order() // H.order()
        if index > 2:
            result = quotient_graph(current_graph, current_group, H, point)
            next_graph, next_group, kind = result.quotient, result.induced_group.image, "quotient"
            point = result.parts.block_of[point]
        else:
            subset = sorted(H.orbit(point))
            next_graph = distance_two_graph(current_graph, subset)
            next_group, kind = _restrict(H, subset), "distance_two"
            point = subset.index(point)
        try:
            holds = is_distance_transitive(next_graph, next_group)
        except GraphError:
            holds = False
        trace.steps.append(DistanceStep(kind=kind, subgroup_order=H.order(), index=index,
                                        graph=next_graph, group=next_group,
                                        distance_transitive=holds))
        logger.info("[Reduce] %s: %d -> %d vertices", kind, current_graph.n, next_graph.n)
        if not holds:
            raise InternalCheckError(f"{kind} step is not distance-transitive")
        current_graph, current_group = next_graph, next_group
    trace.terminal_graph, trace.terminal_group = current_graph, current_group
    return trace
