"""
Command implementations behind app.py.

Each cmd_* function fills a Report. Sections that hit a cap are recorded as
omissions so the rest of the analysis still appears; the caller turns a
partial report into exit status 3.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from ..errors import CapExceededError, ClassificationError, NotInvariantError, NotTransitiveError
from ..graph import (Graph, catalog_graph, catalog_group, catalog_names, diameter, girth,
                     is_bipartite, is_connected, is_distance_transitive, is_invariant,
                     max_arc_transitivity, reduce_distance_transitive,
                     reduce_to_quasiprimitive, valency, vertex_count_predicate)
from ..graph.automorphism import automorphism_search
from ..graph.io import parse_graph_text
from ..lattice import (LatticeKind, basic_components, build_lattice, converse_observations,
                       maximal_chains, profile_component, wreath_embedding)
from ..numeric import density_constant
from ..perm.group import PermutationGroup, build_group
from ..perm.io import parse_group_text, text_digest
from ..structure import (is_innately_transitive, is_primitive, is_quasiprimitive,
                         normal_subgroups, onan_scott_type, subdegrees)
from .report import Report, group_summary, points

logger = logging.getLogger(__name__)


# =============================================================================
# Inputs
# =============================================================================

def load_group(report: Report, path: Optional[str] = None,
               catalog: Optional[str] = None) -> PermutationGroup:
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
        report.inputs["group"] = {"file": Path(path).name, "sha256": text_digest(text)}
        return build_group(parse_group_text(text))
    report.inputs["group"] = {"catalog": catalog}
    return catalog_group(catalog)


def load_graph(report: Report, path: Optional[str] = None,
               catalog: Optional[str] = None) -> Graph:
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
        report.inputs["graph"] = {"file": Path(path).name, "sha256": text_digest(text)}
        return parse_graph_text(text)
    report.inputs["graph"] = {"catalog": catalog}
    return catalog_graph(catalog)


def load_graph_group(report: Report, graph: Graph, path: Optional[str] = None,
                     catalog: Optional[str] = None, aut: bool = False) -> PermutationGroup:
    """Acting group for a graph: a file, a catalog name, or the computed automorphism group."""
    if aut or (path is None and catalog is None):
        search = automorphism_search(graph)
        report.inputs["group"] = {"automorphism_group": "computed"}
        report.results["automorphism_search"] = search.to_dict()
        return search.group
    return load_group(report, path, catalog)


def _attempt(report: Report, section: str, work: Callable[[], Any]) -> Any:
    """Run one report section; a cap or classification failure becomes an omission."""
    try:
        value = work()
    except (CapExceededError, ClassificationError) as err:
        logger.warning("[Report] %s omitted: %s", section, err)
        report.omit(section, str(err))
        return None
    report.results[section] = value
    return value


# =============================================================================
# analyze-group
# =============================================================================

def _lattice_section(G: PermutationGroup, alpha: int, kind: LatticeKind) -> Dict[str, Any]:
    L = build_lattice(G, alpha, kind)
    components = []
    for comp in basic_components(G, alpha, kind, lattice=L):
        entry = profile_component(comp).to_dict()
        entry["pair"] = list(comp.pair)
        components.append(entry)
    return {
        "nodes": [{"index": node.index, "order": node.order, "block": points(node.block)}
                  for node in L.nodes],
        "covers": [list(edge) for edge in L.edges],
        "components": components,
    }


def _wreath_section(G: PermutationGroup, alpha: int) -> Dict[str, Any]:
    L = build_lattice(G, alpha, LatticeKind.L1)
    chain = maximal_chains(L)[0]
    cert = wreath_embedding(G, chain, lattice=L, alpha=alpha)
    return {
        "chain": cert.chain,
        "radices": cert.radices,
        "component_orders": cert.component_orders,
        "wreath_order": cert.wreath_order,
        "bijective": cert.bijective,
        "verified": cert.verified,
        "relabeling": [r + 1 for r in cert.relabeling],
        "witnesses": [{"generator": str(w.generator), "relabeled": str(w.relabeled),
                       "member": w.member} for w in cert.witnesses],
    }


def cmd_analyze_group(report: Report, G: PermutationGroup, alpha: int = 0) -> Report:
    """
    Raises:
        NotTransitiveError: intransitive input
    """
    if not G.is_transitive():
        raise NotTransitiveError()
    report.results["group"] = group_summary(G)
    report.results["transitive"] = True
    report.results["subdegrees"] = subdegrees(G, alpha)
    report.results["primitive"] = is_primitive(G)
    _attempt(report, "quasiprimitive", lambda: is_quasiprimitive(G))
    _attempt(report, "innately_transitive", lambda: is_innately_transitive(G))
    _attempt(report, "normal_subgroup_orders", lambda: normal_subgroups(G).orders())

    def classify():
        result = onan_scott_type(G, alpha)
        return {"tag": result.tag.value, "evidence": result.evidence.to_dict()}

    _attempt(report, "onan_scott", classify)
    for kind in LatticeKind:
        _attempt(report, f"lattice_{kind.value}", lambda k=kind: _lattice_section(G, alpha, k))
    _attempt(report, "converse_observations",
             lambda: [list(pair) for pair in converse_observations(G, alpha)])
    _attempt(report, "wreath_embedding", lambda: _wreath_section(G, alpha))
    logger.info("[CLI] analyze-group: degree %d order %d", G.degree, G.order())
    return report


# =============================================================================
# analyze-graph
# =============================================================================

def cmd_analyze_graph(report: Report, graph: Graph, G: PermutationGroup, s_max: int) -> Report:
    """
    Raises:
        NotInvariantError: G does not preserve the edge set
        DegreeMismatchError: group degree differs from the vertex count
    """
    if not is_invariant(graph, G):
        raise NotInvariantError("group does not preserve the edge set")
    connected = is_connected(graph)
    report.results["graph"] = {"vertices": graph.n, "edges": graph.edge_count}
    report.results["group"] = group_summary(G)
    report.results["valency"] = valency(graph)
    report.results["bipartite"] = is_bipartite(graph)
    report.results["girth"] = girth(graph)
    report.results["connected"] = connected
    report.results["diameter"] = diameter(graph) if connected else None

    profile = _attempt(report, "arc_transitivity",
                       lambda: max_arc_transitivity(graph, G, limit=s_max).to_dict())
    if profile is not None and profile["max_s"] >= 4:
        report.results["vertex_count_predicate"] = vertex_count_predicate(graph.n)
    report.results["distance_transitive"] = is_distance_transitive(graph, G) if connected else None
    return report


# =============================================================================
# reduce / constant / catalog
# =============================================================================

def cmd_reduce(report: Report, graph: Graph, G: PermutationGroup, s: int,
               explore_all: bool = False, mode: str = "quasiprimitive") -> Report:
    if mode == "distance":
        trace = reduce_distance_transitive(graph, G)
    else:
        trace = reduce_to_quasiprimitive(graph, G, s, explore_all=explore_all)
    report.results["mode"] = mode
    report.results["trace"] = trace.to_dict()
    report.results["steps"] = len(trace.steps)
    return report


def cmd_constant(report: Report, cutoff: int) -> Report:
    estimate = density_constant(cutoff)
    report.results.update(estimate.to_dict())
    return report


def cmd_catalog(report: Report) -> Report:
    report.results.update(catalog_names())
    return report

