"""
Named test graphs and groups.

Fixed names cover the graphs with special symmetry; parametrized families use
names such as cycle_6, complete_bipartite_3_3, hypercube_3 or gp_10_2. Group
names follow the same scheme (s_5, a_5, c_6, d_12 with the order in the name)
plus the structure examples and "aut:<graph name>".
"""

import logging
import re
from typing import Callable, Dict, List

import networkx as nx

from ..errors import GraphError, PreconditionError
from ..perm.group import PermutationGroup
from ..structure import constructions
from .automorphism import automorphism_group
from .graph import Graph, girth, is_bipartite, valency

logger = logging.getLogger(__name__)


# =============================================================================
# Graphs
# =============================================================================

def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner edges n+i ~ n+(i+k) mod n."""
    if n < 3 or not 1 <= k < n / 2:
        raise GraphError(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def heawood_graph() -> Graph:
    """Incidence graph of the Fano plane: points 0..6, line 7+i = {i, i+1, i+3} mod 7."""
    edges = [(p % 7, 7 + i) for i in range(7) for p in (i, i + 1, i + 3)]
    return Graph.from_edges(14, edges)


def tutte_coxeter_graph() -> Graph:
    """
    Raises:
        GraphError: the fixture fails its structural checks
    """
    graph = Graph.from_networkx(nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))
    if graph.n != 30 or valency(graph) != 3 or not is_bipartite(graph) or girth(graph) != 8:
        raise GraphError("Tutte-Coxeter fixture failed validation")
    return graph


_FIXED_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "petersen": lambda: generalized_petersen(5, 2),
    "dodecahedron": lambda: generalized_petersen(10, 2),
    "heawood": heawood_graph,
    "tutte_coxeter": tutte_coxeter_graph,
}

_GRAPH_FAMILIES = [
    (re.compile(r"^cycle_(\d+)$"), lambda n: nx.cycle_graph(n) if n >= 3 else None),
    (re.compile(r"^complete_(\d+)$"), lambda n: nx.complete_graph(n) if n >= 1 else None),
    (re.compile(r"^complete_bipartite_(\d+)_(\d+)$"),
     lambda m, n: nx.complete_bipartite_graph(m, n) if m >= 1 and n >= 1 else None),
    (re.compile(r"^hypercube_(\d+)$"), lambda d: nx.hypercube_graph(d) if d >= 1 else None),
    (re.compile(r"^edgeless_(\d+)$"), lambda n: nx.empty_graph(n) if n >= 1 else None),
]

_GP_PATTERN = re.compile(r"^gp_(\d+)_(\d+)$")


def catalog_graph(name: str) -> Graph:
    """
    Raises:
        GraphError: unknown name or parameters out of range
    """
    key = name.strip().lower()
    if key in _FIXED_GRAPHS:
        return _FIXED_GRAPHS[key]()
    match = _GP_PATTERN.match(key)
    if match:
        return generalized_petersen(int(match.group(1)), int(match.group(2)))
    for pattern, build in _GRAPH_FAMILIES:
        match = pattern.match(key)
        if match:
            g = build(*(int(x) for x in match.groups()))
            if g is None:
                raise GraphError(f"parameters out of range for catalog graph {name!r}")
            return Graph.from_networkx(g)
    raise GraphError(f"unknown catalog graph {name!r}")


# =============================================================================
# Groups
# =============================================================================

_FIXED_GROUPS: Dict[str, Callable[[], PermutationGroup]] = {
    "agl_1_5": constructions.agl_1_5,
    "a5_coset_c5": constructions.a5_coset_c5,
    "a5_x_c3_15": constructions.a5_times_c3_on_15,
    "hs_60": constructions.a5_squared_on_a5,
    "sd_60": constructions.a5_squared_swap_on_a5,
    "pa_25": constructions.a5_wreath_c2_product_action,
    "a5_wr_c2_10": constructions.a5_wreath_c2_imprimitive,
    "tw_3600": constructions.twisted_wreath_3600,
}

_GROUP_FAMILY = re.compile(r"^([sacd])_(\d+)$")


def catalog_group(name: str) -> PermutationGroup:
    """
    Raises:
        PreconditionError: unknown name or parameters out of range
        GraphError: "aut:<graph>" names an unknown graph
    """
    key = name.strip().lower()
    if key.startswith("aut:"):
        return automorphism_group(catalog_graph(key[4:]))
    if key in _FIXED_GROUPS:
        return _FIXED_GROUPS[key]()
    match = _GROUP_FAMILY.match(key)
    if not match:
        raise PreconditionError(f"unknown catalog group {name!r}")
    family, n = match.group(1), int(match.group(2))
    try:
        if family == "s":
            return constructions.symmetric_group(n)
        if family == "a":
            return constructions.alternating_group(n)
        if family == "c":
            return constructions.cyclic_group(n)
        if n % 2:
            raise ValueError("dihedral group order must be even")
        return constructions.dihedral_group(n // 2)
    except ValueError as err:
        raise PreconditionError(f"catalog group {name!r}: {err}") from err


def catalog_names() -> Dict[str, List[str]]:
    return {
        "graphs": sorted(_FIXED_GRAPHS) + ["cycle_<n>", "complete_<n>",
                                           "complete_bipartite_<m>_<n>", "hypercube_<d>",
                                           "gp_<n>_<k>", "edgeless_<n>"],
        "groups": sorted(_FIXED_GROUPS) + ["s_<n>", "a_<n>", "c_<n>", "d_<2n>",
                                           "aut:<graph name>"],
    }
