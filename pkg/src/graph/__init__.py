"""
Graph 模組 - graphs, s-arcs, quotients, reductions, automorphisms, catalog
"""

from .graph import (Graph, diameter, distance_matrix, distance_two_graph, girth,
                    induced_subgraph, is_bipartite, is_connected, is_invariant, valency)
from .arcs import (ArcTransitivityProfile, ArcVerdict, count_s_arcs, is_distance_transitive,
                   is_s_arc_transitive, iter_s_arcs, max_arc_transitivity, s_arc_verdict,
                   s_arcs, vertex_count_predicate)
from .quotient import (DistanceReductionTrace, QuotientResult, ReductionTrace,
                       is_normal_cover, normal_quotient, quotient_graph,
                       reduce_distance_transitive, reduce_to_quasiprimitive)
from .automorphism import (AutomorphismSearch, are_isomorphic, automorphism_group,
                           automorphism_search)
from .catalog import catalog_graph, catalog_group, catalog_names, generalized_petersen
from .io import format_graph_text, parse_graph_text, read_graph_file, write_graph_file

__all__ = [
    'Graph', 'distance_matrix', 'is_connected', 'diameter', 'girth', 'is_bipartite',
    'valency', 'is_invariant', 'distance_two_graph', 'induced_subgraph',
    'ArcVerdict', 'ArcTransitivityProfile', 's_arcs', 'iter_s_arcs', 'count_s_arcs',
    's_arc_verdict', 'is_s_arc_transitive', 'max_arc_transitivity', 'is_distance_transitive',
    'vertex_count_predicate',
    'QuotientResult', 'ReductionTrace', 'DistanceReductionTrace', 'quotient_graph',
    'normal_quotient', 'is_normal_cover', 'reduce_to_quasiprimitive',
    'reduce_distance_transitive',
    'AutomorphismSearch', 'automorphism_search', 'automorphism_group', 'are_isomorphic',
    'catalog_graph', 'catalog_group', 'catalog_names', 'generalized_petersen',
    'parse_graph_text', 'read_graph_file', 'write_graph_file', 'format_graph_text',
]
