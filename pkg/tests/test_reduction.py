"""
商圖與約化流程 測試
正規商圖、覆蓋判定、擬本原約化與距離傳遞約化
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import (GraphError, NotInvariantError, NotNormalError, NotSubgroupError,
                        PreconditionError)
from src.graph import (are_isomorphic, automorphism_group, catalog_graph, is_normal_cover,
                       normal_quotient, quotient_graph, reduce_distance_transitive,
                       reduce_to_quasiprimitive, valency)
from src.perm import PermutationGroup
from src.structure import block_stabilizer, constructions, is_quasiprimitive, normal_subgroups
from tests.group_utils import group_of


def normal_of_order(G: PermutationGroup, order: int) -> PermutationGroup:
    matches = [N for N in normal_subgroups(G).members if N.order() == order]
    assert len(matches) == 1, f"expected one normal subgroup of order {order}"
    return matches[0]


# =============================================================================
# Quotient graphs
# =============================================================================

def test_quotient_by_stabilizer_is_the_graph(petersen, petersen_aut):
    result = quotient_graph(petersen, petersen_aut, petersen_aut.stabilizer(0), 0)
    assert result.quotient == petersen
    assert result.is_cover
    assert result.notes["edges_within_parts"] == 0
    assert result.induced_group.kernel_order == 1


def test_quotient_by_whole_group(petersen, petersen_aut):
    result = quotient_graph(petersen, petersen_aut, petersen_aut, 0)
    assert result.quotient.n == 1
    assert result.quotient.edge_count == 0
    assert not result.is_cover
    assert result.notes["edges_within_parts"] == 15
    assert not result.notes["arc_transitive"]


def test_hexagon_quotients(d12):
    hexagon = catalog_graph("cycle_6")
    antipodal = block_stabilizer(d12, {0, 3}, 0)
    triangle = quotient_graph(hexagon, d12, antipodal, 0)
    assert (triangle.quotient.n, triangle.quotient.edge_count) == (3, 3)
    assert triangle.is_cover
    assert triangle.notes["vertex_primitive"]
    assert triangle.notes["arc_transitive"]
    assert not triangle.notes["bipartite_obstruction"]
    assert triangle.parts.blocks == (frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5}))

    halves = quotient_graph(hexagon, d12, block_stabilizer(d12, {0, 2, 4}, 0), 0)
    assert halves.quotient.n == 2
    assert halves.notes["two_vertex"]
    assert halves.notes["bipartite_obstruction"]
    assert not halves.is_cover


def test_quotient_preconditions(s4):
    c5 = catalog_graph("cycle_5")
    with pytest.raises(NotInvariantError):
        quotient_graph(c5, group_of(5, "(1 2)"), group_of(5, "(1 2)"), 0)
    k4 = catalog_graph("complete_4")
    with pytest.raises(NotSubgroupError):
        quotient_graph(k4, s4, group_of(4, "(1 2 3 4)"), 0)


def test_quotient_serializes(d12):
    hexagon = catalog_graph("cycle_6")
    data = quotient_graph(hexagon, d12, block_stabilizer(d12, {0, 3}, 0), 0).to_dict()
    assert data["parts"] == [[1, 4], [2, 5], [3, 6]]
    assert data["induced_order"] == 6
    assert data["kernel_order"] == 2
    assert data["is_cover"] is True


# =============================================================================
# Normal quotients
# =============================================================================

def test_normal_quotient_checks(s4):
    k4 = catalog_graph("complete_4")
    with pytest.raises(NotNormalError):
        normal_quotient(k4, s4, group_of(4, "(1 2)"))
    with pytest.raises(NotSubgroupError):
        normal_quotient(k4, constructions.alternating_group(4), group_of(4, "(1 2)"))


def test_transitive_normal_subgroup_collapses(s4):
    k4 = catalog_graph("complete_4")
    v4 = group_of(4, "(1 2)(3 4)", "(1 3)(2 4)")
    result = normal_quotient(k4, s4, v4)
    assert result.quotient.n == 1
    assert not result.is_cover


def test_trivial_normal_subgroup(petersen, petersen_aut):
    result = normal_quotient(petersen, petersen_aut, PermutationGroup.trivial(10))
    assert result.quotient == petersen
    assert is_normal_cover(petersen, result)


def test_dodecahedron_antipodal_quotient(dodecahedron, dodecahedron_aut, petersen):
    """十二面體對中心取商得到 Petersen 圖"""
    center = normal_of_order(dodecahedron_aut, 2)
    result = normal_quotient(dodecahedron, dodecahedron_aut, center)
    assert result.quotient.n == 10
    assert result.is_cover
    assert is_normal_cover(dodecahedron, result)
    assert result.induced_group.image.order() == 60
    assert result.induced_group.kernel_order == 2
    same, _ = are_isomorphic(result.quotient, petersen)
    assert same


# =============================================================================
# Reduction to a quasiprimitive action
# =============================================================================

def test_reduce_dodecahedron(dodecahedron, dodecahedron_aut, petersen):
    trace = reduce_to_quasiprimitive(dodecahedron, dodecahedron_aut, 2)
    assert len(trace.steps) == 1
    step = trace.steps[0]
    assert step.chosen.order == 2
    assert step.chosen.orbit_count == 10
    assert step.result.is_cover
    assert step.s_arc_transitive
    terminal = trace.terminal
    assert terminal.quasiprimitive
    assert terminal.s_arc_transitive
    assert not terminal.bipartite_obstruction
    assert terminal.onan_scott == "AS"
    assert terminal.group.order() == 60
    assert are_isomorphic(terminal.graph, petersen)[0]
    assert valency(terminal.graph) == valency(dodecahedron)


def test_reduce_already_quasiprimitive(petersen, petersen_aut):
    a5 = normal_of_order(petersen_aut, 60)
    assert is_quasiprimitive(a5)
    trace = reduce_to_quasiprimitive(petersen, a5, 2)
    assert trace.steps == []
    assert trace.terminal.quasiprimitive
    assert trace.terminal.graph == petersen


def test_reduce_bipartite_obstruction():
    k33 = catalog_graph("complete_bipartite_3_3")
    trace = reduce_to_quasiprimitive(k33, automorphism_group(k33), 2)
    assert trace.steps == []
    assert trace.terminal.bipartite_obstruction
    assert not trace.terminal.quasiprimitive
    assert trace.terminal.onan_scott is None


def test_reduce_preconditions(petersen, petersen_aut):
    with pytest.raises(PreconditionError):
        reduce_to_quasiprimitive(petersen, petersen_aut, 1)
    with pytest.raises(PreconditionError):
        reduce_to_quasiprimitive(petersen, petersen_aut, 4)
    g = catalog_graph("edgeless_2")
    with pytest.raises(GraphError):
        reduce_to_quasiprimitive(g, constructions.symmetric_group(2), 2)


def test_reduce_explore_all(dodecahedron, dodecahedron_aut):
    trace = reduce_to_quasiprimitive(dodecahedron, dodecahedron_aut, 2, explore_all=True)
    candidates = trace.steps[0].candidates
    assert all(c.quotient is not None for c in candidates if c.orbit_count >= 3)
    data = trace.to_dict()
    assert data["s"] == 2
    assert "quotient" in data["steps"][0]["candidates"][0]
    assert data["terminal"]["group_order"] == 60


# =============================================================================
# Distance-transitive reduction
# =============================================================================

def test_distance_reduce_hexagon(d12):
    trace = reduce_distance_transitive(catalog_graph("cycle_6"), d12)
    assert [step.kind for step in trace.steps] == ["quotient"]
    assert (trace.terminal_graph.n, trace.terminal_graph.edge_count) == (3, 3)
    assert trace.terminal_group.order() == 6


def test_distance_reduce_cube():
    cube = catalog_graph("hypercube_3")
    trace = reduce_distance_transitive(cube, automorphism_group(cube))
    assert [step.kind for step in trace.steps] == ["quotient"]
    assert trace.steps[0].index == 4
    assert (trace.terminal_graph.n, trace.terminal_graph.edge_count) == (4, 6)
    assert trace.terminal_group.order() == 24


def test_distance_reduce_bipartite_halves():
    k33 = catalog_graph("complete_bipartite_3_3")
    trace = reduce_distance_transitive(k33, automorphism_group(k33))
    assert [step.kind for step in trace.steps] == ["distance_two"]
    assert trace.steps[0].index == 2
    assert (trace.terminal_graph.n, trace.terminal_graph.edge_count) == (3, 3)
    assert trace.terminal_group.order() == 6
    assert trace.to_dict()["terminal"]["primitive"] is True


def test_distance_reduce_primitive_input(petersen, petersen_aut):
    trace = reduce_distance_transitive(petersen, petersen_aut)
    assert trace.steps == []
    assert trace.terminal_graph == petersen


def test_distance_reduce_precondition(petersen):
    with pytest.raises(PreconditionError):
        reduce_distance_transitive(petersen, PermutationGroup.trivial(10))
