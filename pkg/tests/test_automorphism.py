"""
圖自同構 測試
以已知的自同構群階作為回歸值，並驗證同構判定的見證映射
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src import config
from src.errors import CapExceededError
from src.graph import (Graph, are_isomorphic, automorphism_group, automorphism_search,
                       catalog_graph, is_invariant)


@pytest.mark.parametrize("name, order", [
    ("petersen", 120),
    ("heawood", 336),
    ("tutte_coxeter", 1440),
    ("dodecahedron", 120),
    ("complete_4", 24),
    ("cycle_6", 12),
    ("edgeless_5", 120),
    ("hypercube_3", 48),
    ("complete_bipartite_3_3", 72),
    ("edgeless_1", 1),
    ("gp_8_3", 96),
])
def test_automorphism_orders(name, order):
    graph = catalog_graph(name)
    search = automorphism_search(graph)
    assert search.order == order, f"{name}: |Aut| = {search.order}"
    assert search.group.order() == order
    product = 1
    for size in search.orbit_sizes:
        product *= size
    assert product == order


def test_generators_are_automorphisms(petersen, petersen_aut):
    assert is_invariant(petersen, petersen_aut)
    assert petersen_aut.is_transitive()


def test_irregular_graph():
    # a path with a pendant: only the two leaves at the end swap
    graph = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    G = automorphism_group(graph)
    assert G.order() == 2
    assert G.orbit(3) == [3, 4]
    assert G.orbit(0) == [0]


def test_search_summary(petersen):
    data = automorphism_search(petersen).to_dict()
    assert data["order"] == 120
    assert all(1 <= v <= 10 for v in data["base"])
    assert len(data["generators"]) >= 1


def test_graph_max_cap(monkeypatch, petersen):
    monkeypatch.setattr(config, "GRAPH_MAX", 5)
    with pytest.raises(CapExceededError) as info:
        automorphism_search(petersen)
    assert "graph too large" in str(info.value)
    with pytest.raises(CapExceededError):
        are_isomorphic(petersen, petersen)


def test_isomorphic_relabeling(petersen):
    shuffle = [3, 7, 0, 9, 1, 5, 8, 2, 6, 4]
    relabeled = Graph.from_edges(10, [(shuffle[u], shuffle[v]) for u, v in petersen.edges])
    same, witness = are_isomorphic(petersen, relabeled)
    assert same
    assert all(relabeled.has_edge(witness(u), witness(v)) for u, v in petersen.edges)


def test_not_isomorphic():
    hexagon = catalog_graph("cycle_6")
    triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert are_isomorphic(hexagon, triangles) == (False, None)
    assert are_isomorphic(hexagon, catalog_graph("cycle_5")) == (False, None)
    assert are_isomorphic(catalog_graph("petersen"), catalog_graph("gp_5_1")) == (False, None)
