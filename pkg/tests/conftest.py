"""Shared test fixtures and helpers."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.graph import automorphism_group, catalog_graph
from src.structure import constructions
from tests.group_utils import group_of


@pytest.fixture(scope="session")
def s4():
    return constructions.symmetric_group(4)


@pytest.fixture(scope="session")
def a5():
    return constructions.alternating_group(5)


@pytest.fixture(scope="session")
def d8():
    """D8 on the corners of a square: rotation (1 2 3 4), reflection (2 4)."""
    return group_of(4, "(1 2 3 4)", "(2 4)")


@pytest.fixture(scope="session")
def c4():
    return constructions.cyclic_group(4)


@pytest.fixture(scope="session")
def c6():
    return constructions.cyclic_group(6)


@pytest.fixture(scope="session")
def d12():
    return constructions.dihedral_group(6)


@pytest.fixture(scope="session")
def a5_12():
    return constructions.a5_coset_c5()


@pytest.fixture(scope="session")
def a5_15():
    return constructions.a5_times_c3_on_15()


@pytest.fixture(scope="session")
def corpus():
    """Transitive groups of degree 4..60 covering every basicness pattern."""
    return {
        "s4": constructions.symmetric_group(4),
        "a5": constructions.alternating_group(5),
        "s5": constructions.symmetric_group(5),
        "a5_12": constructions.a5_coset_c5(),
        "d8": group_of(4, "(1 2 3 4)", "(2 4)"),
        "c4": constructions.cyclic_group(4),
        "c6": constructions.cyclic_group(6),
        "d12": constructions.dihedral_group(6),
        "agl_1_5": constructions.agl_1_5(),
        "a5_15": constructions.a5_times_c3_on_15(),
        "a5_wr_c2_10": constructions.a5_wreath_c2_imprimitive(),
        "pa_25": constructions.a5_wreath_c2_product_action(),
        "hs_60": constructions.a5_squared_on_a5(),
        "sd_60": constructions.a5_squared_swap_on_a5(),
    }


@pytest.fixture(scope="session")
def petersen():
    return catalog_graph("petersen")


@pytest.fixture(scope="session")
def petersen_aut(petersen):
    return automorphism_group(petersen)


@pytest.fixture(scope="session")
def dodecahedron():
    return catalog_graph("dodecahedron")


@pytest.fixture(scope="session")
def dodecahedron_aut(dodecahedron):
    return automorphism_group(dodecahedron)
