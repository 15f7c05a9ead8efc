"""
Lattice 模組 - subgroup lattices over G_alpha, components, wreath embeddings
"""

from .lattice import (LatticeKind, LatticeNode, SubgroupLattice, build_lattice,
                      comparable_pairs, covers, lattice_L1, lattice_L2, lattice_L3,
                      maximal_chains, subnormal_subgroups)
from .component import (Component, ComponentProfile, basic_components, component,
                        converse_observations, lattice_component, profile_component)
from .wreath import (WreathEmbeddingCertificate, WreathWitness, iterated_wreath,
                     wreath_embedding)

__all__ = [
    'LatticeKind', 'LatticeNode', 'SubgroupLattice', 'build_lattice', 'lattice_L1',
    'lattice_L2', 'lattice_L3', 'covers', 'comparable_pairs', 'maximal_chains',
    'subnormal_subgroups',
    'Component', 'ComponentProfile', 'component', 'lattice_component', 'basic_components',
    'profile_component', 'converse_observations',
    'WreathEmbeddingCertificate', 'WreathWitness', 'iterated_wreath', 'wreath_embedding',
]
