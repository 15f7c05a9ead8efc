# Basic Permutation Groups Toolkit

from . import config

# Permutation and group engine exports
from .perm import Permutation, PermutationGroup, build_group, coset_action, parse_cycles

# Structure exports
from .structure import (is_innately_transitive, is_primitive, is_quasiprimitive,
                        normal_subgroups, onan_scott_type)

# Lattice exports
from .lattice import LatticeKind, basic_components, build_lattice, wreath_embedding

# Graph exports
from .graph import (Graph, automorphism_group, catalog_graph, catalog_group,
                    is_s_arc_transitive, reduce_to_quasiprimitive)

# Numeric exports
from .numeric import density_constant, euler_phi

# Error exports
from .errors import ToolkitError
