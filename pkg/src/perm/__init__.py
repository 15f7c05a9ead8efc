"""
Perm 模組 - permutations, stabilizer chains and permutation groups
"""

from .permutation import (Permutation, cycle_decomposition, format_cycles, identity,
                          inverse, parse_cycles, product)
from .chain import StabilizerChain
from .group import (ActionImage, GroupHandle, PermutationGroup, build_group, contains,
                    coset_action, dedup_subgroups, elements, is_subgroup, is_transitive,
                    join, orbit, order, point_stabilizer, same_subgroup)
from .io import parse_group_text, read_group_file, write_group_file, format_group_text

__all__ = [
    'Permutation', 'parse_cycles', 'product', 'inverse', 'identity',
    'cycle_decomposition', 'format_cycles',
    'StabilizerChain',
    'PermutationGroup', 'GroupHandle', 'ActionImage', 'build_group', 'order', 'contains',
    'elements', 'orbit', 'is_transitive', 'point_stabilizer', 'coset_action',
    'is_subgroup', 'same_subgroup', 'join', 'dedup_subgroups',
    'parse_group_text', 'read_group_file', 'write_group_file', 'format_group_text',
]
