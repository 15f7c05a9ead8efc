"""
Structure 模組 - orbits, blocks, normal structure, O'Nan-Scott types
"""

from .blocks import (BlockSystem, block_stabilizer, block_system, blocks_containing,
                     is_primitive, minimal_block, orbits, subdegrees, suborbits)
from .normal import (ConjugacyClass, NormalSubgroupSet, conjugacy_classes,
                     is_innately_transitive, is_normal, is_quasiprimitive, is_simple,
                     minimal_normal_subgroups, normal_closure, normal_subgroups, normalizes,
                     socle)
from .onan_scott import OnanScottEvidence, OnanScottTag, OnanScottType, onan_scott_type
from .union_find import UnionFind, find_orbits

__all__ = [
    'BlockSystem', 'orbits', 'suborbits', 'subdegrees', 'minimal_block', 'is_primitive',
    'blocks_containing', 'block_system', 'block_stabilizer',
    'ConjugacyClass', 'NormalSubgroupSet', 'conjugacy_classes', 'normal_closure',
    'normal_subgroups', 'minimal_normal_subgroups', 'socle', 'is_normal', 'normalizes',
    'is_simple', 'is_quasiprimitive', 'is_innately_transitive',
    'OnanScottTag', 'OnanScottType', 'OnanScottEvidence', 'onan_scott_type',
    'UnionFind', 'find_orbits',
]
