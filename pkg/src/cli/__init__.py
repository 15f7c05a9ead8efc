"""
CLI 模組 - command implementations and JSON reports
"""

from .commands import (cmd_analyze_graph, cmd_analyze_group, cmd_catalog, cmd_constant,
                       cmd_reduce, load_graph, load_graph_group, load_group)
from .report import Report, group_summary

__all__ = [
    'Report', 'group_summary',
    'load_group', 'load_graph', 'load_graph_group',
    'cmd_analyze_group', 'cmd_analyze_graph', 'cmd_reduce', 'cmd_constant', 'cmd_catalog',
]
