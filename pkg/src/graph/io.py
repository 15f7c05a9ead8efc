"""
Graph files.

Format:
    graph N M
    1 2
    # comments and blank lines are ignored
    2 3

followed by exactly M edge lines with 1-based vertices.
"""

from pathlib import Path
from typing import Union

from ..errors import FileFormatError
from .graph import Graph


def parse_graph_text(text: str) -> Graph:
    n = m = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if (len(fields) != 3 or fields[0] != "graph"
                    or not fields[1].isdigit() or not fields[2].isdigit()):
                raise FileFormatError(f"expected 'graph N M', got {line!r}", lineno)
            n, m = int(fields[1]), int(fields[2])
            if n < 1:
                raise FileFormatError("vertex count must be positive", lineno)
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise FileFormatError(f"expected an edge 'u v', got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        for x in (u, v):
            if not 1 <= x <= n:
                raise FileFormatError(f"vertex {x} out of range 1..{n}", lineno)
        if u == v:
            raise FileFormatError(f"loop at vertex {u}", lineno)
        pair = (min(u, v) - 1, max(u, v) - 1)
        if pair in seen:
            raise FileFormatError(f"repeated edge {u} {v}", lineno)
        seen.add(pair)
        edges.append(pair)
    if n is None:
        raise FileFormatError("missing 'graph N M' header")
    if len(edges) != m:
        raise FileFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_graph_file(path: Union[str, Path]) -> Graph:
    return parse_graph_text(Path(path).read_text(encoding="utf-8"))


def format_graph_text(graph: Graph, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"graph {graph.n} {graph.edge_count}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def write_graph_file(graph: Graph, path: Union[str, Path], comment: str = ""):
    Path(path).write_text(format_graph_text(graph, comment), encoding="utf-8")
