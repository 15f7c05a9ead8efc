"""
Group files.

Format:
    degree N
    (1 2 3)(4 5)
    # comments and blank lines are ignored
    (1 2)

One generator per line in 1-based cycle notation.
"""

import hashlib
from pathlib import Path
from typing import List, Union

from ..errors import FileFormatError, PermutationParseError
from .group import PermutationGroup, build_group
from .permutation import Permutation, format_cycles, parse_cycles


def parse_group_text(text: str) -> List[Permutation]:
    """Parse group file content into its generator list."""
    degree = None
    generators: List[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            fields = line.split()
            if len(fields) != 2 or fields[0] != "degree" or not fields[1].isdigit():
                raise FileFormatError(f"expected 'degree N', got {line!r}", lineno)
            degree = int(fields[1])
            if degree < 1:
                raise FileFormatError("degree must be positive", lineno)
            continue
        try:
            generators.append(parse_cycles(line, degree))
        except PermutationParseError as err:
            raise FileFormatError(str(err), lineno) from err
    if degree is None:
        raise FileFormatError("missing 'degree N' header")
    if not generators:
        raise FileFormatError("no generators given")
    return generators


def read_group_file(path: Union[str, Path]) -> PermutationGroup:
    return build_group(parse_group_text(Path(path).read_text(encoding="utf-8")))


def format_group_text(G: PermutationGroup, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"degree {G.degree}")
    lines.extend(format_cycles(g) for g in G.generators)
    return "\n".join(lines) + "\n"


def write_group_file(G: PermutationGroup, path: Union[str, Path], comment: str = ""):
    Path(path).write_text(format_group_text(G, comment), encoding="utf-8")


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
