"""JSON analysis reports."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .. import config
from ..perm.group import PermutationGroup
from ..perm.permutation import format_cycles


def group_summary(G: PermutationGroup) -> Dict[str, Any]:
    return {"degree": G.degree, "order": G.order(),
            "generators": [format_cycles(g) for g in G.generators]}


def points(values) -> List[int]:
    """Sorted 1-based rendering of a point set."""
    return [x + 1 for x in sorted(values)]


@dataclass
class Report:
    """
    One command's output.

    Everything except `timing` depends only on the inputs and the caps, so the
    serialized form is byte-identical across runs unless timing is requested.
    """

    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    inputs: Dict[str, Dict[str, str]] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    omissions: List[Dict[str, str]] = field(default_factory=list)
    timing: Optional[Dict[str, float]] = None

    @property
    def partial(self) -> bool:
        return bool(self.omissions)

    def omit(self, section: str, reason: str):
        self.omissions.append({"section": section, "reason": reason})

    def settings(self) -> Dict[str, int]:
        return {"enum_cap": config.ENUM_CAP, "graph_max": config.GRAPH_MAX,
                "arc_tuple_cap": config.ARC_TUPLE_CAP, "projection_cap": config.PROJECTION_CAP,
                "max_degree": config.MAX_DEGREE}

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "schema_version": config.REPORT_SCHEMA_VERSION,
            "command": self.command,
            "arguments": self.arguments,
            "inputs": self.inputs,
            "settings": self.settings(),
            "results": self.results,
            "omissions": self.omissions,
            "complete": not self.partial,
        }
        if self.timing is not None:
            data["timing"] = self.timing
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary_lines(self) -> List[str]:
        """Short human-readable digest for standard error."""
        lines = [f"command: {self.command}"]
        for key in sorted(self.results):
            value = self.results[key]
            if isinstance(value, (bool, int, float, str)) or value is None:
                lines.append(f"{key}: {value}")
        if self.omissions:
            lines.append("omitted: " + ", ".join(o["section"] for o in self.omissions))
        return lines
