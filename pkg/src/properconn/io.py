"""Colouring files and report serialisation.

Colouring file: first line "m k", then one colour id per edge id, one per line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import GraphFormatError
from .graph import Graph, parse_graph_text, read_graph6_lines
from .paths import EdgeColoring, VerificationReport


def format_coloring(c: EdgeColoring) -> str:
    return "\n".join([f"{len(c)} {c.k}", *map(str, c.colors)]) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphFormatError("colouring file needs a header line 'm k'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in colouring file: {exc}") from None
    m, k = nums[0], nums[1]
    colors = nums[2:]
    if len(colors) != m:
        raise GraphFormatError(f"header says {m} edges, file lists {len(colors)} colours")
    if any(not 1 <= x <= k for x in colors):
        raise GraphFormatError(f"colours must lie in 1..{k}")
    return EdgeColoring(tuple(colors), k)


def read_coloring(path: str | Path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def write_coloring(path: str | Path, c: EdgeColoring) -> None:
    Path(path).write_text(format_coloring(c))


def read_graphs(text: str) -> list[Graph]:
    """One edge-list graph, or any number of graph6 lines."""
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty graph input")
    first = stripped.split(None, 1)[0]
    if first.isdigit():
        return [parse_graph_text(stripped)]
    return list(read_graph6_lines(stripped.splitlines()))


def report_dict(rep: VerificationReport) -> dict[str, Any]:
    return rep.to_dict()


def report_text(rep: VerificationReport) -> str:
    lines = [f"mode: {rep.mode}", f"holds: {'yes' if rep.holds else 'no'}"]
    if rep.failures:
        lines.append("failing pairs: " + " ".join(f"{u}-{v}" for u, v in rep.failures))
    for (u, v), paths in sorted(rep.witnesses.items()):
        for p in paths:
            lines.append(f"witness {u}-{v}: {' '.join(map(str, p.vertices))}")
    return "\n".join(lines) + "\n"


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"
