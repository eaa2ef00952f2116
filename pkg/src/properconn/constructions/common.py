from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..errors import ConstructionDefect, PreconditionError
from ..graph import Graph
from ..paths import EdgeColoring, has_strong_property, is_k_proper_connected, is_proper_connected


@dataclass(frozen=True)
class StrongColoring:
    coloring: EdgeColoring
    strong: bool


@dataclass(frozen=True)
class PendantSet:
    vertices: tuple[int, ...]
    neighbors: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, among: Sequence[int] | None = None) -> "PendantSet":
        """All degree-1 vertices of ``g`` (optionally restricted to ``among``), by id."""
        pool = range(g.n) if among is None else sorted(among)
        vs = [v for v in pool if g.degree(v) == 1]
        return cls(tuple(vs), tuple(g.adjacency[v][0][0] for v in vs))

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ColoredCore:
    """A coloured subgraph of a host graph.

    ``graph`` uses its own ids; ``host_of[i]`` is the host id of core vertex i.
    """

    graph: Graph
    host_of: tuple[int, ...]
    coloring: StrongColoring

    def host_assignment(self, host: Graph) -> dict[int, int]:
        return {
            host.edge_id(self.host_of[a], self.host_of[b]): self.coloring.coloring[e]
            for e, (a, b) in enumerate(self.graph.edges)
        }

    def local(self) -> dict[int, int]:
        return {h: i for i, h in enumerate(self.host_of)}


def finalize(g: Graph, assign: Mapping[int, int], default: int = 1) -> EdgeColoring:
    """Turn a partial host assignment into a full colouring; unassigned edges get
    ``default`` (extra edges never destroy existing proper paths)."""
    colors = tuple(assign.get(e, default) for e in range(g.m))
    return EdgeColoring(colors, max(colors, default=1))


def palette_size(c: EdgeColoring) -> int:
    return max(c.colors, default=0)


def require_connected(g: Graph, what: str) -> None:
    if g.n < 2 or not g.is_connected():
        raise PreconditionError(f"{what}: graph must be connected with n >= 2")


def ensure(g: Graph, c: EdgeColoring, mode: str, what: str) -> EdgeColoring:
    """Re-verify a construction's output; a failure is a defect, never returned."""
    if mode == "proper":
        ok = is_proper_connected(g, c, stop_at_first=True).holds
    elif mode == "strong":
        ok = has_strong_property(g, c, witnesses=False, stop_at_first=True).holds
    elif mode == "k2":
        ok = is_k_proper_connected(g, c, 2, stop_at_first=True, check_connectivity=False).holds
    else:
        raise ValueError(mode)
    if not ok:
        raise ConstructionDefect(f"{what}: output fails the {mode} verifier")
    return c


def note(trace: list[str] | None, msg: str) -> None:
    if trace is not None:
        trace.append(msg)
