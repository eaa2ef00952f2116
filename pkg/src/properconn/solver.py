"""Exact proper connection numbers by complete search over edge colourings.

Colour symmetry is broken canonically: the first edge (in search order) gets
colour 1 and colour ``j + 1`` may only appear after colour ``j``.  Partial
colourings are pruned by re-checking recently failing vertex pairs with
uncoloured edges treated as wildcards; a pair that fails even then fails in
every completion.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BudgetExceeded, ConstructionDefect, PreconditionError
from .graph import Graph
from .paths import (
    EdgeColoring,
    _disjoint_paths,
    _Counter,
    _iter_paths,
    _Overflow,
    find_proper_path,
    has_strong_property,
    is_k_proper_connected,
    is_proper_connected,
    strong_pair,
)

DEFAULT_NODE_BUDGET = 20_000_000
_PARTIAL_STEP_LIMIT = 5_000
_MAX_KILLERS = 6


@dataclass
class SearchStats:
    nodes: int = 0
    colorings: int = 0
    seconds: float = 0.0

    def merge(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            self.nodes + other.nodes,
            self.colorings + other.colorings,
            self.seconds + other.seconds,
        )


@dataclass
class PcResult:
    value: int
    witness: EdgeColoring
    stats: SearchStats = field(default_factory=SearchStats)


def search_order(g: Graph) -> list[int]:
    """Edges in BFS discovery order from vertex 0 (ties by edge id)."""
    seen_e: set[int] = set()
    order: list[int] = []
    seen_v = [False] * g.n
    for root in range(g.n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        q = deque([root])
        while q:
            x = q.popleft()
            for w, e in g.adjacency[x]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if not seen_v[w]:
                    seen_v[w] = True
                    q.append(w)
    return order


# ---------------------------------------------------------------------------
# pair checks (exact on full colourings, relaxed on partial ones)


def _pair_ok(g: Graph, colors: Sequence[int], u: int, v: int, mode: str, partial: bool) -> bool:
    if not partial:
        if mode == "proper":
            return find_proper_path(g, colors, u, v) is not None
        if mode == "strong":
            return strong_pair(g, colors, u, v) is not None
        k = int(mode[1:])
        return _disjoint_paths(
            g, colors, u, v, k, frozenset(), frozenset(), _Counter(None)
        ) is not None
    try:
        if mode == "proper":
            return next(_iter_paths(g, colors, u, v, step_limit=_PARTIAL_STEP_LIMIT), None) is not None
        if mode == "strong":
            palette = sorted(set(colors) - {0})
            combos = []
            for s in palette:
                for t in palette:
                    p = next(
                        _iter_paths(
                            g, colors, u, v, first=(s,), last=(t,), step_limit=_PARTIAL_STEP_LIMIT
                        ),
                        None,
                    )
                    if p is None:
                        continue
                    if any(s2 != s and t2 != t for s2, t2 in combos):
                        return True
                    combos.append((s, t))
            return False
        if mode == "k2":
            for p in _iter_paths(g, colors, u, v, step_limit=_PARTIAL_STEP_LIMIT):
                if len(p) == 2:
                    rest = _iter_paths(
                        g, colors, u, v, skip={g.edge_id(u, v)}, step_limit=_PARTIAL_STEP_LIMIT
                    )
                else:
                    blocked = 0
                    for x in p[1:-1]:
                        blocked |= 1 << x
                    rest = _iter_paths(g, colors, u, v, blocked, step_limit=_PARTIAL_STEP_LIMIT)
                if next(rest, None) is not None:
                    return True
            return False
    except _Overflow:
        return True
    return True  # no relaxation for k >= 3


def _pair_order(g: Graph) -> list[tuple[int, int]]:
    """All pairs, farthest first (they tend to fail first)."""
    dist = [g.distances_from(s) for s in range(g.n)]
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    pairs.sort(key=lambda p: (-dist[p[0]][p[1]], p))
    return pairs


def search_coloring(
    g: Graph,
    palette: int,
    mode: str = "proper",
    budget: int = DEFAULT_NODE_BUDGET,
    stats: SearchStats | None = None,
) -> list[int] | None:
    """Complete backtracking for a colouring with at most ``palette`` colours
    satisfying ``mode`` ("proper", "strong" or "k<j>").

    Returns colours indexed by edge id, or None if no such colouring exists.
    """
    stats = stats if stats is not None else SearchStats()
    t0 = time.perf_counter()
    order = search_order(g)
    m = g.m
    if m == 0:
        return [] if g.n <= 1 else None
    pairs = _pair_order(g)
    killers: list[tuple[int, int]] = []
    colors = [0] * m
    adj_edges = [
        [f for x in g.edges[e] for _, f in g.adjacency[x] if f != e] for e in range(m)
    ]

    def leaf_ok() -> bool:
        stats.colorings += 1
        tried = set()
        for p in killers + pairs:
            if p in tried:
                continue
            tried.add(p)
            if not _pair_ok(g, colors, p[0], p[1], mode, partial=False):
                if p in killers:
                    killers.remove(p)
                killers.insert(0, p)
                del killers[_MAX_KILLERS:]
                return False
        return True

    def partial_ok() -> bool:
        for p in killers:
            if not _pair_ok(g, colors, p[0], p[1], mode, partial=True):
                return False
        return True

    def candidates(e: int, max_used: int) -> list[int]:
        top = min(palette, max_used + 1)
        conflicts = [0] * (top + 1)
        for f in adj_edges[e]:
            c = colors[f]
            if 0 < c <= top:
                conflicts[c] += 1
        return sorted(range(1, top + 1), key=lambda c: (conflicts[c], c))

    # iterative backtracking over positions in `order`
    found = False
    pos = 0
    max_used = [0] * (m + 1)
    choice_lists: list[list[int]] = [[] for _ in range(m)]
    choice_idx = [0] * m
    choice_lists[0] = [1]
    choice_idx[0] = 0
    try:
        while pos >= 0:
            e = order[pos]
            if choice_idx[pos] >= len(choice_lists[pos]):
                colors[e] = 0
                pos -= 1
                if pos >= 0:
                    choice_idx[pos] += 1
                continue
            c = choice_lists[pos][choice_idx[pos]]
            colors[e] = c
            stats.nodes += 1
            if stats.nodes > budget:
                raise BudgetExceeded(f"colouring search exceeded {budget} nodes")
            max_used[pos + 1] = max(max_used[pos], c)
            if pos == m - 1:
                if leaf_ok():
                    found = True
                    break
                choice_idx[pos] += 1
                continue
            if not partial_ok():
                choice_idx[pos] += 1
                continue
            pos += 1
            choice_lists[pos] = candidates(order[pos], max_used[pos])
            choice_idx[pos] = 0
    finally:
        stats.seconds += time.perf_counter() - t0
    return list(colors) if found else None


def _verify(g: Graph, colors: Sequence[int], mode: str) -> bool:
    if mode == "proper":
        return is_proper_connected(g, colors).holds
    if mode == "strong":
        return has_strong_property(g, colors, witnesses=False).holds
    return is_k_proper_connected(g, colors, int(mode[1:]), check_connectivity=False).holds


def _minimise(g: Graph, mode: str, budget: int, lo: int, hi: int) -> PcResult:
    stats = SearchStats()
    for p in range(lo, hi + 1):
        colors = search_coloring(g, p, mode, budget, stats)
        if colors is not None:
            if not _verify(g, colors, mode):
                raise ConstructionDefect("search returned a colouring that fails verification")
            return PcResult(p, EdgeColoring(tuple(colors), p), stats)
    raise ConstructionDefect(
        f"no {mode} colouring with <= {hi} colours; contradicts the Delta+1 bound"
    )


def pc_exact(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> PcResult:
    """Proper connection number: smallest palette admitting a proper-path colouring."""
    if g.n < 2 or not g.is_connected():
        raise PreconditionError("pc is defined for nontrivial connected graphs")
    return _minimise(g, "proper", budget, 1, g.max_degree() + 1)


def pc_k_exact(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> PcResult:
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if k == 1:
        return pc_exact(g, budget)
    if not g.is_k_connected(k):
        raise PreconditionError(f"pc_{k} undefined: graph is not {k}-connected")
    return _minimise(g, f"k{k}", budget, 1, g.max_degree() + 1)


def _is_proper_edge_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return all(
        colors[e] != colors[f] for x in range(g.n) for i, (_, e) in enumerate(g.adjacency[x])
        for _, f in g.adjacency[x][i + 1 :]
    )


def greedy_proper_edge_coloring(g: Graph) -> EdgeColoring:
    """Adjacent edges get distinct colours.

    Greedy (smallest free colour) over edges in BFS order, which is optimal on
    trees.  If greedy overshoots Delta + 1 the colouring is redone by exact
    backtracking with Delta + 1 colours, which always succeeds.
    """
    if g.m == 0:
        return EdgeColoring((), 1)
    colors = [0] * g.m
    for e in search_order(g):
        taken = {colors[f] for x in g.edges[e] for _, f in g.adjacency[x]}
        c = 1
        while c in taken:
            c += 1
        colors[e] = c
    cap = g.max_degree() + 1
    if max(colors) > cap:
        colors = _exact_proper_edge_coloring(g, cap)
    return EdgeColoring(tuple(colors), max(colors))


def _exact_proper_edge_coloring(g: Graph, k: int) -> list[int]:
    order = search_order(g)
    colors = [0] * g.m

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        taken = {colors[f] for x in g.edges[e] for _, f in g.adjacency[x]}
        for c in range(1, k + 1):
            if c not in taken:
                colors[e] = c
                if rec(i + 1):
                    return True
        colors[e] = 0
        return False

    if not rec(0):
        raise ConstructionDefect(f"no proper edge colouring with {k} colours")
    return colors


VERIFIERS: dict[str, Callable[[Graph, Sequence[int]], bool]] = {
    "proper": lambda g, c: _verify(g, c, "proper"),
    "strong": lambda g, c: _verify(g, c, "strong"),
    "k2": lambda g, c: _verify(g, c, "k2"),
}
