"""Verification of edge-coloured graphs: proper paths, proper connectivity,
the strong property and k-proper connectivity.

Colour ids are positive integers.  Internally the search engine also accepts
colour ``0`` as a wildcard (an uncoloured edge compatible with everything);
the exact solver uses it to prune partial colourings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Collection, Iterator, Sequence

from .errors import BudgetExceeded, GraphFormatError, PreconditionError
from .gadget import proper_path_by_matching
from .graph import Graph

DEFAULT_ENUMERATION_CAP = 10**6
# DFS steps before exists_proper_path hands the query to the matching engine
DFS_STEP_LIMIT = 2_000


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise GraphFormatError("colour ids must be >= 1")
        if self.colors and self.k < max(self.colors):
            raise GraphFormatError(f"palette size {self.k} below max used colour")

    @classmethod
    def of(cls, colors: Sequence[int]) -> "EdgeColoring":
        return cls(tuple(colors), max(colors, default=1))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def used(self) -> int:
        """Number of distinct colours actually used."""
        return len(set(self.colors))

    def check_against(self, g: Graph) -> None:
        if len(self.colors) != g.m:
            raise GraphFormatError(
                f"colouring has {len(self.colors)} entries, graph has {g.m} edges"
            )


@dataclass(frozen=True)
class ProperPath:
    vertices: tuple[int, ...]
    start_color: int
    end_color: int

    @classmethod
    def build(cls, g: Graph, colors: Sequence[int], seq: Sequence[int]) -> "ProperPath":
        first = colors[g.edge_id(seq[0], seq[1])]
        last = colors[g.edge_id(seq[-2], seq[-1])]
        return cls(tuple(seq), first, last)

    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def __len__(self) -> int:
        return len(self.vertices) - 1


@dataclass
class VerificationReport:
    holds: bool
    failures: list[tuple[int, int]] = field(default_factory=list)
    witnesses: dict[tuple[int, int], tuple[ProperPath, ...]] = field(default_factory=dict)
    mode: str = "proper"

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "holds": self.holds,
            "failures": [list(p) for p in self.failures],
            "witnesses": {
                f"{u}-{v}": [list(p.vertices) for p in ps]
                for (u, v), ps in sorted(self.witnesses.items())
            },
        }


def _colors_of(c: EdgeColoring | Sequence[int]) -> Sequence[int]:
    return c.colors if isinstance(c, EdgeColoring) else c


def is_proper_path(g: Graph, c: EdgeColoring | Sequence[int], seq: Sequence[int]) -> bool:
    colors = _colors_of(c)
    if len(seq) < 2 or len(set(seq)) != len(seq):
        return False
    prev = None
    for a, b in zip(seq, seq[1:]):
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            return False
        col = colors[g.edge_id(a, b)]
        if prev is not None and col == prev:
            return False
        prev = col
    return True


# ---------------------------------------------------------------------------
# search engine


class _Overflow(Exception):
    pass


def _ok(a: int, b: int) -> bool:
    return a == 0 or b == 0 or a != b


def _coreachable(
    g: Graph,
    colors: Sequence[int],
    u: int,
    v: int,
    blocked: int,
    skip: Collection[int],
    last: Collection[int] | None,
) -> set[tuple[int, int]]:
    """States ``(x, c_in)`` from which some proper *walk* reaches v.

    A walk may revisit vertices, so this is a necessary condition for a path;
    the DFS uses it to cut dead branches early.
    """
    palette = set(colors) | {-1}
    good: set[tuple[int, int]] = set()
    work: list[tuple[int, int]] = []

    def mark(y: int, cf: int) -> None:
        for c in palette:
            if (c == -1 or _ok(c, cf)) and (y, c) not in good:
                good.add((y, c))
                work.append((y, c))

    for y, e in g.adjacency[v]:
        if e in skip or (blocked >> y) & 1:
            continue
        cf = colors[e]
        if last is None or cf in last or cf == 0:
            mark(y, cf)
    seen_arcs = set()
    while work:
        z, cz = work.pop()
        if z == u or z == v or cz == -1:
            continue
        for y, e in g.adjacency[z]:
            if e in skip or (blocked >> y) & 1 or y == v:
                continue
            cf = colors[e]
            if cf != cz or (y, e) in seen_arcs:
                continue
            seen_arcs.add((y, e))
            mark(y, cf)
    return good


def _iter_paths(
    g: Graph,
    colors: Sequence[int],
    u: int,
    v: int,
    blocked: int = 0,
    skip: Collection[int] = (),
    first: Collection[int] | None = None,
    last: Collection[int] | None = None,
    step_limit: int | None = None,
    prune: bool = True,
) -> Iterator[list[int]]:
    """DFS over simple u-v paths that are proper; yields in deterministic order
    (neighbours by increasing id).  Raises _Overflow past ``step_limit`` steps."""
    if (blocked >> u) & 1 or (blocked >> v) & 1:
        return
    good = _coreachable(g, colors, u, v, blocked, skip, last) if prune else None
    if good is not None and (u, -1) not in good:
        return
    adj = g.adjacency
    visited = blocked | (1 << u)
    path = [u]
    in_color = [-1]
    stack = [iter(adj[u])]
    steps = 0
    while stack:
        x = path[-1]
        cin = in_color[-1]
        pushed = False
        for w, e in stack[-1]:
            if (visited >> w) & 1 or e in skip:
                continue
            ce = colors[e]
            if cin == -1:
                if first is not None and ce not in first and ce != 0:
                    continue
            elif not _ok(cin, ce):
                continue
            steps += 1
            if step_limit is not None and steps > step_limit:
                raise _Overflow
            if w == v:
                if last is None or ce in last or ce == 0:
                    yield path + [v]
                continue
            if good is not None and (w, ce) not in good:
                continue
            path.append(w)
            in_color.append(ce)
            visited |= 1 << w
            stack.append(iter(adj[w]))
            pushed = True
            break
        if not pushed:
            stack.pop()
            path.pop()
            in_color.pop()
            visited &= ~(1 << x)


def _mask(vs: Collection[int]) -> int:
    m = 0
    for x in vs:
        m |= 1 << x
    return m


def find_proper_path(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    u: int,
    v: int,
    avoid: Collection[int] = (),
    skip_edges: Collection[int] = (),
    first: Collection[int] | None = None,
    last: Collection[int] | None = None,
) -> list[int] | None:
    """Exact search for one proper u-v path under optional constraints.

    ``avoid`` vertices may not be used, ``skip_edges`` may not be traversed,
    ``first``/``last`` restrict the start/end colour.  Pruned DFS first; if it
    runs past DFS_STEP_LIMIT the query is answered by the matching engine.
    """
    colors = _colors_of(c)
    try:
        return next(
            _iter_paths(
                g, colors, u, v, _mask(avoid), set(skip_edges), first, last, DFS_STEP_LIMIT
            ),
            None,
        )
    except _Overflow:
        return proper_path_by_matching(g, colors, u, v, avoid, skip_edges, first, last)


def exists_proper_path(
    g: Graph, c: EdgeColoring | Sequence[int], u: int, v: int
) -> ProperPath | None:
    if u == v:
        raise PreconditionError("endpoints must differ")
    colors = _colors_of(c)
    seq = find_proper_path(g, colors, u, v)
    return None if seq is None else ProperPath.build(g, colors, seq)


@dataclass
class PathEnumeration:
    paths: list[ProperPath]
    truncated: bool


def enumerate_proper_paths(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    u: int,
    v: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> PathEnumeration:
    """Every proper simple u-v path (plain DFS, no walk pruning), up to ``cap``."""
    if u == v:
        raise PreconditionError("endpoints must differ")
    colors = _colors_of(c)
    out: list[ProperPath] = []
    for seq in _iter_paths(g, colors, u, v, prune=False):
        if cap is not None and len(out) >= cap:
            return PathEnumeration(out, True)
        out.append(ProperPath.build(g, colors, seq))
    return PathEnumeration(out, False)


# ---------------------------------------------------------------------------
# verifiers


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("graph must be connected")


def _pairs(g: Graph) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(g.n), 2))


def is_proper_connected(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    witnesses: bool = False,
    stop_at_first: bool = False,
) -> VerificationReport:
    _require_connected(g)
    colors = _colors_of(c)
    rep = VerificationReport(True, mode="proper")
    for u, v in _pairs(g):
        seq = find_proper_path(g, colors, u, v)
        if seq is None:
            rep.holds = False
            rep.failures.append((u, v))
            if stop_at_first:
                break
        elif witnesses:
            rep.witnesses[(u, v)] = (ProperPath.build(g, colors, seq),)
    return rep


def strong_pair(
    g: Graph, c: EdgeColoring | Sequence[int], u: int, v: int
) -> tuple[ProperPath, ProperPath] | None:
    """Two proper u-v paths with distinct start colours and distinct end colours.

    Take any path P = (s, t).  A partner avoiding s and t at once settles it.
    Otherwise every path starts with s or ends with t, so a valid pair must be
    one path (s, not t) and one path (not s, t).  At most four queries.
    """
    colors = _colors_of(c)
    palette = set(colors)
    p = find_proper_path(g, colors, u, v)
    if p is None:
        return None
    s, t = colors[g.edge_id(p[0], p[1])], colors[g.edge_id(p[-2], p[-1])]
    q = find_proper_path(g, colors, u, v, first=palette - {s}, last=palette - {t})
    if q is not None:
        return ProperPath.build(g, colors, p), ProperPath.build(g, colors, q)
    a = find_proper_path(g, colors, u, v, first=(s,), last=palette - {t})
    if a is None:
        return None
    b = find_proper_path(g, colors, u, v, first=palette - {s}, last=(t,))
    if b is None:
        return None
    return ProperPath.build(g, colors, a), ProperPath.build(g, colors, b)


def has_strong_property(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    witnesses: bool = True,
    stop_at_first: bool = False,
) -> VerificationReport:
    _require_connected(g)
    colors = _colors_of(c)
    rep = VerificationReport(True, mode="strong")
    for u, v in _pairs(g):
        pair = strong_pair(g, colors, u, v)
        if pair is None:
            rep.holds = False
            rep.failures.append((u, v))
            if stop_at_first:
                break
        elif witnesses:
            rep.witnesses[(u, v)] = pair
    return rep


class _Counter:
    def __init__(self, cap: int | None) -> None:
        self.cap = cap
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.cap is not None and self.count > self.cap:
            raise BudgetExceeded(f"path enumeration cap {self.cap} exceeded")


def _disjoint_paths(
    g: Graph,
    colors: Sequence[int],
    u: int,
    v: int,
    k: int,
    avoid: frozenset[int],
    skip: frozenset[int],
    counter: _Counter,
) -> list[list[int]] | None:
    if k == 1:
        seq = find_proper_path(g, colors, u, v, avoid, skip)
        return None if seq is None else [seq]
    for seq in _iter_paths(g, colors, u, v, _mask(avoid), skip):
        counter.tick()
        if len(seq) == 2:
            rest = _disjoint_paths(
                g, colors, u, v, k - 1, avoid, skip | {g.edge_id(u, v)}, counter
            )
        else:
            rest = _disjoint_paths(
                g, colors, u, v, k - 1, avoid | frozenset(seq[1:-1]), skip, counter
            )
        if rest is not None:
            return [seq] + rest
    return None


def disjoint_proper_paths(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    u: int,
    v: int,
    k: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> list[ProperPath] | None:
    """k proper u-v paths, pairwise internally vertex-disjoint, or None.

    The first path ranges over the enumerated proper paths, each further path is
    searched in what remains; exceeding ``cap`` enumerated paths raises.
    """
    colors = _colors_of(c)
    found = _disjoint_paths(g, colors, u, v, k, frozenset(), frozenset(), _Counter(cap))
    if found is None:
        return None
    return [ProperPath.build(g, colors, s) for s in found]


def is_k_proper_connected(
    g: Graph,
    c: EdgeColoring | Sequence[int],
    k: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    witnesses: bool = False,
    stop_at_first: bool = False,
    check_connectivity: bool = True,
) -> VerificationReport:
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if check_connectivity and not g.is_k_connected(k):
        raise PreconditionError(f"graph is not {k}-connected")
    if k == 1:
        rep = is_proper_connected(g, c, witnesses, stop_at_first)
        rep.mode = "k=1"
        return rep
    colors = _colors_of(c)
    rep = VerificationReport(True, mode=f"k={k}")
    for u, v in _pairs(g):
        found = disjoint_proper_paths(g, colors, u, v, k, cap)
        if found is None:
            rep.holds = False
            rep.failures.append((u, v))
            if stop_at_first:
                break
        elif witnesses:
            rep.witnesses[(u, v)] = tuple(found)
    return rep
