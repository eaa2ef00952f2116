"""Dense graphs: spanning 2-connected bipartite subgraphs and the 2- and
3-colourings driven by edge-count thresholds.

A spanning bipartite subgraph is grown from a 4-cycle by absorbing one vertex
at a time through two edges into the opposite side ("ears" of length two).
Colouring the 4-cycle 1,2,1,2 and each ear (w, a, b) with c(wa)=1, c(wb)=2
gives the strong property: with two colours in a bipartite graph the end
colour of a proper path is fixed by its start colour and the sides of its
ends, so it suffices that both start colours are available, and each ear
inherits that from the pair (a, b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from ..errors import BudgetExceeded, ConstructionDefect, PreconditionError
from ..families import dense_thresholds
from ..graph import DEFAULT_SEARCH_BUDGET, Graph, bridges, is_two_connected
from ..paths import EdgeColoring
from ..solver import pc_exact, search_coloring
from .blocks import color_bridgeless, compose_cut_edge, cut_edge_pieces, extend_two_attachments
from .common import (
    ColoredCore,
    StrongColoring,
    ensure,
    finalize,
    note,
    palette_size,
    require_connected,
)

_FALLBACK_BUDGET = 2_000_000


@dataclass(frozen=True)
class BipartiteSpanning:
    """Bipartition (X, Y) of a spanning 2-connected bipartite subgraph, with the
    4-cycle and ears (w, a, b) that certify it, in order of absorption."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    seed: tuple[int, int, int, int]
    ears: tuple[tuple[int, int, int], ...]

    def side_of(self, x: int) -> int:
        return 0 if x in self.X else 1


def _greedy_extract(g: Graph, u: int, v: int, alive: Iterable[int] | None = None) -> BipartiteSpanning | None:
    """Grow B[S, {u, v}] (S = common neighbours) by absorbing any vertex with two
    neighbours on one side into the other side.  None if it stalls."""
    pool = set(range(g.n)) if alive is None else set(alive)
    common = sorted(set(g.neighbors(u)) & set(g.neighbors(v)) & pool)
    if u == v or len(common) < 2:
        return None
    side = {u: 0, v: 0}
    for s in common:
        side[s] = 1
    s1, s2 = common[0], common[1]
    ears = [(s, u, v) for s in common[2:]]
    rest = sorted(pool - set(side))
    progress = True
    while rest and progress:
        progress = False
        for w in rest:
            on = ([a for a in g.neighbors(w) if side.get(a) == 0], [a for a in g.neighbors(w) if side.get(a) == 1])
            for s in (0, 1):
                if len(on[s]) >= 2:
                    side[w] = 1 - s
                    ears.append((w, on[s][0], on[s][1]))
                    break
            if w in side:
                rest.remove(w)
                progress = True
                break
    if rest:
        return None
    X = tuple(sorted(x for x, s in side.items() if s == 0))
    Y = tuple(sorted(x for x, s in side.items() if s == 1))
    return BipartiteSpanning(X, Y, (u, s1, v, s2), tuple(ears))


def _add_ear(sp: BipartiteSpanning, w: int, nbrs: Sequence[int]) -> BipartiteSpanning | None:
    for part, other in ((sp.X, "Y"), (sp.Y, "X")):
        hits = [a for a in nbrs if a in set(part)]
        if len(hits) >= 2:
            X, Y = set(sp.X), set(sp.Y)
            (Y if other == "Y" else X).add(w)
            return BipartiteSpanning(
                tuple(sorted(X)), tuple(sorted(Y)), sp.seed, sp.ears + ((w, hits[0], hits[1]),)
            )
    return None


def _crossing_subgraph(g: Graph, sp: BipartiteSpanning) -> Graph:
    xs = set(sp.X)
    return Graph.canonical(g.n, [(a, b) for a, b in g.edges if (a in xs) != (b in xs)])


def check_bipartite_spanning(g: Graph, sp: BipartiteSpanning, alive: Iterable[int] | None = None) -> bool:
    pool = set(range(g.n)) if alive is None else set(alive)
    if set(sp.X) | set(sp.Y) != pool or set(sp.X) & set(sp.Y):
        return False
    sub, _ = g.induced_subgraph(sorted(pool))
    local = {h: i for i, h in enumerate(sorted(pool))}
    loc = BipartiteSpanning(
        tuple(local[x] for x in sp.X), tuple(local[y] for y in sp.Y), sp.seed, ()
    )
    return is_two_connected(_crossing_subgraph(sub, loc))


def _recursive_extract(g: Graph, alive: list[int]) -> BipartiteSpanning | None:
    """Peel minimum-degree vertices down to 12 vertices, then grow greedily."""
    sub, host = g.induced_subgraph(alive)
    if sub.is_complete():
        return _greedy_extract(g, alive[0], alive[1], alive)
    if len(alive) <= 12:
        for a, b in itertools.combinations(alive, 2):
            sp = _greedy_extract(g, a, b, alive)
            if sp is not None:
                return sp
        return None
    v = host[min(range(sub.n), key=lambda x: (sub.degree(x), x))]
    nbrs = [host[x] for x in sub.neighbors(host.index(v))]
    rest = [x for x in alive if x != v]
    if len(nbrs) == 2:
        sp = _greedy_extract(g, nbrs[0], nbrs[1], rest)
    else:
        h, _ = g.induced_subgraph(rest)
        if not is_two_connected(h):
            raise ConstructionDefect("peeling a minimum-degree vertex broke 2-connectivity")
        sp = _recursive_extract(g, rest)
    return None if sp is None else _add_ear(sp, v, nbrs)


def extract_bipartite_spanning(
    g: Graph, u: int | None = None, v: int | None = None, strict: bool = True
) -> BipartiteSpanning:
    """Spanning 2-connected bipartite subgraph of a dense graph.

    With ``u, v``: grown from their common neighbourhood, u and v end up on
    the same side (needs n >= 6 and m >= C(n-1,2)+3).  Without: minimum-degree
    vertices are peeled recursively (needs g 2-connected, n >= 12 and
    m >= C(n-1,2)-5).  ``strict=False`` skips the edge-count preconditions;
    the result is checked either way.
    """
    n, m = g.n, g.m
    if (u is None) != (v is None):
        raise PreconditionError("give both u and v, or neither")
    if u is not None:
        if strict and (n < 6 or m < comb(n - 1, 2) + 3):
            raise PreconditionError(f"needs n >= 6 and m >= {comb(n - 1, 2) + 3} (n={n}, m={m})")
        if u == v:
            raise PreconditionError("u and v must differ")
        sp = _greedy_extract(g, u, v)
    else:
        if strict and (n < 12 or m < comb(n - 1, 2) - 5):
            raise PreconditionError(f"needs n >= 12 and m >= {comb(n - 1, 2) - 5} (n={n}, m={m})")
        if not is_two_connected(g):
            raise PreconditionError("graph must be 2-connected")
        sp = _recursive_extract(g, list(range(n)))
    if sp is None:
        if strict:
            raise ConstructionDefect("bipartite augmentation stalled although the edge count forbids it")
        raise PreconditionError("bipartite augmentation stalled")
    if not check_bipartite_spanning(g, sp):
        raise ConstructionDefect("extracted bipartite subgraph is not spanning and 2-connected")
    return sp


def color_bipartite_strong(g: Graph, sp: BipartiteSpanning, alive: Iterable[int] | None = None) -> dict[int, int]:
    """Ear-based 2-colouring of the certified edges (host edge ids)."""
    u, s1, v, s2 = sp.seed
    assign = {
        g.edge_id(u, s1): 1,
        g.edge_id(s1, v): 2,
        g.edge_id(v, s2): 1,
        g.edge_id(s2, u): 2,
    }
    for w, a, b in sp.ears:
        assign[g.edge_id(w, a)] = 1
        assign[g.edge_id(w, b)] = 2
    return assign


def _seed_extraction(g: Graph) -> BipartiteSpanning | None:
    for a, b in itertools.combinations(range(g.n), 2):
        sp = _greedy_extract(g, a, b)
        if sp is not None:
            return sp
    return None


def strong_two_coloring(
    g: Graph, trace: list[str] | None = None, budget: int = _FALLBACK_BUDGET
) -> StrongColoring | None:
    """Strong 2-colouring of ``g`` if one is found.

    Uses the recursive extraction when its edge count holds, else greedy
    growth from each seed pair, else a complete search limited by ``budget``.
    """
    sp = None
    if g.n >= 12 and g.m >= comb(g.n - 1, 2) - 5 and is_two_connected(g):
        sp = extract_bipartite_spanning(g)
        how = "peeling extraction"
    else:
        sp = _seed_extraction(g)
        how = "greedy extraction"
    if sp is not None:
        c = finalize(g, color_bipartite_strong(g, sp))
        note(trace, f"{how}: X={list(sp.X)} Y={list(sp.Y)}, ear 2-colouring")
    else:
        try:
            colors = search_coloring(g, 2, "strong", budget)
        except BudgetExceeded:
            colors = None
        if colors is None:
            return None
        c = EdgeColoring(tuple(colors), 2)
        note(trace, "no bipartite extraction; strong 2-colouring by search")
    ensure(g, c, "strong", "strong_two_coloring")
    return StrongColoring(c, True)


def _core(g: Graph, keep: Sequence[int], trace: list[str] | None) -> ColoredCore:
    sub, host = g.induced_subgraph(keep)
    sc = strong_two_coloring(sub, trace)
    if sc is None:
        raise ConstructionDefect("core admits no strong 2-colouring found by extraction or search")
    return ColoredCore(sub, tuple(host), sc)


def _attachment_plans(g: Graph, core: set[int], extra: Sequence[int]):
    """Ways to cover ``extra`` by at most two paths hanging off the core."""
    extra = list(extra)
    for k in (1, 2):
        for labels in itertools.product(range(k), repeat=len(extra)):
            if len(set(labels)) != k or (k == 2 and labels[0] != 0):
                continue
            groups = [[x for x, l in zip(extra, labels) if l == i] for i in range(k)]
            options = []
            for grp in groups:
                seqs = []
                for perm in itertools.permutations(grp):
                    if not all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                        continue
                    anchors = sorted(a for a in g.neighbors(perm[0]) if a in core)
                    if anchors:
                        seqs.append([anchors[0], *perm])
                options.append(seqs)
            for combo in itertools.product(*options):
                yield list(combo)


def _attach(g: Graph, core: ColoredCore, extra: Sequence[int], trace: list[str] | None) -> EdgeColoring:
    cs = set(core.host_of)
    for plan in _attachment_plans(g, cs, extra):
        note(trace, f"reattach {sorted(extra)} as paths {plan}")
        return extend_two_attachments(g, core, plan, trace)
    raise ConstructionDefect(f"vertices {sorted(extra)} do not form two paths hanging off the core")


def _two_colors(g: Graph, c: EdgeColoring, what: str) -> EdgeColoring:
    if palette_size(c) != 2:
        raise ConstructionDefect(f"{what}: expected exactly 2 colours, got {palette_size(c)}")
    return ensure(g, c, "proper", what)


def _min_degree_vertex(g: Graph, alive: Sequence[int]) -> int:
    sub, host = g.induced_subgraph(alive)
    return host[min(range(sub.n), key=lambda x: (sub.degree(x), x))]


def color_dense_two(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> EdgeColoring:
    """Proper-path 2-colouring of a noncomplete graph with n >= 14 and
    m >= C(n-3,2)+4.

    3-connected graphs are 2-coloured through a spanning bipartite subgraph.
    Otherwise up to three low-degree vertices (v, then u, then a pendant w of
    G - u - v) are set aside, the dense rest gets a strong 2-colouring and the
    set-aside vertices are reattached as at most two hanging paths.
    """
    require_connected(g, "color_dense_two")
    n, m = g.n, g.m
    th = dense_thresholds(n)
    if th is None or not th.two_lo <= m <= th.two_hi:
        lo = th.two_lo if th else "n/a"
        raise PreconditionError(f"needs n >= 14 and {lo} <= m <= C(n,2)-1 (n={n}, m={m})")
    if g.is_k_connected(3):
        note(trace, "dense2: 3-connected")
        sc = strong_two_coloring(g, trace, budget)
        if sc is not None:
            return _two_colors(g, sc.coloring, "color_dense_two")
        colors = search_coloring(g, 2, "proper", budget)
        if colors is None:
            raise ConstructionDefect("3-connected dense graph has no proper-path 2-colouring")
        note(trace, "dense2: 2-colouring by search")
        return _two_colors(g, EdgeColoring(tuple(colors), 2), "color_dense_two")

    if g.min_degree() > 5:
        raise ConstructionDefect("connectivity <= 2 with minimum degree > 5 contradicts the edge count")
    v = _min_degree_vertex(g, range(n))
    rest = [x for x in range(n) if x != v]
    h, _ = g.induced_subgraph(rest)
    if h.is_k_connected(3):
        note(trace, f"dense2: removed minimum-degree vertex {v}, remainder 3-connected")
        return _two_colors(g, _attach(g, _core(g, rest, trace), [v], trace), "color_dense_two")

    if h.min_degree() > 4:
        raise ConstructionDefect("second peel: minimum degree > 4 contradicts the edge count")
    u = _min_degree_vertex(g, rest)
    rest = [x for x in rest if x != u]
    f, fhost = g.induced_subgraph(rest)
    if is_two_connected(f):
        note(trace, f"dense2: removed {v} then {u}; remainder 2-connected")
        return _two_colors(g, _attach(g, _core(g, rest, trace), [u, v], trace), "color_dense_two")

    pend = [fhost[x] for x in range(f.n) if f.degree(x) == 1]
    if not pend:
        raise ConstructionDefect("remainder has a cut vertex but no pendant vertex")
    w = pend[0]
    if g.degree(w) < 2:
        raise ConstructionDefect("pendant of the remainder is pendant in G, contradicting the edge count")
    rest = [x for x in rest if x != w]
    note(trace, f"dense2: removed {v}, {u}, then pendant {w} of the remainder")
    return _two_colors(g, _attach(g, _core(g, rest, trace), [u, v, w], trace), "color_dense_two")


def _color_big_piece(piece: Graph, pendant: int, trace: list[str] | None) -> EdgeColoring:
    """Big side of a cut-edge plus the cut-edge as a pendant edge."""
    keep = [x for x in range(piece.n) if x != pendant]
    sub, host = piece.induced_subgraph(keep)
    sc = strong_two_coloring(sub, trace)
    if sc is not None:
        return _attach(piece, ColoredCore(sub, tuple(host), sc), [pendant], trace)
    from .blocks import color_general

    note(trace, "dense3: big side without strong 2-colouring, general construction")
    return color_general(piece, trace)


def color_dense_three(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> EdgeColoring:
    """Proper-path colouring with at most 3 colours when n >= 15 and
    m >= C(n-4,2)+5.

    Bridgeless graphs use the bridgeless construction; a pendant vertex is
    removed, the rest 2-coloured, and the pendant edge gets colour 3; otherwise
    a cut-edge splits off 3 or 4 vertices and the two pieces are composed.
    """
    require_connected(g, "color_dense_three")
    n, m = g.n, g.m
    th = dense_thresholds(n)
    if th is None or th.three_lo is None or m < th.three_lo:
        lo = th.three_lo if th else None
        raise PreconditionError(f"needs n >= 15 and m >= {lo or 'C(n-4,2)+5'} (n={n}, m={m})")
    cut = bridges(g)
    if not cut:
        note(trace, "dense3: bridgeless")
        c = color_bridgeless(g, trace, budget).coloring
    elif g.min_degree() == 1:
        v = _min_degree_vertex(g, range(n))
        rest = [x for x in range(n) if x != v]
        h, host = g.induced_subgraph(rest)
        if h.is_complete():
            note(trace, f"dense3: pendant {v}, remainder complete")
            assign = {g.edge_id(host[a], host[b]): 1 for a, b in h.edges}
        else:
            note(trace, f"dense3: pendant {v}, remainder 2-coloured")
            ch = color_dense_two(h, trace, budget)
            assign = {g.edge_id(host[a], host[b]): ch[e] for e, (a, b) in enumerate(h.edges)}
        (a,) = g.neighbors(v)
        assign[g.edge_id(a, v)] = 3
        c = finalize(g, assign)
    else:
        chosen = None
        for e in cut:
            (p1, h1), (p2, h2) = cut_edge_pieces(g, e)
            small = min(p1.n, p2.n) - 1
            if 3 <= small <= 4:
                chosen = (e, (p1, h1), (p2, h2))
                break
        if chosen is None:
            raise ConstructionDefect("no cut-edge splits off 3 or 4 vertices")
        e, (p1, h1), (p2, h2) = chosen
        a, b = g.edges[e]
        pieces = []
        for piece, host, far in ((p1, h1, b), (p2, h2, a)):
            if piece.n <= 5:
                r = pc_exact(piece, budget)
                note(trace, f"dense3: small side {sorted(host)} coloured exactly, pc = {r.value}")
                pieces.append(r.witness)
            else:
                note(trace, f"dense3: large side of cut-edge ({a}, {b})")
                pieces.append(_color_big_piece(piece, host.index(far), trace))
        c = compose_cut_edge(g, e, pieces[0], pieces[1], trace)
    if palette_size(c) > 3:
        raise ConstructionDefect(f"dense 3-colouring uses {palette_size(c)} colours")
    return ensure(g, c, "proper", "color_dense_three")
