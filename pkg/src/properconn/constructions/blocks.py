"""Colourings built from the block / bridge structure: trees, cycles, strong
colourings of 2-connected blocks, bridgeless graphs, pendant extensions,
composition across a cut-edge, and the general max{3, Delta(G*)} colouring."""

from __future__ import annotations

from typing import Sequence

from ..errors import ConstructionDefect, PreconditionError
from ..families import gen_cycle, gen_cycle_chord
from ..graph import (
    DEFAULT_SEARCH_BUDGET,
    Graph,
    bipartition,
    blocks_and_cuts,
    bridge_block_tree,
    bridges,
    is_two_connected,
)
from ..paths import EdgeColoring, exists_proper_path, is_proper_connected, strong_pair
from ..solver import search_coloring
from .common import (
    ColoredCore,
    PendantSet,
    StrongColoring,
    ensure,
    finalize,
    note,
    palette_size,
    require_connected,
)


def color_tree(t: Graph, trace: list[str] | None = None) -> EdgeColoring:
    """Proper edge colouring of a tree with exactly Delta colours.

    Rooted at 0; each child edge takes the smallest colour differing from the
    parent edge and from earlier sibling edges.
    """
    if t.n < 2 or not t.is_tree():
        raise PreconditionError("color_tree needs a tree with at least 2 vertices")
    colors = [0] * t.m
    stack = [(0, -1, 0)]
    while stack:
        x, parent, pcol = stack.pop()
        used = {pcol}
        nxt = 1
        for w, e in t.adjacency[x]:
            if w == parent:
                continue
            while nxt in used:
                nxt += 1
            colors[e] = nxt
            used.add(nxt)
            stack.append((w, x, nxt))
    c = EdgeColoring(tuple(colors), max(colors))
    if palette_size(c) != t.max_degree():
        raise ConstructionDefect("tree colouring does not use exactly Delta colours")
    note(trace, f"tree: proper edge colouring with {t.max_degree()} colours")
    return ensure(t, c, "proper", "color_tree")


def color_cycle(n: int) -> EdgeColoring:
    """Colouring of ``gen_cycle(n)``: 1,2 alternating; odd n closes with colour 3."""
    g = gen_cycle(n)
    colors = [1 if i % 2 == 0 else 2 for i in range(n)]
    if n % 2:
        colors[-1] = 3
    c = EdgeColoring(tuple(colors), max(colors))
    return ensure(g, c, "k2" if n % 2 == 0 else "proper", "color_cycle")


def chord_cycle_assignment(g: Graph, seq: Sequence[int]) -> dict[int, int]:
    """Two-colouring of the cycle ``seq`` plus the chord seq[-2]-seq[0].

    Odd length: edges v_{2i-1}v_{2i} get colour 1, every other cycle edge and the
    chord colour 2.  Even length: alternate around the cycle, chord colour 1.
    """
    n = len(seq)
    assign = {}
    for i in range(n - 1):
        assign[g.edge_id(seq[i], seq[i + 1])] = 1 if i % 2 == 0 else 2
    assign[g.edge_id(seq[-1], seq[0])] = 2
    assign[g.edge_id(seq[-2], seq[0])] = 1 if n % 2 == 0 else 2
    return assign


def color_cycle_chord(n: int) -> tuple[Graph, EdgeColoring]:
    g = gen_cycle_chord(n)
    c = finalize(g, chord_cycle_assignment(g, list(range(n))))
    if palette_size(c) != 2:
        raise ConstructionDefect("cycle-plus-chord colouring must use exactly 2 colours")
    return g, ensure(g, c, "k2", "color_cycle_chord")


def strong_color_block(
    b: Graph,
    max_colors: int | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> StrongColoring:
    """Complete search for a colouring with the strong property on a 2-connected block.

    The palette defaults to 2 for bipartite blocks and 3 otherwise; a colouring
    within that palette always exists, so failing to find one is a defect.
    """
    if not is_two_connected(b):
        raise PreconditionError("strong_color_block needs a 2-connected graph")
    if max_colors is None:
        max_colors = 2 if bipartition(b) is not None else 3
    colors = search_coloring(b, max_colors, "strong", budget)
    if colors is None:
        raise ConstructionDefect(f"no strong colouring with {max_colors} colours found")
    c = EdgeColoring(tuple(colors), max(colors))
    ensure(b, c, "strong", "strong_color_block")
    return StrongColoring(c, True)


def color_bridgeless(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> StrongColoring:
    """Strong colouring of a connected bridgeless graph, peeling end-blocks.

    Each end-block (the lexicographically least one) is strong-coloured on its
    own and removed except for its cut vertex; block colourings are simply
    united, since paths glue at the cut vertex with differing start/end colours.
    """
    require_connected(g, "color_bridgeless")
    if bridges(g):
        raise PreconditionError("color_bridgeless: graph has a bridge")
    remaining = set(range(g.n))
    assign: dict[int, int] = {}
    while True:
        sub, host_of = g.induced_subgraph(remaining)
        dec = blocks_and_cuts(sub)
        if len(dec.blocks) == 1:
            block, cut = dec.blocks[0], None
        else:
            ends = dec.end_blocks()
            i = min(ends, key=lambda j: dec.blocks[j])
            block = dec.blocks[i]
            cut = next(v for v in block if v in set(dec.cut_vertices))
        blk, bhost = sub.induced_subgraph(block)
        sc = strong_color_block(blk, budget=budget)
        hosts = [host_of[v] for v in bhost]
        for e, (a, b2) in enumerate(blk.edges):
            assign[g.edge_id(hosts[a], hosts[b2])] = sc.coloring[e]
        note(
            trace,
            f"bridgeless: block {hosts} strong-coloured with {palette_size(sc.coloring)} colours",
        )
        if cut is None:
            break
        remaining -= {host_of[v] for v in block if v != cut}
    c = finalize(g, assign)
    ensure(g, c, "strong", "color_bridgeless")
    bound = 2 if bipartition(g) is not None else 3
    if palette_size(c) > bound:
        raise ConstructionDefect(f"bridgeless colouring exceeds {bound} colours")
    return StrongColoring(c, True)


def _other_color(x: int) -> int:
    return 2 if x == 1 else 1


def extend_two_attachments(
    g: Graph,
    core: ColoredCore,
    attachments: Sequence[Sequence[int]],
    trace: list[str] | None = None,
) -> EdgeColoring:
    """Extend a strong k-colouring of a core by at most two pendant paths.

    Each attachment is ``[a, p1, ..., pL]`` with ``a`` in the core and the
    ``p``s new vertices forming a path.  Path edges alternate two colours.  The
    first edges are chosen against one proper path P between the two anchors:
    the first avoids start(P), the second avoids end(P); with a shared anchor
    they simply differ.  Edges not in the core or on a path get colour 1.
    """
    if len(attachments) > 2:
        raise PreconditionError("more than two attachments; use extend_pendants")
    if not core.coloring.strong:
        raise PreconditionError("core colouring lacks the strong property")
    core_set = set(core.host_of)
    seen = set(core_set)
    for seq in attachments:
        if len(seq) < 2 or seq[0] not in core_set:
            raise PreconditionError(f"attachment {list(seq)} must start at a core vertex")
        for x in seq[1:]:
            if x in seen:
                raise PreconditionError(f"vertex {x} attached twice or inside the core")
            seen.add(x)
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                raise PreconditionError(f"attachment uses missing edge ({a}, {b})")
    if len(seen) != g.n:
        raise PreconditionError("core plus attachments must span the graph")

    k = max(2, palette_size(core.coloring.coloring))
    assign = core.host_assignment(g)
    local = core.local()
    if len(attachments) == 2:
        a1, a2 = attachments[0][0], attachments[1][0]
        if a1 == a2:
            firsts = [1, 2]
        else:
            pair = strong_pair(core.graph, core.coloring.coloring, local[a1], local[a2])
            if pair is None:
                raise ConstructionDefect("core colouring is not strong between the anchors")
            p = pair[0]
            firsts = [
                min(c for c in range(1, k + 1) if c != p.start_color),
                min(c for c in range(1, k + 1) if c != p.end_color),
            ]
    else:
        firsts = [1] * len(attachments)
    for seq, x in zip(attachments, firsts):
        y = _other_color(x)
        for i, (a, b) in enumerate(zip(seq, seq[1:])):
            assign[g.edge_id(a, b)] = x if i % 2 == 0 else y
        note(trace, f"attachment {list(seq)}: alternating colours starting {x}")
    c = finalize(g, assign)
    if palette_size(c) > k:
        raise ConstructionDefect("attachment extension enlarged the palette")
    return ensure(g, c, "proper", "extend_two_attachments")


def extend_pendants(
    g: Graph,
    core: ColoredCore,
    pendants: PendantSet,
    trace: list[str] | None = None,
) -> EdgeColoring:
    """Colour ``g`` = strong-coloured core plus pendant vertices with
    max{3, #pendants} colours.

    Pendant edge j >= 4 gets colour j.  The first three pendant edges get
    colours from {1,2,3}, chosen against proper paths between their core
    neighbours according to how many of those neighbours coincide.
    """
    core_set = set(core.host_of)
    for v, u in zip(pendants.vertices, pendants.neighbors):
        if g.degree(v) != 1 or u not in core_set or not g.has_edge(u, v):
            raise PreconditionError(f"{v} is not a pendant vertex hanging on the core")
    if len(core_set) + len(pendants) != g.n or core_set & set(pendants.vertices):
        raise PreconditionError("core plus pendants must partition the vertex set")
    if not core.coloring.strong:
        raise PreconditionError("core colouring lacks the strong property")
    if palette_size(core.coloring.coloring) > 3:
        raise PreconditionError("core colouring must use at most 3 colours")

    k = len(pendants)
    if k <= 2:
        note(trace, f"pendants: {k} pendant(s), two-attachment extension")
        return extend_two_attachments(
            g, core, [[u, v] for v, u in zip(pendants.vertices, pendants.neighbors)], trace
        )

    assign = core.host_assignment(g)
    cc = core.coloring.coloring
    local = core.local()
    vs, us = pendants.vertices, pendants.neighbors
    for j in range(3, k):
        assign[g.edge_id(us[j], vs[j])] = j + 1

    def path(a: int, b: int):
        p = exists_proper_path(core.graph, cc, local[a], local[b])
        if p is None:
            raise ConstructionDefect(f"core colouring has no proper path {a}-{b}")
        return p

    def free(*avoid: int) -> list[int]:
        return [c for c in (1, 2, 3) if c not in avoid]

    u = us[:3]
    cols = [0, 0, 0]
    if u[0] == u[1] == u[2]:
        cols = [1, 2, 3]
        case = "common neighbour"
    elif len(set(u)) == 2:
        i, j = next((i, j) for i in range(3) for j in range(i + 1, 3) if u[i] == u[j])
        (l,) = {0, 1, 2} - {i, j}
        p = path(u[i], u[l])
        two = free(p.start_color)
        cols[i], cols[j] = two[0], two[1]
        cols[l] = free(p.end_color)[0]
        case = "two share a neighbour"
    else:
        p12, p13, p23 = path(u[0], u[1]), path(u[0], u[2]), path(u[1], u[2])
        cols[0] = free(p12.start_color, p13.start_color)[0]
        cols[1] = free(p12.end_color, p23.start_color)[0]
        cols[2] = free(p13.end_color, p23.end_color)[0]
        case = "distinct neighbours"
    for idx in range(3):
        assign[g.edge_id(us[idx], vs[idx])] = cols[idx]
    note(trace, f"pendants: {k} pendants ({case}), colours {cols} + {list(range(4, k + 1))}")
    c = finalize(g, assign)
    if palette_size(c) > max(3, k):
        raise ConstructionDefect("pendant extension exceeds max{3, #pendants} colours")
    return ensure(g, c, "proper", "extend_pendants")


def cut_edge_pieces(g: Graph, e: int) -> tuple[tuple[Graph, list[int]], tuple[Graph, list[int]]]:
    """The two graphs obtained by contracting either side of the cut-edge ``e``.

    Piece i is the component of ``g - e`` holding endpoint i plus the other
    endpoint as a pendant vertex; each comes with its host-id map.
    """
    a, b = g.edges[e]
    side = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for w, f in g.adjacency[x]:
            if f != e and w not in side:
                side.add(w)
                stack.append(w)
    if b in side:
        raise PreconditionError(f"edge {e} is not a bridge")
    rest = set(range(g.n)) - side
    return g.induced_subgraph(side | {b}), g.induced_subgraph(rest | {a})


def compose_cut_edge(
    g: Graph,
    e: int,
    c1: EdgeColoring,
    c2: EdgeColoring,
    trace: list[str] | None = None,
) -> EdgeColoring:
    """Merge proper-path colourings of the two cut-edge pieces of ``g``.

    The piece with fewer colours is renamed so that the cut-edge agrees and its
    colours fall inside the other palette; the merge uses the larger palette.
    """
    if e not in bridges(g):
        raise PreconditionError(f"edge {e} is not a bridge")
    (g1, h1), (g2, h2) = cut_edge_pieces(g, e)
    for piece, c, name in ((g1, c1, "first"), (g2, c2, "second")):
        c.check_against(piece)
        if not is_proper_connected(piece, c, stop_at_first=True).holds:
            raise PreconditionError(f"{name} piece colouring is not proper connected")
    a, b = g.edges[e]
    big = (g1, h1, c1)
    small = (g2, h2, c2)
    if len(set(c2.colors)) > len(set(c1.colors)):
        big, small = small, big

    def eid_in(piece: Graph, host: list[int]) -> int:
        pos = {h: i for i, h in enumerate(host)}
        return piece.edge_id(pos[a], pos[b])

    gb, hb, cb = big
    gs, hs, cs = small
    keep = cb[eid_in(gb, hb)]
    move = cs[eid_in(gs, hs)]
    rename = {move: keep}
    targets = [x for x in sorted(set(cb.colors)) if x != keep]
    sources = [x for x in sorted(set(cs.colors)) if x != move]
    rename.update(zip(sources, targets))

    assign = {}
    for f, (x, y) in enumerate(gb.edges):
        assign[g.edge_id(hb[x], hb[y])] = cb[f]
    for f, (x, y) in enumerate(gs.edges):
        assign[g.edge_id(hs[x], hs[y])] = rename[cs[f]]
    note(trace, f"cut-edge {g.edges[e]}: merged pieces, renamed {rename}")
    c = finalize(g, assign)
    return ensure(g, c, "proper", "compose_cut_edge")


def _general(g: Graph, trace: list[str] | None, budget: int) -> EdgeColoring:
    cut = bridges(g)
    if not cut:
        note(trace, f"component {list(range(g.n))}: bridgeless")
        return color_bridgeless(g, trace, budget).coloring
    for e in cut:
        (g1, h1), (g2, h2) = cut_edge_pieces(g, e)
        if g1.n >= 3 and g2.n >= 3:
            sub1 = _general(g1, trace, budget)
            sub2 = _general(g2, trace, budget)
            return compose_cut_edge(g, e, sub1, sub2, trace)
    # every bridge is a pendant edge: g is a star, or a bridgeless core plus pendants
    pend = PendantSet.of(g)
    core_vertices = [v for v in range(g.n) if v not in set(pend.vertices)]
    if len(core_vertices) <= 1:
        note(trace, f"star with {g.max_degree()} edges: distinct colours")
        return color_tree(g)
    core, host = g.induced_subgraph(core_vertices)
    sc = color_bridgeless(core, trace, budget)
    return extend_pendants(g, ColoredCore(core, tuple(host), sc), pend, trace)


def color_general(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> EdgeColoring:
    """Proper-path colouring with at most max{3, Delta(G*)} colours.

    Splits recursively at cut-edges with at least two vertices on each side;
    the leaves of the recursion are bridgeless components with their incident
    cut-edges (coloured by the bridgeless and pendant constructions) or stars.
    """
    require_connected(g, "color_general")
    bound = max(3, bridge_block_tree(g).max_degree())
    c = _general(g, trace, budget)
    if palette_size(c) > bound:
        raise ConstructionDefect(f"general colouring uses {palette_size(c)} > {bound} colours")
    return ensure(g, c, "proper", "color_general")
