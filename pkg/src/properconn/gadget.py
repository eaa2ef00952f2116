"""Polynomial decision of proper u-v path existence by perfect matching.

Each edge ``f = xy`` becomes two endpoint nodes joined by an edge (matching
them means "f unused").  An internal vertex with ``r >= 2`` colour classes gets
one class node per colour, ``r - 2`` absorber nodes and a linked pair ``p, q``;
this gadget can be perfectly matched exactly when 0 or 2 endpoint nodes of
distinct colours are left to it.  The terminals get one node each that must
absorb exactly one endpoint.  A perfect matching therefore selects a set of
used edges in which u and v have degree one and every other vertex has degree
0 or 2 with distinct colours: a proper u-v path plus vertex-disjoint proper
cycles, and the path component alone is a witness.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Collection, Sequence

import networkx as nx

from .graph import Graph


def proper_path_by_matching(
    g: Graph,
    colors: Sequence[int],
    u: int,
    v: int,
    banned: Collection[int] = (),
    skip_edges: Collection[int] = (),
    first: Collection[int] | None = None,
    last: Collection[int] | None = None,
) -> list[int] | None:
    if u == v:
        raise ValueError("endpoints must differ")
    banned = set(banned)
    skip = set(skip_edges)
    present = [
        e
        for e, (a, b) in enumerate(g.edges)
        if e not in skip and a not in banned and b not in banned
    ]
    H = nx.Graph()
    incident: dict[int, list[int]] = defaultdict(list)
    for e in present:
        a, b = g.edges[e]
        H.add_edge(("e", e, a), ("e", e, b))
        incident[a].append(e)
        incident[b].append(e)

    for x, es in incident.items():
        if x == u or x == v:
            allowed = first if x == u else last
            term = ("s",) if x == u else ("t",)
            H.add_node(term)
            for e in es:
                if allowed is None or colors[e] in allowed:
                    H.add_edge(term, ("e", e, x))
            continue
        classes: dict[int, list[int]] = defaultdict(list)
        for e in es:
            classes[colors[e]].append(e)
        if len(classes) < 2:
            continue
        anodes = []
        for col, ces in classes.items():
            a = ("a", x, col)
            anodes.append(a)
            for e in ces:
                H.add_edge(a, ("e", e, x))
        extra = [("z", x, i) for i in range(len(classes) - 2)] + [("p", x), ("q", x)]
        for z in extra:
            for a in anodes:
                H.add_edge(z, a)
        H.add_edge(("p", x), ("q", x))

    if ("s",) not in H or ("t",) not in H:
        return None
    mate = nx.max_weight_matching(H, maxcardinality=True)
    if 2 * len(mate) != H.number_of_nodes():
        return None
    partner = {}
    for a, b in mate:
        partner[a] = b
        partner[b] = a

    used = set()
    for e in present:
        a, b = g.edges[e]
        if partner[("e", e, a)] != ("e", e, b):
            used.add(e)
    # walk the path component from u
    path = [u]
    prev_edge = -1
    x = u
    while x != v:
        nxt = [e for e in incident[x] if e in used and e != prev_edge]
        e = nxt[0]
        x = g.other(e, x)
        path.append(x)
        prev_edge = e
    return path
