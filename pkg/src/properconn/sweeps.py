"""Test corpora and the named validation suites.

Each suite returns a SuiteResult with one row per checked case; the CLI
prints them as a table and the acceptance tests assert on them.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, comb
from typing import Callable, Iterator

import networkx as nx

from .constructions import (
    color_bridgeless,
    color_cycle_chord,
    color_dense_three,
    color_dense_two,
    color_dirac_pc2,
    color_general,
    color_ore_pc2,
    ore_edge_bound,
)
from .constructions.common import palette_size
from .families import (
    EdgeCount,
    MinDegree,
    OreSum,
    dense_thresholds,
    f_lower_bound,
    gen_complete,
    gen_gk,
    gen_petersen,
    gen_prism,
    gen_random_graph,
    gen_srt,
    gen_star,
    gen_theta,
    gen_wheel,
)
from .graph import Graph, bipartition, bridge_block_tree, bridges
from .paths import (
    _iter_paths,
    exists_proper_path,
    has_strong_property,
    is_k_proper_connected,
    is_proper_connected,
)
from .rng import SplitMix64
from .solver import pc_exact, pc_k_exact

# unlabeled trees on n = 1..9 vertices (OEIS A000055)
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


@dataclass
class SuiteResult:
    name: str
    rows: list[tuple[str, bool, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.rows) and bool(self.rows)

    def add(self, case: str, ok: bool, detail: str = "") -> None:
        self.rows.append((case, ok, detail))

    def failures(self) -> list[tuple[str, bool, str]]:
        return [r for r in self.rows if not r[1]]

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "cases": len(self.rows),
            "failures": [{"case": c, "detail": d} for c, _, d in self.failures()],
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# corpora


def _from_nx(G: nx.Graph) -> Graph:
    mapping = {x: i for i, x in enumerate(sorted(G.nodes()))}
    return Graph.canonical(len(mapping), [(mapping[a], mapping[b]) for a, b in G.edges()])


def _to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@lru_cache(maxsize=None)
def atlas_connected(max_n: int = 7, min_n: int = 2) -> tuple[Graph, ...]:
    """Every connected graph on min_n..max_n vertices, one per isomorphism class."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return tuple(
        _from_nx(G)
        for G in nx.graph_atlas_g()
        if min_n <= G.number_of_nodes() <= max_n and nx.is_connected(G)
    )


def _dedupe(graphs: Iterator[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for G in graphs:
        key = nx.weisfeiler_lehman_graph_hash(G, iterations=3)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(G, H) for H in bucket):
            continue
        bucket.append(G)
        out.append(G)
    return out


@lru_cache(maxsize=None)
def eight_vertex_min_degree(delta: int = 4) -> tuple[Graph, ...]:
    """All graphs on 8 vertices with minimum degree >= delta (delta >= 4), up to
    isomorphism: complements of the graphs with maximum degree <= 7 - delta,
    each obtained by adding an eighth vertex to a 7-vertex atlas graph."""
    cap = 7 - delta
    if cap > 3:
        raise ValueError("only delta >= 4 is supported")

    def grown() -> Iterator[nx.Graph]:
        for H in nx.graph_atlas_g():
            if H.number_of_nodes() != 7 or max((d for _, d in H.degree()), default=0) > cap:
                continue
            free = [x for x in H.nodes() if H.degree(x) < cap]
            for r in range(cap + 1):
                for S in itertools.combinations(free, r):
                    G = H.copy()
                    G.add_node(7)
                    G.add_edges_from((7, s) for s in S)
                    yield G

    comps = [nx.complement(G) for G in _dedupe(grown())]
    return tuple(_from_nx(G) for G in comps if nx.is_connected(G))


def _prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    return _from_nx(nx.from_prufer_sequence(list(seq))) if n > 2 else Graph.canonical(n, [(0, 1)])


@lru_cache(maxsize=None)
def trees_up_to_iso(n: int) -> tuple[Graph, ...]:
    """Trees on n vertices from non-decreasing Prüfer sequences, deduplicated.

    Every tree shape is reached for n <= 9; this is checked against the known
    class counts in TREE_COUNTS.
    """
    if n == 1:
        return (Graph.canonical(1, []),)
    if n == 2:
        return (Graph.canonical(2, [(0, 1)]),)
    raw = (
        nx.from_prufer_sequence(list(seq))
        for seq in itertools.combinations_with_replacement(range(n), n - 2)
    )
    return tuple(_from_nx(G) for G in _dedupe(raw))


def bridgeless_corpus() -> list[tuple[str, Graph]]:
    """2-edge-connected graphs on at most 10 vertices: the atlas ones on up to
    7 vertices plus named families and seeded random ones on 8..10."""
    out = [
        (f"atlas#{i}", g)
        for i, g in enumerate(atlas_connected(7, 3))
        if not bridges(g)
    ]
    out.append(("petersen", gen_petersen()))
    out += [(f"prism{k}", gen_prism(k)) for k in (3, 4, 5)]
    out += [(f"wheel{k}", gen_wheel(k)) for k in range(3, 10)]
    out += [(f"theta{a}{b}{c}", gen_theta(a, b, c)) for a, b, c in
            [(0, 1, 1), (1, 1, 1), (1, 2, 3), (2, 2, 2), (0, 3, 5), (1, 3, 4), (2, 3, 3), (3, 3, 2)]]
    seed = 0
    while sum(1 for name, _ in out if name.startswith("random")) < 30:
        seed += 1
        rng = SplitMix64(seed)
        n = 8 + rng.below(3)
        g = gen_random_graph(n, MinDegree(2), seed)
        if g.is_connected() and not bridges(g):
            out.append((f"random-n{n}-s{seed}", g))
    return out


def spanning_pair(g: Graph, rng: SplitMix64) -> Graph:
    """Random connected spanning subgraph: a random spanning tree plus each
    other edge with probability 1/2."""
    order = list(range(g.m))
    rng.shuffle(order)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep = []
    for e in order:
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            keep.append(e)
        elif rng.below(2):
            keep.append(e)
    return Graph.canonical(g.n, [g.edges[e] for e in keep])


def canonical_colorings(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Colourings of m edges with at most k colours up to renaming colours
    (colour j+1 first appears after colour j)."""
    if m == 0:
        yield ()
        return
    seq = [1] * m

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(seq)
            return
        for c in range(1, min(k, top + 1) + 1):
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    seq[0] = 1
    yield from rec(1, 1)


def chain_gadget(n: int, extra: list[tuple[int, int]], drop: int = 0) -> Graph:
    """K_{n-3} on 0..n-4 (minus its first ``drop`` edges) with three extra
    vertices n-3, n-2, n-1 wired by ``extra``."""
    core = list(itertools.combinations(range(n - 3), 2))[drop:]
    return Graph.canonical(n, core + extra)


def dense_two_corpus() -> list[tuple[str, Graph]]:
    """25 graphs on 14..16 vertices inside the pc = 2 edge window, covering
    3-connected, one-peel, two-peel and pendant-of-remainder shapes."""
    out = []
    profiles = [(), (2,), (2, 3), (1, 2, 2), (3, 3, 3)]
    for n in (14, 15, 16):
        th = dense_thresholds(n)
        for i, low in enumerate(profiles):
            most = comb(n - len(low), 2) + sum(low)
            m = min(th.two_lo + 3 * i, most)
            out.append((f"n{n}-m{m}-low{''.join(map(str, low))}", gen_random_graph(n, EdgeCount(m, low), 100 * n + i)))
    for n in (14, 15, 16):
        u, v, w = n - 3, n - 2, n - 1
        out.append((f"n{n}-pendant-remainder", chain_gadget(n, [(w, u), (w, v), (w, 0), (u, 2), (v, 1)])))
        out.append((f"n{n}-path-uvw", chain_gadget(n, [(u, v), (v, w), (u, 0), (w, 1), (u, 2)])))
        out.append((f"n{n}-uv-pendant-w", chain_gadget(n, [(u, v), (w, u), (w, 3), (u, 1), (v, 2), (v, 4)])))
    out.append(("k14-minus-matching", _complete_minus_matching(14)))
    return out


def _complete_minus_matching(n: int) -> Graph:
    from .families import gen_complete_minus_matching

    return gen_complete_minus_matching(n)


def dense_three_corpus() -> list[tuple[str, Graph]]:
    """25 graphs on 15..16 vertices with m >= C(n-4,2)+5: bridgeless, pendant
    and bridged shapes (a triangle, K4, K4 minus an edge or C4 hanging off a
    clique by one edge)."""
    out = []
    for n in (15, 16):
        th = dense_thresholds(n)
        for i in range(4):
            m = th.three_lo + 4 * i
            out.append((f"n{n}-m{m}", gen_random_graph(n, EdgeCount(m), 300 * n + i)))
        for i in range(3):
            m = th.three_lo + 2 + 5 * i
            out.append((f"n{n}-m{m}-pendant", gen_random_graph(n, EdgeCount(m, (1,)), 400 * n + i)))
        # a pendant on K_{n-1} minus a matching
        base = _complete_minus_matching(n - 1)
        out.append((f"n{n}-kmm-pendant", Graph.canonical(n, list(base.edges) + [(0, n - 1)])))
        # bridged: triangle or K4 (or K4 minus an edge) hanging off a dense part by one edge
        for shape, small in (("triangle", [(0, 1), (1, 2), (0, 2)]),
                             ("k4", list(itertools.combinations(range(4), 2))),
                             ("k4-e", [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
                             ("c4", [(0, 1), (1, 2), (2, 3), (0, 3)])):
            s = 3 if shape == "triangle" else 4
            big = n - s
            edges = list(itertools.combinations(range(big), 2))
            edges += [(big + a, big + b) for a, b in small]
            edges.append((0, big))
            g = Graph.canonical(n, edges)
            if g.m >= th.three_lo:
                out.append((f"n{n}-bridged-{shape}", g))
    out.append(("n15-triangle-k12", chain_gadget(15, [(12, 13), (13, 14), (12, 14), (0, 12)])))
    return out


# ---------------------------------------------------------------------------
# suites


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def suite_small_values() -> SuiteResult:
    """pc(K_n) = 1, pc(K_{1,m}) = m, pc(T) = Delta(T) for every tree on <= 9 vertices."""

    def body(res: SuiteResult) -> None:
        for n in range(3, 8):
            v = pc_exact(gen_complete(n)).value
            res.add(f"K{n}", v == 1, f"pc={v}")
        for m in range(2, 6):
            v = pc_exact(gen_star(m)).value
            res.add(f"K1,{m}", v == m, f"pc={v}")
        for n in range(2, 10):
            ts = trees_up_to_iso(n)
            res.add(f"trees n={n} count", len(ts) == TREE_COUNTS[n], f"{len(ts)} shapes")
            bad = [t for t in ts if pc_exact(t).value != t.max_degree()]
            res.add(f"trees n={n} pc=Delta", not bad, f"{len(bad)} mismatches")

    return _timed("small-values", body)


def suite_pc2_landmarks() -> SuiteResult:
    from .families import gen_cycle

    def body(res: SuiteResult) -> None:
        for name, g, want in [("C5", gen_cycle(5), 3), ("C4", gen_cycle(4), 2)] + [
            (f"K{n}", gen_complete(n), 2) for n in range(4, 7)
        ]:
            v = pc_k_exact(g, 2).value
            res.add(name, v == want, f"pc2={v}")

    return _timed("pc2-landmarks", body)


def suite_cycle_chord() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for n in range(4, 17):
            g, c = color_cycle_chord(n)
            ok = palette_size(c) == 2 and is_k_proper_connected(g, c, 2).holds
            res.add(f"n={n}", ok, f"palette={palette_size(c)}")

    return _timed("cycle-chord", body)


def suite_bridgeless() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for name, g in bridgeless_corpus():
            c = color_bridgeless(g).coloring
            bound = 2 if bipartition(g) is not None else 3
            ok = palette_size(c) <= bound and has_strong_property(g, c, witnesses=False).holds
            res.add(name, ok, f"n={g.n} palette={palette_size(c)} bound={bound}")

    return _timed("bridgeless", body)


def suite_general_bound() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        bad = []
        graphs = atlas_connected(7)
        for i, g in enumerate(graphs):
            bound = max(3, bridge_block_tree(g).max_degree())
            if pc_exact(g).value > bound:
                bad.append(i)
        res.add(f"atlas n<=7 ({len(graphs)} graphs) pc <= max(3, Delta(G*))", not bad, f"violations={bad}")
        for r in range(4, 7):
            for t in (2, 3):
                g = gen_srt(r, t)
                c = color_general(g)
                bound = max(3, bridge_block_tree(g).max_degree())
                detail = f"palette={palette_size(c)} bound={bound}"
                ok = palette_size(c) == bound
                if g.n <= 9:
                    v = pc_exact(g).value
                    ok = ok and v == r
                    detail += f" pc={v}"
                res.add(f"S_{r}^{t}", ok, detail)

    return _timed("general-bound", body)


def suite_gk() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for k in (1, 2, 3):
            for n in range(k + 4, 10):
                g = gen_gk(n, k)
                v = pc_exact(g).value
                ok = v == k + 1 and g.m == f_lower_bound(n, k) - 1
                res.add(f"G_k n={n} k={k}", ok, f"pc={v} m={g.m}")

    return _timed("gk", body)


def _seeded(n: int, i: int) -> int:
    return 1_000 * n + i


def suite_dirac(per_n: int = 100) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for n in range(6, 13):
            bad = []
            for i in range(per_n):
                g = gen_random_graph(n, MinDegree(ceil(n / 2)), _seeded(n, i))
                c = color_dirac_pc2(g)
                if palette_size(c) != 2 or not is_k_proper_connected(g, c, 2).holds:
                    bad.append(i)
            res.add(f"n={n} x{per_n}", not bad, f"failed seeds={bad}")

    return _timed("dirac", body)


def suite_ore(per_n: int = 100) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for n in range(6, 13):
            bad = []
            for i in range(per_n):
                g = gen_random_graph(n, OreSum(), _seeded(n, i) + 500)
                if not ore_edge_bound(g):
                    bad.append((i, "m < n^2/4"))
                    continue
                c = color_ore_pc2(g)
                if palette_size(c) != 2 or not is_k_proper_connected(g, c, 2).holds:
                    bad.append((i, "verify"))
            res.add(f"n={n} x{per_n}", not bad, f"failed={bad}")

    return _timed("ore", body)


def suite_dense() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for name, g in dense_two_corpus():
            c = color_dense_two(g)
            ok = palette_size(c) == 2 and is_proper_connected(g, c).holds
            res.add(f"two/{name}", ok, f"m={g.m} palette={palette_size(c)}")
        for name, g in dense_three_corpus():
            c = color_dense_three(g)
            ok = palette_size(c) <= 3 and is_proper_connected(g, c).holds
            res.add(f"three/{name}", ok, f"m={g.m} palette={palette_size(c)}")

    return _timed("dense", body)


def oracle_graphs(max_n: int = 6, max_m: int = 9) -> list[Graph]:
    return [g for g in atlas_connected(max_n) if g.m <= max_m]


def suite_oracle(max_n: int = 6, max_m: int = 9, k: int = 3) -> SuiteResult:
    """exists_proper_path against plain exhaustive DFS over every canonical
    colouring with <= k colours."""

    def body(res: SuiteResult) -> None:
        graphs = oracle_graphs(max_n, max_m)
        checked = 0
        bad = []
        for gi, g in enumerate(graphs):
            pairs = list(itertools.combinations(range(g.n), 2))
            for cols in canonical_colorings(g.m, k):
                for u, v in pairs:
                    fast = exists_proper_path(g, cols, u, v) is not None
                    slow = next(_iter_paths(g, cols, u, v, prune=False), None) is not None
                    checked += 1
                    if fast != slow:
                        bad.append((gi, cols, u, v))
        res.add(
            f"{len(graphs)} graphs, {checked} (colouring, pair) checks",
            not bad,
            f"disagreements={len(bad)}",
        )

    return _timed("oracle", body)


def suite_monotonicity(samples: int = 500, seed: int = 2024) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        rng = SplitMix64(seed)
        graphs = atlas_connected(7, 3)
        bad = []
        for i in range(samples):
            g = graphs[rng.below(len(graphs))]
            h = spanning_pair(g, rng)
            if pc_exact(g).value > pc_exact(h).value:
                bad.append(i)
        res.add(f"{samples} (G, spanning H) pairs", not bad, f"violations={bad}")

    return _timed("monotonicity", body)


def suite_min_degree_half() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        corpus = [g for g in atlas_connected(7, 3) if 2 * g.min_degree() >= g.n]
        corpus += list(eight_vertex_min_degree(4))
        corpus = [g for g in corpus if not g.is_complete()]
        by_n: dict[int, list[int]] = {}
        for g in corpus:
            v = pc_exact(g).value
            by_n.setdefault(g.n, []).append(v)
        for n in sorted(by_n):
            vals = by_n[n]
            res.add(f"n={n} ({len(vals)} graphs)", all(v == 2 for v in vals), f"values={sorted(set(vals))}")

    return _timed("min-degree-half", body)


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "small-values": suite_small_values,
    "pc2-landmarks": suite_pc2_landmarks,
    "cycle-chord": suite_cycle_chord,
    "bridgeless": suite_bridgeless,
    "general-bound": suite_general_bound,
    "gk": suite_gk,
    "dirac": suite_dirac,
    "ore": suite_ore,
    "dense": suite_dense,
    "oracle": suite_oracle,
    "monotonicity": suite_monotonicity,
    "min-degree-half": suite_min_degree_half,
}
