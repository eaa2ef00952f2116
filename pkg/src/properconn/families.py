"""Named graph families, extremal witnesses, density thresholds and seeded
random sampling.

Family graphs put special vertices last (apex, star leaves) so that bridges
and blocks land on predictable ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import PreconditionError
from .graph import Graph
from .rng import SplitMix64


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("n >= 1 required")
    return Graph.canonical(n, itertools.combinations(range(n), 2))


def gen_star(m: int) -> Graph:
    """K_{1,m} with the centre at vertex 0."""
    if m < 1:
        raise PreconditionError("m >= 1 required")
    return Graph.canonical(m + 1, [(0, i) for i in range(1, m + 1)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("n >= 1 required")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """C_n; edge i joins i and i+1, the last edge closes n-1 back to 0."""
    if n < 3:
        raise PreconditionError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def gen_cycle_chord(n: int) -> Graph:
    """C_n = v_1..v_n plus the chord v_{n-1} v_1 (vertex v_i has id i-1).

    The chord is the last edge.
    """
    if n < 4:
        raise PreconditionError("cycle plus chord needs n >= 4")
    return Graph.from_edges(
        n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0), (n - 2, 0)]
    )


def gen_srt(r: int, t: int) -> Graph:
    """r disjoint copies of K_t plus an apex (id r*t) joined to the first vertex
    of every copy."""
    if r < 1 or t < 2:
        raise PreconditionError("S_r^t needs r >= 1 and t >= 2")
    edges = []
    for i in range(r):
        base = i * t
        edges.extend((base + a, base + b) for a, b in itertools.combinations(range(t), 2))
    apex = r * t
    edges.extend((i * t, apex) for i in range(r))
    return Graph.canonical(r * t + 1, edges)


def gen_gk(n: int, k: int) -> Graph:
    """K_{n-k-1} on ids 0..n-k-2 with k+1 pendant leaves on clique vertex 0."""
    q = n - k - 1
    if k < 1 or q < 3:
        raise PreconditionError("G_k needs k >= 1 and n-k-1 >= 3")
    edges = list(itertools.combinations(range(q), 2))
    edges.extend((0, q + i) for i in range(k + 1))
    return Graph.canonical(n, edges)


def gen_k1_join_2kk(k: int) -> Graph:
    """Apex (id 2k) joined to every vertex of two disjoint K_k."""
    if k < 1:
        raise PreconditionError("k >= 1 required")
    edges = list(itertools.combinations(range(k), 2))
    edges += list(itertools.combinations(range(k, 2 * k), 2))
    edges += [(i, 2 * k) for i in range(2 * k)]
    return Graph.canonical(2 * k + 1, edges)


def gen_complete_minus_matching(n: int) -> Graph:
    """K_n minus the matching {2i, 2i+1}; for odd n the last vertex stays full."""
    if n < 2:
        raise PreconditionError("n >= 2 required")
    return Graph.canonical(
        n,
        [(u, v) for u, v in itertools.combinations(range(n), 2) if not (u % 2 == 0 and v == u + 1)],
    )


def gen_wheel(spokes: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..spokes."""
    if spokes < 3:
        raise PreconditionError("a wheel needs >= 3 spokes")
    rim = [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return Graph.canonical(spokes + 1, rim + [(0, i) for i in range(1, spokes + 1)])


def gen_prism(k: int) -> Graph:
    if k < 3:
        raise PreconditionError("a prism needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.canonical(2 * k, edges)


def gen_theta(a: int, b: int, c: int) -> Graph:
    """Two poles (0 and 1) joined by three internally disjoint paths with
    a, b, c internal vertices (at most one of them zero)."""
    if sorted((a, b, c))[1] == 0 or min(a, b, c) < 0:
        raise PreconditionError("theta needs at most one direct edge")
    edges = []
    nxt = 2
    for length in (a, b, c):
        if length == 0:
            edges.append((0, 1))
            continue
        chain = [0] + list(range(nxt, nxt + length)) + [1]
        nxt += length
        edges.extend(zip(chain, chain[1:]))
    return Graph.canonical(nxt, edges)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.canonical(10, outer + inner + spokes)


FAMILIES = {
    "star": (gen_star, ("m",)),
    "complete": (gen_complete, ("n",)),
    "cycle": (gen_cycle, ("n",)),
    "path": (gen_path, ("n",)),
    "cycle_chord": (gen_cycle_chord, ("n",)),
    "srt": (gen_srt, ("r", "t")),
    "gk": (gen_gk, ("n", "k")),
    "k1_join_2kk": (gen_k1_join_2kk, ("k",)),
    "complete_minus_matching": (gen_complete_minus_matching, ("n",)),
    "wheel": (gen_wheel, ("spokes",)),
    "prism": (gen_prism, ("k",)),
    "theta": (gen_theta, ("a", "b", "c")),
    "petersen": (gen_petersen, ()),
}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[tuple[str, int], ...] = ()

    def build(self) -> Graph:
        try:
            fn, names = FAMILIES[self.tag]
        except KeyError:
            raise PreconditionError(f"unknown family {self.tag!r}") from None
        given = dict(self.params)
        if set(given) != set(names):
            raise PreconditionError(f"family {self.tag} takes parameters {names}, got {sorted(given)}")
        return fn(*(given[p] for p in names))


# ---------------------------------------------------------------------------
# thresholds


def f_lower_bound(n: int, k: int) -> int:
    """Edge count below which pc <= k cannot be forced: C(n-k-1, 2) + k + 2."""
    if not 1 <= k <= n - 1 or n - k - 1 < 2:
        raise PreconditionError("need 1 <= k <= n-1 and n-k-1 >= 2")
    return comb(n - k - 1, 2) + k + 2


@dataclass(frozen=True)
class DenseThresholds:
    two_lo: int
    two_hi: int
    three_lo: int | None  # needs n >= 15


def dense_thresholds(n: int) -> DenseThresholds | None:
    """Edge windows forcing pc = 2 (n >= 14) and pc <= 3 (n >= 15); None below 14."""
    if n < 14:
        return None
    return DenseThresholds(
        two_lo=comb(n - 3, 2) + 4,
        two_hi=comb(n, 2) - 1,
        three_lo=comb(n - 4, 2) + 5 if n >= 15 else None,
    )


# ---------------------------------------------------------------------------
# random graphs


@dataclass(frozen=True)
class MinDegree:
    delta: int


@dataclass(frozen=True)
class EdgeCount:
    m: int
    # exact degrees for the last len(low_degrees) vertices; the rest is random
    low_degrees: tuple[int, ...] = ()


@dataclass(frozen=True)
class OreSum:
    pass


Constraint = MinDegree | EdgeCount | OreSum

_MAX_ATTEMPTS = 1000


def _gnp(n: int, p: float, rng: SplitMix64) -> set[tuple[int, int]]:
    return {e for e in itertools.combinations(range(n), 2) if rng.random() < p}


def _degrees(n: int, edges: set[tuple[int, int]]) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _min_degree_graph(n: int, delta: int, rng: SplitMix64) -> Graph:
    if not 0 <= delta <= n - 1:
        raise PreconditionError(f"min degree {delta} impossible on {n} vertices")
    edges = _gnp(n, 0.6 * rng.random(), rng)
    deg = _degrees(n, edges)
    for v in range(n):
        while deg[v] < delta:
            cands = [w for w in range(n) if w != v and (min(v, w), max(v, w)) not in edges]
            w = rng.choice(cands)
            edges.add((min(v, w), max(v, w)))
            deg[v] += 1
            deg[w] += 1
    return Graph.canonical(n, edges)


def _ore_graph(n: int, rng: SplitMix64) -> Graph:
    if n < 3:
        raise PreconditionError("Ore sampling needs n >= 3")
    edges = _gnp(n, 0.2 + 0.5 * rng.random(), rng)
    while True:
        deg = _degrees(n, edges)
        bad = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if (u, v) not in edges and deg[u] + deg[v] < n
        ]
        if not bad:
            return Graph.canonical(n, edges)
        edges.add(rng.choice(bad))


def _edge_count_graph(n: int, c: EdgeCount, rng: SplitMix64) -> Graph:
    low = list(c.low_degrees)
    high = n - len(low)
    if not n - 1 <= c.m <= comb(n, 2) or high < 1:
        raise PreconditionError(f"no connected graph with n={n}, m={c.m}")
    for _ in range(_MAX_ATTEMPTS):
        edges: set[tuple[int, int]] = set()
        ok = True
        for i, d in enumerate(low):
            v = high + i
            # low-degree vertices attach to the random dense part only
            pool = list(range(high))
            if d > len(pool):
                ok = False
                break
            rng.shuffle(pool)
            edges.update((w, v) for w in pool[:d])
        if not ok:
            raise PreconditionError("low degree exceeds the dense part")
        rest = c.m - len(edges)
        pool = list(itertools.combinations(range(high), 2))
        if not 0 <= rest <= len(pool):
            raise PreconditionError("edge count incompatible with the low-degree profile")
        rng.shuffle(pool)
        edges.update(pool[:rest])
        g = Graph.canonical(n, edges)
        if g.is_connected():
            return g
    raise PreconditionError(f"could not sample a connected graph with n={n}, m={c.m}")


def ore_condition(g: Graph) -> bool:
    deg = g.degrees()
    return all(
        deg[u] + deg[v] >= g.n
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.has_edge(u, v)
    )


def satisfies(g: Graph, constraint: Constraint) -> bool:
    if isinstance(constraint, MinDegree):
        return g.min_degree() >= constraint.delta
    if isinstance(constraint, EdgeCount):
        k = len(constraint.low_degrees)
        deg = g.degrees()
        return g.m == constraint.m and g.is_connected() and all(
            deg[g.n - k + i] == d for i, d in enumerate(constraint.low_degrees)
        )
    return ore_condition(g)


def gen_random_graph(n: int, constraint: Constraint, seed: int) -> Graph:
    """Deterministic for a fixed seed; the result is checked against the constraint."""
    rng = SplitMix64(seed)
    if isinstance(constraint, MinDegree):
        g = _min_degree_graph(n, constraint.delta, rng)
    elif isinstance(constraint, EdgeCount):
        g = _edge_count_graph(n, constraint, rng)
    elif isinstance(constraint, OreSum):
        g = _ore_graph(n, rng)
    else:
        raise TypeError(f"unknown constraint {constraint!r}")
    assert satisfies(g, constraint)
    return g
