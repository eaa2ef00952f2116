"""Simple undirected graphs with stable vertex/edge ids, plus the structural
decompositions used by the colorers: blocks, bridges, the bridge-block tree,
bipartition, and exact cycle searches.

Vertices are ``0..n-1``.  An edge id is the position of the edge in
``Graph.edges``; every edge is stored as ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, GraphFormatError, PreconditionError

DEFAULT_SEARCH_BUDGET = 5_000_000


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _eid: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        eid: dict[tuple[int, int], int] = {}
        norm = []
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={self.n}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in eid:
                raise GraphFormatError(f"parallel edge ({a}, {b})")
            eid[(a, b)] = i
            norm.append((a, b))
            adj[a].append((b, i))
            adj[b].append((a, i))
        for row in adj:
            row.sort()
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(r) for r in adj))
        object.__setattr__(self, "_eid", eid)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def canonical(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Like ``from_edges`` but with edge ids in sorted (row-major) order."""
        return cls(n, tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def neighbor_mask(self, v: int) -> int:
        mask = 0
        for w, _ in self.adjacency[v]:
            mask |= 1 << w
        return mask

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self, removed: Iterable[int] = ()) -> bool:
        gone = set(removed)
        alive = [v for v in range(self.n) if v not in gone]
        if not alive:
            return True
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            x = stack.pop()
            for w, _ in self.adjacency[x]:
                if w not in seen and w not in gone:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_k_connected(self, k: int) -> bool:
        """Brute force: more than k vertices and no separator of size < k."""
        if k <= 0:
            return True
        if self.n <= k:
            return False
        if self.is_complete():
            return True
        for size in range(k):
            for cut in itertools.combinations(range(self.n), size):
                if not self.is_connected(cut):
                    return False
        return True

    def vertex_connectivity(self) -> int:
        if self.is_complete():
            return max(self.n - 1, 0)
        k = 0
        while self.is_k_connected(k + 1):
            k += 1
        return k

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(sub, host_of)`` where ``host_of[i]`` is the host id of sub vertex i.

        Sub vertices keep the host's relative order; sub edge ids follow host edge ids.
        """
        host_of = sorted(set(vertices))
        local = {v: i for i, v in enumerate(host_of)}
        edges = [
            (local[u], local[v]) for u, v in self.edges if u in local and v in local
        ]
        return Graph.from_edges(len(host_of), edges), host_of

    def edge_subgraph(self, eids: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping only the given edges (in host id order)."""
        keep = sorted(set(eids))
        return Graph.from_edges(self.n, [self.edges[e] for e in keep])

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)

    def complement(self) -> "Graph":
        return Graph.canonical(
            self.n,
            [
                (u, v)
                for u, v in itertools.combinations(range(self.n), 2)
                if not self.has_edge(u, v)
            ],
        )

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is host vertex ``order[i]``; edge ids preserved."""
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(self.n, [(pos[u], pos[v]) for u, v in self.edges])

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for w, _ in self.adjacency[x]:
                if dist[w] < 0:
                    dist[w] = dist[x] + 1
                    q.append(w)
        return dist


# ---------------------------------------------------------------------------
# graph6 and edge-list text formats


def _n_to_graph6(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (no ``>>graph6<<`` header)."""
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte length field")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte length field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for x in body:
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.canonical(n, edges)


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _n_to_graph6(g.n) + body


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith(">>graph6<<"):
            yield parse_graph6(line)
        elif line.startswith(">>graph6<<") and line[10:].strip():
            yield parse_graph6(line[10:])


def parse_edge_list(text: str) -> Graph:
    """``n m`` on the first line, then ``m`` lines ``u v``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphFormatError("edge list must start with 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphFormatError(f"bad edge-list line: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphFormatError("each edge line must hold exactly two ids")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Sniff the format: edge list if the first line is two integers, else graph6."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return parse_edge_list(text)
    return parse_graph6(first)


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    block_edges: tuple[tuple[int, ...], ...]

    def end_blocks(self) -> list[int]:
        """Indices of blocks containing exactly one cut vertex."""
        cuts = set(self.cut_vertices)
        return [i for i, b in enumerate(self.blocks) if sum(v in cuts for v in b) == 1]


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("graph must be connected and nonempty")


def _lowpoint_dfs(g: Graph):
    """Iterative DFS yielding discovery times, low values and the block edge stacks."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    bridges: list[int] = []
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        estack: list[int] = []
        children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append(e)
                    stack.append((w, e, iter(g.adjacency[w])))
                    if v == root:
                        children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] > disc[p]:
                bridges.append(pe)
            if low[v] >= disc[p]:
                if p != root:
                    cuts.add(p)
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                blocks.append(comp)
        if children > 1:
            cuts.add(root)
    return blocks, cuts, bridges


def blocks_and_cuts(g: Graph) -> BlockDecomposition:
    _require_connected(g)
    raw, cuts, _ = _lowpoint_dfs(g)
    pairs = []
    for comp in raw:
        verts = sorted({v for e in comp for v in g.edges[e]})
        pairs.append((tuple(verts), tuple(sorted(comp))))
    if g.n == 1:
        pairs.append(((0,), ()))
    pairs.sort()
    return BlockDecomposition(
        blocks=tuple(p[0] for p in pairs),
        cut_vertices=tuple(sorted(cuts)),
        block_edges=tuple(p[1] for p in pairs),
    )


def bridges(g: Graph) -> list[int]:
    """Sorted edge ids of all cut-edges (any graph, connected or not)."""
    return sorted(_lowpoint_dfs(g)[2])


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and not _lowpoint_dfs(g)[1]


@dataclass(frozen=True)
class BridgeBlockTree:
    bridges: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    tree: Graph
    tree_bridge: tuple[int, ...]  # tree edge id -> bridge edge id in G

    @property
    def singletons(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if len(c) == 1]

    @property
    def bridgeless(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if len(c) > 1]

    def max_degree(self) -> int:
        return self.tree.max_degree()

    def cut_edges_at(self, comp: int) -> list[int]:
        """C(A): bridge edge ids with an end in component ``comp``."""
        return sorted(self.tree_bridge[e] for _, e in self.tree.adjacency[comp])


def bridge_block_tree(g: Graph) -> BridgeBlockTree:
    _require_connected(g)
    b = bridges(g)
    bset = set(b)
    comp_of = [-1] * g.n
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if comp_of[s] >= 0:
            continue
        cid = len(comps)
        comp_of[s] = cid
        members = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for w, e in g.adjacency[x]:
                if e not in bset and comp_of[w] < 0:
                    comp_of[w] = cid
                    members.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(members)))
    tree_edges = [(comp_of[g.edges[e][0]], comp_of[g.edges[e][1]]) for e in b]
    tree = Graph.from_edges(len(comps), tree_edges)
    return BridgeBlockTree(
        bridges=tuple(b),
        components=tuple(comps),
        component_of=tuple(comp_of),
        tree=tree,
        tree_bridge=tuple(b),
    )


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for w, _ in g.adjacency[x]:
                if side[w] < 0:
                    side[w] = 1 - side[x]
                    q.append(w)
                elif side[w] == side[x]:
                    return None
    return (
        tuple(v for v in range(g.n) if side[v] == 0),
        tuple(v for v in range(g.n) if side[v] == 1),
    )


# ---------------------------------------------------------------------------
# cycle searches


def _reach_mask(g_masks: list[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g_masks[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _cycle_search(g: Graph, r: int, budget: int) -> list[int] | None:
    """Backtracking for a cycle on exactly ``r`` vertices.

    The cycle is reported starting at its smallest vertex, second vertex smaller
    than the last one; candidates are tried in increasing id order.
    """
    n = g.n
    masks = [g.neighbor_mask(v) for v in range(n)]
    nbrs = [g.neighbors(v) for v in range(n)]
    hamiltonian = r == n
    nodes = 0
    for s in range(n):
        if n - s < r:
            break
        allowed_all = ((1 << n) - 1) & ~((1 << s) - 1)
        path = [s]
        used = 1 << s
        # explicit stack of neighbor iterators
        iters = [iter(nbrs[s])]
        while iters:
            advanced = False
            for w in iters[-1]:
                if w <= s or (used >> w) & 1:
                    continue
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"cycle search exceeded {budget} nodes")
                if len(path) + 1 == r:
                    if (masks[w] >> s) & 1 and path[1] < w:
                        return path + [w]
                    continue
                if hamiltonian:
                    rest = allowed_all & ~used & ~(1 << w)
                    reach = _reach_mask(masks, w, rest | (1 << w))
                    # every remaining vertex must stay reachable, and s must be re-enterable
                    if reach & rest != rest or not masks[s] & rest:
                        continue
                path.append(w)
                used |= 1 << w
                iters.append(iter(nbrs[w]))
                advanced = True
                break
            if not advanced:
                iters.pop()
                last = path.pop()
                used &= ~(1 << last)
    return None


def hamiltonian_cycle(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> list[int] | None:
    """Hamiltonian cycle as a vertex sequence starting at 0, or None if none exists.

    Raises BudgetExceeded if the node budget runs out first.
    """
    if g.n < 3:
        return None
    return _cycle_search(g, g.n, budget)


def cycle_of_length(g: Graph, r: int, budget: int = DEFAULT_SEARCH_BUDGET) -> list[int] | None:
    if not 3 <= r <= g.n:
        raise PreconditionError(f"cycle length must satisfy 3 <= r <= n, got r={r}, n={g.n}")
    return _cycle_search(g, r, budget)


def circumference(g: Graph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    for r in range(g.n, 2, -1):
        if _cycle_search(g, r, budget) is not None:
            return r
    raise PreconditionError("graph is acyclic; circumference undefined")


def cycle_edge_ids(g: Graph, cycle: Sequence[int]) -> list[int]:
    return [g.edge_id(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
