"""2-colourings with two disjoint proper paths per pair, built on Hamiltonian
cycles (minimum-degree and degree-sum conditions)."""

from __future__ import annotations

import itertools
from typing import Sequence

from ..errors import ConstructionDefect, PreconditionError
from ..families import ore_condition
from ..graph import DEFAULT_SEARCH_BUDGET, Graph, cycle_of_length, hamiltonian_cycle
from ..paths import EdgeColoring, is_k_proper_connected
from .blocks import chord_cycle_assignment
from .common import ensure, finalize, note, palette_size


def _two_colored(g: Graph, assign: dict[int, int], what: str) -> EdgeColoring:
    c = finalize(g, assign)
    if palette_size(c) != 2:
        raise ConstructionDefect(f"{what}: expected exactly 2 colours")
    return ensure(g, c, "k2", what)


def _alternate(g: Graph, cycle: Sequence[int]) -> dict[int, int]:
    n = len(cycle)
    return {g.edge_id(cycle[i], cycle[(i + 1) % n]): 1 if i % 2 == 0 else 2 for i in range(n)}


def _ham(g: Graph, budget: int) -> list[int]:
    cyc = hamiltonian_cycle(g, budget)
    if cyc is None:
        raise ConstructionDefect("no Hamiltonian cycle although the degree condition guarantees one")
    return cyc


def color_dirac_pc2(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> EdgeColoring:
    """2-colouring with two disjoint proper paths per pair when delta >= n/2, n >= 4.

    Even n: alternate around a Hamiltonian cycle.  Odd n: drop the last cycle
    vertex w, take a Hamiltonian cycle C' of G - w and an edge of C' whose ends
    both see w; C' plus those two edges is an odd cycle with a chord.
    Edges outside the spanning structure get colour 1.
    """
    n = g.n
    if n < 4 or 2 * g.min_degree() < n:
        raise PreconditionError("minimum-degree construction needs n >= 4 and delta >= n/2")
    cyc = _ham(g, budget)
    if n % 2 == 0:
        note(trace, f"dirac: even n, alternating Hamiltonian cycle {cyc}")
        return _two_colored(g, _alternate(g, cyc), "color_dirac_pc2")
    w = cyc[-1]
    h, host = g.remove_vertices([w])
    inner = [host[x] for x in _ham(h, budget)]
    k = len(inner)
    for a in range(k):
        p, q = inner[a], inner[(a + 1) % k]
        if g.has_edge(w, p) and g.has_edge(w, q):
            break
    else:
        raise ConstructionDefect("no cycle edge with both ends adjacent to the removed vertex")
    # odd cycle w q ... p w with chord p-q, laid out as seq[-2] = p, seq[-1] = w, seq[0] = q
    start = (a + 1) % k
    seq = [inner[(start + i) % k] for i in range(k)] + [w]
    note(trace, f"dirac: odd n, removed {w}, cycle {seq} with chord ({p}, {q})")
    return _two_colored(g, chord_cycle_assignment(g, seq), "color_dirac_pc2")


def ore_edge_bound(g: Graph) -> bool:
    """m >= n^2/4, which the degree-sum condition forces."""
    return 4 * g.m >= g.n * g.n


def _rotate_to_chord(g: Graph, cyc: Sequence[int], preferred: Sequence[int] = ()) -> list[int] | None:
    """Rotate a Hamiltonian cycle so that seq[-2]-seq[0] is a chord.

    Positions in ``preferred`` (as the middle vertex seq[-1]) are tried first,
    then every position in order.
    """
    n = len(cyc)
    for mid in list(preferred) + [i for i in range(n) if i not in preferred]:
        for step in (1, -1):
            seq = [cyc[(mid + step * (i + 1)) % n] for i in range(n)]
            if g.has_edge(seq[-2], seq[0]):
                return seq
    return None


def _ore_main(g: Graph, trace: list[str] | None, budget: int) -> EdgeColoring:
    n = g.n
    cp = cycle_of_length(g, n - 1, budget)
    if cp is None:
        raise ConstructionDefect("no (n-1)-cycle although the graph is pancyclic")
    (v,) = set(range(n)) - set(cp)
    m = len(cp)
    nbr_pos = sorted(cp.index(x) for x in g.neighbors(v))
    if len(nbr_pos) < 4:
        raise ConstructionDefect("outside vertex has fewer than four cycle neighbours")
    for first, step in itertools.product(nbr_pos, (1, -1)):
        u = [cp[(first + step * i) % m] for i in range(m)]  # u[0] = u_1
        pos = sorted(u.index(x) for x in g.neighbors(v) if x != u[0])
        for i, j, k in itertools.combinations(pos, 3):
            assign = {g.edge_id(u[t], u[(t + 1) % m]): 1 if t % 2 == 0 else 2 for t in range(m)}
            col = lambda a, b: assign[g.edge_id(u[a % m], u[b % m])]
            assign[g.edge_id(v, u[0])] = col(m - 1, 0)
            assign[g.edge_id(v, u[i])] = col(i, i + 1)
            assign[g.edge_id(v, u[j])] = col(j - 1, j)
            assign[g.edge_id(v, u[k])] = col(k, k + 1)
            c = finalize(g, assign)
            if is_k_proper_connected(g, c, 2, stop_at_first=True, check_connectivity=False).holds:
                note(
                    trace,
                    f"ore: (n-1)-cycle {u}, outside vertex {v} on positions 1,{i + 1},{j + 1},{k + 1}",
                )
                return _two_colored(g, assign, "color_ore_pc2")
    raise ConstructionDefect("no neighbour choice on the (n-1)-cycle gives a valid colouring")


def color_ore_pc2(
    g: Graph, trace: list[str] | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> EdgeColoring:
    """2-colouring with two disjoint proper paths per pair under the degree-sum condition.

    Branches: n even or n = 5 (Hamiltonian cycle, plus a chord at distance two
    when n is odd); delta <= 3 (a chord v_j v_{j+-2} next to the minimum-degree
    vertex placed last on the cycle); otherwise an (n-1)-cycle and the vertex
    outside it with four cycle neighbours.
    """
    n = g.n
    if n < 4 or not ore_condition(g):
        raise PreconditionError("degree-sum construction needs n >= 4 and d(u)+d(v) >= n for nonadjacent u,v")
    if not ore_edge_bound(g):
        raise ConstructionDefect(f"m = {g.m} < n^2/4 contradicts the degree-sum condition")
    cyc = _ham(g, budget)
    if n % 2 == 0:
        note(trace, f"ore: even n, alternating Hamiltonian cycle {cyc}")
        return _two_colored(g, _alternate(g, cyc), "color_ore_pc2")
    if n == 5 or g.min_degree() <= 3:
        # put a minimum-degree vertex last, then look for v_j (nonadjacent to it)
        # with a chord to v_{j-2} or v_{j+2}
        low = min(range(n), key=lambda x: (g.degree(x), x))
        at = cyc.index(low)
        vs = [cyc[(at + 1 + i) % n] for i in range(n)]  # vs[-1] = low
        preferred = []
        for j in range(n):
            if vs[j] == low or g.has_edge(vs[j], low):
                continue
            for d in (-2, 2):
                if g.has_edge(vs[j], vs[(j + d) % n]):
                    # middle vertex of the chord's triangle-free detour
                    preferred.append(cyc.index(vs[(j + d // 2) % n]))
        seq = _rotate_to_chord(g, cyc, preferred)
        if seq is None:
            raise ConstructionDefect("Hamiltonian cycle has no chord joining vertices two apart")
        branch = "n = 5" if n == 5 else "low minimum degree"
        note(trace, f"ore: {branch}, cycle {seq} with chord ({seq[-2]}, {seq[0]})")
        return _two_colored(g, chord_cycle_assignment(g, seq), "color_ore_pc2")
    note(trace, f"ore: odd n = {n}, delta >= 4, m = {g.m} >= n^2/4, using an (n-1)-cycle")
    return _ore_main(g, trace, budget)
