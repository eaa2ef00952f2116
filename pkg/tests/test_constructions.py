import itertools
from math import comb

import pytest

from properconn.constructions import (
    ColoredCore,
    PendantSet,
    StrongColoring,
    color_bipartite_strong,
    color_bridgeless,
    color_cycle,
    color_cycle_chord,
    color_dense_three,
    color_dense_two,
    color_dirac_pc2,
    color_general,
    color_ore_pc2,
    color_tree,
    compose_cut_edge,
    cut_edge_pieces,
    extend_pendants,
    extend_two_attachments,
    extract_bipartite_spanning,
    strong_color_block,
    strong_two_coloring,
)
from properconn.constructions.common import finalize, palette_size
from properconn.constructions.dense import check_bipartite_spanning
from properconn.errors import PreconditionError
from properconn.families import (
    gen_complete,
    gen_complete_minus_matching,
    gen_cycle,
    gen_k1_join_2kk,
    gen_path,
    gen_petersen,
    gen_prism,
    gen_srt,
    gen_star,
    gen_theta,
    gen_wheel,
)
from properconn.graph import Graph, bipartition, bridges
from properconn.paths import has_strong_property, is_k_proper_connected, is_proper_connected
from properconn.rng import SplitMix64
from properconn.solver import pc_exact
from properconn.sweeps import trees_up_to_iso


def _union(*parts, n, extra=()):
    edges = set()
    for vs in parts:
        edges.update(itertools.combinations(vs, 2))
    edges.update(tuple(sorted(e)) for e in extra)
    return Graph.canonical(n, edges)


def _cycle_on(vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# trees and cycles


@pytest.mark.parametrize("g, want", [(gen_star(3), 3), (gen_path(5), 2)])
def test_tree_palette(g, want):
    c = color_tree(g)
    assert palette_size(c) == want and is_proper_connected(g, c).holds


def test_random_tree_n9():
    rng = SplitMix64(11)
    trees = trees_up_to_iso(9)
    t = trees[rng.below(len(trees))]
    assert palette_size(color_tree(t)) == t.max_degree()


def test_tree_rejects_cycle():
    with pytest.raises(PreconditionError):
        color_tree(gen_cycle(4))


def test_cycle_colorings():
    assert color_cycle(6).colors == (1, 2, 1, 2, 1, 2)
    assert is_k_proper_connected(gen_cycle(6), color_cycle(6), 2).holds
    assert palette_size(color_cycle(5)) == 3
    assert has_strong_property(gen_cycle(4), color_cycle(4)).holds


@pytest.mark.parametrize("n", [4, 5, 6, 9])
def test_cycle_chord(n):
    g, c = color_cycle_chord(n)
    assert palette_size(c) == 2 and is_k_proper_connected(g, c, 2).holds


# strong colourings and bridgeless graphs


@pytest.mark.parametrize("g, bound", [(gen_cycle(4), 2), (gen_complete(4), 3), (gen_petersen(), 3)])
def test_strong_block(g, bound):
    sc = strong_color_block(g)
    assert sc.strong and palette_size(sc.coloring) <= bound
    assert has_strong_property(g, sc.coloring).holds


def test_bridgeless_two_triangles():
    g = _union((0, 1, 2), (2, 3, 4), n=5)
    sc = color_bridgeless(g)
    assert palette_size(sc.coloring) == 3 and has_strong_property(g, sc.coloring).holds


def test_bridgeless_bipartite_blocks():
    g = Graph.canonical(9, _cycle_on([0, 1, 2, 3]) + _cycle_on([3, 4, 5, 6, 7, 8]))
    sc = color_bridgeless(g)
    assert palette_size(sc.coloring) == 2 and has_strong_property(g, sc.coloring).holds


@pytest.mark.parametrize("g", [gen_wheel(5), gen_prism(4), gen_theta(2, 3, 3), gen_complete(5)])
def test_bridgeless_eulerian_and_friends(g):
    sc = color_bridgeless(g)
    bound = 2 if bipartition(g) else 3
    assert palette_size(sc.coloring) <= bound and has_strong_property(g, sc.coloring).holds


def test_bridgeless_rejects_bridge():
    with pytest.raises(PreconditionError):
        color_bridgeless(gen_path(3))


# extensions


def _k4_core(host_of):
    k4 = gen_complete(4)
    return ColoredCore(k4, tuple(host_of), strong_color_block(k4))


def test_five_pendants_on_k4():
    edges = list(itertools.combinations(range(4), 2)) + [(0, 4), (1, 5), (2, 6), (3, 7), (0, 8)]
    g = Graph.canonical(9, edges)
    c = extend_pendants(g, _k4_core(range(4)), PendantSet.of(g))
    assert palette_size(c) == 5 and is_proper_connected(g, c).holds


def test_three_pendants_on_one_vertex():
    edges = list(itertools.combinations(range(4), 2)) + [(0, 4), (0, 5), (0, 6)]
    g = Graph.canonical(7, edges)
    c = extend_pendants(g, _k4_core(range(4)), PendantSet.of(g))
    assert sorted(c[g.edge_id(0, x)] for x in (4, 5, 6)) == [1, 2, 3]


def test_two_pendants_three_colours():
    edges = list(itertools.combinations(range(4), 2)) + [(0, 4), (1, 5)]
    g = Graph.canonical(6, edges)
    c = extend_pendants(g, _k4_core(range(4)), PendantSet.of(g))
    assert palette_size(c) <= 3 and is_proper_connected(g, c).holds


def test_c4_core_with_hanging_path():
    g = Graph.canonical(7, _cycle_on([0, 1, 2, 3]) + [(0, 4), (4, 5), (5, 6)])
    c4 = gen_cycle(4)
    core = ColoredCore(c4, (0, 1, 2, 3), StrongColoring(color_cycle(4), True))
    c = extend_two_attachments(g, core, [[0, 4, 5, 6]])
    assert palette_size(c) == 2 and is_proper_connected(g, c).holds


def test_two_isolated_attachments_keep_palette():
    g = Graph.canonical(6, _cycle_on([0, 1, 2, 3]) + [(0, 4), (2, 5)])
    core = ColoredCore(gen_cycle(4), (0, 1, 2, 3), StrongColoring(color_cycle(4), True))
    c = extend_two_attachments(g, core, [[0, 4], [2, 5]])
    assert palette_size(c) == 2 and is_proper_connected(g, c).holds


def test_zero_attachments_is_identity():
    c4 = gen_cycle(4)
    core = ColoredCore(c4, (0, 1, 2, 3), StrongColoring(color_cycle(4), True))
    assert extend_two_attachments(c4, core, []) == color_cycle(4)


def test_attachment_validation():
    g = Graph.canonical(5, _cycle_on([0, 1, 2, 3]) + [(0, 4)])
    core = ColoredCore(gen_cycle(4), (0, 1, 2, 3), StrongColoring(color_cycle(4), True))
    with pytest.raises(PreconditionError):
        extend_two_attachments(g, core, [[4, 0]])
    with pytest.raises(PreconditionError):
        extend_two_attachments(g, core, [])


# cut-edge composition and the general bound


def test_two_triangles_joined_by_bridge():
    g = _union((0, 1, 2), (3, 4, 5), n=6, extra=[(2, 3)])
    (e,) = bridges(g)
    (g1, _), (g2, _) = cut_edge_pieces(g, e)
    c = compose_cut_edge(g, e, pc_exact(g1).witness, pc_exact(g2).witness)
    assert palette_size(c) == 2 and is_proper_connected(g, c).holds
    assert pc_exact(g).value == 2
    # the general construction only promises max{3, Delta(G*)}
    assert palette_size(color_general(g)) <= 3


def test_compose_star_and_k4():
    # star K_{1,3} centred at 0 whose leaf 3 is bridged to a K_4 on 4..7
    g = _union((4, 5, 6, 7), n=8, extra=[(0, 1), (0, 2), (0, 3), (3, 4)])
    (e,) = [f for f in bridges(g) if g.edges[f] == (3, 4)]
    (g1, _), (g2, _) = cut_edge_pieces(g, e)
    c1, c2 = pc_exact(g1).witness, pc_exact(g2).witness
    c = compose_cut_edge(g, e, c1, c2)
    want = max(pc_exact(g1).value, pc_exact(g2).value)
    assert palette_size(c) == want and is_proper_connected(g, c).holds


def test_compose_rejects_non_bridge():
    with pytest.raises(PreconditionError):
        compose_cut_edge(gen_cycle(4), 0, color_cycle(4), color_cycle(4))


def test_general_srt_matches_exact():
    g = gen_srt(4, 3)
    c = color_general(g)
    assert palette_size(c) == 4 and is_proper_connected(g, c).holds


def test_general_on_tree_and_bridgeless():
    for t in trees_up_to_iso(8):
        c = color_general(t)
        assert palette_size(c) <= max(3, t.max_degree()) and is_proper_connected(t, c).holds
    assert palette_size(color_general(gen_petersen())) <= 3


# Hamiltonian constructions


@pytest.mark.parametrize("g", [gen_cycle(4), gen_complete(5), gen_complete(6), gen_complete_minus_matching(8)])
def test_dirac(g):
    c = color_dirac_pc2(g)
    assert palette_size(c) == 2 and is_k_proper_connected(g, c, 2).holds


def test_dirac_rejects_k1_join_2k3():
    with pytest.raises(PreconditionError):
        color_dirac_pc2(gen_k1_join_2kk(3))


def test_ore_k33():
    g = Graph.canonical(6, [(a, b) for a in range(3) for b in range(3, 6)])
    c = color_ore_pc2(g)
    assert palette_size(c) == 2 and is_k_proper_connected(g, c, 2).holds


def test_ore_rejects_c5():
    with pytest.raises(PreconditionError):
        color_ore_pc2(gen_cycle(5))


def test_ore_odd_main_case():
    # K_7 minus a perfect matching on six of its vertices: odd n, delta = 5
    g = Graph.canonical(7, [e for e in itertools.combinations(range(7), 2) if e not in {(0, 1), (2, 3), (4, 5)}])
    trace = []
    c = color_ore_pc2(g, trace)
    assert palette_size(c) == 2 and is_k_proper_connected(g, c, 2).holds
    assert any("(n-1)-cycle" in line for line in trace)


# dense graphs


def test_extract_k6_same_side():
    g = gen_complete(6)
    for u, v in itertools.combinations(range(6), 2):
        sp = extract_bipartite_spanning(g, u, v)
        assert sp.side_of(u) == sp.side_of(v)
        assert check_bipartite_spanning(g, sp)


def test_extract_k44_is_its_bipartition():
    g = Graph.canonical(8, [(a, b) for a in range(4) for b in range(4, 8)])
    with pytest.raises(PreconditionError):
        extract_bipartite_spanning(g, 0, 1)
    sp = extract_bipartite_spanning(g, 0, 1, strict=False)
    assert {frozenset(sp.X), frozenset(sp.Y)} == {frozenset(range(4)), frozenset(range(4, 8))}


def test_extract_k14_minus_matching():
    g = gen_complete_minus_matching(14)
    sp = extract_bipartite_spanning(g)
    assert check_bipartite_spanning(g, sp)
    c = finalize(g, color_bipartite_strong(g, sp))
    assert has_strong_property(g, c, witnesses=False).holds


def test_strong_two_coloring_k6():
    sc = strong_two_coloring(gen_complete(6))
    assert sc is not None and palette_size(sc.coloring) == 2


def test_dense_two_k14_minus_matching():
    g = gen_complete_minus_matching(14)
    assert comb(11, 2) + 4 <= g.m == 84 <= comb(14, 2) - 1
    c = color_dense_two(g)
    assert palette_size(c) == 2 and is_proper_connected(g, c).holds


def test_dense_two_range():
    with pytest.raises(PreconditionError):
        color_dense_two(gen_complete(14))
    # n = 14, m = 58: one edge short of the window
    g = Graph.canonical(14, list(itertools.combinations(range(11), 2)) + [(0, 11), (1, 12), (2, 13)])
    assert g.m == 58
    with pytest.raises(PreconditionError):
        color_dense_two(g)


def test_dense_three_pendant():
    base = gen_complete_minus_matching(14)
    g = Graph.canonical(15, list(base.edges) + [(0, 14)])
    c = color_dense_three(g)
    assert palette_size(c) <= 3 and is_proper_connected(g, c).holds


def test_dense_three_triangle_bridged_to_k12():
    g = _union(range(12), (12, 13, 14), n=15, extra=[(0, 12)])
    assert g.m == comb(12, 2) + 4 >= comb(11, 2) + 5
    trace = []
    c = color_dense_three(g, trace)
    assert palette_size(c) <= 3 and is_proper_connected(g, c).holds


def test_dense_three_bridgeless():
    g = _union(range(14), n=15, extra=[(14, 0), (14, 1)])
    c = color_dense_three(g)
    assert palette_size(c) <= 3 and is_proper_connected(g, c).holds
