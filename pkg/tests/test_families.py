import itertools
from math import comb

import pytest

from properconn.errors import PreconditionError
from properconn.families import (
    FAMILIES,
    EdgeCount,
    FamilySpec,
    MinDegree,
    OreSum,
    dense_thresholds,
    f_lower_bound,
    gen_cycle_chord,
    gen_gk,
    gen_k1_join_2kk,
    gen_petersen,
    gen_random_graph,
    gen_srt,
    ore_condition,
)
from properconn.graph import bridge_block_tree
from properconn.solver import pc_exact


def test_srt_shape():
    g = gen_srt(4, 3)
    assert g.n == 13
    t = bridge_block_tree(g)
    assert t.max_degree() == 4
    assert pc_exact(gen_srt(2, 2)).value == 2


def test_srt_r1_is_clique_plus_pendant():
    g = gen_srt(1, 3)
    assert sorted(g.degrees()) == [1, 2, 2, 3]


def test_gk_sizes():
    assert gen_gk(10, 2).m == comb(7, 2) + 3 == 24
    assert gen_gk(7, 3).m == comb(3, 2) + 4 == 7
    assert pc_exact(gen_gk(8, 2)).value == 3


def test_k1_join_2kk():
    assert gen_k1_join_2kk(1).m == 2
    assert pc_exact(gen_k1_join_2kk(2)).value == 2
    g = gen_k1_join_2kk(3)
    assert g.n == 7 and g.min_degree() == 3 and not g.is_k_connected(2)


def test_thresholds():
    assert f_lower_bound(10, 2) == 25
    assert f_lower_bound(14, 3) == 50
    assert f_lower_bound(6, 3) == 6
    t = dense_thresholds(14)
    assert (t.two_lo, t.two_hi, t.three_lo) == (59, 90, None)
    assert dense_thresholds(15).three_lo == 60
    assert dense_thresholds(13) is None
    with pytest.raises(PreconditionError):
        f_lower_bound(4, 3)


def test_random_graphs_meet_constraints():
    g = gen_random_graph(9, MinDegree(5), seed=1)
    assert g.min_degree() >= 5
    g = gen_random_graph(14, EdgeCount(84), seed=7)
    assert g.m == 84 and g.is_connected()
    g = gen_random_graph(8, OreSum(), seed=3)
    assert ore_condition(g)
    for u, v in itertools.combinations(range(8), 2):
        if not g.has_edge(u, v):
            assert g.degree(u) + g.degree(v) >= 8


def test_random_graphs_are_seeded():
    assert gen_random_graph(10, MinDegree(5), 42) == gen_random_graph(10, MinDegree(5), 42)
    assert gen_random_graph(10, MinDegree(5), 42) != gen_random_graph(10, MinDegree(5), 43)


def test_edge_count_low_degrees():
    g = gen_random_graph(14, EdgeCount(70, (2, 3)), seed=5)
    assert g.m == 70
    assert (g.degree(12), g.degree(13)) == (2, 3)


def test_family_specs():
    sample = {
        "star": (("m", 3),), "complete": (("n", 4),), "cycle": (("n", 5),), "path": (("n", 4),),
        "cycle_chord": (("n", 6),), "srt": (("r", 3), ("t", 3)), "gk": (("n", 8), ("k", 2)),
        "k1_join_2kk": (("k", 3),), "complete_minus_matching": (("n", 6),), "wheel": (("spokes", 5),),
        "prism": (("k", 4),), "theta": (("a", 2), ("b", 3), ("c", 3)), "petersen": (),
    }
    assert set(sample) == set(FAMILIES)
    for tag, params in sample.items():
        assert FamilySpec(tag, params).build().is_connected()
    with pytest.raises(PreconditionError):
        FamilySpec("nope").build()
    with pytest.raises(PreconditionError):
        FamilySpec("cycle", (("m", 3),)).build()


def test_petersen_and_cycle_chord():
    p = gen_petersen()
    assert p.n == 10 and p.m == 15 and set(p.degrees()) == {3}
    g = gen_cycle_chord(6)
    assert g.has_edge(4, 0) and g.m == 7
