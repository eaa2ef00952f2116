import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properconn.constructions import color_cycle_chord
from properconn.errors import GraphFormatError, PreconditionError
from properconn.families import gen_complete, gen_cycle, gen_cycle_chord, gen_path, gen_star
from properconn.gadget import proper_path_by_matching
from properconn.graph import Graph
from properconn.paths import (
    EdgeColoring,
    disjoint_proper_paths,
    enumerate_proper_paths,
    exists_proper_path,
    find_proper_path,
    has_strong_property,
    is_k_proper_connected,
    is_proper_connected,
    is_proper_path,
    strong_pair,
)

from conftest import colored_graphs


def _all_proper_paths(g, colors, u, v):
    """Reference: permutations of intermediate vertices, checked edge by edge."""
    others = [x for x in range(g.n) if x not in (u, v)]
    for r in range(len(others) + 1):
        for mid in itertools.permutations(others, r):
            seq = [u, *mid, v]
            if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])) and is_proper_path(g, colors, seq):
                yield seq


def test_is_proper_path_basics():
    p3 = gen_path(3)
    assert is_proper_path(p3, [1, 2], [0, 1, 2])
    assert not is_proper_path(p3, [1, 1], [0, 1, 2])
    assert is_proper_path(p3, [1, 1], [0, 1])
    assert not is_proper_path(p3, [1, 2], [0, 2])  # not an edge


def test_exists_examples():
    p3 = gen_path(3)
    assert exists_proper_path(p3, [1, 1], 0, 2) is None
    c4 = gen_cycle(4)
    p = exists_proper_path(c4, [1, 2, 1, 2], 0, 2)
    assert p is not None and len(p) == 2
    k3 = gen_complete(3)
    e = exists_proper_path(k3, [1, 1, 1], 0, 1)
    assert e.vertices == (0, 1)


def test_enumeration_examples():
    assert len(enumerate_proper_paths(gen_complete(3), [1, 1, 1], 0, 1).paths) == 1
    assert len(enumerate_proper_paths(gen_cycle(4), [1, 2, 1, 2], 0, 2).paths) == 2
    assert len(enumerate_proper_paths(gen_path(5), [1, 2, 1, 2], 0, 4).paths) == 1


def test_enumeration_cap():
    res = enumerate_proper_paths(gen_complete(6), [1] * 15, 0, 1, cap=None)
    assert not res.truncated
    k6 = gen_complete(6)
    alt = [1 + (i % 3) for i in range(k6.m)]
    full = enumerate_proper_paths(k6, alt, 0, 5, cap=None)
    capped = enumerate_proper_paths(k6, alt, 0, 5, cap=2)
    assert capped.truncated and len(capped.paths) == 2 < len(full.paths)


@given(colored_graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_exists_agrees_with_reference(gc):
    g, colors = gc
    for u, v in itertools.combinations(range(g.n), 2):
        ref = next(_all_proper_paths(g, colors, u, v), None)
        got = exists_proper_path(g, colors, u, v)
        assert (got is None) == (ref is None)
        if got is not None:
            assert is_proper_path(g, colors, got.vertices)


@given(colored_graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_enumeration_matches_reference(gc):
    g, colors = gc
    for u, v in itertools.combinations(range(g.n), 2):
        ours = sorted(p.vertices for p in enumerate_proper_paths(g, colors, u, v, cap=None).paths)
        ref = sorted(tuple(s) for s in _all_proper_paths(g, colors, u, v))
        assert ours == ref


@given(colored_graphs(max_n=8), st.data())
@settings(max_examples=120, deadline=None)
def test_matching_engine_agrees_with_dfs(gc, data):
    g, colors = gc
    palette = sorted(set(colors))
    u, v = data.draw(st.sampled_from(list(itertools.combinations(range(g.n), 2))))
    first = data.draw(st.none() | st.sets(st.sampled_from(palette), min_size=1))
    last = data.draw(st.none() | st.sets(st.sampled_from(palette), min_size=1))
    dfs = find_proper_path(g, colors, u, v, first=first, last=last)
    gad = proper_path_by_matching(g, colors, u, v, first=first, last=last)
    assert (dfs is None) == (gad is None)
    for seq in (dfs, gad):
        if seq is not None:
            assert seq[0] == u and seq[-1] == v and is_proper_path(g, colors, seq)
            assert first is None or colors[g.edge_id(seq[0], seq[1])] in first
            assert last is None or colors[g.edge_id(seq[-2], seq[-1])] in last


@given(colored_graphs(max_n=6))
@settings(max_examples=100, deadline=None)
def test_strong_pair_agrees_with_brute_force(gc):
    g, colors = gc
    for u, v in itertools.combinations(range(g.n), 2):
        ends = {(colors[g.edge_id(s[0], s[1])], colors[g.edge_id(s[-2], s[-1])])
                for s in _all_proper_paths(g, colors, u, v)}
        want = any(a != c and b != d for (a, b), (c, d) in itertools.combinations(ends, 2))
        got = strong_pair(g, colors, u, v)
        assert (got is not None) == want
        if got:
            p, q = got
            assert p.start_color != q.start_color and p.end_color != q.end_color


def test_proper_connected_examples():
    assert is_proper_connected(gen_complete(5), [1] * 10).holds
    assert is_proper_connected(gen_star(3), [1, 2, 3]).holds
    rep = is_proper_connected(gen_star(3), [1, 2, 2])
    assert not rep.holds and rep.failures
    g, c = color_cycle_chord(5)
    assert is_proper_connected(g, c).holds


def test_witnesses_are_reported():
    rep = is_proper_connected(gen_cycle(4), [1, 2, 1, 2], witnesses=True)
    assert set(rep.witnesses) == set(itertools.combinations(range(4), 2))
    d = rep.to_dict()
    assert d["holds"] and d["mode"] == "proper" and "0-2" in d["witnesses"]


def test_strong_examples():
    assert has_strong_property(gen_cycle(4), [1, 2, 1, 2]).holds
    assert not has_strong_property(gen_path(2), [1]).holds


def test_k_proper_examples():
    g, c = color_cycle_chord(5)
    assert is_k_proper_connected(g, c, 2).holds
    c5 = gen_cycle(5)
    for colors in itertools.product((1, 2), repeat=5):
        assert not is_k_proper_connected(c5, colors, 2).holds
    k5 = gen_complete(5)
    cols = [1 + (i % 2) for i in range(k5.m)]
    assert is_k_proper_connected(k5, cols, 1).holds == is_proper_connected(k5, cols).holds


def test_k_proper_needs_k_connectivity():
    with pytest.raises(PreconditionError):
        is_k_proper_connected(gen_path(4), [1, 2, 1], 2)


def test_disjoint_paths_are_disjoint():
    g = gen_cycle_chord(7)
    _, c = color_cycle_chord(7)
    for u, v in itertools.combinations(range(7), 2):
        ps = disjoint_proper_paths(g, c, u, v, 2)
        assert ps is not None
        a, b = ps
        assert not set(a.internal()) & set(b.internal())
        assert a.vertices != b.vertices


def test_disconnected_input_rejected():
    g = Graph.canonical(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        is_proper_connected(g, [1, 1])


def test_coloring_validation():
    with pytest.raises(GraphFormatError):
        EdgeColoring((0, 1), 2)
    with pytest.raises(GraphFormatError):
        EdgeColoring((1, 3), 2)
    with pytest.raises(GraphFormatError):
        EdgeColoring((1, 2), 2).check_against(gen_path(4))
