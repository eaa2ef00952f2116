import pytest
from hypothesis import given, settings

from properconn.errors import BudgetExceeded, PreconditionError
from properconn.families import gen_complete, gen_cycle, gen_path, gen_petersen, gen_star, gen_wheel
from properconn.graph import Graph
from properconn.paths import has_strong_property, is_k_proper_connected, is_proper_connected
from properconn.solver import (
    greedy_proper_edge_coloring,
    pc_exact,
    pc_k_exact,
    search_coloring,
)

from conftest import connected_graphs


@pytest.mark.parametrize(
    "g, want",
    [(gen_complete(4), 1), (gen_star(3), 3), (gen_cycle(5), 2), (gen_path(5), 2), (gen_petersen(), 2)],
)
def test_pc_values(g, want):
    res = pc_exact(g)
    assert res.value == want
    assert is_proper_connected(g, res.witness).holds
    assert len(set(res.witness.colors)) <= want


def test_pc_witness_is_minimal():
    # one colour fewer must be impossible
    for g in (gen_star(4), gen_cycle(6), gen_wheel(5)):
        v = pc_exact(g).value
        if v > 1:
            assert search_coloring(g, v - 1) is None


def test_pc_k_values():
    assert pc_k_exact(gen_cycle(5), 2).value == 3
    assert pc_k_exact(gen_cycle(4), 2).value == 2
    res = pc_k_exact(gen_complete(5), 2)
    assert res.value == 2 and is_k_proper_connected(gen_complete(5), res.witness, 2).holds
    assert pc_k_exact(gen_star(3), 1).value == 3


def test_pc_k_undefined_without_connectivity():
    with pytest.raises(PreconditionError):
        pc_k_exact(gen_path(4), 2)


def test_pc_rejects_disconnected_and_trivial():
    with pytest.raises(PreconditionError):
        pc_exact(Graph.canonical(4, [(0, 1), (2, 3)]))
    with pytest.raises(PreconditionError):
        pc_exact(Graph.canonical(1, []))


def test_budget_is_distinct_from_absence():
    with pytest.raises(BudgetExceeded):
        pc_exact(gen_petersen(), budget=5)


def test_strong_mode_search():
    colors = search_coloring(gen_complete(4), 3, "strong")
    assert colors is not None and has_strong_property(gen_complete(4), colors).holds


@given(connected_graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_pc_bounded_by_delta_plus_one(g):
    v = pc_exact(g).value
    assert 1 <= v <= g.max_degree() + 1
    assert (v == 1) == g.is_complete()


@given(connected_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_greedy_edge_coloring_is_proper(g):
    c = greedy_proper_edge_coloring(g)
    for x in range(g.n):
        cs = [c[e] for _, e in g.adjacency[x]]
        assert len(cs) == len(set(cs))
    assert max(c.colors, default=1) <= g.max_degree() + 1
    if g.is_tree():
        assert max(c.colors, default=1) == g.max_degree()


def test_search_is_deterministic():
    a = pc_exact(gen_wheel(6)).witness
    b = pc_exact(gen_wheel(6)).witness
    assert a == b
