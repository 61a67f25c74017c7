import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kneser_bandwidth.combinatorics import all_subsets
from kneser_bandwidth.dilation import dilation_brute
from kneser_bandwidth.exact import (
    SmallGraph, all_orderings_min, bandwidth_exact, bandwidth_exhaustive, layout_dilation,
    lower_bound, materialize,
)
from kneser_bandwidth.layout import Labeling, bfs_layout, trivial_layout


def graph_from_edges(n, edges):
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        a[u, v] = a[v, u] = True
    return SmallGraph(a)


def path(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_smallgraph_validation():
    with pytest.raises(ValueError):
        SmallGraph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(ValueError):
        SmallGraph(np.eye(3, dtype=bool))
    with pytest.raises(ValueError):
        SmallGraph(np.zeros((25, 25), dtype=bool))


@pytest.mark.parametrize("n,r,vertices,edges,degree", [(4, 2, 6, 3, 1), (5, 2, 10, 15, 3), (6, 2, 15, 45, 6)])
def test_materialize(n, r, vertices, edges, degree):
    g = materialize(n, r)
    assert g.order == vertices and len(g.edges()) == edges
    assert set(g.adjacency.sum(axis=1)) == {degree}


def test_materialize_too_large():
    with pytest.raises(ValueError):
        materialize(7, 3)


@pytest.mark.parametrize("n", range(1, 11))
def test_complete_graphs(n):
    res = bandwidth_exact(materialize(n, 1))
    assert res.exact and res.value == n - 1


@pytest.mark.parametrize("n,r", [(4, 2), (6, 3)])
def test_perfect_matchings(n, r):
    res = bandwidth_exact(materialize(n, r))
    assert res.value == 1 == layout_dilation(materialize(n, r), list(res.order))


def test_petersen_against_oracle():
    g = materialize(5, 2)
    res = bandwidth_exact(g)
    value, order = bandwidth_exhaustive(g)
    assert res.value == value
    assert 5 <= value <= 8
    assert layout_dilation(g, list(order)) == value == layout_dilation(g, list(res.order))


def test_small_oracle_agreement_k42():
    g = materialize(4, 2)
    assert all_orderings_min(g) == bandwidth_exhaustive(g)[0] == 1


def test_path_and_cycle():
    assert bandwidth_exact(path(7)).value == 1
    cycle = graph_from_edges(8, [(i, (i + 1) % 8) for i in range(8)])
    assert bandwidth_exact(cycle).value == 2


def test_lower_bound_values():
    assert lower_bound(materialize(5, 2)) == 5  # ceil(9 / 2)
    assert lower_bound(materialize(4, 2)) == 1
    assert lower_bound(SmallGraph(np.zeros((4, 4), dtype=bool))) == 0
    star = graph_from_edges(7, [(0, i) for i in range(1, 7)])
    assert lower_bound(star) == 3 == bandwidth_exact(star).value


def test_edgeless():
    res = bandwidth_exact(SmallGraph(np.zeros((5, 5), dtype=bool)))
    assert res.value == 0 and res.exact


def test_budget_returns_interval():
    res = bandwidth_exact(materialize(6, 2), budget=5)
    assert not res.exact and res.value is None
    assert res.lower <= 10 <= res.upper
    assert layout_dilation(materialize(6, 2), list(res.order)) == res.upper


def test_k62_exact_and_deterministic():
    a = bandwidth_exact(materialize(6, 2))
    b = bandwidth_exact(materialize(6, 2))
    assert a == b and a.value == 10


def test_solver_below_layout_dilations():
    for n, r in [(5, 2), (6, 2)]:
        g = materialize(n, r)
        best = bandwidth_exact(g).value
        for l in (trivial_layout(n, r), bfs_layout(n, r)):
            assert best <= dilation_brute(l).value
        witness = Labeling.from_order(n, r, list(bandwidth_exact(g).order))
        assert dilation_brute(witness).value == best


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=14))))
def test_random_graphs_against_oracle(graph):
    n, pairs = graph
    g = graph_from_edges(n, [(u, v) for u, v in pairs if u != v])
    res = bandwidth_exact(g)
    value, _ = bandwidth_exhaustive(g)
    assert res.value == value
    assert layout_dilation(g, list(res.order)) == value
    assert value >= lower_bound(g)


def test_oracle_limit():
    with pytest.raises(ValueError):
        bandwidth_exhaustive(SmallGraph(np.zeros((11, 11), dtype=bool)))
