from itertools import combinations

import pytest
from hypothesis import given, settings

from lexidim import graph as gr
from lexidim.errors import GraphError, OracleCapExceeded
from lexidim.resolving import (
    adjacency_representation,
    dimension,
    enumerate_adjacency_bases,
    enumerate_bases,
    is_resolving,
    lower_bound,
    metric_representation,
    resolves_subset,
    smaller_sets_fail,
)

from .conftest import connected_graphs, graphs


def brute_bases(g, kind):
    """Every minimum resolving set, by plain enumeration with the slow check."""
    for k in range(1, g.order + 1):
        hits = [w for w in combinations(range(g.order), k) if is_resolving(g, w, kind)]
        if hits:
            return hits
    raise AssertionError


# C_6 below is labelled 1..6 in prose and 0..5 in code.


def test_metric_representation_examples():
    assert metric_representation(gr.path(4), 3, [0]) == (3,)
    assert metric_representation(gr.cycle(6), 3, [0, 2]) == (3, 1)
    rep = metric_representation(gr.cycle(6), 2, [0, 2, 4])
    assert rep.count(0) == 1 and rep[1] == 0


def test_adjacency_representation_examples():
    p3 = gr.path(3)
    assert adjacency_representation(p3, 1, [0]) == (1,)
    assert adjacency_representation(p3, 2, [0]) == (2,)
    assert adjacency_representation(p3, 0, [0]) == (0,)
    c6 = gr.cycle(6)
    assert adjacency_representation(c6, 4, [0, 2]) == (2, 2)
    assert adjacency_representation(c6, 5, [0, 2]) == (1, 2)


def test_is_resolving_examples():
    c6 = gr.cycle(6)
    assert is_resolving(c6, [0, 2], "adjacency")
    assert not is_resolving(c6, [0, 1], "adjacency")
    for n in range(2, 9):
        assert is_resolving(gr.path(n), [0], "metric")


def test_metric_on_disconnected_rejected():
    with pytest.raises(GraphError):
        is_resolving(gr.empty(3), [0], "metric")
    with pytest.raises(GraphError):
        dimension(gr.empty(3), "metric")


def test_resolves_subset():
    c6 = gr.cycle(6)
    assert resolves_subset(c6, [0], [4], "adjacency")
    assert resolves_subset(c6, [0, 2], range(6), "adjacency")
    assert not resolves_subset(c6, [0, 1], [3, 4], "adjacency")


def test_dimension_examples():
    assert dimension(gr.complete(5)).value == 4
    assert dimension(gr.cycle(6), "adjacency").value == 2
    assert dimension(gr.cycle(6), "metric").value == 2
    assert dimension(gr.path(4), "adjacency").value == 2
    res = dimension(gr.path(7))
    assert res.value == 1 and res.witness == (0,)


def test_order_one_rejected():
    with pytest.raises(GraphError):
        dimension(gr.complete(1), "adjacency")


def test_cap_is_explicit():
    with pytest.raises(OracleCapExceeded):
        dimension(gr.path(8), cap=7)
    with pytest.raises(OracleCapExceeded):
        enumerate_adjacency_bases(gr.path(13))
    assert len(enumerate_adjacency_bases(gr.path(13), cap=13)) > 0


def test_lower_bound_examples():
    for n in range(2, 7):
        assert lower_bound(gr.complete(n)) == n - 1
    assert lower_bound(gr.path(7), "adjacency") == 3
    assert dimension(gr.path(7), "adjacency").value == 3
    assert lower_bound(gr.path(5), "metric") == 0


def test_enumerate_adjacency_bases_examples():
    assert enumerate_adjacency_bases(gr.path(3)) == [(0,), (2,)]
    assert enumerate_adjacency_bases(gr.complete(2)) == [(0,), (1,)]
    assert (0, 2) in enumerate_adjacency_bases(gr.cycle(6))


@settings(max_examples=150)
@given(graphs(min_order=2, max_order=7))
def test_adjacency_matches_brute_force(g):
    expected = brute_bases(g, "adjacency")
    res = dimension(g, "adjacency", enumerate_all=True)
    assert res.value == len(expected[0])
    assert list(res.all_bases) == expected
    assert res.witness == expected[0]


@settings(max_examples=150)
@given(connected_graphs(max_order=7))
def test_metric_matches_brute_force(g):
    expected = brute_bases(g, "metric")
    res = dimension(g, "metric", enumerate_all=True)
    assert list(res.all_bases) == expected


@given(graphs(min_order=2, max_order=7))
def test_lower_bound_is_sound(g):
    assert lower_bound(g, "adjacency") <= dimension(g, "adjacency").value
    if gr.is_connected(g):
        assert lower_bound(g, "metric") <= dimension(g, "metric").value


@given(connected_graphs(max_order=7))
def test_metric_at_most_adjacency(g):
    assert dimension(g, "metric").value <= dimension(g, "adjacency").value


@given(connected_graphs(max_order=7))
def test_diameter_two_dimensions_agree(g):
    if g.diameter() == 2:
        assert dimension(g, "metric").value == dimension(g, "adjacency").value


@given(graphs(min_order=2, max_order=7))
def test_complement_keeps_adjacency_dimension(g):
    assert dimension(g, "adjacency").value == dimension(gr.complement(g), "adjacency").value


@given(graphs(min_order=2, max_order=6))
def test_witness_is_minimal(g):
    res = dimension(g, "adjacency")
    assert is_resolving(g, res.witness, "adjacency")
    assert smaller_sets_fail(g, res)


@given(connected_graphs(max_order=7))
def test_universal_vertex_can_be_avoided(g):
    universal = [u for u in range(g.order) if g.degree(u) == g.order - 1]
    if universal:
        bases = enumerate_bases(g, "metric")
        for u in universal:
            assert any(u not in b for b in bases)


@given(graphs(min_order=2, max_order=6))
def test_join_with_vertex_bounds(g):
    b2 = dimension(g, "adjacency").value
    bj = dimension(gr.join(g, gr.complete(1)), "metric").value
    assert bj - 1 <= b2 <= bj
    clean = any(
        not any(all(x == 1 for x in adjacency_representation(g, v, b)) for v in range(g.order) if v not in b)
        for b in enumerate_adjacency_bases(g)
    )
    assert (b2 == bj) == clean


def test_six_vertex_rim_breaks_the_closed_form():
    # floor((2n+2)/5) gives 2 at n = 6; wheel and fan both need 3
    assert dimension(gr.wheel(6)).value == 3
    assert dimension(gr.fan(6)).value == 3
