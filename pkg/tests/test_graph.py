from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from lexidim import formats
from lexidim import graph as gr
from lexidim.errors import GraphError, ParseError
from lexidim.graph import INF, build_graph

from .conftest import connected_graphs, graphs


def test_build_smallest_edge():
    g = build_graph(2, [(0, 1)])
    assert g.edges() == [(0, 1)]
    assert g == gr.path(2)


def test_build_empty_and_complete():
    assert build_graph(3, []).size == 0
    k4 = build_graph(4, combinations(range(4), 2))
    assert all(k4.degree(v) == 3 for v in range(4))


def test_build_dedupes_and_symmetrises():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]
    assert g.neighbors(1) == {0}


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_families():
    assert gr.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    k22 = gr.complete_multipartite(2, 2)
    assert k22.size == 4 and all(k22.degree(v) == 2 for v in range(4))
    w = gr.wheel(6)
    assert w.order == 7 and w.degree(6) == 6
    assert gr.fan(3).degree(3) == 3
    with pytest.raises(GraphError):
        gr.cycle(2)


def test_complement_examples():
    assert gr.complement(gr.complete(4)) == gr.empty(4)
    # non-edges of 0-1-2-3
    assert gr.complement(gr.path(4)).edges() == [(0, 2), (0, 3), (1, 3)]


def test_join_examples():
    assert gr.join(gr.cycle(6), gr.complete(1)) == gr.wheel(6)
    assert gr.join(gr.empty(2), gr.empty(2)) == gr.complete_multipartite(2, 2)
    f = gr.join(gr.path(3), gr.complete(1))
    assert f.edges() == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_lex_product_examples():
    h = gr.path(3)
    assert gr.lex_product(gr.complete(1), h) == h
    c4 = gr.lex_product(gr.path(2), gr.empty(2))
    assert c4.size == 4 and all(c4.degree(v) == 2 for v in range(4))
    assert nx.is_isomorphic(nx.Graph(c4.edges()), nx.cycle_graph(4))
    p = gr.lex_product(gr.cycle(5), gr.path(2))
    assert all(p.degree(v) == 5 for v in range(10))


@given(graphs(max_order=4), graphs(max_order=4))
def test_lex_product_adjacency_rule(g, h):
    p = gr.lex_product(g, h)
    m = h.order
    assert p.order == g.order * m
    for x, y in combinations(range(p.order), 2):
        (i, j), (r, s) = divmod(x, m), divmod(y, m)
        assert p.adjacent(x, y) == (g.adjacent(i, r) or (i == r and h.adjacent(j, s)))
    for x in range(p.order):
        i, j = divmod(x, m)
        assert p.degree(x) == h.degree(j) + m * g.degree(i)


def test_distance_examples():
    assert gr.path(4).distance(0, 3) == 3
    assert gr.cycle(6).distance(0, 3) == 3
    assert gr.empty(2).distance(0, 1) == INF


def test_connectivity_examples():
    assert not gr.is_connected(gr.empty(3))
    assert gr.is_connected(gr.path(7))
    assert gr.is_connected(gr.lex_product(gr.path(2), gr.empty(3)))


@given(graphs())
def test_distances_match_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(_nx(g)))
    for u in range(g.order):
        for v in range(g.order):
            assert g.distance(u, v) == ref[u].get(v, INF)


@given(graphs())
def test_distance_matrix_shape(g):
    d = g.distances
    for u in range(g.order):
        assert d[u][u] == 0
        for v in range(g.order):
            assert d[u][v] == d[v][u]
            if u != v:
                assert (d[u][v] == 1) == g.adjacent(u, v)


@given(graphs())
def test_complement_involution(g):
    assert gr.complement(gr.complement(g)) == g


@given(graphs(max_order=4), graphs(max_order=4))
def test_join_adds_all_cross_edges(g, h):
    j = gr.join(g, h)
    assert j.order == g.order + h.order
    assert j.size == g.size + h.size + g.order * h.order


@given(connected_graphs(max_order=4), graphs(max_order=4))
def test_connected_iff_first_factor_connected(g, h):
    assert gr.is_connected(gr.lex_product(g, h))


def test_relabel_preserves_structure():
    g = gr.path(4)
    assert g.relabel([3, 2, 1, 0]) == g


def _nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges())
    return out


# -- formats --------------------------------------------------------------------------

def test_parse_family_examples():
    assert formats.parse("lex(C5,P2)").order == 10
    assert formats.parse("K(2, 3)") == gr.complete_multipartite(2, 3)
    assert formats.parse("comp(P4)") == gr.complement(gr.path(4))
    assert formats.parse("join(C6,K1)") == gr.wheel(6)
    assert formats.parse("fan(4)") == gr.fan(4)
    assert formats.parse("E3") == gr.empty(3)


def test_parse_graph6_complete():
    # 'C' is order 4; '~' is 0b111111, all six upper-triangle bits set
    assert formats.parse("C~", "graph6") == gr.complete(4)


def test_parse_edge_list():
    assert formats.parse("4; 0-1,1-2,2-3", "edge-list") == gr.path(4)
    assert formats.parse(" 3 ; ", "edge-list") == gr.empty(3)


@pytest.mark.parametrize(
    "text,fmt",
    [
        ("lex(C5,", "family"),
        ("Q4", "family"),
        ("C2", "family"),
        ("P4 x", "family"),
        ("4; 0-1,1_2", "edge-list"),
        ("0-1", "edge-list"),
        ("D?", "graph6"),
        ("C~~", "graph6"),
        ("C\x01", "graph6"),
    ],
)
def test_parse_rejects(text, fmt):
    with pytest.raises(ParseError):
        formats.parse(text, fmt)


def test_graph6_nonzero_padding_rejected():
    # order 3: 3 edge bits then 3 padding bits; '@' = 1 sets the last padding bit
    with pytest.raises(ParseError, match="padding"):
        formats.parse_graph6("B@")


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        formats.parse("lex(C5;P2)")
    assert info.value.position == 6


def test_roundtrip_all_labeled_up_to_six():
    for n in range(1, 7):
        for g in gr.labeled_graphs(n):
            assert formats.parse_graph6(formats.emit_graph6(g)) == g
            assert formats.parse_edge_list(formats.emit_edge_list(g)) == g


@given(graphs(max_order=12))
def test_graph6_matches_networkx(g):
    ours = formats.emit_graph6(g)
    assert ours == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(map(sorted, back.edges())) == [list(e) for e in g.edges()]


def test_graph6_large_order_roundtrip():
    g = gr.path(70)
    text = formats.emit_graph6(g)
    assert text.startswith("~")
    assert formats.parse_graph6(text) == g


def test_guess_format():
    assert formats.guess_format("4; 0-1") == "edge-list"
    assert formats.guess_format("wheel(5)") == "family"
    assert formats.guess_format("C~") == "graph6"
