import pytest
from hypothesis import given

from lattice_zagreb.graph import (
    DuplicateEdgeError,
    EdgeListFormatError,
    Graph,
    SelfLoopError,
    VertexError,
    degree_pair_partition,
    format_edgelist,
    graph_from_edges,
    new_graph,
    parse_edgelist,
)
from lattice_zagreb.lattice import hex_toroidal, tri_free, tri_toroidal

from .strategies import graphs


def triangle():
    return graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize("n", [0, 5, 2 * 4 * 4])
def test_new_graph_is_edgeless(n):
    g = new_graph(n)
    assert g.vertex_count == n
    assert g.edge_count == 0
    assert list(g.edges()) == []


def test_negative_vertex_count_rejected():
    with pytest.raises(ValueError):
        Graph(-1)


def test_add_edge():
    g = new_graph(2)
    g.add_edge(0, 1)
    assert g.edge_count == 1
    assert (g.degree(0), g.degree(1)) == (1, 1)


def test_add_edge_errors_are_distinct():
    g = new_graph(4)
    with pytest.raises(SelfLoopError):
        g.add_edge(3, 3)
    with pytest.raises(VertexError):
        g.add_edge(0, 4)
    with pytest.raises(VertexError):
        g.add_edge(-1, 0)
    g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0)
    assert g.edge_count == 1


def test_degree():
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    assert path.degree(1) == 2
    with pytest.raises(VertexError):
        path.degree(3)
    assert {tri_toroidal(4, 4).degree(v) for v in range(16)} == {6}
    g = hex_toroidal(3, 3)
    assert {g.degree(v) for v in range(g.vertex_count)} == {3}


def test_neighbors_sorted_regardless_of_insertion_order():
    g = graph_from_edges(4, [(0, 3), (0, 1), (0, 2)])
    assert g.neighbors(0) == (1, 2, 3)
    assert list(g.edges()) == [(0, 1), (0, 2), (0, 3)]


def test_degree_pair_partition_examples():
    assert degree_pair_partition(triangle()) == {(2, 2): 3}
    assert degree_pair_partition(hex_toroidal(3, 3)) == {(3, 3): 48}
    assert degree_pair_partition(tri_free(3, 3)) == {(2, 4): 4, (3, 4): 4, (3, 6): 2, (4, 4): 2, (4, 6): 4}


def test_edgelist_format_is_exact():
    g = graph_from_edges(3, [(2, 1), (0, 2)])
    assert format_edgelist(g) == "p 3 2\ne 0 2\ne 1 2\n"
    assert format_edgelist(new_graph(0)) == "p 0 0\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "p 3\n",
        "q 3 1\ne 0 1\n",
        "p 3 2\ne 0 1\n",
        "p 3 1\ne 1 0\n",
        "p 3 1\ne  0 1\n",
        "p 3 2\ne 1 2\ne 0 1\n",
        "p 3 1\ne 0 x\n",
    ],
)
def test_parse_edgelist_rejects_malformed(text):
    with pytest.raises(EdgeListFormatError):
        parse_edgelist(text)


def test_parse_edgelist_rejects_bad_graphs():
    with pytest.raises(VertexError):
        parse_edgelist("p 2 1\ne 0 2\n")
    # a repeated line also breaks strict ordering
    with pytest.raises(EdgeListFormatError):
        parse_edgelist("p 2 2\ne 0 1\ne 0 1\n")


@given(graphs())
def test_edgelist_roundtrip(g):
    text = format_edgelist(g)
    assert parse_edgelist(text) == g
    assert format_edgelist(parse_edgelist(text)) == text


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.edge_count


@given(graphs())
def test_partition_totality_and_normalization(g):
    p = degree_pair_partition(g)
    assert sum(p.values()) == g.edge_count
    assert all(lo <= hi for lo, hi in p)
    assert all(count > 0 for count in p.values())
