import pytest
from hypothesis import given, strategies as st

from totcoal.errors import GraphError
from totcoal.graph import (
    Graph,
    VertexSet,
    complement,
    degree_profile,
    format_edge_list,
    from_edge_list,
    generate,
    parse_edge_list,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_from_edge_list_c4_and_dedup():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)])
    assert g == generate("cycle", 4)
    assert g.num_edges() == 4


@pytest.mark.parametrize("edges", [[(0, 0)], [(1, 1)]])
def test_self_loop_rejected(edges):
    with pytest.raises(GraphError, match="self-loop"):
        from_edge_list(3, edges)


def test_out_of_range_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(65, [])


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError, match="symmetric"):
        Graph(2, (0b10, 0))


def test_generate_families():
    assert generate("cycle", 4).num_edges() == 4
    k23 = generate("complete_bipartite", 2, 3)
    assert k23.num_edges() == 6
    assert not k23.has_edge(0, 1) and k23.has_edge(0, 2)
    assert generate("path", 5).edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert generate("star", 3) == generate("complete_bipartite", 1, 3)
    assert generate("complete", 5).num_edges() == 10


def test_generate_degenerate():
    with pytest.raises(GraphError):
        generate("cycle", 2)
    with pytest.raises(GraphError):
        generate("wheel", 5)
    with pytest.raises(GraphError):
        generate("complete_bipartite", 0, 3)


@pytest.mark.parametrize("n", range(3, 15))
def test_cycle_is_2_regular(n):
    g = generate("cycle", n)
    assert g.num_edges() == n
    assert set(degree_profile(g).degrees) == {2}


def test_complement_examples():
    assert complement(generate("complete", 4)).num_edges() == 0
    c5 = generate("cycle", 5)
    cc = complement(c5)
    # C5 complement is the pentagram 0-2-4-1-3-0, again a 5-cycle
    assert cc == from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert set(degree_profile(cc).degrees) == {2}


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_handshake(g):
    assert sum(degree_profile(g).degrees) == 2 * len(g.edges())


def test_degree_profile_examples():
    k4 = degree_profile(generate("complete", 4))
    assert (k4.min_degree, k4.max_degree) == (3, 3)
    assert k4.full_vertices == (0, 1, 2, 3) and k4.simplicial_vertices == (0, 1, 2, 3)
    p4 = degree_profile(generate("path", 4))
    assert (p4.min_degree, p4.max_degree) == (1, 2)
    assert p4.full_vertices == () and p4.simplicial_vertices == (0, 3)
    assert degree_profile(generate("cycle", 4)).simplicial_vertices == ()
    assert degree_profile(from_edge_list(3, [(0, 1)])).has_isolated


def test_vertex_set_algebra():
    a = VertexSet.of([0, 2, 5])
    b = VertexSet.of([2, 3])
    assert list(a | b) == [0, 2, 3, 5]
    assert list(a & b) == [2]
    assert list(a - b) == [0, 5]
    assert len(a) == 3 and 5 in a and 4 not in a
    assert a.min() == 0 and repr(b) == "{2,3}"
    assert not a.isdisjoint(b)


def test_edge_list_text_format():
    text = "# a 4-cycle\n4 4\n0 1\n1 2  # inline comment\n\n2 3\n3 0\n"
    assert parse_edge_list(text) == generate("cycle", 4)
    g = generate("complete_bipartite", 2, 2)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text", ["", "4\n", "3 1\n0 1 2\n", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 0\n"]
)
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)
