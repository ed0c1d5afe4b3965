import pytest
from hypothesis import given, strategies as st

from netdyn.errors import ConfigurationError
from netdyn.graph import DIRECTED, UNDIRECTED, build_graph, node_count, union

actor_labels = st.sampled_from(list("ABCDEFGH"))
edge_lists = st.lists(st.tuples(actor_labels, actor_labels), max_size=30)


def test_self_loops_dropped_and_duplicates_collapse():
    g = build_graph([("A", "B"), ("B", "A"), ("A", "A")], UNDIRECTED)
    assert g.nodes == {"A", "B"}
    assert g.edges() == {("A", "B")}
    assert g.dropped_self_loops == 1


def test_extra_nodes_are_isolated():
    g = build_graph([], UNDIRECTED, extra_nodes={"C"})
    assert g.nodes == {"C"}
    assert g.edges() == set()
    assert g.degree("C") == 0


def test_directed_adjacency():
    g = build_graph([("A", "B"), ("B", "C")], DIRECTED)
    assert g.out_adj["A"] == {"B"}
    assert g.out_adj["B"] == {"C"}
    assert g.in_adj["B"] == {"A"}
    assert g.in_adj["C"] == {"B"}
    assert g.in_adj["A"] == set()


def test_union_basic():
    g1 = build_graph([("A", "B")])
    g2 = build_graph([("B", "C")])
    u = union([g1, g2])
    assert u.nodes == {"A", "B", "C"}
    assert u.edges() == {("A", "B"), ("B", "C")}


def test_union_idempotent_and_empty():
    g = build_graph([("A", "B")])
    assert union([g, g]).edges() == {("A", "B")}
    empty = union([])
    assert node_count(empty) == 0


def test_union_rejects_mixed_modes():
    with pytest.raises(ConfigurationError):
        union([build_graph([], UNDIRECTED), build_graph([], DIRECTED)])


def test_node_count_includes_isolated():
    g = build_graph([("A", "B")], extra_nodes={"C"})
    assert node_count(g) == 3
    assert node_count(build_graph([])) == 0


@given(edge_lists)
def test_build_graph_idempotent(edges):
    g = build_graph(edges)
    g2 = build_graph(g.edges(), extra_nodes=g.nodes)
    assert g2.nodes == g.nodes
    assert g2.edges() == g.edges()


@given(edge_lists)
def test_undirected_adjacency_symmetric(edges):
    g = build_graph(edges)
    for a, nbrs in g.out_adj.items():
        for b in nbrs:
            assert a in g.out_adj[b]


@given(edge_lists, edge_lists)
def test_union_commutative(e1, e2):
    g1, g2 = build_graph(e1), build_graph(e2)
    u12, u21 = union([g1, g2]), union([g2, g1])
    assert u12.nodes == u21.nodes and u12.edges() == u21.edges()


@given(edge_lists, edge_lists, edge_lists)
def test_union_associative(e1, e2, e3):
    g1, g2, g3 = (build_graph(e) for e in (e1, e2, e3))
    left = union([union([g1, g2]), g3])
    right = union([g1, union([g2, g3])])
    assert left.nodes == right.nodes and left.edges() == right.edges()


@given(edge_lists, edge_lists)
def test_union_node_count_subadditive(e1, e2):
    g1, g2 = build_graph(e1), build_graph(e2)
    assert node_count(union([g1, g2])) <= node_count(g1) + node_count(g2)
