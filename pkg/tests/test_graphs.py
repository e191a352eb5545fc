import pytest

from cyclepack.errors import BadParameters, GraphFormatError
from cyclepack.extremal import complete_graph, heawood_graph, petersen_graph
from cyclepack.graphs import (
    Cycle,
    Digraph,
    Graph,
    blocks,
    cut_vertices,
    cycle_violation,
    format_edgelist,
    girth,
    graph_sha256,
    parse_edgelist,
    strong_components,
)

from conftest import corpus_graphs


def test_graph_rejects_bad_edges():
    with pytest.raises(BadParameters):
        Graph(3, [(0, 3)])
    with pytest.raises(BadParameters):
        Graph(3, [(1, 1)])


def test_graph_rejects_parallel_edges_sorts_neighbors():
    with pytest.raises(BadParameters):
        Graph(4, [(2, 1), (1, 2)])
    g = Graph(4, [(2, 1), (0, 1)])
    assert g.m == 2
    assert g.neighbors(1) == (0, 2)


def test_digraph_digons_allowed_loops_not():
    d = Digraph(3, [(0, 1), (1, 0), (1, 2)])
    assert d.m == 3
    assert d.has_arc(0, 1) and d.has_arc(1, 0)
    with pytest.raises(BadParameters):
        Digraph(3, [(2, 2)])


def test_cycle_canonical_form():
    a = Cycle.make((2, 0, 1))
    b = Cycle.make((0, 1, 2))
    c = Cycle.make((0, 2, 1))
    assert a == b == c
    assert a.vertices[0] == 0


def test_directed_cycle_keeps_orientation():
    a = Cycle.make((1, 2, 0), directed=True)
    assert a.vertices == (0, 1, 2)
    b = Cycle.make((0, 2, 1), directed=True)
    assert a != b


def test_cycle_violation_catches_chords_and_gaps():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cycle_violation(g, (0, 1, 2, 3)) is not None  # missing edge 3-0
    k4 = complete_graph(4)
    assert cycle_violation(k4, (0, 1, 2, 3)) is None  # chords are fine
    assert cycle_violation(k4, (0, 1)) is not None  # too short undirected
    d = Digraph(2, [(0, 1), (1, 0)])
    assert cycle_violation(d, (0, 1)) is None  # digon


def test_blocks_of_two_triangles_sharing_a_vertex():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    bl = blocks(g)
    assert len(bl) == 2
    assert all(len(b.vertices) == 3 for b in bl)
    assert cut_vertices(g) == (2,)


def test_blocks_partition_edges():
    for g in corpus_graphs()[::37]:
        bl = blocks(g)
        total = sum(len(b.edges) for b in bl)
        assert total == g.m
        cover = set()
        for b in bl:
            for e in b.edges:
                assert e not in cover
                cover.add(e)


def test_girth_values():
    import math

    assert girth(complete_graph(3)) == 3
    assert girth(petersen_graph()) == 5
    assert girth(heawood_graph()) == 6
    assert girth(Graph(3, [(0, 1), (1, 2)])) == math.inf


def test_strong_components_order_sources_first():
    # 0->1->2 chain of singletons: every earlier component dominates later
    d = Digraph(3, [(0, 1), (1, 2)])
    comps = strong_components(d)
    assert comps == [[0], [1], [2]]
    # one strong triangle plus a dominated sink pair
    d = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (3, 4), (0, 4), (1, 4), (2, 4), (4, 3)])
    comps = strong_components(d)
    assert sorted(comps[0]) == [0, 1, 2]
    assert sorted(comps[-1]) == [3, 4]


def test_edgelist_roundtrip_undirected():
    g = petersen_graph()
    g2 = parse_edgelist(format_edgelist(g))
    assert g == g2
    assert graph_sha256(g) == graph_sha256(g2)


def test_edgelist_roundtrip_directed():
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)])
    d2 = parse_edgelist(format_edgelist(d))
    assert d == d2
    assert graph_sha256(d) != graph_sha256(Graph(4, [(0, 1)]))


def test_parse_rejects_malformed():
    with pytest.raises(GraphFormatError):
        parse_edgelist("X 3 1\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_edgelist("U 3 2\n0 1\n")  # count mismatch
    with pytest.raises(GraphFormatError):
        parse_edgelist("U 3 1\n0 one\n")


def test_hash_is_label_sensitive_and_stable():
    g = Graph(4, [(0, 1), (2, 3)])
    h = Graph(4, [(0, 2), (1, 3)])
    assert graph_sha256(g) != graph_sha256(h)
    assert graph_sha256(g) == graph_sha256(Graph(4, [(2, 3), (0, 1)]))


def test_induced_translation():
    g = complete_graph(6)
    sub, parent = g.induced([1, 3, 5])
    assert sub.n == 3 and sub.m == 3
    c = Cycle.make((0, 1, 2)).translate(parent)
    assert c.vertex_set() == frozenset({1, 3, 5})
