import random

import pytest
from hypothesis import given, settings, strategies as st

from strongdim import (
    UNREACHABLE,
    DisconnectedGraphError,
    GraphError,
    JahangirParams,
    ParseError,
    all_pairs_distances,
    build_graph,
    build_jahangir,
    complete_graph,
    cycle_graph,
    diameter,
    is_connected,
    parse,
    path_graph,
    serialize,
)
from helpers import random_connected_graph


@st.composite
def graphs(draw, max_order=24, connected=True):
    order = draw(st.integers(2, max_order))
    edges = set()
    if connected:
        for v in range(1, order):
            edges.add((draw(st.integers(0, v - 1)), v))
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, order - 1), st.integers(0, order - 1)),
            max_size=order,
        )
    )
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(order, sorted(edges))


class TestBuildGraph:
    def test_path(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert [g.degree(v) for v in range(3)] == [1, 2, 1]

    def test_cycle(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert all(g.degree(v) == 2 for v in range(4))

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError, match=r"duplicate edge \(0, 1\)"):
            build_graph(3, [(0, 1), (0, 1)])

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(GraphError, match="duplicate edge"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"self-loop \(2, 2\)"):
            build_graph(3, [(2, 2)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="out of range"):
            build_graph(2, [(0, 2)])

    @given(graphs(connected=False))
    @settings(max_examples=50, deadline=None)
    def test_adjacency_sorted_and_symmetric(self, g):
        for u in range(g.vertex_count):
            nbrs = g.adjacency[u]
            assert list(nbrs) == sorted(nbrs)
            assert u not in nbrs
            for v in nbrs:
                assert u in g.adjacency[v]


class TestDistances:
    def test_c4(self):
        dm = all_pairs_distances(cycle_graph(4))
        assert dm.dist[0][2] == 2
        assert dm.dist[0][1] == 1

    def test_jahangir_2_8_max_distance(self):
        g, _ = build_jahangir(JahangirParams(2, 8))
        dm = all_pairs_distances(g)
        assert max(max(row) for row in dm.dist) == 4

    def test_jahangir_6_5_cross_cycle_distance(self):
        g, lab = build_jahangir(JahangirParams(6, 5))
        dm = all_pairs_distances(g)
        assert dm.dist[lab.rim_id(4)][lab.rim_id(16)] == 8

    def test_unreachable_sentinel(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        dm = all_pairs_distances(g)
        assert dm.dist[0][2] == UNREACHABLE
        assert dm.dist[2][0] == UNREACHABLE

    @given(graphs(max_order=40))
    @settings(max_examples=40, deadline=None)
    def test_axioms_on_connected_graphs(self, g):
        dm = all_pairs_distances(g)
        d = dm.dist
        n = g.vertex_count
        for u in range(n):
            assert d[u][u] == 0
            for v in range(u + 1, n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
        for w in range(n):
            for u in range(n):
                duw = d[u][w]
                for v in range(n):
                    assert d[u][v] <= duw + d[w][v]


class TestDiameterConnectivity:
    def test_p3(self):
        assert diameter(path_graph(3)) == 2

    def test_jahangir_2_8(self):
        g, _ = build_jahangir(JahangirParams(2, 8))
        assert diameter(g) == 4

    def test_jahangir_5_5(self):
        g, _ = build_jahangir(JahangirParams(5, 5))
        assert diameter(g) == 6

    def test_diameter_rejects_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            diameter(build_graph(4, [(0, 1), (2, 3)]))

    def test_is_connected(self):
        assert is_connected(cycle_graph(4))
        assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
        assert is_connected(build_graph(1, []))
        g, _ = build_jahangir(JahangirParams(6, 5))
        assert is_connected(g)


class TestGenerators:
    def test_shapes(self):
        assert path_graph(4).edge_count() == 3
        assert cycle_graph(5).edge_count() == 5
        assert complete_graph(4).edge_count() == 6

    @pytest.mark.parametrize("builder,bad", [(path_graph, 0), (cycle_graph, 2), (complete_graph, 0)])
    def test_bad_sizes(self, builder, bad):
        with pytest.raises(GraphError):
            builder(bad)


class TestSerialization:
    def test_p2_edge_json(self):
        assert serialize(path_graph(2)) == '{"n": 2, "edges": [[0, 1]]}\n'

    def test_p2_dot(self):
        assert serialize(path_graph(2), "dot") == 'graph {\n  "0" -- "1";\n}\n'

    def test_dot_carries_labels_and_isolated_vertices(self):
        g = build_graph(3, [(0, 1)], labels={0: "a", 1: "b", 2: "lonely"})
        out = serialize(g, "dot")
        assert '"2" [label="lonely"];' in out
        assert '"0" -- "1";' in out

    def test_unknown_format(self):
        with pytest.raises(GraphError, match="unsupported format"):
            serialize(path_graph(2), "graphml")

    def test_round_trip_jahangir(self):
        g, _ = build_jahangir(JahangirParams(3, 4))
        assert parse(serialize(g)) == g

    @given(graphs(max_order=16, connected=False))
    @settings(max_examples=50, deadline=None)
    def test_round_trip_random(self, g):
        assert parse(serialize(g)) == g

    def test_round_trip_seeded_corpus(self):
        for seed in range(20):
            g = random_connected_graph(random.Random(seed), max_order=20)
            assert parse(serialize(g)) == g


class TestParse:
    def test_minimal(self):
        g = parse('{"n":2,"edges":[[0,1]]}')
        assert g.vertex_count == 2 and g.edges() == [(0, 1)]

    def test_labels(self):
        g = parse('{"n":2,"edges":[[0,1]],"labels":{"0":"x"}}')
        assert g.labels == {0: "x"}

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            parse('{"n":2,"edges":[[0,2]]}')

    def test_unordered_duplicate(self):
        with pytest.raises(ParseError, match="duplicate edge"):
            parse('{"n":3,"edges":[[0,1],[1,0]]}')

    def test_malformed_json(self):
        with pytest.raises(ParseError, match="invalid JSON"):
            parse("{not json")

    def test_missing_n(self):
        with pytest.raises(ParseError, match="'n'"):
            parse('{"edges":[]}')

    def test_bad_edge_shape_is_located(self):
        with pytest.raises(ParseError, match=r"edges\[1\]"):
            parse('{"n":3,"edges":[[0,1],[2]]}')

    def test_bad_top_level(self):
        with pytest.raises(ParseError, match="top level"):
            parse("[1,2]")
