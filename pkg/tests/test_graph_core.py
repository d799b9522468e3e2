"""Graph construction, formats, and named graphs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquelab import (
    Graph,
    GraphError,
    complete,
    cycle,
    from_edge_list,
    hajos_sun,
    induced_subgraph,
    is_connected,
    is_low_degree,
    is_isomorphic,
    is_octahedron,
    named,
    octahedron,
    parse_edge_list_text,
    parse_graph6,
    path,
    to_dot,
    to_edge_list_text,
    to_graph6,
)
from conftest import random_graph

import random


class TestGraph:
    def test_basic_queries(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.n == 4
        assert g.edge_count() == 4
        assert g.degree(0) == 2
        assert g.max_degree() == 2
        assert g.has_edge(0, 1) and not g.has_edge(0, 2)
        assert g.neighbors(1) == (1 << 0) | (1 << 2)
        assert g.closed_neighborhood(1) == (1 << 0) | (1 << 1) | (1 << 2)
        assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_validation(self):
        with pytest.raises(GraphError):
            Graph(2, [1, 0])  # asymmetric
        with pytest.raises(GraphError):
            Graph(1, [1])  # loop
        with pytest.raises(GraphError):
            Graph(1, [2])  # out of range
        with pytest.raises(GraphError):
            Graph(2, [0])  # wrong length
        with pytest.raises(GraphError):
            Graph(-1, [])
        with pytest.raises(GraphError):
            from_edge_list(2, [(0, 2)])
        with pytest.raises(GraphError):
            from_edge_list(2, [(1, 1)])

    def test_duplicate_edges_collapse(self):
        g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_vertex_range_checks(self):
        g = path(3)
        with pytest.raises(GraphError):
            g.degree(3)
        with pytest.raises(GraphError):
            g.has_edge(0, -1)

    def test_equality_and_hash(self):
        assert path(3) == path(3)
        assert path(3) != cycle(3)
        assert hash(path(3)) == hash(path(3))


class TestInducedSubgraph:
    def test_triangle_from_k4(self):
        sub, mapping = induced_subgraph(complete(4), 0b1011)
        assert sub == complete(3)
        assert mapping == [0, 1, 3]

    def test_empty_subset(self):
        sub, mapping = induced_subgraph(path(3), 0)
        assert sub.n == 0 and mapping == []

    def test_out_of_range_mask(self):
        with pytest.raises(GraphError):
            induced_subgraph(path(2), 0b100)


class TestConnectivity:
    def test_connected(self):
        assert is_connected(path(5))
        assert is_connected(Graph(0, []))
        assert is_connected(Graph(1, [0]))

    def test_disconnected(self):
        assert not is_connected(Graph(2, [0, 0]))
        two_triangles = from_edge_list(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(two_triangles)


class TestGraph6:
    def test_known_tokens(self):
        assert to_graph6(complete(3)) == "Bw"
        assert to_graph6(Graph(1, [0])) == "@"
        assert to_graph6(path(3)) == "Bg"
        assert parse_graph6("Bw") == complete(3)
        assert parse_graph6("@") == Graph(1, [0])

    def test_roundtrip_named(self):
        for g in (complete(5), cycle(7), octahedron(3), hajos_sun(), path(8)):
            assert parse_graph6(to_graph6(g)) == g

    def test_malformed(self):
        for bad in ("", "B", "Bww", "\x01x", "~~~"):
            with pytest.raises(GraphError):
                parse_graph6(bad)

    def test_order_limit(self):
        with pytest.raises(GraphError):
            to_graph6(octahedron(40))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2**31 - 1), st.integers(0, 14))
    def test_roundtrip_random(self, seed, n):
        g = random_graph(random.Random(seed), n, 0.4)
        if n == 0:
            return
        assert parse_graph6(to_graph6(g)) == g


class TestEdgeListText:
    def test_roundtrip(self):
        g = hajos_sun()
        assert parse_edge_list_text(to_edge_list_text(g)) == g

    def test_parse(self):
        assert parse_edge_list_text("3\n0 1\n1 2\n") == path(3)

    def test_malformed(self):
        for bad in ("", "x", "2\n0 1 2", "2\n0 one"):
            with pytest.raises(GraphError):
                parse_edge_list_text(bad)


class TestDot:
    def test_plain(self):
        text = to_dot(path(2))
        assert text.startswith("graph G {")
        assert "0 -- 1;" in text

    def test_labels(self):
        text = to_dot(path(2), ["a", "b"])
        assert 'label="a"' in text
        with pytest.raises(GraphError):
            to_dot(path(2), ["a"])


class TestNamedGraphs:
    def test_constructions(self):
        assert complete(4).edge_count() == 6
        assert cycle(5).edge_count() == 5
        assert path(5).edge_count() == 4
        assert octahedron(3).n == 6 and octahedron(3).edge_count() == 12
        assert is_isomorphic(octahedron(2), cycle(4))
        assert hajos_sun().n == 6 and hajos_sun().edge_count() == 9

    def test_invalid_parameters(self):
        for fn, arg in ((complete, 0), (cycle, 2), (path, 0), (octahedron, 1)):
            with pytest.raises(GraphError):
                fn(arg)

    def test_named_dispatch(self):
        assert named("cycle", 5) == cycle(5)
        assert named("hajos_sun") == hajos_sun()
        with pytest.raises(GraphError):
            named("hajos_sun", 3)
        with pytest.raises(GraphError):
            named("cycle")
        with pytest.raises(GraphError):
            named("nonsense", 3)


class TestOctahedronRecognition:
    def test_positive(self):
        for d in (2, 3, 4, 8):
            assert is_octahedron(octahedron(d))

    def test_negative(self):
        assert not is_octahedron(complete(6))
        assert not is_octahedron(cycle(6))
        assert not is_octahedron(complete(4))  # (n-2)-regular needs matching
        assert not is_octahedron(path(4))


class TestLowDegree:
    def test_in_class(self):
        assert is_low_degree(cycle(4))  # octahedron(2), still admitted
        assert is_low_degree(path(7))
        assert is_low_degree(hajos_sun())
        assert is_low_degree(complete(5))

    def test_out_of_class(self):
        assert not is_low_degree(octahedron(3))
        assert not is_low_degree(complete(6))  # degree 5
        assert not is_low_degree(Graph(2, [0, 0]))  # disconnected
