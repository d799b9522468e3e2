"""Maximal cliques, the clique-graph operator, and budgeted iteration."""

import random

import pytest

from cliquelab import (
    Graph,
    GraphError,
    clique_graph,
    complete,
    count_maximal_cliques,
    cycle,
    hajos_sun,
    is_isomorphic,
    iterate,
    maximal_cliques,
    octahedron,
    path,
)
from cliquelab.bitset import bit_list
from cliquelab.cliques import clique_members
from conftest import corpus, random_graph, subset_oracle_cliques


class TestMaximalCliques:
    def test_known_families(self):
        assert maximal_cliques(complete(4)) == [0b1111]
        assert maximal_cliques(path(3)) == [0b011, 0b110]
        assert maximal_cliques(Graph(2, [0, 0])) == [0b01, 0b10]
        # the sun: the central triangle and three outer triangles
        assert len(maximal_cliques(hajos_sun())) == 4
        assert len(maximal_cliques(octahedron(3))) == 8

    def test_sorted_by_size_then_members(self):
        fam = maximal_cliques(hajos_sun())
        keys = [(q.bit_count(), bit_list(q)) for q in fam]
        assert keys == sorted(keys)

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            maximal_cliques(Graph(0, []))
        with pytest.raises(GraphError):
            count_maximal_cliques(Graph(0, []), 10)

    def test_subset_oracle_random(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randrange(1, 9)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            assert maximal_cliques(g) == subset_oracle_cliques(g)

    def test_subset_oracle_corpus(self):
        for g in corpus(6):
            assert maximal_cliques(g) == subset_oracle_cliques(g)


class TestCountWithLimit:
    def test_early_abort(self):
        g = octahedron(3)  # 8 cliques
        assert count_maximal_cliques(g, 100) == 8
        assert count_maximal_cliques(g, 8) == 8
        assert count_maximal_cliques(g, 7) == 8  # stops at limit + 1
        assert count_maximal_cliques(g, 3) == 4

    def test_agrees_with_enumeration(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng, rng.randrange(1, 10), 0.5)
            assert count_maximal_cliques(g, 10**6) == len(maximal_cliques(g))


class TestCliqueGraph:
    def test_c4_is_self(self):
        kg, fam = clique_graph(cycle(4))
        assert is_isomorphic(kg, cycle(4))
        assert all(q.bit_count() == 2 for q in fam)

    def test_complete_collapses(self):
        kg, _ = clique_graph(complete(5))
        assert kg.n == 1

    def test_family_indices_are_vertices(self):
        g = hajos_sun()
        kg, fam = clique_graph(g)
        assert kg.n == len(fam)
        for i in range(kg.n):
            for j in range(i + 1, kg.n):
                assert kg.has_edge(i, j) == bool(fam[i] & fam[j])

    def test_octahedron_doubles(self):
        kg, _ = clique_graph(octahedron(3))
        assert is_isomorphic(kg, octahedron(4))

    def test_clique_members(self):
        assert clique_members(0b1101) == [0, 2, 3]


class TestIterate:
    def test_path_shrinks_to_point(self):
        res = iterate(path(5), 10)
        assert res.orders == [5, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1]
        assert not res.truncated

    def test_truncation(self):
        res = iterate(octahedron(3), 10, vertex_budget=100)
        assert res.orders == [6, 8, 16]
        assert res.truncated
        assert res.projected_order == 101  # early abort at budget + 1

    def test_zero_steps(self):
        res = iterate(cycle(5), 0)
        assert res.orders == [5] and not res.truncated

    def test_argument_validation(self):
        with pytest.raises(GraphError):
            iterate(cycle(5), -1)
        with pytest.raises(GraphError):
            iterate(cycle(5), 3, vertex_budget=4)
