"""Helly families, clique-Helly recognition, and the Hajós diagram test."""

import random

import pytest

from cliquelab import (
    Graph,
    GraphError,
    complete,
    cycle,
    enumerate_hajos_embeddings,
    hajos_compatible,
    hajos_sun,
    hajos_violation,
    is_clique_helly,
    is_helly_family,
    is_hereditary_helly_definitional,
    is_intersecting_family,
    maximal_cliques,
    octahedron,
    path,
    triangles,
)
from conftest import corpus, random_graph


class TestHellyFamily:
    def test_basics(self):
        assert is_helly_family([])
        assert is_helly_family([0b1, 0b1])
        assert is_helly_family([0b011, 0b110, 0b111])
        # three sets pairwise meeting with empty total intersection
        assert not is_helly_family([0b011, 0b110, 0b101])

    def test_disjoint_pair_is_fine(self):
        # non-intersecting subfamilies are outside the quantifier
        assert is_helly_family([0b01, 0b10])

    def test_family_size_limit(self):
        with pytest.raises(GraphError):
            is_helly_family([1] * 21)

    def test_intersecting_family(self):
        assert is_intersecting_family([0b011, 0b110, 0b101])
        assert not is_intersecting_family([0b01, 0b10])
        assert is_intersecting_family([])


class TestTriangles:
    def test_counts(self):
        assert len(triangles(complete(4))) == 4
        assert triangles(cycle(5)) == []
        assert len(triangles(hajos_sun())) == 4
        assert len(triangles(octahedron(3))) == 8

    def test_masks_are_triangles(self):
        g = octahedron(3)
        for t in triangles(g):
            assert t.bit_count() == 3


class TestCliqueHelly:
    def test_known_values(self):
        assert is_clique_helly(path(5))
        assert is_clique_helly(complete(6))
        assert is_clique_helly(cycle(6))
        assert not is_clique_helly(hajos_sun())
        assert not is_clique_helly(octahedron(3))

    def test_empty_rejected(self):
        with pytest.raises(GraphError):
            is_clique_helly(Graph(0, []))

    def test_oracle_agreement_corpus(self):
        for g in corpus(7):
            fam = maximal_cliques(g)
            if len(fam) <= 20:
                assert is_clique_helly(g) == is_helly_family(fam), g

    def test_oracle_agreement_random(self):
        rng = random.Random(19)
        checked = 0
        for _ in range(4000):
            n = rng.randrange(1, 10)
            g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
            fam = maximal_cliques(g)
            if len(fam) > 20:
                continue
            checked += 1
            assert is_clique_helly(g) == is_helly_family(fam), g
        assert checked > 3000


class TestHereditaryHelly:
    def test_known_values(self):
        assert hajos_compatible(path(6))
        assert hajos_compatible(complete(5))
        assert not hajos_compatible(hajos_sun())
        assert not hajos_compatible(octahedron(3))
        # clique-Helly but not hereditarily so
        g = octahedron(3)
        assert is_hereditary_helly_definitional(complete(4))
        assert not is_hereditary_helly_definitional(g)

    def test_violation_witness_is_sound(self):
        g = hajos_sun()
        emb = hajos_violation(g)
        assert emb is not None
        t1, t2, t3 = emb.inner
        o1, o2, o3 = emb.outer
        assert len({t1, t2, t3, o1, o2, o3}) == 6
        assert g.has_edge(t1, t2) and g.has_edge(t1, t3) and g.has_edge(t2, t3)
        assert g.has_edge(o1, t2) and g.has_edge(o1, t3)
        assert g.has_edge(o2, t1) and g.has_edge(o2, t3)
        assert g.has_edge(o3, t1) and g.has_edge(o3, t2)
        assert not emb.dashed_present(g)

    def test_embeddings_enumeration(self):
        assert enumerate_hajos_embeddings(cycle(6)) == []
        embs = enumerate_hajos_embeddings(hajos_sun())
        assert embs  # the sun embeds its own diagram
        for emb in embs:
            assert emb.inner[0] < emb.inner[1] < emb.inner[2]

    def test_definitional_oracle_agreement_corpus(self):
        for g in corpus(8):
            assert hajos_compatible(g) == is_hereditary_helly_definitional(g), g

    def test_definitional_oracle_agreement_random(self):
        rng = random.Random(23)
        for _ in range(400):
            n = rng.randrange(1, 9)
            g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
            assert hajos_compatible(g) == is_hereditary_helly_definitional(g), g

    def test_hereditary_implies_clique_helly(self):
        rng = random.Random(29)
        for _ in range(300):
            g = random_graph(rng, rng.randrange(1, 10), 0.5)
            if hajos_compatible(g):
                assert is_clique_helly(g), g

    def test_definitional_order_limit(self):
        with pytest.raises(GraphError):
            is_hereditary_helly_definitional(path(16))
