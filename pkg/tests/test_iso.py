"""Canonical labeling against a brute-force permutation oracle."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cliquelab import (
    Graph,
    canonical_form,
    complete,
    cycle,
    from_edge_list,
    is_isomorphic,
    octahedron,
    path,
)
from conftest import corpus, permutation_min_encoding, random_graph, relabel


def _decode_cert(cert):
    """Rebuild a concrete graph from the certificate bit string."""
    n = int.from_bytes(cert[:4], "big")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if cert[4 + k // 8] >> (7 - k % 8) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


class TestPermutationOracle:
    """The oracle's minimum encoding over all n! orderings is a perfect
    isomorphism invariant; the certificate must induce the same equivalence
    classes and decode to an isomorphic graph."""

    def test_random_graphs_same_classes_as_oracle(self):
        rng = random.Random(42)
        graphs = [
            random_graph(rng, rng.randrange(1, 7), rng.choice([0.2, 0.5, 0.8]))
            for _ in range(120)
        ]
        by_oracle = {}
        by_cert = {}
        for idx, g in enumerate(graphs):
            by_oracle.setdefault((g.n, permutation_min_encoding(g)), set()).add(idx)
            by_cert.setdefault(canonical_form(g), set()).add(idx)
        assert sorted(map(sorted, by_oracle.values())) == \
            sorted(map(sorted, by_cert.values()))

    def test_corpus_certs_decode_to_isomorphic_graphs(self):
        for g in corpus(6):
            assert is_isomorphic(_decode_cert(canonical_form(g)), g)

    def test_named_graphs_decode(self):
        for g in (complete(5), cycle(6), octahedron(3), path(6)):
            decoded = _decode_cert(canonical_form(g))
            assert decoded.n == g.n
            assert is_isomorphic(decoded, g)


class TestRelabelInvariance:
    def test_many_permutations(self):
        rng = random.Random(7)
        for trial in range(100):
            n = rng.randrange(2, 12)
            g = random_graph(rng, n, rng.choice([0.15, 0.4, 0.7]))
            cert = canonical_form(g)
            for _ in range(10):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(relabel(g, perm)) == cert

    def test_octahedron_highly_symmetric(self):
        rng = random.Random(3)
        for d in (3, 8, 32):
            g = octahedron(d)
            cert = canonical_form(g)
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == cert

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 2**31 - 1), st.integers(1, 10))
    def test_property(self, seed, n):
        rng = random.Random(seed)
        g = random_graph(rng, n, 0.5)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


class TestIsIsomorphic:
    def test_positive(self):
        g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert is_isomorphic(g, cycle(5))

    def test_same_degree_sequence_not_isomorphic(self):
        two_triangles = from_edge_list(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_isomorphic(cycle(6), two_triangles)

    def test_prefilter_cases(self):
        assert not is_isomorphic(path(3), path(4))  # order differs
        assert not is_isomorphic(cycle(4), path(4))  # edge count differs
        star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert not is_isomorphic(star, path(4))  # degree multiset differs

    def test_exhaustive_distinctness_small_corpus(self):
        graphs = corpus(6)
        certs = [canonical_form(g) for g in graphs]
        assert len(set(certs)) == len(certs)
