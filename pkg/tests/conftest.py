"""Shared fixtures and brute-force oracles for the test suite."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from cliquelab import CorpusSpec, Graph, enumerate_connected_bounded, from_edge_list
from cliquelab.bitset import bits


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def subset_oracle_cliques(g: Graph) -> list[int]:
    """Maximal cliques by scanning all 2^n vertex subsets."""
    completes = set()
    for k in range(1, g.n + 1):
        for vs in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                m = 0
                for v in vs:
                    m |= 1 << v
                completes.add(m)
    maximal = [
        c for c in completes
        if not any(c != d and c & d == c for d in completes)
    ]
    maximal.sort(key=lambda c: (c.bit_count(), sorted(bits(c))))
    return maximal


def permutation_min_encoding(g: Graph) -> tuple[int, ...]:
    """Least column-major upper-triangle bit string over all n! orderings."""
    best = None
    for perm in permutations(range(g.n)):
        enc = []
        for j in range(1, g.n):
            for i in range(j):
                enc.append(g.adj[perm[j]] >> perm[i] & 1)
        enc = tuple(enc)
        if best is None or enc < best:
            best = enc
    assert best is not None
    return best


def relabel(g: Graph, perm: list[int]) -> Graph:
    adj = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, adj)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for i in range(n):
        for j in range(i):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def corpus(n_max: int, n_min: int = 1, delta_max: int = 4,
           exclude_octahedron: bool = True) -> list[Graph]:
    spec = CorpusSpec(n_min, n_max, delta_max, exclude_octahedron)
    return list(enumerate_connected_bounded(spec))


# ---------------------------------------------------------------------------
# constructed positive instances for the lemma suite
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def crossbar_pair_graph() -> Graph:
    """Two inner triangles 0-1-2 and 0-3-4 sharing only vertex 0, joined by
    the two crossbars 1-3 and 2-4, with ears 5 and 6."""
    return from_edge_list(
        7,
        [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4),
         (1, 3), (2, 4), (5, 1), (5, 2), (6, 3), (6, 4)],
    )


@pytest.fixture(scope="session")
def shared_edge_pair_graph() -> Graph:
    """Two inner triangles 0-1-2 and 0-1-3 sharing the edge {0, 1}: the
    6-vertex octahedron (antipodal pairs 05, 14, 23) minus the edge 4-5."""
    return from_edge_list(
        6,
        [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3),
         (0, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5)],
    )
