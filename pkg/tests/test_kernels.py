"""Parity between the compiled and pure-Python kernels."""

import os
import random
import subprocess
import sys

import pytest

from cliquelab import _pykernels as pk
from cliquelab import kernels
from conftest import random_graph

try:
    from cliquelab import _ckernels as ck
except ImportError:  # pragma: no cover - build without the extension
    ck = None

needs_ext = pytest.mark.skipif(ck is None, reason="compiled kernels not built")


@needs_ext
class TestParity:
    def test_small_random(self):
        rng = random.Random(123)
        for _ in range(300):
            n = rng.randrange(1, 13)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            adj = g.adj
            assert pk.maximal_cliques(n, adj) == ck.maximal_cliques(n, adj)
            assert pk.canonical_cert(n, adj) == ck.canonical_cert(n, adj)
            for limit in (0, 1, 5, 10**6):
                assert pk.count_maximal_cliques(n, adj, limit) == \
                    ck.count_maximal_cliques(n, adj, limit)

    def test_multiword_random(self):
        rng = random.Random(5)
        for _ in range(8):
            n = rng.randrange(60, 140)
            g = random_graph(rng, n, 0.08)
            assert pk.maximal_cliques(n, g.adj) == ck.maximal_cliques(n, g.adj)
            assert pk.canonical_cert(n, g.adj) == ck.canonical_cert(n, g.adj)

    def test_octahedra(self):
        from cliquelab.graph import octahedron

        for d in (2, 3, 8, 16):
            g = octahedron(d)
            assert pk.canonical_cert(g.n, g.adj) == ck.canonical_cert(g.n, g.adj)
            assert pk.maximal_cliques(g.n, g.adj) == ck.maximal_cliques(g.n, g.adj)

    def test_empty_graph(self):
        assert ck.maximal_cliques(0, ()) == []
        assert ck.count_maximal_cliques(0, (), 5) == 0
        assert ck.canonical_cert(0, ()) == pk.canonical_cert(0, ())


class TestSelection:
    def test_selected_implementation_is_exposed(self):
        assert kernels.IMPL_NAME in ("cython", "python")
        assert callable(kernels.maximal_cliques)

    def test_pure_fallback_env(self):
        env = dict(os.environ, CLIQUE_LAB_PURE="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from cliquelab import kernels; print(kernels.IMPL_NAME)"],
            capture_output=True, text=True, env=env, check=True,
        )
        assert out.stdout.strip() == "python"
