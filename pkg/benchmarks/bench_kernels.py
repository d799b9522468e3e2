"""Benchmark the compiled kernels against the pure-Python fallback.

Run as:  python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from cliquelab import CorpusSpec, enumerate_connected_bounded
from cliquelab import _pykernels
from cliquelab.graph import octahedron

try:
    from cliquelab import _ckernels
except ImportError:
    _ckernels = None


def _random_adj(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    adj = [0] * n
    for i in range(n):
        for j in range(i):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return tuple(adj)


def _workloads() -> list[tuple[str, list[str], list[tuple[int, tuple[int, ...]]]]]:
    corpus = [
        (g.n, g.adj)
        for g in enumerate_connected_bounded(CorpusSpec(1, 8))
    ]
    rng = random.Random(99)
    both = ["maximal_cliques", "canonical_cert"]
    return [
        ("corpus n<=8 (2390 graphs)", both, corpus),
        ("random n=40 p=0.5 (20 graphs)", both,
         [(40, _random_adj(rng, 40, 0.5)) for _ in range(20)]),
        # 2**64 maximal cliques: labeling only
        ("octahedron(64), n=128 (1 graph)", ["canonical_cert"],
         [(octahedron(64).n, octahedron(64).adj)]),
    ]


def _time(fn, graphs, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for n, adj in graphs:
            fn(n, adj)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; benchmarking pure Python only")

    for label, ops, graphs in _workloads():
        print(f"\n== {label} ==")
        for op in ops:
            times = {}
            for name, mod in impls:
                times[name] = _time(getattr(mod, op), graphs, args.repeat)
            line = f"  {op:18s}"
            for name, t in times.items():
                line += f"  {name}: {t * 1e3:9.2f} ms"
            if len(times) == 2:
                line += f"  speedup: {times['python'] / times['cython']:6.1f}x"
            print(line)


if __name__ == "__main__":
    main()
