"""Exhaustive enumeration of connected graphs with bounded maximum degree,
one representative per isomorphism class."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .bitset import bits
from .graph import Graph, GraphError, is_connected, is_octahedron, parse_graph6
from .iso import canonical_form

MAX_ORDER = 10


@dataclass(frozen=True)
class CorpusSpec:
    n_min: int = 1
    n_max: int = 8
    delta_max: int = 4
    exclude_octahedron: bool = True

    def __post_init__(self) -> None:
        if not (1 <= self.n_min <= self.n_max <= MAX_ORDER):
            raise GraphError(f"need 1 <= n_min <= n_max <= {MAX_ORDER}")
        if self.delta_max < 1:
            raise GraphError("delta_max must be >= 1")

    def admits(self, g: Graph) -> bool:
        if not (self.n_min <= g.n <= self.n_max):
            return False
        if g.max_degree() > self.delta_max or not is_connected(g):
            return False
        if self.exclude_octahedron and g.n == 6 and is_octahedron(g):
            return False
        return True


def _extend(parent: Graph, delta_max: int) -> Iterator[Graph]:
    """Attach a new vertex to every admissible nonempty subset of parent."""
    n = parent.n
    room = 0  # vertices that can take one more edge
    for v in range(n):
        if parent.adj[v].bit_count() < delta_max:
            room |= 1 << v
    subsets = _submasks(room)
    for s in subsets:
        if not s or s.bit_count() > delta_max:
            continue
        adj = list(parent.adj) + [s]
        for v in bits(s):
            adj[v] |= 1 << n
        yield Graph(n + 1, adj)


def _submasks(mask: int) -> Iterator[int]:
    s = mask
    while s:
        yield s
        s = (s - 1) & mask
    yield 0


def enumerate_connected_bounded(spec: CorpusSpec) -> Iterator[Graph]:
    """One representative per isomorphism class, ordered by (order,
    certificate).

    Grows level by level: every connected graph on n+1 vertices arises from
    a connected graph on n vertices by attaching a new vertex (delete a
    non-cutvertex to see this), so per-level certificate deduplication is
    complete.
    """
    level = [Graph(1, [0])]
    for n in range(1, spec.n_max + 1):
        if n >= spec.n_min:
            for g in level:
                if spec.admits(g):
                    yield g
        if n == spec.n_max:
            break
        seen: dict[bytes, Graph] = {}
        for parent in level:
            for child in _extend(parent, spec.delta_max):
                cert = canonical_form(child)
                if cert not in seen:
                    seen[cert] = child
        level = [seen[c] for c in sorted(seen)]


def corpus_from_graph6(lines: Iterable[str], spec: CorpusSpec) -> list[Graph]:
    """External corpus source: parse, filter by the spec, deduplicate by
    certificate, and order like the generator."""
    by_cert: dict[tuple[int, bytes], Graph] = {}
    for line in lines:
        token = line.strip()
        if not token:
            continue
        g = parse_graph6(token)
        if spec.admits(g):
            by_cert.setdefault((g.n, canonical_form(g)), g)
    return [by_cert[key] for key in sorted(by_cert)]
