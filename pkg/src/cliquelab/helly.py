"""Helly property of set families, clique-Helly recognition, and the
Hajós-diagram compatibility test for hereditary clique-Helly graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, GraphError, induced_subgraph
from .bitset import bits, full_mask

HELLY_ORACLE_MAX_FAMILY = 20
HEREDITARY_ORACLE_MAX_ORDER = 15


def is_intersecting_family(family: Sequence[int]) -> bool:
    """True iff every two members share an element."""
    for a, b in combinations(family, 2):
        if not a & b:
            return False
    return True


def is_helly_family(family: Sequence[int]) -> bool:
    """Brute-force oracle: every pairwise-intersecting subfamily of size >= 2
    has a common element."""
    k = len(family)
    if k > HELLY_ORACLE_MAX_FAMILY:
        raise GraphError(f"family of {k} sets too large for the Helly oracle")

    # Depth-first over pairwise-intersecting subfamilies, carrying the
    # running intersection; a subfamily of size >= 2 with empty running
    # intersection is a violation.
    def grow(start: int, chosen: list[int], inter: int) -> bool:
        if len(chosen) >= 2 and not inter:
            return False
        for i in range(start, k):
            s = family[i]
            if all(s & c for c in chosen):
                if not grow(i + 1, chosen + [s], inter & s if chosen else s):
                    return False
        return True

    return grow(0, [], 0)


def triangles(g: Graph) -> list[int]:
    """All triangles (complete 3-sets, maximal or not) as bitmasks."""
    out = []
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        for w in bits(common >> (v + 1) << (v + 1)):
            out.append((1 << u) | (1 << v) | (1 << w))
    return out


def is_clique_helly(g: Graph) -> bool:
    """Polynomial test via extended triangles: for every triangle, the set
    of vertices adjacent to at least two of its corners must contain a
    vertex dominating that set.  Validated against ``is_helly_family`` on
    the clique family by the test suite."""
    if g.n < 1:
        raise GraphError("clique-Helly test needs a nonempty graph")
    adj = g.adj
    for t in triangles(g):
        a, b, c = bits(t)
        ext = (adj[a] & adj[b]) | (adj[a] & adj[c]) | (adj[b] & adj[c])
        if not any(ext & ~(adj[v] | (1 << v)) == 0 for v in bits(ext)):
            return False
    return True


def is_hereditary_helly_definitional(g: Graph) -> bool:
    """Definitional oracle: every induced subgraph is clique-Helly."""
    if g.n > HEREDITARY_ORACLE_MAX_ORDER:
        raise GraphError(f"order {g.n} too large for the definitional check")
    for s in range(1, full_mask(g.n) + 1):
        sub, _ = induced_subgraph(g, s)
        if not is_clique_helly(sub):
            return False
    return True


@dataclass(frozen=True)
class HajosEmbedding:
    """Assignment of six distinct host vertices to the solid part of the
    Hajós diagram: inner triangle ``inner`` and outer vertices ``outer``
    where outer[i] is adjacent to both inner vertices other than inner[i].
    Dashed edges are (outer[i], inner[i])."""

    inner: tuple[int, int, int]
    outer: tuple[int, int, int]

    def dashed_present(self, g: Graph) -> bool:
        return any(g.has_edge(o, t) for o, t in zip(self.outer, self.inner))

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "outer": list(self.outer)}


def _embeddings_for_triangle(g: Graph, t1: int, t2: int, t3: int) -> Iterator[HajosEmbedding]:
    used = (1 << t1) | (1 << t2) | (1 << t3)
    c1 = g.adj[t2] & g.adj[t3] & ~used
    c2 = g.adj[t1] & g.adj[t3] & ~used
    c3 = g.adj[t1] & g.adj[t2] & ~used
    for o1 in bits(c1):
        for o2 in bits(c2 & ~(1 << o1)):
            for o3 in bits(c3 & ~(1 << o1) & ~(1 << o2)):
                yield HajosEmbedding((t1, t2, t3), (o1, o2, o3))


def enumerate_hajos_embeddings(g: Graph) -> list[HajosEmbedding]:
    """All solid-edge embeddings, one representative per orbit of the
    diagram symmetry (the three inner/outer pairs are interchangeable, so
    the inner triangle is taken in ascending order)."""
    out = []
    for t in triangles(g):
        t1, t2, t3 = bits(t)
        out.extend(_embeddings_for_triangle(g, t1, t2, t3))
    return out


def hajos_violation(g: Graph) -> HajosEmbedding | None:
    """First embedding with no dashed edge, or None."""
    for t in triangles(g):
        t1, t2, t3 = bits(t)
        for emb in _embeddings_for_triangle(g, t1, t2, t3):
            if not emb.dashed_present(g):
                return emb
    return None


def hajos_compatible(g: Graph) -> bool:
    """Hereditary clique-Helly test: every solid-edge embedding of the
    Hajós diagram carries at least one dashed edge."""
    return hajos_violation(g) is None
