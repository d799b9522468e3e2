"""Maximal-clique enumeration and the clique-graph operator K."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Graph, GraphError
from .bitset import bit_list

DEFAULT_VERTEX_BUDGET = 200_000


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as vertex bitmasks, sorted by (size, members
    ascending).  The list index is the vertex id of the clique in K(g)."""
    if g.n < 1:
        raise GraphError("clique enumeration needs a nonempty graph")
    return kernels.maximal_cliques(g.n, g.adj)


def count_maximal_cliques(g: Graph, limit: int) -> int:
    """Clique count with early abort: stops at limit + 1."""
    if g.n < 1:
        raise GraphError("clique enumeration needs a nonempty graph")
    return kernels.count_maximal_cliques(g.n, g.adj, limit)


def clique_graph(g: Graph) -> tuple[Graph, list[int]]:
    """K(g) and the clique family giving each K-vertex its meaning."""
    fam = maximal_cliques(g)
    c = len(fam)
    adj = [0] * c
    for i in range(c):
        fi = fam[i]
        for j in range(i + 1, c):
            if fi & fam[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(c, adj), fam


@dataclass
class IterationResult:
    """Iterates K^0..K^k; truncated when the next iterate's order would
    exceed the vertex budget."""

    iterates: list[Graph]
    truncated: bool = False
    projected_order: int | None = None  # count reached at abort (> budget)

    @property
    def orders(self) -> list[int]:
        return [h.n for h in self.iterates]


def iterate(g: Graph, steps: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> IterationResult:
    if steps < 0:
        raise GraphError("steps must be >= 0")
    if vertex_budget < g.n:
        raise GraphError("vertex_budget smaller than the input order")
    result = IterationResult(iterates=[g])
    cur = g
    for _ in range(steps):
        count = count_maximal_cliques(cur, vertex_budget)
        if count > vertex_budget:
            result.truncated = True
            result.projected_order = count
            break
        cur, _fam = clique_graph(cur)
        result.iterates.append(cur)
    return result


def clique_members(mask: int) -> list[int]:
    return bit_list(mask)
