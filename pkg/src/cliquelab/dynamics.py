"""Convergence classification of the iterated clique-graph sequence.

Divergence is never asserted: the only verdicts are Convergent (a repeated
isomorphism type was found) and BudgetExceeded (iteration or vertex budget
ran out first).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import DEFAULT_VERTEX_BUDGET, clique_graph, count_maximal_cliques
from .graph import Graph, GraphError
from .helly import is_clique_helly
from .iso import canonical_form

DEFAULT_MAX_ITERATIONS = 30


@dataclass
class Behavior:
    verdict: str  # "Convergent" | "BudgetExceeded"
    orders: list[int]
    max_iterations: int
    vertex_budget: int
    m: int | None = None
    n: int | None = None
    projected_order: int | None = None  # set when the vertex budget tripped

    @property
    def convergent(self) -> bool:
        return self.verdict == "Convergent"

    def to_json(self) -> dict:
        rec = {
            "verdict": self.verdict,
            "orders": self.orders,
            "budgets": {
                "max_iterations": self.max_iterations,
                "vertex_budget": self.vertex_budget,
            },
        }
        if self.convergent:
            rec["m"] = self.m
            rec["n"] = self.n
        if self.projected_order is not None:
            rec["projected_order_at_least"] = self.projected_order
        return rec


def classify_behavior(
    g: Graph,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> Behavior:
    """Iterate K until an isomorphism repeat or a budget trips.

    The first repeated certificate gives the least n with K^m iso K^n and
    the least m for that n.
    """
    if g.n < 1:
        raise GraphError("behavior classification needs a nonempty graph")
    if max_iterations < 1 or vertex_budget < 1:
        raise GraphError("budgets must be positive")
    seen: dict[bytes, int] = {canonical_form(g): 0}
    orders = [g.n]
    cur = g
    for i in range(1, max_iterations + 1):
        count = count_maximal_cliques(cur, vertex_budget)
        if count > vertex_budget:
            return Behavior(
                "BudgetExceeded", orders, max_iterations, vertex_budget,
                projected_order=count,
            )
        cur, _fam = clique_graph(cur)
        orders.append(cur.n)
        cert = canonical_form(cur)
        if cert in seen:
            return Behavior(
                "Convergent", orders, max_iterations, vertex_budget,
                m=seen[cert], n=i,
            )
        seen[cert] = i
    return Behavior("BudgetExceeded", orders, max_iterations, vertex_budget)


def helly_convergence_crosscheck(
    g: Graph,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> bool:
    """Clique-Helly graphs must converge; a False return is an anomaly to
    report (budget too small or a bug), never to ignore."""
    if not is_clique_helly(g):
        raise GraphError("crosscheck requires a clique-Helly graph")
    return classify_behavior(g, max_iterations, vertex_budget).convergent
