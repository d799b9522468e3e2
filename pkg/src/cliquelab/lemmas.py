"""Executable verifiers for the structure claims behind the convergence
theorem for connected graphs of maximum degree four.

Each checker returns a LemmaReport with verdict Pass, Vacuous (the
quantifier domain was empty), or Fail carrying an explicit witness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .bitset import bit_list, bits
from .graph import (
    Graph,
    GraphError,
    induced_subgraph,
    is_connected,
    is_low_degree,
    to_graph6,
)
from .helly import hajos_violation, triangles
from .structure import (
    K2Analysis,
    crossbar_count,
    is_inner_triangle,
    necktie_necktie_adjacent,
)

PASS = "Pass"
VACUOUS = "Vacuous"
FAIL = "Fail"


@dataclass
class LemmaReport:
    lemma_id: str
    graph_id: str
    verdict: str
    witness: dict | None = None

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_json(self) -> dict:
        rec = {"lemma": self.lemma_id, "graph": self.graph_id, "verdict": self.verdict}
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


def graph_id_of(g: Graph) -> str:
    if g.n <= 62:
        return to_graph6(g)
    return f"order{g.n}"


def _report(lemma_id: str, g: Graph, verdict: str, witness: dict | None = None) -> LemmaReport:
    return LemmaReport(lemma_id, graph_id_of(g), verdict, witness)


def _require_low_degree(g: Graph) -> None:
    if not is_low_degree(g):
        raise GraphError("checker requires a connected graph with max degree "
                         "<= 4 other than the octahedron")


def _complete_subsets(g: Graph, vertices: list[int]) -> list[int]:
    """All nonempty complete subsets (as masks) of the given vertices."""
    out: list[int] = []

    def grow(idx: int, chosen_mask: int) -> None:
        for k in range(idx, len(vertices)):
            v = vertices[k]
            if chosen_mask & ~g.adj[v]:
                continue
            out.append(chosen_mask | (1 << v))
            grow(k + 1, chosen_mask | (1 << v))

    grow(0, 0)
    return out


def _induces_4cycle(g: Graph, s: int) -> bool:
    if s.bit_count() != 4:
        return False
    sub, _ = induced_subgraph(g, s)
    return sub.edge_count() == 4 and all(sub.degree(v) == 2 for v in range(4)) and \
        _connected4(sub)


def _connected4(sub: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= sub.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << sub.n) - 1


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def check_complete_in_union(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """For cliques q1, q2 where every edge inside q1|q2 touches q1&q2:
    any complete inside the union lies in q1 or in q2."""
    ana = analysis or K2Analysis(g)
    fam = ana.family
    domain_seen = False
    for q1, q2 in combinations(fam, 2):
        union = q1 | q2
        inter = q1 & q2
        hypothesis = True
        for x in bits(union):
            if g.adj[x] & union & ~inter and not (inter >> x & 1):
                # an edge inside the union avoiding the intersection
                hypothesis = False
                break
        if not hypothesis:
            continue
        domain_seen = True
        for c in _complete_subsets(g, bit_list(union)):
            if c & ~q1 and c & ~q2:
                return _report(
                    "complete-in-union", g, FAIL,
                    {"q1": bit_list(q1), "q2": bit_list(q2), "complete": bit_list(c)},
                )
    return _report("complete-in-union", g, PASS if domain_seen else VACUOUS)


def check_neckties_only_triangles(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Under max degree 4, every necktie member is a triangle."""
    if g.max_degree() > 4:
        raise GraphError("checker requires max degree <= 4")
    ana = analysis or K2Analysis(g)
    fam = ana.family
    if not ana.neckties:
        return _report("neckties-only-triangles", g, VACUOUS)
    for nt in ana.neckties:
        for i in nt.members:
            if fam[i].bit_count() != 3:
                return _report(
                    "neckties-only-triangles", g, FAIL,
                    {"necktie": sorted(nt.members), "member": bit_list(fam[i])},
                )
    return _report("neckties-only-triangles", g, PASS)


def check_necktie_characterization(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Neckties are exactly the Q_T of inner triangles, each with three ears."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    fam = ana.family
    inner = ana.inner_triangles
    if not ana.neckties and not inner:
        return _report("necktie-characterization", g, VACUOUS)

    qt_members = {}
    for t in inner:
        members = frozenset(i for i, q in enumerate(fam) if (q & t).bit_count() >= 2)
        qt_members.setdefault(members, []).append(t)

    for nt in ana.neckties:
        matches = qt_members.get(nt.members, [])
        if len(matches) != 1 or len(nt.members) != 4:
            return _report(
                "necktie-characterization", g, FAIL,
                {
                    "necktie": sorted(nt.members),
                    "matching_inner_triangles": [bit_list(t) for t in matches],
                },
            )
    star_sets = {frozenset(bits(m)) for m in ana.k2_cliques}
    for t in inner:
        members = frozenset(i for i, q in enumerate(fam) if (q & t).bit_count() >= 2)
        inter = None
        for i in members:
            inter = fam[i] if inter is None else inter & fam[i]
        if inter or members not in star_sets:
            return _report(
                "necktie-characterization", g, FAIL,
                {"inner_triangle": bit_list(t), "q_t": sorted(members),
                 "is_clique_of_kg": members in star_sets,
                 "common": bit_list(inter or 0)},
            )
    return _report("necktie-characterization", g, PASS)


def _inner_ears(g: Graph, ana: K2Analysis, members: frozenset[int], center: int) -> list[int]:
    fam = ana.family
    out = []
    for i in sorted(members):
        q = fam[i]
        if q == center:
            continue
        if q.bit_count() == 3 and is_inner_triangle(g, q):
            out.append(q)
    return out


def check_intersecting_inner_one(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Inner T meeting any triangle T' in one vertex x: N(x) induces a
    4-cycle; if T' is inner too, Q_T has no inner ear, no vertex of T - x
    is normal, and Q_T ~ Q_T' via exactly two crossbars."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    lemma = "inner-intersect-one"
    all_triangles = triangles(g)
    inner = set(ana.inner_triangles)
    normal = set(ana.normal_vertices)
    domain_seen = False
    for t in ana.inner_triangles:
        for t2 in all_triangles:
            common = t & t2
            if t2 == t or common.bit_count() != 1:
                continue
            domain_seen = True
            x = common.bit_length() - 1
            wit = {"inner": bit_list(t), "other": bit_list(t2), "x": x}
            if not _induces_4cycle(g, g.adj[x]):
                wit["violation"] = "neighborhood not a 4-cycle"
                return _report(lemma, g, FAIL, wit)
            if t2 not in inner:
                continue
            members = frozenset(
                i for i, q in enumerate(ana.family) if (q & t).bit_count() >= 2
            )
            ears = _inner_ears(g, ana, members, t)
            if ears:
                wit["violation"] = "inner ear"
                wit["ears"] = [bit_list(e) for e in ears]
                return _report(lemma, g, FAIL, wit)
            bad_normal = [v for v in bits(t & ~common) if v in normal]
            if bad_normal:
                wit["violation"] = "normal vertex beside x"
                wit["vertices"] = bad_normal
                return _report(lemma, g, FAIL, wit)
            if not necktie_necktie_adjacent(g, t, t2) or crossbar_count(g, t, t2) != 2:
                wit["violation"] = "necktie adjacency / crossbars"
                wit["crossbars"] = crossbar_count(g, t, t2)
                return _report(lemma, g, FAIL, wit)
    return _report(lemma, g, PASS if domain_seen else VACUOUS)


def check_intersecting_inner_two(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Inner T, T' sharing an edge {x, y}: N(x), N(y) induce 4-cycles, the
    only inner ear of Q_T is T', and no vertex of T beyond x, y is normal."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    lemma = "inner-intersect-two"
    inner = ana.inner_triangles
    normal = set(ana.normal_vertices)
    domain_seen = False
    for t, t2 in permutations(inner, 2):
        common = t & t2
        if common.bit_count() != 2:
            continue
        domain_seen = True
        wit = {"inner": bit_list(t), "other": bit_list(t2),
               "shared": bit_list(common)}
        for x in bits(common):
            if not _induces_4cycle(g, g.adj[x]):
                wit["violation"] = f"neighborhood of {x} not a 4-cycle"
                return _report(lemma, g, FAIL, wit)
        members = frozenset(
            i for i, q in enumerate(ana.family) if (q & t).bit_count() >= 2
        )
        ears = _inner_ears(g, ana, members, t)
        if ears != [t2]:
            wit["violation"] = "inner ears differ from the partner triangle"
            wit["ears"] = [bit_list(e) for e in ears]
            return _report(lemma, g, FAIL, wit)
        u = t & ~common
        bad_normal = [v for v in bits(u) if v in normal]
        if bad_normal:
            wit["violation"] = "normal vertex outside the shared edge"
            wit["vertices"] = bad_normal
            return _report(lemma, g, FAIL, wit)
    return _report(lemma, g, PASS if domain_seen else VACUOUS)


def check_no_necktie_path(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """No path of three neckties in K²(G)."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    nts = ana.neckties
    if len(nts) < 3:
        return _report("no-necktie-path", g, VACUOUS)
    for j, mid in enumerate(nts):
        for i, k in combinations((x for x in range(len(nts)) if x != j), 2):
            if nts[i].members & mid.members and mid.members & nts[k].members:
                return _report(
                    "no-necktie-path", g, FAIL,
                    {"path": [sorted(nts[i].members), sorted(mid.members),
                              sorted(nts[k].members)]},
                )
    return _report("no-necktie-path", g, PASS)


def check_forbidden_diamonds(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Two stars and two neckties never induce a diamond in K²(G) missing
    either the necktie-necktie pair or a star-necktie pair."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    cls = ana.classification
    k2 = ana.k2graph
    star_ids = [i for i, v in enumerate(cls) if v.tag == "star"]
    necktie_ids = [i for i, v in enumerate(cls) if v.tag == "necktie"]
    if len(star_ids) < 2 or len(necktie_ids) < 2:
        return _report("forbidden-diamonds", g, VACUOUS)
    e = k2.has_edge
    for a, b in permutations(star_ids, 2):
        if not e(a, b):
            continue
        for q1, q2 in permutations(necktie_ids, 2):
            # missing pair = the two neckties
            if a < b and q1 < q2 and e(a, q1) and e(a, q2) and e(b, q1) \
                    and e(b, q2) and not e(q1, q2):
                return _report(
                    "forbidden-diamonds", g, FAIL,
                    {"form": "necktie-pair-missing",
                     "stars": [cls[a].x, cls[b].x],
                     "neckties": [sorted(cls[q1].members), sorted(cls[q2].members)]},
                )
            # missing pair = star a / necktie q2
            if e(a, q1) and e(b, q1) and e(b, q2) and e(q1, q2) and not e(a, q2):
                return _report(
                    "forbidden-diamonds", g, FAIL,
                    {"form": "star-necktie-missing",
                     "stars": [cls[a].x, cls[b].x],
                     "neckties": [sorted(cls[q1].members), sorted(cls[q2].members)]},
                )
    return _report("forbidden-diamonds", g, PASS)


def _star_adjacency_sets(g: Graph, ana: K2Analysis) -> dict[int, frozenset[int]]:
    from .structure import star

    return {x: star(g, x, ana.family) for x in ana.normal_vertices}


def check_star_fan(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Four normal vertices a,b,x,z and an inner triangle T with solid
    K²-edges ab, bx, bz, az, aQ_T, bQ_T, xQ_T force ax or zQ_T."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    lemma = "star-fan"
    stars = _star_adjacency_sets(g, ana)
    normal = ana.normal_vertices
    if len(normal) < 4 or not ana.inner_triangles:
        return _report(lemma, g, VACUOUS)
    adj = g.adj
    domain_seen = False
    for t in ana.inner_triangles:
        near = [v for v in normal if (adj[v] & t).bit_count() >= 2]
        for a in near:
            for b in near:
                if b == a or not (adj[a] >> b & 1):
                    continue
                for x in near:
                    if x in (a, b) or not (adj[b] >> x & 1):
                        continue
                    for z in normal:
                        if z in (a, b, x):
                            continue
                        if not (adj[b] >> z & 1 and adj[a] >> z & 1):
                            continue
                        if len({stars[a], stars[b], stars[x], stars[z]}) < 4:
                            continue
                        domain_seen = True
                        if adj[a] >> x & 1 or (adj[z] & t).bit_count() >= 2:
                            continue
                        return _report(
                            lemma, g, FAIL,
                            {"a": a, "b": b, "x": x, "z": z,
                             "inner_triangle": bit_list(t)},
                        )
    return _report(lemma, g, PASS if domain_seen else VACUOUS)


def check_star_diamond(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Four normal vertices a,b,c,x and an inner triangle T with solid
    K²-edges ab, ac, bc, bx, cx, aQ_T, bQ_T force ax or cQ_T."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    lemma = "star-diamond"
    stars = _star_adjacency_sets(g, ana)
    normal = ana.normal_vertices
    if len(normal) < 4 or not ana.inner_triangles:
        return _report(lemma, g, VACUOUS)
    adj = g.adj
    domain_seen = False
    for t in ana.inner_triangles:
        near = [v for v in normal if (adj[v] & t).bit_count() >= 2]
        for a in near:
            for b in near:
                if b == a or not (adj[a] >> b & 1):
                    continue
                for c in normal:
                    if c in (a, b):
                        continue
                    if not (adj[a] >> c & 1 and adj[b] >> c & 1):
                        continue
                    for x in normal:
                        if x in (a, b, c):
                            continue
                        if not (adj[b] >> x & 1 and adj[c] >> x & 1):
                            continue
                        if len({stars[a], stars[b], stars[c], stars[x]}) < 4:
                            continue
                        domain_seen = True
                        if adj[a] >> x & 1 or (adj[c] & t).bit_count() >= 2:
                            continue
                        return _report(
                            lemma, g, FAIL,
                            {"a": a, "b": b, "c": c, "x": x,
                             "inner_triangle": bit_list(t)},
                        )
    return _report(lemma, g, PASS if domain_seen else VACUOUS)


def check_k2_hereditary_helly(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """K²(G) is hereditary clique-Helly (Hajós-compatible)."""
    _require_low_degree(g)
    ana = analysis or K2Analysis(g)
    violation = hajos_violation(ana.k2graph)
    if violation is None:
        return _report("k2-hereditary-helly", g, PASS)
    return _report("k2-hereditary-helly", g, FAIL, {"embedding": violation.to_json()})


def check_clique_size_bound(g: Graph, analysis: K2Analysis | None = None) -> LemmaReport:
    """Under connectivity and max degree 4, cliques have at most five
    vertices and a five-clique only occurs in K5 itself."""
    if g.max_degree() > 4 or not is_connected(g):
        raise GraphError("checker requires a connected graph with max degree <= 4")
    ana = analysis or K2Analysis(g)
    top = max(q.bit_count() for q in ana.family)
    if top > 5:
        return _report("clique-size-bound", g, FAIL, {"clique_size": top})
    if top == 5 and not (g.n == 5 and g.edge_count() == 10):
        return _report("clique-size-bound", g, FAIL,
                       {"clique_size": 5, "order": g.n})
    return _report("clique-size-bound", g, PASS)


LEMMA_CHECKS = {
    "complete-in-union": check_complete_in_union,
    "neckties-only-triangles": check_neckties_only_triangles,
    "necktie-characterization": check_necktie_characterization,
    "inner-intersect-one": check_intersecting_inner_one,
    "inner-intersect-two": check_intersecting_inner_two,
    "no-necktie-path": check_no_necktie_path,
    "forbidden-diamonds": check_forbidden_diamonds,
    "star-fan": check_star_fan,
    "star-diamond": check_star_diamond,
    "k2-hereditary-helly": check_k2_hereditary_helly,
    "clique-size-bound": check_clique_size_bound,
}


def run_lemma_suite(g: Graph) -> list[LemmaReport]:
    """All checkers applicable to g, sharing one analysis."""
    ana = K2Analysis(g)
    reports = []
    for lemma_id, check in LEMMA_CHECKS.items():
        try:
            reports.append(check(g, ana))
        except GraphError:
            continue  # precondition not met for this host
    return reports
