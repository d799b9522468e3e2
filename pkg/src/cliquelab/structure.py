"""Structure of K²(G): stars, normal vertices, inner triangles, neckties
(with centers and ears), and necktie adjacency predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bitset import bit_list, bits
from .cliques import clique_graph, maximal_cliques
from .graph import Graph, GraphError
from .helly import triangles


@dataclass(frozen=True)
class K2Vertex:
    """A vertex of K²(G): a clique of K(G), tagged as a star (nonempty
    common vertex set) or a necktie (empty total intersection, matched to
    the inner triangle whose two-vertex intersections pick out its members).
    ``members`` holds K(G) vertex indices."""

    tag: str  # "star" | "necktie"
    members: frozenset[int]
    x: int | None = None  # star: least common vertex
    multi_center: bool = False  # star: more than one common vertex (true twins)
    center: int | None = None  # necktie: center triangle bitmask
    unmatched: bool = False  # necktie matching no inner triangle

    def to_json(self) -> dict:
        rec: dict = {"tag": self.tag, "members": sorted(self.members)}
        if self.tag == "star":
            rec["vertex"] = self.x
            if self.multi_center:
                rec["multi_center"] = True
        else:
            rec["center"] = bit_list(self.center) if self.center is not None else None
            if self.unmatched:
                rec["unmatched"] = True
        return rec


def star(g: Graph, x: int, family: list[int] | None = None) -> frozenset[int]:
    """Indices of the cliques containing x; always complete in K(G)."""
    g._check_vertex(x)
    fam = maximal_cliques(g) if family is None else family
    return frozenset(i for i, q in enumerate(fam) if q >> x & 1)


def _is_clique_of_kg(members: frozenset[int], fam: list[int]) -> bool:
    """Is this complete set of K(G) vertices maximal?"""
    for j, q in enumerate(fam):
        if j in members:
            continue
        if all(q & fam[i] for i in members):
            return False
    return True


def is_normal_vertex(g: Graph, x: int, family: list[int] | None = None) -> bool:
    """x is normal iff its star is itself a clique of K(G)."""
    fam = maximal_cliques(g) if family is None else family
    return _is_clique_of_kg(star(g, x, fam), fam)


def is_inner_triangle(g: Graph, t: int) -> bool:
    """t (a triangle bitmask) is inner iff it is a clique and each edge lies
    in a second, distinct triangle."""
    members = bit_list(t)
    if len(members) != 3:
        raise GraphError("not a triangle")
    a, b, c = members
    if not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise GraphError("not a triangle")
    if g.adj[a] & g.adj[b] & g.adj[c]:
        return False  # not maximal
    for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
        if not (g.adj[u] & g.adj[v] & ~(1 << w)):
            return False
    return True


def inner_triangles(g: Graph) -> list[int]:
    """Inner triangles in deterministic (member-list) order."""
    out = [t for t in triangles(g) if is_inner_triangle(g, t)]
    out.sort(key=bit_list)
    return out


def q_of_triangle(g: Graph, t: int, family: list[int] | None = None) -> K2Vertex:
    """Q_T: the cliques meeting the inner triangle t in >= 2 vertices."""
    if not is_inner_triangle(g, t):
        raise GraphError("triangle is not inner")
    fam = maximal_cliques(g) if family is None else family
    members = frozenset(i for i, q in enumerate(fam) if (q & t).bit_count() >= 2)
    return K2Vertex(tag="necktie", members=members, center=t)


def classify_k2_vertices(g: Graph) -> list[K2Vertex]:
    """Tag every clique of K(G) as a star or a necktie.

    Stars with more than one common vertex (true twins) are recorded with
    the least one and flagged.  A necktie whose member set equals no Q_T is
    flagged unmatched; for low-degree hosts that signals a structure bug.
    """
    return K2Analysis(g).classification


def star_star_adjacent(g: Graph, x: int, y: int, family: list[int] | None = None) -> bool:
    fam = maximal_cliques(g) if family is None else family
    for v in (x, y):
        if not is_normal_vertex(g, v, fam):
            raise GraphError(f"vertex {v} is not normal")
    return g.has_edge(x, y)


def star_necktie_adjacent(g: Graph, x: int, t: int, family: list[int] | None = None) -> bool:
    fam = maximal_cliques(g) if family is None else family
    if not is_normal_vertex(g, x, fam):
        raise GraphError(f"vertex {x} is not normal")
    if not is_inner_triangle(g, t):
        raise GraphError("triangle is not inner")
    return (g.adj[x] & t).bit_count() >= 2


def necktie_necktie_adjacent(g: Graph, t: int, t2: int) -> bool:
    for tri in (t, t2):
        if not is_inner_triangle(g, tri):
            raise GraphError("triangle is not inner")
    if t == t2:
        raise GraphError("neckties must be distinct")
    common = t & t2
    k = common.bit_count()
    if k == 2:
        return True
    if k != 1:
        return False
    rest2 = t2 & ~common
    return any(g.adj[a] & rest2 for a in bits(t & ~common))


def crossbar_count(g: Graph, t: int, t2: int) -> int:
    """Edges joining t - v to t2 - v when the triangles share exactly v."""
    common = t & t2
    if common.bit_count() != 1:
        raise GraphError("triangles must share exactly one vertex")
    rest2 = t2 & ~common
    return sum((g.adj[a] & rest2).bit_count() for a in bits(t & ~common))


class K2Analysis:
    """Everything the lemma suite needs about one host graph, computed once:
    clique family, K(G), the classified vertices of K²(G), and K²(G) itself
    (adjacency = underlying cliques-of-cliques intersect)."""

    def __init__(self, g: Graph) -> None:
        self.g = g

    @cached_property
    def family(self) -> list[int]:
        return maximal_cliques(self.g)

    @cached_property
    def kgraph(self) -> Graph:
        kg, _ = clique_graph(self.g)
        return kg

    @cached_property
    def k2_cliques(self) -> list[int]:
        return maximal_cliques(self.kgraph)

    @cached_property
    def inner_triangles(self) -> list[int]:
        return inner_triangles(self.g)

    @cached_property
    def classification(self) -> list[K2Vertex]:
        fam = self.family
        qt_by_members: dict[frozenset[int], int] = {}
        for t in self.inner_triangles:
            members = frozenset(
                i for i, q in enumerate(fam) if (q & t).bit_count() >= 2
            )
            qt_by_members.setdefault(members, t)
        out = []
        for q2 in self.k2_cliques:
            members = frozenset(bits(q2))
            inter = None
            for i in members:
                inter = fam[i] if inter is None else inter & fam[i]
            assert inter is not None
            if inter:
                common = bit_list(inter)
                out.append(
                    K2Vertex(
                        tag="star",
                        members=members,
                        x=common[0],
                        multi_center=len(common) > 1,
                    )
                )
            else:
                center = qt_by_members.get(members)
                out.append(
                    K2Vertex(
                        tag="necktie",
                        members=members,
                        center=center,
                        unmatched=center is None,
                    )
                )
        return out

    @cached_property
    def stars(self) -> list[K2Vertex]:
        return [v for v in self.classification if v.tag == "star"]

    @cached_property
    def neckties(self) -> list[K2Vertex]:
        return [v for v in self.classification if v.tag == "necktie"]

    @cached_property
    def normal_vertices(self) -> list[int]:
        fam = self.family
        return [x for x in range(self.g.n) if is_normal_vertex(self.g, x, fam)]

    @cached_property
    def k2graph(self) -> Graph:
        cls = self.classification
        c = len(cls)
        adj = [0] * c
        masks = []
        for v in cls:
            m = 0
            for i in v.members:
                m |= 1 << i
            masks.append(m)
        for i in range(c):
            for j in range(i + 1, c):
                if masks[i] & masks[j]:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return Graph(c, adj)

    def k2_labels(self) -> list[str]:
        out = []
        for v in self.classification:
            if v.tag == "star":
                out.append(f"star {v.x}")
            elif v.center is not None:
                out.append("necktie " + "-".join(map(str, bit_list(v.center))))
            else:
                out.append("necktie ?")
        return out

    def to_json(self) -> dict:
        return {
            "order": self.g.n,
            "clique_count": len(self.family),
            "k2_vertices": [v.to_json() for v in self.classification],
        }
