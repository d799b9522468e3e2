"""Finite simple graphs with bitmask adjacency, named constructions, and
text formats (graph6, edge-list, DOT)."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .bitset import bit_list, bits, full_mask, mask_of


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    __slots__ = ("n", "adj", "_cert")

    def __init__(self, n: int, adj: Sequence[int]) -> None:
        if n < 0:
            raise GraphError("negative order")
        if len(adj) != n:
            raise GraphError("adjacency length != order")
        vmask = full_mask(n)
        for v, a in enumerate(adj):
            if a & ~vmask:
                raise GraphError("neighbor id out of range")
            if a >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, a in enumerate(adj):
            for u in bits(a):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric edge ({v},{u})")
        self.n = n
        self.adj = tuple(adj)
        self._cert: bytes | None = None

    # -- queries ------------------------------------------------------------

    def neighbors(self, x: int) -> int:
        self._check_vertex(x)
        return self.adj[x]

    def closed_neighborhood(self, x: int) -> int:
        self._check_vertex(x)
        return self.adj[x] | (1 << x)

    def degree(self, x: int) -> int:
        self._check_vertex(x)
        return self.adj[x].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def has_edge(self, x: int, y: int) -> bool:
        self._check_vertex(x)
        self._check_vertex(y)
        return bool(self.adj[x] >> y & 1)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise GraphError(f"vertex {x} out of range for order {self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges; duplicates collapse."""
    adj = [0] * n
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n):
            raise GraphError(f"edge ({x},{y}) out of range for order {n}")
        if x == y:
            raise GraphError(f"loop edge ({x},{x})")
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    return Graph(n, adj)


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, list[int]]:
    """Subgraph induced by vertex mask ``s``; mapping[new_id] = old_id."""
    if s & ~g.vertex_mask():
        raise GraphError("subset not within vertex set")
    mapping = bit_list(s)
    pos = {old: new for new, old in enumerate(mapping)}
    adj = [0] * len(mapping)
    for new, old in enumerate(mapping):
        for u in bits(g.adj[old] & s):
            adj[new] |= 1 << pos[u]
    return Graph(len(mapping), adj), mapping


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask()


# -- graph6 (single-byte order, n <= 62) -------------------------------------


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise GraphError("empty graph6 token")
    raw = data.encode("ascii")
    n = raw[0] - 63
    if n < 0:
        raise GraphError(f"malformed graph6 byte {raw[0]}")
    if n > 62:
        raise GraphError("graph6 support limited to n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    body = raw[1:]
    if len(body) != need:
        raise GraphError(f"graph6 payload length {len(body)}, expected {need}")
    adj = [0] * n
    k = 0
    for byte in body:
        if byte < 63 or byte > 126:
            raise GraphError(f"malformed graph6 byte {byte}")
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 support limited to n <= 62")
    out = [g.n + 63]
    acc = 0
    nb = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out).decode("ascii")


# -- edge-list text ("n\nu v\n...") ------------------------------------------


def parse_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list text")
    try:
        n = int(lines[0])
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge-list text: {exc}") from exc
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"malformed edge line {e!r}")
    return from_edge_list(n, edges)  # type: ignore[arg-type]


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- DOT ----------------------------------------------------------------------


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.n:
        raise GraphError("labels length != order")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- named constructions -------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    m = full_mask(n)
    return Graph(n, [m ^ (1 << v) for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def octahedron(d: int) -> Graph:
    """Complete multipartite graph with d parts of size 2 (2d vertices);
    antipodal pairs are (2i, 2i+1)."""
    if d < 2:
        raise GraphError("octahedron(d) needs d >= 2")
    n = 2 * d
    m = full_mask(n)
    adj = []
    for v in range(n):
        adj.append(m ^ (1 << v) ^ (1 << (v ^ 1)))
    return Graph(n, adj)


def hajos_sun() -> Graph:
    """Triangle 0,1,2 plus outer vertices 3,4,5 where 3~{1,2}, 4~{0,2},
    5~{0,1}: the smallest graph whose cliques pairwise meet with empty
    total intersection."""
    return from_edge_list(
        6,
        [(0, 1), (0, 2), (1, 2), (3, 1), (3, 2), (4, 0), (4, 2), (5, 0), (5, 1)],
    )


def is_octahedron(g: Graph) -> bool:
    """True iff g is octahedron(d) for some d >= 2: even order, (n-2)-regular,
    complement a perfect matching."""
    n = g.n
    if n < 4 or n % 2:
        return False
    vmask = full_mask(n)
    seen = 0
    for v in range(n):
        if g.adj[v].bit_count() != n - 2:
            return False
        other = vmask & ~g.adj[v] & ~(1 << v)
        if other.bit_count() != 1:
            return False
        seen |= other
    return seen == vmask


def is_low_degree(g: Graph) -> bool:
    """Connected, max degree <= 4, and not the 6-vertex octahedron.

    Only the 6-vertex octahedron is excluded: octahedron(2) is C4, which
    satisfies the degree bound and stays in the class."""
    return (
        g.n >= 1
        and g.max_degree() <= 4
        and is_connected(g)
        and not (g.n == 6 and is_octahedron(g))
    )


def named(kind: str, parameter: int | None = None) -> Graph:
    table = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "octahedron": octahedron,
    }
    if kind == "hajos_sun":
        if parameter is not None:
            raise GraphError("hajos_sun takes no parameter")
        return hajos_sun()
    if kind not in table:
        raise GraphError(f"unknown named graph kind {kind!r}")
    if parameter is None:
        raise GraphError(f"{kind} needs a parameter")
    return table[kind](parameter)


def _named_registry() -> dict[str, Graph]:
    reg = {
        "octahedron3": octahedron(3),
        "octahedron4": octahedron(4),
        "k5": complete(5),
        "hajos_sun": hajos_sun(),
    }
    for i in range(4, 9):
        reg[f"c{i}"] = cycle(i)
    for i in range(2, 9):
        reg[f"p{i}"] = path(i)
    return reg


NAMED_GRAPHS = _named_registry()
