"""Pure-Python kernels: maximal-clique enumeration and canonical labeling.

These are the hot inner loops of the engine.  The compiled extension
``cliquelab._ckernels`` provides the same three entry points with identical
outputs; ``cliquelab.kernels`` picks one at import time.

Graphs arrive as ``(n, adj)`` where ``adj[v]`` is the neighbor bitmask of
vertex ``v``.
"""

from __future__ import annotations

from collections import deque

from .bitset import bit_list, full_mask, mask_of

IMPL_NAME = "python"


# ---------------------------------------------------------------------------
# Maximal cliques (branch and bound with greedy pivoting)
# ---------------------------------------------------------------------------


def maximal_cliques(n: int, adj: tuple[int, ...]) -> list[int]:
    """All maximal cliques as bitmasks, sorted by (size, member order)."""
    if n == 0:
        return []
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex of p|x covering the most candidates
        pivot_cover = -1
        pivot_adj = 0
        m = p | x
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (adj[u] & p).bit_count()
            if c > pivot_cover:
                pivot_cover = c
                pivot_adj = adj[u]
        cand = p & ~pivot_adj
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    expand(0, full_mask(n), 0)
    out.sort(key=lambda c: (c.bit_count(), bit_list(c)))
    return out


def count_maximal_cliques(n: int, adj: tuple[int, ...], limit: int) -> int:
    """Number of maximal cliques, stopping early at ``limit + 1``."""
    if n == 0:
        return 0
    count = 0

    def expand(p: int, x: int) -> bool:
        nonlocal count
        if not p and not x:
            count += 1
            return count <= limit
        pivot_cover = -1
        pivot_adj = 0
        m = p | x
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (adj[u] & p).bit_count()
            if c > pivot_cover:
                pivot_cover = c
                pivot_adj = adj[u]
        cand = p & ~pivot_adj
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if not expand(p & adj[v], x & adj[v]):
                return False
            p ^= low
            x |= low
        return True

    expand(full_mask(n), 0)
    return count


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------
#
# Ordered-partition refinement with backtracking.  The certificate is the
# lexicographically least column-major upper-triangle bit string over all
# refinement-stable vertex orderings, prefixed by the order.  Two prunings
# keep the regular graphs (octahedra) tractable:
#   * prefix pruning against the incumbent encoding, and
#   * automorphism pruning: a leaf equal to the incumbent yields an
#     automorphism; siblings in the same orbit under path-fixing
#     automorphisms are skipped, and the search bails out to the level
#     where the current path diverged from the incumbent's path.


class _Bail(Exception):
    def __init__(self, level: int) -> None:
        self.level = level


def _refine(adj: tuple[int, ...], cells: list[list[int]], work: deque) -> list[list[int]]:
    """Equitable refinement of an ordered partition; deterministic and
    relabeling-invariant (fragments ordered by ascending splitter count)."""
    while work:
        w_mask = work.popleft()
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & w_mask).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for key in sorted(groups):
                frag = groups[key]
                new_cells.append(frag)
                work.append(mask_of(frag))
        cells = new_cells
    return cells


def _prefix_bits(adj: tuple[int, ...], order: list[int], lo: int, hi: int) -> list[int]:
    """Column-major upper-triangle bits for columns lo..hi-1 of ``order``."""
    out = []
    for j in range(max(lo, 1), hi):
        aj = adj[order[j]]
        for i in range(j):
            out.append((aj >> order[i]) & 1)
    return out


def _leading_singletons(cells: list[list[int]]) -> int:
    f = 0
    for cell in cells:
        if len(cell) != 1:
            break
        f += 1
    return f


class _CanonSearch:
    def __init__(self, n: int, adj: tuple[int, ...]) -> None:
        self.n = n
        self.adj = adj
        self.best: list[int] | None = None  # full bit encoding
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> bytes:
        n, adj = self.n, self.adj
        cells = _refine(adj, [list(range(n))], deque([full_mask(n)]))
        self._search(cells, [], [])
        assert self.best is not None
        payload = bytearray()
        acc = 0
        nb = 0
        for b in self.best:
            acc = (acc << 1) | b
            nb += 1
            if nb == 8:
                payload.append(acc)
                acc = 0
                nb = 0
        if nb:
            payload.append(acc << (8 - nb))
        return n.to_bytes(4, "big") + bytes(payload)

    def _orbit_reps(self, path: list[int]) -> list[int]:
        """Union-find parent array from generators fixing ``path`` pointwise."""
        n = self.n
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self.gens:
            ok = True
            for v in path:
                if g[v] != v:
                    ok = False
                    break
            if not ok:
                continue
            for v in range(n):
                ra, rb = find(v), find(g[v])
                if ra != rb:
                    parent[ra] = rb
        return [find(v) for v in range(n)]

    def _search(self, cells: list[list[int]], path: list[int], prefix: list[int]) -> None:
        adj = self.adj
        f = _leading_singletons(cells)
        if f == len(cells):  # discrete: a leaf
            order = [c[0] for c in cells]
            enc = prefix + _prefix_bits(adj, order, _fixed_count(prefix), self.n)
            best = self.best
            if best is None or enc < best:
                self.best = enc
                self.best_order = order
                self.best_path = list(path)
                return
            if enc == best:
                g = [0] * self.n
                for i in range(self.n):
                    g[self.best_order[i]] = order[i]
                self.gens.append(tuple(g))
                level = 0
                bp = self.best_path
                while level < len(path) and level < len(bp) and path[level] == bp[level]:
                    level += 1
                raise _Bail(level)
            return

        target = cells[f]
        explored: list[int] = []
        reps: list[int] | None = None
        for w in target:
            if explored:
                if reps is None:
                    reps = self._orbit_reps(path)
                if any(reps[w] == reps[u] for u in explored):
                    continue
            child = [c[:] for c in cells[:f]]
            child.append([w])
            rest = [v for v in target if v != w]
            work = deque([1 << w, mask_of(rest)])
            child.append(rest)
            child.extend(c[:] for c in cells[f + 1:])
            child = _refine(adj, child, work)
            f2 = _leading_singletons(child)
            order2 = [c[0] for c in child[:f2]]
            child_prefix = prefix + _prefix_bits(adj, order2, _fixed_count(prefix), f2)
            if self.best is not None:
                bp = self.best[: len(child_prefix)]
                if child_prefix > bp:
                    explored.append(w)
                    reps = None
                    continue
            try:
                self._search(child, path + [w], child_prefix)
            except _Bail as bail:
                if bail.level < len(path):
                    raise
                # bailed to this node: the subtree under w adds nothing new
            explored.append(w)
            reps = None


def _fixed_count(prefix: list[int]) -> int:
    """Recover f from a prefix of length f*(f-1)/2 (columns 1..f-1 emitted)."""
    total = len(prefix)
    if not total:
        return 1
    f = 1
    acc = 0
    while acc < total:
        acc += f
        f += 1
    return f


def canonical_cert(n: int, adj: tuple[int, ...]) -> bytes:
    """Canonical certificate: equal certs iff isomorphic graphs."""
    if n == 0:
        return (0).to_bytes(4, "big")
    return _CanonSearch(n, adj).run()
