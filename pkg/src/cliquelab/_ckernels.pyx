# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: maximal-clique enumeration and canonical labeling.

Same entry points and bit-exact outputs as ``cliquelab._pykernels``; the
parity tests hold the two implementations together.  Bitsets live in flat
uint64 word arrays instead of Python big ints.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy, memset

IMPL_NAME = "cython"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    #else
    static inline int popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    static inline int ctz64(unsigned long long x) {
        int c = 0;
        while (!(x & 1)) { x >>= 1; c++; }
        return c;
    }
    #endif
    """
    int popcount64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef inline int bs_and_popcount(u64 *a, u64 *b, int nw) nogil:
    cdef int i, c = 0
    for i in range(nw):
        c += popcount64(a[i] & b[i])
    return c


cdef inline bint bs_any(u64 *a, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i]:
            return True
    return False


cdef inline bint bs_test(u64 *a, int v) nogil:
    return (a[v >> 6] >> (v & 63)) & 1


cdef u64 *adj_from_pymasks(int n, object adj_masks) except NULL:
    """Pack Python int masks into an n x nw word table."""
    cdef int nw = (n + 63) >> 6
    cdef u64 *table = <u64 *> malloc(n * nw * sizeof(u64))
    if table == NULL:
        raise MemoryError()
    cdef int v, w
    cdef object mask
    for v in range(n):
        mask = adj_masks[v]
        for w in range(nw):
            table[v * nw + w] = <u64> (mask & 0xFFFFFFFFFFFFFFFF)
            mask >>= 64
    return table


cdef object pymask_from_words(u64 *words, int nw):
    cdef object out = 0
    cdef int w
    for w in range(nw - 1, -1, -1):
        out = (out << 64) | words[w]
    return out


# ---------------------------------------------------------------------------
# Maximal cliques (branch and bound with greedy pivoting)
# ---------------------------------------------------------------------------


cdef int _bk_expand(int nw, u64 *adj, u64 *r, u64 *p, u64 *x, u64 *scratch,
                    list out, long long *counter, long long limit) except -1:
    """Enumerate (out is a list) or count (out is None, stop past limit).
    Returns 1 to keep going, 0 once the count exceeds the limit."""
    cdef int i, u, v, w, bc, c
    cdef u64 *cand = scratch
    cdef u64 *child_r = scratch + nw
    cdef u64 *child_p = scratch + 2 * nw
    cdef u64 *child_x = scratch + 3 * nw
    cdef u64 m, low
    cdef u64 *pivot_adj = NULL
    if not bs_any(p, nw) and not bs_any(x, nw):
        if out is not None:
            out.append(pymask_from_words(r, nw))
        else:
            counter[0] += 1
            if counter[0] > limit:
                return 0
        return 1
    bc = -1
    for w in range(nw):
        m = p[w] | x[w]
        while m:
            low = m & (~m + 1)
            m ^= low
            u = (w << 6) + ctz64(low)
            c = bs_and_popcount(&adj[u * nw], p, nw)
            if c > bc:
                bc = c
                pivot_adj = &adj[u * nw]
    for w in range(nw):
        cand[w] = p[w] & ~pivot_adj[w]
    for w in range(nw):
        m = cand[w]
        while m:
            low = m & (~m + 1)
            m ^= low
            v = (w << 6) + ctz64(low)
            for i in range(nw):
                child_r[i] = r[i]
                child_p[i] = p[i] & adj[v * nw + i]
                child_x[i] = x[i] & adj[v * nw + i]
            child_r[w] |= low
            if not _bk_expand(nw, adj, child_r, child_p, child_x,
                              scratch + 4 * nw, out, counter, limit):
                return 0
            p[w] &= ~low
            x[w] |= low
    return 1


cdef int _bk_run(int n, object adj_masks, list out, long long limit) except -1:
    cdef int nw = (n + 63) >> 6
    cdef u64 *adj = adj_from_pymasks(n, adj_masks)
    cdef u64 *mem = <u64 *> malloc((4 * (n + 2) + 3) * nw * sizeof(u64))
    cdef long long counter = 0
    cdef int w
    if mem == NULL:
        free(adj)
        raise MemoryError()
    try:
        memset(mem, 0, 3 * nw * sizeof(u64))
        for w in range(n):
            mem[nw + (w >> 6)] |= (<u64> 1) << (w & 63)  # P = all vertices
        _bk_expand(nw, adj, mem, mem + nw, mem + 2 * nw, mem + 3 * nw,
                   out, &counter, limit)
    finally:
        free(adj)
        free(mem)
    return <int> counter if counter <= 2147483647 else 2147483647


def maximal_cliques(int n, object adj_masks):
    """All maximal cliques as bitmasks, sorted by (size, member order)."""
    if n == 0:
        return []
    cdef list out = []
    _bk_run(n, adj_masks, out, 0)
    out.sort(key=_clique_sort_key)
    return out


def _clique_sort_key(mask):
    members = []
    m = mask
    while m:
        low = m & -m
        members.append(low.bit_length() - 1)
        m ^= low
    return (len(members), members)


def count_maximal_cliques(int n, object adj_masks, long long limit):
    """Number of maximal cliques, stopping early at ``limit + 1``."""
    if n == 0:
        return 0
    return _bk_run(n, adj_masks, None, limit)


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------
#
# Mirror of the pure-Python ordered-partition search: same refinement
# (fragments by ascending splitter count, stable) and same target-cell rule
# (first non-singleton), so the set of leaf encodings -- and hence the
# minimum, the certificate -- agrees bit for bit.  Partitions are stored per
# recursion level as (lab, cell start, cell size) arrays; the working
# encoding keeps one byte per bit so incumbent comparisons are plain memcmp.


cdef class _Canon:
    cdef int n, nw, enc_len
    cdef u64 *adj
    cdef unsigned char *enc
    cdef unsigned char *best_enc
    cdef bint have_best
    cdef int *best_order
    cdef int *best_path
    cdef int best_path_len
    cdef int *path
    cdef int *lab_space        # (n+1) levels x n
    cdef int *start_space      # (n+1) levels x (n+1)
    cdef int *size_space
    cdef int *ncells_space
    cdef int work_cap
    cdef u64 *work_masks       # refinement worklist ring buffer
    cdef int *counts           # refinement scratch
    cdef int *sorted_counts
    cdef int *regroup
    cdef int *parent           # union-find scratch
    cdef int *explored         # (n+1) levels x n
    cdef list gens

    def __cinit__(self, int n, object adj_masks):
        self.n = n
        self.nw = (n + 63) >> 6
        self.enc_len = n * (n - 1) // 2
        self.work_cap = 4 * n + 8
        self.adj = adj_from_pymasks(n, adj_masks)
        self.enc = <unsigned char *> malloc(self.enc_len + 1)
        self.best_enc = <unsigned char *> malloc(self.enc_len + 1)
        self.best_order = <int *> malloc(n * sizeof(int))
        self.best_path = <int *> malloc((n + 1) * sizeof(int))
        self.path = <int *> malloc((n + 1) * sizeof(int))
        self.lab_space = <int *> malloc((n + 1) * n * sizeof(int))
        self.start_space = <int *> malloc((n + 1) * (n + 1) * sizeof(int))
        self.size_space = <int *> malloc((n + 1) * (n + 1) * sizeof(int))
        self.ncells_space = <int *> malloc((n + 1) * sizeof(int))
        self.work_masks = <u64 *> malloc(self.work_cap * self.nw * sizeof(u64))
        self.counts = <int *> malloc(n * sizeof(int))
        self.sorted_counts = <int *> malloc(n * sizeof(int))
        self.regroup = <int *> malloc(n * sizeof(int))
        self.parent = <int *> malloc(n * sizeof(int))
        self.explored = <int *> malloc((n + 1) * n * sizeof(int))
        self.have_best = False
        self.best_path_len = 0
        self.gens = []

    def __dealloc__(self):
        free(self.adj); free(self.enc); free(self.best_enc)
        free(self.best_order); free(self.best_path); free(self.path)
        free(self.lab_space); free(self.start_space); free(self.size_space)
        free(self.ncells_space); free(self.work_masks); free(self.counts)
        free(self.sorted_counts); free(self.regroup); free(self.parent)
        free(self.explored)

    cdef void _store_cell_mask(self, int level, int ci, u64 *dest):
        cdef int *lab = self.lab_space + level * self.n
        cdef int *cstart = self.start_space + level * (self.n + 1)
        cdef int *csize = self.size_space + level * (self.n + 1)
        cdef int i, v
        memset(dest, 0, self.nw * sizeof(u64))
        for i in range(cstart[ci], cstart[ci] + csize[ci]):
            v = lab[i]
            dest[v >> 6] |= (<u64> 1) << (v & 63)

    cdef int _refine(self, int level, int head, int tail) except -1:
        """Equitable refinement at ``level``; the worklist occupies ring
        slots [head, tail)."""
        cdef int n = self.n, nw = self.nw, cap = self.work_cap
        cdef int *lab = self.lab_space + level * n
        cdef int *cstart = self.start_space + level * (n + 1)
        cdef int *csize = self.size_space + level * (n + 1)
        cdef u64 *w_mask
        cdef int ci, i, fi, lo, size, nfrag, pos, c, k, ncells
        cdef int *counts = self.counts
        cdef int *keys = self.sorted_counts
        cdef int *tmp = self.regroup
        while head != tail:
            w_mask = self.work_masks + (head % cap) * nw
            head += 1
            ci = 0
            while ci < self.ncells_space[level]:
                size = csize[ci]
                if size == 1:
                    ci += 1
                    continue
                lo = cstart[ci]
                for i in range(size):
                    counts[i] = bs_and_popcount(&self.adj[lab[lo + i] * nw],
                                                w_mask, nw)
                for i in range(size):
                    keys[i] = counts[i]
                _sort_ints(keys, size)
                nfrag = _unique_ints(keys, size)
                if nfrag == 1:
                    ci += 1
                    continue
                # stable regroup by ascending count
                pos = 0
                for fi in range(nfrag):
                    c = keys[fi]
                    for i in range(size):
                        if counts[i] == c:
                            tmp[pos] = lab[lo + i]
                            pos += 1
                for i in range(size):
                    lab[lo + i] = tmp[i]
                # split the cell table and push the fragments
                ncells = self.ncells_space[level]
                for i in range(ncells - 1, ci, -1):
                    cstart[i + nfrag - 1] = cstart[i]
                    csize[i + nfrag - 1] = csize[i]
                pos = lo
                for fi in range(nfrag):
                    c = keys[fi]
                    k = 0
                    for i in range(size):
                        if counts[i] == c:
                            k += 1
                    cstart[ci + fi] = pos
                    csize[ci + fi] = k
                    pos += k
                self.ncells_space[level] = ncells + nfrag - 1
                for fi in range(nfrag):
                    if tail - head >= cap - 1:
                        raise RuntimeError("refinement worklist overflow")
                    self._store_cell_mask(level, ci + fi,
                                          self.work_masks + (tail % cap) * nw)
                    tail += 1
                ci += nfrag
        return 0

    cdef int _leading_singletons(self, int level):
        cdef int *csize = self.size_space + level * (self.n + 1)
        cdef int f = 0
        while f < self.ncells_space[level] and csize[f] == 1:
            f += 1
        return f

    cdef void _write_columns(self, int level, int col_lo, int col_hi):
        """Fill enc for columns col_lo..col_hi-1 of the column-major upper
        triangle (the first col_hi cells must be singletons)."""
        cdef int *lab = self.lab_space + level * self.n
        cdef int j, i, start, pos
        cdef u64 *aj
        start = col_lo if col_lo > 1 else 1
        pos = start * (start - 1) // 2
        for j in range(start, col_hi):
            aj = &self.adj[lab[j] * self.nw]
            for i in range(j):
                self.enc[pos] = bs_test(aj, lab[i])
                pos += 1

    cdef void _orbit_reps(self, int depth):
        cdef int n = self.n
        cdef int *parent = self.parent
        cdef int v, i, ra, rb
        cdef bint fixes
        cdef list g
        for v in range(n):
            parent[v] = v
        for g in self.gens:
            fixes = True
            for i in range(depth):
                if <int> g[self.path[i]] != self.path[i]:
                    fixes = False
                    break
            if not fixes:
                continue
            for v in range(n):
                ra = _uf_find(parent, v)
                rb = _uf_find(parent, <int> g[v])
                if ra != rb:
                    parent[ra] = rb

    cdef int _search(self, int level, int depth) except -1:
        """Returns 0, or a bail code (1 + depth of the bail target)."""
        cdef int n = self.n
        cdef int ncells = self.ncells_space[level]
        cdef int f = self._leading_singletons(level)
        cdef int *lab = self.lab_space + level * n
        cdef int *cstart = self.start_space + level * (n + 1)
        cdef int *csize = self.size_space + level * (n + 1)
        cdef int L = self.enc_len
        cdef int i, k, w, code, nexp, pos, size
        cdef int *expl = self.explored + depth * n
        cdef bint skip, have_reps
        cdef list g

        if f == ncells:  # discrete: a leaf, enc is complete
            if not self.have_best or memcmp(self.enc, self.best_enc, L) < 0:
                memcpy(self.best_enc, self.enc, L)
                memcpy(self.best_order, lab, n * sizeof(int))
                self.best_path_len = depth
                memcpy(self.best_path, self.path, depth * sizeof(int))
                self.have_best = True
                return 0
            if memcmp(self.enc, self.best_enc, L) == 0:
                g = [0] * n
                for i in range(n):
                    g[self.best_order[i]] = lab[i]
                self.gens.append(g)
                k = 0
                while k < depth and k < self.best_path_len and \
                        self.path[k] == self.best_path[k]:
                    k += 1
                return k + 1
            return 0

        pos = cstart[f]  # target cell: first non-singleton
        size = csize[f]
        nexp = 0
        have_reps = False
        for i in range(size):
            w = lab[pos + i]
            if nexp:
                if not have_reps:
                    self._orbit_reps(depth)
                    have_reps = True
                skip = False
                for k in range(nexp):
                    if _uf_find(self.parent, w) == \
                            _uf_find(self.parent, expl[k]):
                        skip = True
                        break
                if skip:
                    continue
            code = self._descend(level, depth, f, w)
            if code and code - 1 < depth:
                return code
            # no bail, or a bail targeting this node: the subtree under w
            # is finished either way
            expl[nexp] = w
            nexp += 1
            have_reps = False
        return 0

    cdef int _descend(self, int level, int depth, int ci, int w) except -1:
        cdef int n = self.n
        cdef int *lab = self.lab_space + level * n
        cdef int *cstart = self.start_space + level * (n + 1)
        cdef int *csize = self.size_space + level * (n + 1)
        cdef int ncells = self.ncells_space[level]
        cdef int child = level + 1
        cdef int *clab = self.lab_space + child * n
        cdef int *ccstart = self.start_space + child * (n + 1)
        cdef int *ccsize = self.size_space + child * (n + 1)
        cdef int i, j, pos, f_old, f2
        memcpy(clab, lab, n * sizeof(int))
        memcpy(ccstart, cstart, ncells * sizeof(int))
        memcpy(ccsize, csize, ncells * sizeof(int))
        # individualize w: cell ci becomes [w] + rest
        pos = cstart[ci]
        clab[pos] = w
        j = pos + 1
        for i in range(cstart[ci], cstart[ci] + csize[ci]):
            if lab[i] != w:
                clab[j] = lab[i]
                j += 1
        for i in range(ncells - 1, ci, -1):
            ccstart[i + 1] = ccstart[i]
            ccsize[i + 1] = ccsize[i]
        ccstart[ci] = pos
        ccsize[ci] = 1
        ccstart[ci + 1] = pos + 1
        ccsize[ci + 1] = csize[ci] - 1
        self.ncells_space[child] = ncells + 1
        self._store_cell_mask(child, ci, self.work_masks)
        self._store_cell_mask(child, ci + 1, self.work_masks + self.nw)
        self._refine(child, 0, 2)
        f_old = self._leading_singletons(level)
        f2 = self._leading_singletons(child)
        self._write_columns(child, f_old, f2)
        if self.have_best:
            pos = f2 * (f2 - 1) // 2
            if memcmp(self.enc, self.best_enc, pos) > 0:
                return 0
        self.path[depth] = w
        return self._search(child, depth + 1)

    def run(self):
        cdef int n = self.n
        cdef int i, f
        for i in range(n):
            self.lab_space[i] = i
        self.start_space[0] = 0
        self.size_space[0] = n
        self.ncells_space[0] = 1
        self._store_cell_mask(0, 0, self.work_masks)
        self._refine(0, 0, 1)
        f = self._leading_singletons(0)
        self._write_columns(0, 0, f)
        self._search(0, 0)
        out = bytearray()
        cdef int acc = 0, nb = 0
        for i in range(self.enc_len):
            acc = (acc << 1) | self.best_enc[i]
            nb += 1
            if nb == 8:
                out.append(acc)
                acc = 0
                nb = 0
        if nb:
            out.append(acc << (8 - nb))
        return n.to_bytes(4, "big") + bytes(out)


cdef inline int _uf_find(int *parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void _sort_ints(int *arr, int size) nogil:
    cdef int i, j, key
    for i in range(1, size):
        key = arr[i]
        j = i - 1
        while j >= 0 and arr[j] > key:
            arr[j + 1] = arr[j]
            j -= 1
        arr[j + 1] = key


cdef int _unique_ints(int *arr, int size) nogil:
    if size == 0:
        return 0
    cdef int i, k = 1
    for i in range(1, size):
        if arr[i] != arr[i - 1]:
            arr[k] = arr[i]
            k += 1
    return k


def canonical_cert(int n, object adj_masks):
    """Canonical certificate: equal certs iff isomorphic graphs."""
    if n == 0:
        return (0).to_bytes(4, "big")
    return _Canon(n, adj_masks).run()
