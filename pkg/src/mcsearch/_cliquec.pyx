# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled clique enumeration kernel over packed bitset adjacency.

Mirrors _cliquepy.enumerate_cliques exactly; vertex sets are arrays of
64-bit words so products of any size fit.  The search runs without the
GIL; results accumulate in a growable C buffer and are converted to
Python tuples at the end.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset
from libc.stdint cimport uint64_t, uint32_t

cdef extern from *:
    """
    #include <stdint.h>
    #include <time.h>
    static inline int mcs_popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int mcs_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    static inline double mcs_monotonic(void) {
        struct timespec ts;
        clock_gettime(CLOCK_MONOTONIC, &ts);
        return (double)ts.tv_sec + (double)ts.tv_nsec * 1e-9;
    }
    """
    int mcs_popcount64(uint64_t x) nogil
    int mcs_ctz64(uint64_t x) nogil
    double mcs_monotonic() nogil

BACKEND_NAME = "compiled"

cdef struct Buf:
    uint32_t* data
    size_t used
    size_t cap

cdef struct Ctx:
    int n
    int nw
    uint64_t* adj
    uint64_t* t1
    uint64_t* arena     # (n + 2) levels of 5 word-sets each
    int* members
    int lb
    double deadline     # 0.0 = none
    long ticks
    int status          # 0 ok, 1 timeout, 2 out of memory
    Buf out


cdef int buf_push(Buf* b, int* members, int k) nogil:
    cdef size_t need = b.used + k + 1
    cdef size_t ncap = b.cap
    cdef uint32_t* nd
    cdef int i
    if need > ncap:
        while ncap < need:
            ncap *= 2
        nd = <uint32_t*> realloc(b.data, ncap * sizeof(uint32_t))
        if nd == NULL:
            return -1
        b.data = nd
        b.cap = ncap
    b.data[b.used] = <uint32_t> k
    for i in range(k):
        b.data[b.used + 1 + i] = <uint32_t> members[i]
    b.used = need
    return 0


cdef inline int tick(Ctx* c) nogil:
    c.ticks += 1
    if c.deadline != 0.0 and (c.ticks & 1023) == 0:
        if mcs_monotonic() > c.deadline:
            c.status = 1
            return -1
    return 0


cdef inline bint ws_empty(uint64_t* a, int nw) nogil:
    cdef int w
    for w in range(nw):
        if a[w]:
            return 0
    return 1


cdef inline int ws_count(uint64_t* a, int nw) nogil:
    cdef int w, total = 0
    for w in range(nw):
        total += mcs_popcount64(a[w])
    return total


cdef inline int ws_count_or(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int w, total = 0
    for w in range(nw):
        total += mcs_popcount64(a[w] | b[w])
    return total


cdef inline int ws_count_and(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int w, total = 0
    for w in range(nw):
        total += mcs_popcount64(a[w] & b[w])
    return total


cdef int plain_expand(Ctx* c, int depth, uint64_t* P, uint64_t* X) nogil:
    cdef int nw = c.nw
    cdef int w, u, v, cnt, pivot, cover
    cdef uint64_t bits
    cdef uint64_t* row
    if tick(c) < 0:
        return -1
    if ws_empty(P, nw) and ws_empty(X, nw):
        if depth >= c.lb:
            if buf_push(&c.out, c.members, depth) < 0:
                c.status = 2
                return -1
        return 0
    if depth + ws_count(P, nw) < c.lb:
        return 0
    pivot = -1
    cover = -1
    for w in range(nw):
        bits = P[w] | X[w]
        while bits:
            u = (w << 6) + mcs_ctz64(bits)
            bits &= bits - 1
            cnt = ws_count_and(P, c.adj + (<size_t> u) * nw, nw)
            if cnt > cover:
                cover = cnt
                pivot = u
    cdef uint64_t* branch = c.arena + (<size_t> depth) * 5 * nw
    cdef uint64_t* newP = branch + nw
    cdef uint64_t* newX = branch + 2 * nw
    row = c.adj + (<size_t> pivot) * nw
    for w in range(nw):
        branch[w] = P[w] & ~row[w]
    for w in range(nw):
        bits = branch[w]
        while bits:
            v = (w << 6) + mcs_ctz64(bits)
            bits &= bits - 1
            row = c.adj + (<size_t> v) * nw
            for u in range(nw):
                newP[u] = P[u] & row[u]
                newX[u] = X[u] & row[u]
            c.members[depth] = v
            if plain_expand(c, depth + 1, newP, newX) < 0:
                return -1
            P[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            X[v >> 6] |= (<uint64_t> 1) << (v & 63)
    return 0


cdef int conn_expand(Ctx* c, int depth, uint64_t* P, uint64_t* D,
                     uint64_t* X, uint64_t* Y) nogil:
    cdef int nw = c.nw
    cdef int w, u, v, cnt, pivot, cover
    cdef bint safe
    cdef uint64_t bits
    cdef uint64_t* arow
    cdef uint64_t* trow
    if tick(c) < 0:
        return -1
    if ws_empty(P, nw) and ws_empty(X, nw):
        if depth >= c.lb:
            if buf_push(&c.out, c.members, depth) < 0:
                c.status = 2
                return -1
        return 0
    if depth + ws_count_or(P, D, nw) < c.lb:
        return 0
    # pivoting is only sound when the pivot dominates every dormant vertex
    pivot = -1
    cover = -1
    for w in range(nw):
        bits = P[w] | X[w]
        while bits:
            u = (w << 6) + mcs_ctz64(bits)
            bits &= bits - 1
            arow = c.adj + (<size_t> u) * nw
            safe = 1
            for v in range(nw):
                if D[v] & ~arow[v]:
                    safe = 0
                    break
            if not safe:
                continue
            cnt = ws_count_and(P, arow, nw)
            if cnt > cover:
                cover = cnt
                pivot = u
    cdef uint64_t* branch = c.arena + (<size_t> depth) * 5 * nw
    cdef uint64_t* newP = branch + nw
    cdef uint64_t* newD = branch + 2 * nw
    cdef uint64_t* newX = branch + 3 * nw
    cdef uint64_t* newY = branch + 4 * nw
    if pivot >= 0:
        arow = c.adj + (<size_t> pivot) * nw
        for w in range(nw):
            branch[w] = P[w] & ~arow[w]
    else:
        for w in range(nw):
            branch[w] = P[w]
    for w in range(nw):
        bits = branch[w]
        while bits:
            v = (w << 6) + mcs_ctz64(bits)
            bits &= bits - 1
            arow = c.adj + (<size_t> v) * nw
            trow = c.t1 + (<size_t> v) * nw
            for u in range(nw):
                newP[u] = (P[u] & arow[u]) | (D[u] & arow[u] & trow[u])
                newD[u] = D[u] & arow[u] & ~trow[u]
                newX[u] = (X[u] & arow[u]) | (Y[u] & arow[u] & trow[u])
                newY[u] = Y[u] & arow[u] & ~trow[u]
            c.members[depth] = v
            if conn_expand(c, depth + 1, newP, newD, newX, newY) < 0:
                return -1
            P[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
            X[v >> 6] |= (<uint64_t> 1) << (v & 63)
    return 0


cdef int conn_toplevel(Ctx* c) nogil:
    cdef int nw = c.nw
    cdef int u, w
    cdef uint64_t* top = c.arena                     # level 0
    cdef uint64_t* done = c.arena + (<size_t> c.n + 1) * 5 * nw
    cdef uint64_t* trow
    cdef uint64_t* arow
    memset(done, 0, nw * sizeof(uint64_t))
    for u in range(c.n):
        trow = c.t1 + (<size_t> u) * nw
        arow = c.adj + (<size_t> u) * nw
        for w in range(nw):
            top[w] = trow[w] & ~done[w]                      # P
            top[nw + w] = (arow[w] & ~trow[w]) & ~done[w]    # D
            top[2 * nw + w] = trow[w] & done[w]              # X
            top[3 * nw + w] = (arow[w] & ~trow[w]) & done[w] # Y
        c.members[0] = u
        if conn_expand(c, 1, top, top + nw, top + 2 * nw, top + 3 * nw) < 0:
            return -1
        done[u >> 6] |= (<uint64_t> 1) << (u & 63)
    return 0


cdef void prune_unreachable(Ctx* c, int bound) nogil:
    # clear adjacency between pairs with no type-1 walk of <= bound edges;
    # scratch: frontier, seen, nxt word-sets from the level-0 arena
    cdef int nw = c.nw
    cdef int v, v2, w, u, step
    cdef bint grew
    cdef uint64_t bits
    cdef uint64_t* frontier = c.arena
    cdef uint64_t* seen = c.arena + nw
    cdef uint64_t* nxt = c.arena + 2 * nw
    cdef uint64_t* trow
    cdef bint any_t0 = 0
    for v in range(c.n * nw):
        if c.adj[v] != c.t1[v]:
            any_t0 = 1
            break
    if not any_t0:
        return
    # eccentricity probe from vertex 0: the full per-vertex pass only pays
    # off when it certainly removes something, which the probe guarantees
    # by finding a vertex beyond the bound (or a type-1 gap)
    cdef int steps = 0
    cdef bint full
    for w in range(nw):
        frontier[w] = 0
        seen[w] = 0
    seen[0] = 1
    frontier[0] = 1
    while steps <= bound:
        for w in range(nw):
            nxt[w] = 0
        for w in range(nw):
            bits = frontier[w]
            while bits:
                u = (w << 6) + mcs_ctz64(bits)
                bits &= bits - 1
                trow = c.t1 + (<size_t> u) * nw
                for v2 in range(nw):
                    nxt[v2] |= trow[v2]
        grew = 0
        for w in range(nw):
            frontier[w] = nxt[w] & ~seen[w]
            if frontier[w]:
                grew = 1
            seen[w] |= frontier[w]
        if not grew:
            break
        steps += 1
    full = 1
    for v in range(c.n):
        if not (seen[v >> 6] >> (v & 63)) & 1:
            full = 0
            break
    if full and steps <= bound:
        return
    for v in range(c.n):
        trow = c.t1 + (<size_t> v) * nw
        for w in range(nw):
            frontier[w] = trow[w]
            seen[w] = trow[w]
        seen[v >> 6] |= (<uint64_t> 1) << (v & 63)
        for step in range(bound - 1):
            for w in range(nw):
                nxt[w] = 0
            for w in range(nw):
                bits = frontier[w]
                while bits:
                    u = (w << 6) + mcs_ctz64(bits)
                    bits &= bits - 1
                    trow = c.t1 + (<size_t> u) * nw
                    for v2 in range(nw):
                        nxt[v2] |= trow[v2]
            grew = 0
            for w in range(nw):
                frontier[w] = nxt[w] & ~seen[w]
                if frontier[w]:
                    grew = 1
                seen[w] |= frontier[w]
            if not grew:
                break
        trow = c.adj + (<size_t> v) * nw
        for w in range(nw):
            trow[w] &= seen[w]


cdef int plain_toplevel(Ctx* c) nogil:
    cdef int nw = c.nw
    cdef int w
    cdef uint64_t* top = c.arena + (<size_t> c.n + 1) * 5 * nw
    cdef uint64_t* P = top
    cdef uint64_t* X = top + nw
    cdef int rem = c.n
    for w in range(nw):
        if rem >= 64:
            P[w] = <uint64_t> 0xFFFFFFFFFFFFFFFFULL
            rem -= 64
        elif rem > 0:
            P[w] = ((<uint64_t> 1) << rem) - 1
            rem = 0
        else:
            P[w] = 0
        X[w] = 0
    return plain_expand(c, 0, P, X)


def enumerate_cliques(int n, adj, t1, bint connected, int lower_bound=0,
                      deadline=None, int prune_bound=0):
    """Compiled twin of _cliquepy.enumerate_cliques; same contract."""
    if n == 0:
        return []
    cdef int nw = (n + 63) >> 6
    cdef Ctx c
    c.n = n
    c.nw = nw
    c.lb = lower_bound
    c.deadline = 0.0 if deadline is None else <double> deadline
    c.ticks = 0
    c.status = 0
    c.out.used = 0
    c.out.cap = 4096
    c.out.data = <uint32_t*> malloc(c.out.cap * sizeof(uint32_t))
    c.adj = <uint64_t*> malloc((<size_t> n) * nw * sizeof(uint64_t))
    c.t1 = <uint64_t*> malloc((<size_t> n) * nw * sizeof(uint64_t))
    c.arena = <uint64_t*> malloc((<size_t> n + 2) * 5 * nw * sizeof(uint64_t))
    c.members = <int*> malloc((<size_t> n + 1) * sizeof(int))
    if (c.out.data == NULL or c.adj == NULL or c.t1 == NULL
            or c.arena == NULL or c.members == NULL):
        _release(&c)
        raise MemoryError()

    cdef int i, w
    cdef object mask
    for i in range(n):
        mask = adj[i]
        for w in range(nw):
            c.adj[(<size_t> i) * nw + w] = <uint64_t> ((mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        mask = t1[i]
        for w in range(nw):
            c.t1[(<size_t> i) * nw + w] = <uint64_t> ((mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)

    cdef int rc
    with nogil:
        if connected:
            if prune_bound > 0:
                prune_unreachable(&c, prune_bound)
            rc = conn_toplevel(&c)
        else:
            rc = plain_toplevel(&c)

    try:
        if c.status == 1:
            raise TimeoutError("clique enumeration deadline exceeded")
        if c.status == 2 or rc < 0 and c.status != 0:
            raise MemoryError()
        out = []
        pos = 0
        while pos < c.out.used:
            k = c.out.data[pos]
            pos += 1
            out.append(tuple(sorted(c.out.data[pos + j] for j in range(k))))
            pos += k
        out.sort()
        return out
    finally:
        _release(&c)


cdef void _release(Ctx* c):
    if c.out.data != NULL:
        free(c.out.data)
    if c.adj != NULL:
        free(c.adj)
    if c.t1 != NULL:
        free(c.t1)
    if c.arena != NULL:
        free(c.arena)
    if c.members != NULL:
        free(c.members)
