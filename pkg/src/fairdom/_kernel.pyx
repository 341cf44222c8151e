# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; interface twin of ``_kernel_py``.

Same depth-first fixed-cardinality scan with coverage pruning, on C arrays of
64-bit adjacency masks. The counting loop releases the GIL so strata can run
on real threads.
"""

from libc.stdint cimport uint64_t

BACKEND = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int fd_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    #else
    static inline int fd_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int fd_popcount64(unsigned long long x) nogil

# Graphs are capped at 64 vertices; stack arrays are sized 65 = 64 + 1.


cdef inline bint _is_fair(uint64_t *adj, int n, uint64_t full, uint64_t mask,
                          int fair_k) nogil:
    cdef uint64_t outside = full & ~mask
    cdef int common = -1
    cdef int c, v
    if outside == 0:
        return 1  # the whole vertex set, vacuously fair for every constant
    for v in range(n):
        if outside & ((<uint64_t>1) << v):
            c = fd_popcount64(adj[v] & mask)
            if c == 0:
                return 0
            if common < 0:
                common = c
            elif c != common:
                return 0
    return fair_k <= 0 or common == fair_k


cdef void _suffix_tables(uint64_t *adj, int n, uint64_t *reach, int *maxcov) nogil:
    cdef uint64_t closed
    cdef int v, cov
    reach[n] = 0
    maxcov[n] = 0
    for v in range(n - 1, -1, -1):
        closed = adj[v] | ((<uint64_t>1) << v)
        reach[v] = reach[v + 1] | closed
        cov = fd_popcount64(closed)
        maxcov[v] = cov if cov > maxcov[v + 1] else maxcov[v + 1]


cdef uint64_t _count_scan(uint64_t *adj, int n, int k, int first,
                          int fair_k) nogil:
    cdef uint64_t full = (((<uint64_t>1) << n) - 1) if n < 64 else ((<uint64_t>0) - 1)
    cdef uint64_t reach[65]
    cdef int maxcov[65]
    cdef uint64_t mask_st[65]
    cdef uint64_t dom_st[65]
    cdef int cand_st[65]
    cdef uint64_t nm, nd, undom
    cdef uint64_t count = 0
    cdef int v, d, r

    _suffix_tables(adj, n, reach, maxcov)

    mask_st[1] = (<uint64_t>1) << first
    dom_st[1] = adj[first] | mask_st[1]
    cand_st[1] = first + 1
    if k == 1:
        return 1 if _is_fair(adj, n, full, mask_st[1], fair_k) else 0

    d = 1
    while d >= 1:
        v = cand_st[d]
        if v > n - (k - d):
            d -= 1
            continue
        cand_st[d] = v + 1
        nm = mask_st[d] | ((<uint64_t>1) << v)
        nd = dom_st[d] | adj[v] | ((<uint64_t>1) << v)
        r = k - d - 1
        if r == 0:
            if _is_fair(adj, n, full, nm, fair_k):
                count += 1
            continue
        undom = full & ~nd
        if undom & ~reach[v + 1]:
            continue  # some vertex can never be dominated from here
        if fd_popcount64(undom) > r * maxcov[v + 1]:
            continue  # too few picks left to cover what remains
        d += 1
        mask_st[d] = nm
        dom_st[d] = nd
        cand_st[d] = v + 1
    return count


cdef int _check_args(object adj, int n, int k, int first) except -1:
    if n < 0 or n > 64:
        raise ValueError(f"kernel supports 0 <= n <= 64, got {n}")
    if not (1 <= k <= n and 0 <= first <= n - k):
        raise ValueError(f"bad stratum request n={n}, k={k}, first={first}")
    if len(adj) < n:
        raise ValueError("adjacency sequence shorter than n")
    return 0


cdef void _load_adj(object adj, int n, uint64_t *buf):
    cdef int v
    for v in range(n):
        buf[v] = <uint64_t>adj[v]


def count_stratum(adj, int n, int k, int first, int fair_k=0):
    """Fair dominating k-sets with smallest member ``first``.

    ``fair_k`` = 0 accepts any common fairness constant; a positive value
    requires that exact constant (the full vertex set passes either way).
    """
    cdef uint64_t cadj[64]
    cdef uint64_t out
    _check_args(adj, n, k, first)
    _load_adj(adj, n, cadj)
    with nogil:
        out = _count_scan(cadj, n, k, first, fair_k)
    return int(out)


def enum_stratum(adj, int n, int k, int first, int fair_k=0):
    """Masks of the stratum's fair dominating k-sets, in lexicographic
    order of their sorted vertex tuples."""
    cdef uint64_t cadj[64]
    cdef uint64_t full
    cdef uint64_t reach[65]
    cdef int maxcov[65]
    cdef uint64_t mask_st[65]
    cdef uint64_t dom_st[65]
    cdef int cand_st[65]
    cdef uint64_t nm, nd, undom
    cdef int v, d, r

    _check_args(adj, n, k, first)
    _load_adj(adj, n, cadj)
    full = (((<uint64_t>1) << n) - 1) if n < 64 else ((<uint64_t>0) - 1)

    out = []
    _suffix_tables(cadj, n, reach, maxcov)

    mask_st[1] = (<uint64_t>1) << first
    dom_st[1] = cadj[first] | mask_st[1]
    cand_st[1] = first + 1
    if k == 1:
        if _is_fair(cadj, n, full, mask_st[1], fair_k):
            out.append(int(mask_st[1]))
        return out

    d = 1
    while d >= 1:
        v = cand_st[d]
        if v > n - (k - d):
            d -= 1
            continue
        cand_st[d] = v + 1
        nm = mask_st[d] | ((<uint64_t>1) << v)
        nd = dom_st[d] | cadj[v] | ((<uint64_t>1) << v)
        r = k - d - 1
        if r == 0:
            if _is_fair(cadj, n, full, nm, fair_k):
                out.append(int(nm))
            continue
        undom = full & ~nd
        if undom & ~reach[v + 1]:
            continue
        if fd_popcount64(undom) > r * maxcov[v + 1]:
            continue
        d += 1
        mask_st[d] = nm
        dom_st[d] = nd
        cand_st[d] = v + 1
    return out
