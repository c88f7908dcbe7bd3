# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Backtracking kernel for the simplicial-map enumerator.

Runs the same search in the same emission order as the pure-Python
reference (surfacemaps.analysis._python_search); the test suite compares
the two backends output-for-output.  All index tables arrive flattened
from the caller, so this module knows nothing about surfaces.
"""

from libc.stdlib cimport calloc, free


cdef struct State:
    int n
    int m
    int *pair_off
    int *pair_pos
    int *tri_off
    int *tri_pos
    const unsigned char *edge
    const unsigned char *facet
    bint bijective
    long max_maps
    bint has_start
    int *start
    int *assign
    unsigned char *used
    bint truncated


cdef bint _admissible(State *st, int t, int c) noexcept:
    cdef int i, a, b, lo, mid, hi, tmp
    cdef int m = st.m
    for i in range(st.pair_off[t], st.pair_off[t + 1]):
        a = st.assign[st.pair_pos[i]]
        if a != c and st.edge[a * m + c] == 0:
            return False
    i = st.tri_off[t]
    while i < st.tri_off[t + 1]:
        a = st.assign[st.tri_pos[i]]
        b = st.assign[st.tri_pos[i + 1]]
        i += 2
        if a == b or a == c or b == c:
            continue
        lo = a
        mid = b
        hi = c
        if lo > mid:
            tmp = lo; lo = mid; mid = tmp
        if mid > hi:
            tmp = mid; mid = hi; hi = tmp
        if lo > mid:
            tmp = lo; lo = mid; mid = tmp
        if st.facet[(lo * m + mid) * m + hi] == 0:
            return False
    return True


cdef int _dfs(State *st, int t, bint on_prefix, list out) except -1:
    cdef int c, lo, i
    cdef int keep
    if t == st.n:
        if on_prefix:
            return 1
        if st.max_maps >= 0 and <long> len(out) >= st.max_maps:
            st.truncated = True
            return 0
        out.append(tuple([st.assign[i] for i in range(st.n)]))
        return 1
    lo = st.start[t] if (on_prefix and st.has_start) else 0
    for c in range(lo, st.m):
        if st.bijective and st.used[c]:
            continue
        if not _admissible(st, t, c):
            continue
        st.assign[t] = c
        if st.bijective:
            st.used[c] = 1
        keep = _dfs(st, t + 1, on_prefix and st.has_start and c == st.start[t], out)
        if st.bijective:
            st.used[c] = 0
        if not keep:
            return 0
    return 1


cdef int *_alloc_ints(object seq, Py_ssize_t floor) except NULL:
    cdef Py_ssize_t k = len(seq)
    cdef Py_ssize_t size = k if k > floor else floor
    cdef int *p = <int *> calloc(size + 1, sizeof(int))
    if p == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        p[i] = seq[i]
    return p


def search(int n, int m, pair_off, pair_pos, tri_off, tri_pos,
           bytes edge, bytes facet, bint bijective, long max_maps, start):
    """Run the search; arguments and return match the Python reference.

    Returns (vectors, truncated) where vectors is a list of int tuples in
    lexicographic emission order and truncated is True when max_maps maps
    were emitted with candidates remaining.  start, when not None, makes
    the search emit only vectors strictly greater than it.
    """
    if bijective and n != m:
        return [], False
    cdef State st
    cdef list out = []
    cdef int *c_pair_off = NULL
    cdef int *c_pair_pos = NULL
    cdef int *c_tri_off = NULL
    cdef int *c_tri_pos = NULL
    cdef int *c_start = NULL
    cdef int *c_assign = NULL
    cdef unsigned char *c_used = NULL
    try:
        c_pair_off = _alloc_ints(pair_off, n + 1)
        c_pair_pos = _alloc_ints(pair_pos, 0)
        c_tri_off = _alloc_ints(tri_off, n + 1)
        c_tri_pos = _alloc_ints(tri_pos, 0)
        c_start = _alloc_ints(start if start is not None else (), n)
        c_assign = <int *> calloc(n + 1, sizeof(int))
        c_used = <unsigned char *> calloc(m + 1, sizeof(unsigned char))
        if c_assign == NULL or c_used == NULL:
            raise MemoryError()
        st.n = n
        st.m = m
        st.pair_off = c_pair_off
        st.pair_pos = c_pair_pos
        st.tri_off = c_tri_off
        st.tri_pos = c_tri_pos
        st.edge = edge
        st.facet = facet
        st.bijective = bijective
        st.max_maps = max_maps
        st.has_start = start is not None
        st.start = c_start
        st.assign = c_assign
        st.used = c_used
        st.truncated = False
        _dfs(&st, 0, st.has_start, out)
        return out, st.truncated
    finally:
        free(c_pair_off)
        free(c_pair_pos)
        free(c_tri_off)
        free(c_tri_pos)
        free(c_start)
        free(c_assign)
        free(c_used)
