# cython: language_level=3
"""Compiled twin of ``_search_py.search``; see that module for the contract.

Constraints of this backend: at most 64 edges and search depth at most 64
(signatures and edge sets live in single machine words). The selector in
``kernel`` only routes calls here when those hold.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t, int32_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAXM = 64


cdef struct SearchState:
    int m
    int k
    long long budget
    long long nodes
    bint exhausted
    int found_depth
    uint64_t* masks
    int32_t* pbe_indptr
    int32_t* pbe
    uint64_t* sigs
    int32_t* chosen
    int32_t* found
    int32_t* cand_buf
    int64_t* score_buf
    int max_cand
    int64_t maxsep


cdef int _dfs(SearchState* st, int depth):
    # return 1 to stop unwinding (found or exhausted), 0 to keep searching
    st.nodes += 1
    if st.nodes > st.budget:
        st.exhausted = True
        return 1
    cdef int m = st.m
    cdef uint64_t gsig[MAXM]
    cdef uint64_t gmask[MAXM]
    cdef int gcount[MAXM]
    cdef int gfirst[MAXM]
    cdef int gsecond[MAXM]
    cdef int ngroups = 0
    cdef int e, gi
    cdef uint64_t s
    for e in range(m):
        s = st.sigs[e]
        gi = 0
        while gi < ngroups:
            if gsig[gi] == s:
                break
            gi += 1
        if gi == ngroups:
            gsig[gi] = s
            gmask[gi] = 0
            gcount[gi] = 0
            gfirst[gi] = -1
            gsecond[gi] = -1
            ngroups += 1
        gmask[gi] |= (<uint64_t>1) << e
        gcount[gi] += 1
        if gfirst[gi] < 0:
            gfirst[gi] = e
        elif gsecond[gi] < 0:
            gsecond[gi] = e
    cdef long long unsep = 0
    cdef int maxgroup = 0
    for gi in range(ngroups):
        unsep += (<long long>gcount[gi]) * (gcount[gi] - 1) // 2
        if gcount[gi] > maxgroup:
            maxgroup = gcount[gi]
    if unsep == 0:
        st.found_depth = depth
        for gi in range(depth):
            st.found[gi] = st.chosen[gi]
        return 1
    if depth == st.k:
        return 0
    if (unsep + st.maxsep - 1) // st.maxsep > st.k - depth:
        return 0
    # edges sharing a signature need distinct completions over the
    # remaining positions
    if st.k - depth < 63 and maxgroup > ((<long long>1) << (st.k - depth)):
        return 0
    cdef int be = m, bf = m
    for gi in range(ngroups):
        if gcount[gi] >= 2:
            if gfirst[gi] < be or (gfirst[gi] == be and gsecond[gi] < bf):
                be = gfirst[gi]
                bf = gsecond[gi]
    cdef int32_t* cand = st.cand_buf + depth * st.max_cand
    cdef int64_t* score = st.score_buf + depth * st.max_cand
    cdef int ncand = 0
    cdef int ia = st.pbe_indptr[be], ea = st.pbe_indptr[be + 1]
    cdef int ib = st.pbe_indptr[bf], eb = st.pbe_indptr[bf + 1]
    while ia < ea or ib < eb:
        if ib >= eb or (ia < ea and st.pbe[ia] < st.pbe[ib]):
            cand[ncand] = st.pbe[ia]
            ncand += 1
            ia += 1
        elif ia >= ea or st.pbe[ib] < st.pbe[ia]:
            cand[ncand] = st.pbe[ib]
            ncand += 1
            ib += 1
        else:
            ia += 1
            ib += 1
    cdef int ci, a, j
    cdef uint64_t pm, mm, bit
    cdef int64_t sc, ts
    cdef int32_t tc
    for ci in range(ncand):
        pm = st.masks[cand[ci]]
        sc = 0
        for gi in range(ngroups):
            if gcount[gi] >= 2:
                a = __builtin_popcountll(pm & gmask[gi])
                sc += (<int64_t>a) * (gcount[gi] - a)
        score[ci] = sc
    # insertion sort by (-score, index); indices are unique, so total order
    for ci in range(1, ncand):
        tc = cand[ci]
        ts = score[ci]
        j = ci - 1
        while j >= 0 and (score[j] < ts or (score[j] == ts and cand[j] > tc)):
            cand[j + 1] = cand[j]
            score[j + 1] = score[j]
            j -= 1
        cand[j + 1] = tc
        score[j + 1] = ts
    bit = (<uint64_t>1) << depth
    cdef int idx, res
    for ci in range(ncand):
        idx = cand[ci]
        pm = st.masks[idx]
        mm = pm
        while mm:
            st.sigs[__builtin_ctzll(mm)] |= bit
            mm &= mm - 1
        st.chosen[depth] = idx
        res = _dfs(st, depth + 1)
        mm = pm
        while mm:
            st.sigs[__builtin_ctzll(mm)] &= ~bit
            mm &= mm - 1
        if res:
            return 1
    return 0


def search(masks, int m, int k, long long budget):
    """Compiled counterpart of _search_py.search (same result, bit for bit)."""
    if m > MAXM:
        raise ValueError(f"compiled backend supports at most {MAXM} edges")
    if k > MAXM:
        raise ValueError(f"compiled backend supports depth at most {MAXM}")
    cdef int npaths = len(masks)
    cdef SearchState st
    st.m = m
    st.k = k
    st.budget = budget
    st.nodes = 0
    st.exhausted = False
    st.found_depth = -1
    st.masks = NULL
    st.pbe_indptr = NULL
    st.pbe = NULL
    st.sigs = NULL
    st.chosen = NULL
    st.found = NULL
    st.cand_buf = NULL
    st.score_buf = NULL

    cdef int i, e
    cdef uint64_t mask, mm
    cdef int64_t t, sep
    cdef int kk = k if k > 0 else 1
    try:
        st.masks = <uint64_t*>malloc(max(npaths, 1) * sizeof(uint64_t))
        st.pbe_indptr = <int32_t*>malloc((m + 2) * sizeof(int32_t))
        st.sigs = <uint64_t*>malloc(max(m, 1) * sizeof(uint64_t))
        st.chosen = <int32_t*>malloc(kk * sizeof(int32_t))
        st.found = <int32_t*>malloc(kk * sizeof(int32_t))
        if (st.masks == NULL or st.pbe_indptr == NULL or st.sigs == NULL
                or st.chosen == NULL or st.found == NULL):
            raise MemoryError()
        st.maxsep = 0
        for i in range(npaths):
            st.masks[i] = <uint64_t>masks[i]
            t = __builtin_popcountll(st.masks[i])
            sep = t * (m - t)
            if sep > st.maxsep:
                st.maxsep = sep
        if st.maxsep == 0:
            return None, 1, False
        for e in range(m + 2):
            st.pbe_indptr[e] = 0
        for i in range(npaths):
            mm = st.masks[i]
            while mm:
                st.pbe_indptr[__builtin_ctzll(mm) + 2] += 1
                mm &= mm - 1
        for e in range(2, m + 2):
            st.pbe_indptr[e] += st.pbe_indptr[e - 1]
        st.pbe = <int32_t*>malloc(max(st.pbe_indptr[m + 1], 1) * sizeof(int32_t))
        if st.pbe == NULL:
            raise MemoryError()
        for i in range(npaths):
            mm = st.masks[i]
            while mm:
                e = __builtin_ctzll(mm)
                st.pbe[st.pbe_indptr[e + 1]] = i
                st.pbe_indptr[e + 1] += 1
                mm &= mm - 1
        st.max_cand = 1
        for e in range(m):
            if st.pbe_indptr[e + 1] - st.pbe_indptr[e] > st.max_cand:
                st.max_cand = st.pbe_indptr[e + 1] - st.pbe_indptr[e]
        st.max_cand *= 2
        st.cand_buf = <int32_t*>malloc(kk * st.max_cand * sizeof(int32_t))
        st.score_buf = <int64_t*>malloc(kk * st.max_cand * sizeof(int64_t))
        if st.cand_buf == NULL or st.score_buf == NULL:
            raise MemoryError()
        for e in range(m):
            st.sigs[e] = 0
        _dfs(&st, 0)
        if st.exhausted:
            return None, st.nodes, True
        if st.found_depth >= 0:
            return [st.found[i] for i in range(st.found_depth)], st.nodes, False
        return None, st.nodes, False
    finally:
        free(st.masks)
        free(st.pbe_indptr)
        free(st.pbe)
        free(st.sigs)
        free(st.chosen)
        free(st.found)
        free(st.cand_buf)
        free(st.score_buf)
