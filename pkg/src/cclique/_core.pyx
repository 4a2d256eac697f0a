# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts and counters as ``_pycore``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

import numpy as np
cimport numpy as cnp

cnp.import_array()

MAX_BITS = 64


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)


cdef struct BKState:
    uint64_t *masks
    int64_t calls
    int64_t ops
    int64_t last
    int64_t delay_max


cdef void _bk(BKState *st, uint64_t r, uint64_t p, uint64_t x, list out):
    cdef uint64_t q, cand, low, nw
    cdef int u, best, cover, best_cover, w
    st.calls += 1
    st.ops += 1
    if p == 0:
        if x == 0:
            out.append(r)
            if st.ops - st.last > st.delay_max:
                st.delay_max = st.ops - st.last
            st.last = st.ops
        return
    q = p | x
    best = -1
    best_cover = -1
    while q:
        u = ctz64(q)
        q &= q - 1
        cover = popcount64(p & st.masks[u])
        st.ops += 1
        if cover > best_cover:
            best = u
            best_cover = cover
    cand = p & ~st.masks[best]
    while cand:
        w = ctz64(cand)
        low = (<uint64_t>1) << w
        cand ^= low
        st.ops += 1
        nw = st.masks[w]
        _bk(st, r | low, p & nw, x & nw, out)
        p ^= low
        x |= low


def bk_pivot(masks):
    cdef Py_ssize_t m = len(masks)
    cdef Py_ssize_t i
    cdef BKState st
    cdef list out = []
    if m == 0:
        return [], 0, 0, 0
    if m > MAX_BITS:
        raise ValueError("compiled pivot kernel handles at most 64 vertices")
    st.masks = <uint64_t *>malloc(m * sizeof(uint64_t))
    if st.masks == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            st.masks[i] = <uint64_t>masks[i]
        st.calls = 0
        st.ops = 0
        st.last = 0
        st.delay_max = 0
        if m == 64:
            _bk(&st, 0, <uint64_t>0xFFFFFFFFFFFFFFFF, 0, out)
        else:
            _bk(&st, 0, ((<uint64_t>1) << m) - 1, 0, out)
    finally:
        free(st.masks)
    return out, st.calls, st.ops, st.delay_max


def wedge_triples_csr(cnp.int64_t[:] indptr, cnp.int64_t[:] indices, Py_ssize_t n):
    """Induced 2-paths ``(a, m, b)``, ``a < b``, as an ``(k, 3)`` int64 array."""
    cdef Py_ssize_t m, i, j, a, b, k = 0, cap
    cdef cnp.uint8_t[:] mark = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t total = 0
    for m in range(n):
        j = indptr[m + 1] - indptr[m]
        total += j * (j - 1) // 2
    res = np.empty((total, 3), dtype=np.int64)
    cdef cnp.int64_t[:, :] out = res
    for m in range(n):
        for i in range(indptr[m], indptr[m + 1]):
            a = indices[i]
            for j in range(indptr[a], indptr[a + 1]):
                mark[indices[j]] = 1
            for j in range(i + 1, indptr[m + 1]):
                b = indices[j]
                if not mark[b]:
                    out[k, 0] = a
                    out[k, 1] = m
                    out[k, 2] = b
                    k += 1
            for j in range(indptr[a], indptr[a + 1]):
                mark[indices[j]] = 0
    return res[:k]
