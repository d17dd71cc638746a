# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rainbow-clique enumeration kernels.

Mirrors :mod:`rainbowmult._pykernels` exactly; the two are interchangeable.
"""
from libc.stdlib cimport calloc, malloc, free

import numpy as np
cimport numpy as cnp


cdef long long _dfs(const int[:, ::1] col, const int[::1] cand, Py_ssize_t start,
                    int need, int* chosen, int nchosen, char* used,
                    long long* visits, long long budget) noexcept nogil:
    cdef long long total = 0
    cdef Py_ssize_t idx, ncand = cand.shape[0]
    cdef int w, c, j, q
    if need == 0:
        return 1
    idx = start
    while idx <= ncand - need:
        w = cand[idx]
        j = 0
        while j < nchosen:
            c = col[chosen[j], w]
            if used[c]:
                break
            used[c] = 1
            j += 1
        if j == nchosen:
            visits[0] += 1
            if visits[0] > budget:
                for q in range(j):
                    used[col[chosen[q], w]] = 0
                return total
            chosen[nchosen] = w
            total += _dfs(col, cand, idx + 1, need - 1, chosen, nchosen + 1,
                          used, visits, budget)
        for q in range(j):
            used[col[chosen[q], w]] = 0
        if visits[0] > budget:
            return total
        idx += 1
    return total


def count_extensions(matrix, int r, prefix, candidates, int need, long long budget):
    """Count rainbow extensions of ``prefix`` by ``need`` vertices from ``candidates``.

    Returns ``(count, visits)``; ``visits > budget`` means the search was cut short.
    """
    cdef const int[:, ::1] col = np.ascontiguousarray(matrix, dtype=np.intc)
    cdef const int[::1] cand = np.ascontiguousarray(candidates, dtype=np.intc)
    cdef int[::1] pre = np.ascontiguousarray(prefix, dtype=np.intc)
    cdef int npre = pre.shape[0]
    cdef int i, j, c
    cdef long long visits = 0
    cdef long long count
    cdef int* chosen = <int*> malloc((npre + need + 1) * sizeof(int))
    cdef char* used = <char*> calloc(r + 1, sizeof(char))
    if chosen == NULL or used == NULL:
        free(chosen)
        free(used)
        raise MemoryError()
    try:
        for i in range(npre):
            chosen[i] = pre[i]
            for j in range(i):
                c = col[pre[j], pre[i]]
                if used[c]:
                    return 0, 0
                used[c] = 1
        with nogil:
            count = _dfs(col, cand, 0, need, chosen, npre, used, &visits, budget)
        return count, visits
    finally:
        free(chosen)
        free(used)
