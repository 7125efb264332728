# cython: boundscheck=False, wraparound=False
"""Compiled longest-common-subsequence kernel.

Token sequences arrive pre-encoded as C int ids (see ``simscan.kernels``),
so the inner loop is pure integer work over two rolling DP rows.
"""

from libc.stdlib cimport free, malloc


def lcs_length_ids(const int[:] xs, const int[:] ys):
    """Length of the longest common subsequence of two id sequences."""
    cdef Py_ssize_t m = xs.shape[0]
    cdef Py_ssize_t n = ys.shape[0]
    if m == 0 or n == 0:
        return 0

    cdef int *prev = <int *> malloc((n + 1) * sizeof(int))
    cdef int *curr = <int *> malloc((n + 1) * sizeof(int))
    if prev == NULL or curr == NULL:
        free(prev)
        free(curr)
        raise MemoryError()

    cdef Py_ssize_t i, j
    cdef int xi, best, result
    cdef int *tmp
    try:
        for j in range(n + 1):
            prev[j] = 0
        curr[0] = 0
        for i in range(m):
            xi = xs[i]
            for j in range(n):
                if ys[j] == xi:
                    curr[j + 1] = prev[j] + 1
                else:
                    best = prev[j + 1]
                    if curr[j] > best:
                        best = curr[j]
                    curr[j + 1] = best
            tmp = prev
            prev = curr
            curr = tmp
        result = prev[n]
    finally:
        free(prev)
        free(curr)
    return result
