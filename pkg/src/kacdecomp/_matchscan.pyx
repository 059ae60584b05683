# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled matching scan; same contract as ``_matchscan_py``.

Enumerates every k-subset of the window (decreasing positions), builds caps
greedily largest-cross-first, and keeps subsets whose caps all join a cross
of the target to a circle.  Candidate enumeration runs entirely in C; Python
tuples are only built for the survivors.
"""

from libc.stdlib cimport free, malloc


def scan_matching(window, int k, int table_lo, bytes syms):
    if k <= 0:
        raise ValueError("scan needs at least one cross")
    cdef int m = len(window)
    cdef int size = len(syms)
    cdef const unsigned char* sym = syms
    cdef int* win = <int*> malloc(m * sizeof(int))
    cdef int* idx = <int*> malloc(k * sizeof(int))
    cdef long long* stamp = <long long*> malloc(size * sizeof(long long))
    if win == NULL or idx == NULL or stamp == NULL:
        free(win); free(idx); free(stamp)
        raise MemoryError()
    cdef list out = []
    cdef int i, j, c, p
    cdef long long cur = 0
    cdef bint ok
    try:
        for i in range(m):
            win[i] = window[i]
        for i in range(size):
            stamp[i] = 0
        if k > m:
            return out
        for i in range(k):
            idx[i] = i
        while True:
            cur += 1
            ok = True
            for p in range(k):
                c = win[idx[p]]
                i = c - table_lo
                stamp[i] = cur
                j = i + 1
                while sym[j] >= 2 or stamp[j] == cur:
                    j += 1
                stamp[j] = cur
                if sym[i] + sym[j] != 1:
                    ok = False
                    break
            if ok:
                out.append(tuple(win[idx[p]] for p in range(k)))
            # advance to the next index combination (lexicographic)
            i = k - 1
            while i >= 0 and idx[i] == m - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
        return out
    finally:
        free(win)
        free(idx)
        free(stamp)
