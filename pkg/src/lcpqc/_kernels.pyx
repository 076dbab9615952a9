# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled distance-search kernels.

Semantics mirror the pure-Python twin in ``_kernels_py`` exactly; the test
suite cross-checks the two backends on the same inputs.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def enum_min_weight(gen, add_t, mul_t, long long max_codewords):
    """Projective codeword enumeration; returns (best, examined, completed)."""
    cdef cnp.int32_t[:, ::1] G = np.ascontiguousarray(gen, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] A = np.ascontiguousarray(add_t, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] M = np.ascontiguousarray(mul_t, dtype=np.int32)
    cdef int k = G.shape[0]
    cdef int n = G.shape[1]
    cdef int q = A.shape[0]
    cdef long long examined = 0
    cdef int best = n + 1
    cdef cnp.int32_t[:, ::1] S = np.zeros((k + 1, n), dtype=np.int32)
    cdef cnp.int32_t[::1] digits = np.zeros(k + 1, dtype=np.int32)
    cdef int first, L, t, u, c, w

    for first in range(k):
        L = k - 1 - first
        for c in range(n):
            S[0, c] = G[first, c]
        for t in range(L):
            digits[t] = 0
            for c in range(n):
                S[t + 1, c] = S[t, c]
        while True:
            w = 0
            for c in range(n):
                if S[L, c] != 0:
                    w += 1
            examined += 1
            if w < best:
                best = w
                if best == 1:
                    return best, examined, True
            t = L - 1
            while t >= 0 and digits[t] == q - 1:
                digits[t] = 0
                t -= 1
            if t < 0:
                break
            digits[t] += 1
            if examined >= max_codewords:
                return best, examined, False
            for c in range(n):
                S[t + 1, c] = A[S[t, c], M[digits[t], G[first + 1 + t, c]]]
            for u in range(t + 1, L):
                for c in range(n):
                    S[u + 1, c] = S[u, c]
        if examined >= max_codewords and first < k - 1:
            return best, examined, False
    return best, examined, True


def column_search_min_weight(h, add_t, sub_t, mul_t, inv_t,
                             long long max_work, int wmax):
    """Smallest w with w dependent columns; (found_w, completed_rounds, subsets)."""
    cdef cnp.int32_t[:, ::1] H = np.ascontiguousarray(h, dtype=np.int32)
    cdef int r = H.shape[0]
    cdef int n = H.shape[1]
    if r == 0:
        return (1 if n >= 1 else -1), 0, 0
    cdef cnp.int32_t[:, ::1] S_t = np.ascontiguousarray(sub_t, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] M_t = np.ascontiguousarray(mul_t, dtype=np.int32)
    cdef cnp.int32_t[::1] I_t = np.ascontiguousarray(inv_t, dtype=np.int32)
    cdef long long work = 0
    cdef long long nodes = 0
    cdef cnp.int32_t[:, ::1] piv = np.zeros((wmax + 1, r), dtype=np.int32)
    cdef cnp.int32_t[::1] leads = np.zeros(wmax + 1, dtype=np.int32)
    cdef long[::1] choice = np.zeros(wmax + 2, dtype=np.int_)
    cdef cnp.int32_t[::1] v = np.zeros(r, dtype=np.int32)
    cdef int w, depth, i, t, nzc, f, scale
    cdef long c

    for w in range(1, wmax + 1):
        depth = 0
        choice[0] = -1
        while depth >= 0:
            choice[depth] += 1
            c = choice[depth]
            if c > n - (w - depth):
                depth -= 1
                continue
            for i in range(r):
                v[i] = H[i, c]
            for t in range(depth):
                f = v[leads[t]]
                if f:
                    for i in range(r):
                        v[i] = S_t[v[i], M_t[f, piv[t, i]]]
            work += r * (depth + 1)
            nodes += 1
            nzc = -1
            for i in range(r):
                if v[i] != 0:
                    nzc = i
                    break
            if nzc < 0:
                return depth + 1, w - 1, nodes
            if work > max_work:
                return -1, w - 1, nodes
            if depth + 1 < w:
                leads[depth] = nzc
                if v[nzc] != 1:
                    scale = I_t[v[nzc]]
                    for i in range(r):
                        piv[depth, i] = M_t[scale, v[i]]
                else:
                    for i in range(r):
                        piv[depth, i] = v[i]
                depth += 1
                choice[depth] = c
    return -1, wmax, nodes
