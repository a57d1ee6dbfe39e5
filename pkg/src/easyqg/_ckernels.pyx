# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    MAXNODES = 256


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def join_block_counts(A, B):
    cdef const int[:, ::1] a = np.ascontiguousarray(A, dtype=np.int32)
    cdef const int[:, ::1] b = np.ascontiguousarray(B, dtype=np.int32)
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1], p = b.shape[0]
    if b.shape[1] != n:
        raise ValueError("label arrays have different leg counts")
    if 2 * n > MAXNODES:
        raise ValueError("too many legs for the compiled join kernel")
    out_arr = np.zeros((m, p), dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    cdef int parent[MAXNODES]
    cdef int nb
    cdef Py_ssize_t i, j, x
    cdef int na, comps, u, v, t
    with nogil:
        for i in range(m):
            na = 0
            for x in range(n):
                if a[i, x] + 1 > na:
                    na = a[i, x] + 1
            for j in range(p):
                nb = 0
                for x in range(n):
                    if b[j, x] + 1 > nb:
                        nb = b[j, x] + 1
                for t in range(na + nb):
                    parent[t] = t
                comps = na + nb
                for x in range(n):
                    u = _find(parent, a[i, x])
                    v = _find(parent, b[j, x] + na)
                    if u != v:
                        parent[u] = v
                        comps -= 1
                out[i, j] = comps
    return out_arr


def delta_table(labels, indices):
    cdef const int[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef const long long[:, ::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t m = lab.shape[0], n = lab.shape[1], q = idx.shape[0]
    if idx.shape[1] != n:
        raise ValueError("index tuples do not match the leg count")
    if n > MAXNODES:
        raise ValueError("too many legs for the compiled delta kernel")
    out_arr = np.zeros((m, q), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    cdef long long seen[MAXNODES]
    cdef unsigned char used[MAXNODES]
    cdef Py_ssize_t a, t, x
    cdef int bl
    cdef unsigned char ok
    with nogil:
        for a in range(m):
            for t in range(q):
                for x in range(n):
                    used[x] = 0
                ok = 1
                for x in range(n):
                    bl = lab[a, x]
                    if used[bl]:
                        if seen[bl] != idx[t, x]:
                            ok = 0
                            break
                    else:
                        used[bl] = 1
                        seen[bl] = idx[t, x]
                out[a, t] = ok
    return out_arr


def kernel_labels(indices):
    cdef const long long[:, ::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t q = idx.shape[0], n = idx.shape[1]
    if n > MAXNODES:
        raise ValueError("too many legs for the compiled kernel")
    out_arr = np.zeros((q, n), dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    cdef long long firsts[MAXNODES]
    cdef Py_ssize_t t, x, y
    cdef int nb, found
    with nogil:
        for t in range(q):
            nb = 0
            for x in range(n):
                found = -1
                for y in range(nb):
                    if firsts[y] == idx[t, x]:
                        found = <int>y
                        break
                if found < 0:
                    firsts[nb] = idx[t, x]
                    found = nb
                    nb += 1
                out[t, x] = found
    return out_arr
