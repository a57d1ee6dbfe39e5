"""Pure-Python versions of the hot loops.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
one-for-one. Inputs are 2-d integer numpy arrays of block labels (one row
per partition, one column per leg) or of index tuples.
"""

import numpy as np


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def join_block_counts(A, B):
    """Number of blocks of the join for every pair of rows (A[i], B[j])."""
    A = np.asarray(A, dtype=np.int32)
    B = np.asarray(B, dtype=np.int32)
    m, n = A.shape
    p = B.shape[0]
    out = np.zeros((m, p), dtype=np.int32)
    a_rows = A.tolist()
    b_rows = B.tolist()
    a_sizes = [max(r) + 1 if n else 0 for r in a_rows]
    b_sizes = [max(r) + 1 if n else 0 for r in b_rows]
    for i in range(m):
        ra = a_rows[i]
        na = a_sizes[i]
        for j in range(p):
            rb = b_rows[j]
            nb = b_sizes[j]
            parent = list(range(na + nb))
            comps = na + nb
            for x in range(n):
                u = _find(parent, ra[x])
                v = _find(parent, rb[x] + na)
                if u != v:
                    parent[u] = v
                    comps -= 1
            out[i, j] = comps
    return out


def delta_table(labels, indices):
    """delta[p, t] = 1 iff index tuple t is constant on every block of partition p."""
    labels = np.asarray(labels, dtype=np.int32)
    indices = np.asarray(indices, dtype=np.int64)
    m, n = labels.shape
    q = indices.shape[0]
    out = np.zeros((m, q), dtype=np.uint8)
    lab_rows = labels.tolist()
    idx_rows = indices.tolist()
    for a in range(m):
        lab = lab_rows[a]
        nb = max(lab) + 1 if n else 0
        for t in range(q):
            idx = idx_rows[t]
            seen = [None] * nb
            ok = 1
            for x in range(n):
                b = lab[x]
                v = seen[b]
                if v is None:
                    seen[b] = idx[x]
                elif v != idx[x]:
                    ok = 0
                    break
            out[a, t] = ok
    return out


def kernel_labels(indices):
    """Restricted-growth labels of ker(i) for every row i (first-appearance order)."""
    indices = np.asarray(indices, dtype=np.int64)
    q, n = indices.shape
    out = np.zeros((q, n), dtype=np.int32)
    for t, row in enumerate(indices.tolist()):
        seen = {}
        for x, v in enumerate(row):
            if v not in seen:
                seen[v] = len(seen)
            out[t, x] = seen[v]
    return out
