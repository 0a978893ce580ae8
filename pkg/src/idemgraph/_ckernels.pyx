# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot-loop twin of _pykernels.

Same signatures and results as the pure-Python module; only the loop
bodies are typed.  Kept free of the numpy C-API (plain typed
memoryviews), so building needs nothing beyond a C compiler.
"""

import numpy as np


def find_idempotent_ids(add_table, mul_table):
    """Scan all q^4 matrices, return canonical ids of those with X^2 = X."""
    cdef short[:, ::1] add = np.ascontiguousarray(add_table, dtype=np.int16)
    cdef short[:, ::1] mul = np.ascontiguousarray(mul_table, dtype=np.int16)
    cdef Py_ssize_t q = add.shape[0]
    cdef Py_ssize_t a, b, c, d
    cdef short aa, ab, ca, cb
    cdef long long base
    out = []
    for a in range(q):
        aa = mul[a, a]
        for b in range(q):
            ab = mul[a, b]
            for c in range(q):
                if add[aa, mul[b, c]] != a:
                    continue
                ca = mul[c, a]
                cb = mul[c, b]
                base = (((<long long> a) * q + b) * q + c) * q
                for d in range(q):
                    if (add[ab, mul[b, d]] == b
                            and add[ca, mul[d, c]] == c
                            and add[cb, mul[d, d]] == d):
                        out.append(base + d)
    return np.array(out, dtype=np.int64)


def adjacency_matrix(entry_reps, add_table, mul_table, require_both):
    """Pairwise-product adjacency; see _pykernels.adjacency_matrix."""
    cdef short[:, ::1] add = np.ascontiguousarray(add_table, dtype=np.int16)
    cdef short[:, ::1] mul = np.ascontiguousarray(mul_table, dtype=np.int16)
    cdef short[:, ::1] ents = np.ascontiguousarray(entry_reps, dtype=np.int16)
    cdef Py_ssize_t n = ents.shape[0]
    cdef bint both = bool(require_both)
    adj_arr = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] adj = adj_arr
    cdef Py_ssize_t i, j
    cdef short a1, b1, c1, d1, a2, b2, c2, d2
    cdef bint left, right, hit
    for i in range(n):
        a1 = ents[i, 0]
        b1 = ents[i, 1]
        c1 = ents[i, 2]
        d1 = ents[i, 3]
        for j in range(i + 1, n):
            a2 = ents[j, 0]
            b2 = ents[j, 1]
            c2 = ents[j, 2]
            d2 = ents[j, 3]
            left = (add[mul[a1, a2], mul[b1, c2]] == 0
                    and add[mul[a1, b2], mul[b1, d2]] == 0
                    and add[mul[c1, a2], mul[d1, c2]] == 0
                    and add[mul[c1, b2], mul[d1, d2]] == 0)
            if both and not left:
                continue
            right = (add[mul[a2, a1], mul[b2, c1]] == 0
                     and add[mul[a2, b1], mul[b2, d1]] == 0
                     and add[mul[c2, a1], mul[d2, c1]] == 0
                     and add[mul[c2, b1], mul[d2, d1]] == 0)
            hit = (left and right) if both else (left or right)
            if hit:
                adj[i, j] = 1
                adj[j, i] = 1
    return adj_arr


def all_pairs_distances(adj_matrix):
    """BFS from every vertex; -1 marks unreachable pairs."""
    adj_arr = np.ascontiguousarray(adj_matrix, dtype=np.uint8)
    cdef unsigned char[:, ::1] adj = adj_arr
    cdef Py_ssize_t n = adj.shape[0]
    dist_arr = np.full((n, n), -1, dtype=np.int16)
    cdef short[:, ::1] dist = dist_arr

    # CSR neighbor lists once, then a flat-array queue per source.
    indptr_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] indptr = indptr_arr
    cdef Py_ssize_t i, j, total = 0
    for i in range(n):
        indptr[i] = total
        for j in range(n):
            if adj[i, j]:
                total += 1
    indptr[n] = total
    nbrs_arr = np.empty(total, dtype=np.int64)
    cdef long long[::1] nbrs = nbrs_arr
    cdef Py_ssize_t pos = 0
    for i in range(n):
        for j in range(n):
            if adj[i, j]:
                nbrs[pos] = j
                pos += 1

    queue_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] queue = queue_arr
    cdef Py_ssize_t s, head, tail, u, v
    cdef long long kk
    cdef short du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = <Py_ssize_t> queue[head]
            head += 1
            du = dist[s, u] + 1
            for kk in range(indptr[u], indptr[u + 1]):
                v = <Py_ssize_t> nbrs[kk]
                if dist[s, v] < 0:
                    dist[s, v] = du
                    queue[tail] = v
                    tail += 1
    return dist_arr
