"""Pure-Python kernels: the fallback backend.

Same contracts as the compiled extension in _ckernels.pyx.  All three
functions work on integer encodings and the field's q x q add/mul
tables, so they are field-agnostic.  See kernels.py for selection.
"""

from __future__ import annotations

import numpy as np


def find_idempotent_ids(add_table: np.ndarray, mul_table: np.ndarray) -> np.ndarray:
    """Scan all q^4 matrices, return canonical ids of those with X^2 = X.

    Ids come out ascending because the (a, b, c, d) loops follow the
    canonical base-q digit order.
    """
    add = add_table.tolist()
    mul = mul_table.tolist()
    q = len(add)
    out = []
    for a in range(q):
        aa = mul[a][a]
        for b in range(q):
            ab = mul[a][b]
            base_ab = (a * q + b) * q
            for c in range(q):
                if add[aa][mul[b][c]] != a:
                    continue
                ca = mul[c][a]
                cb = mul[c][b]
                base = (base_ab + c) * q
                for d in range(q):
                    if (
                        add[ab][mul[b][d]] == b
                        and add[ca][mul[d][c]] == c
                        and add[cb][mul[d][d]] == d
                    ):
                        out.append(base + d)
    return np.array(out, dtype=np.int64)


def adjacency_matrix(
    entry_reps: np.ndarray,
    add_table: np.ndarray,
    mul_table: np.ndarray,
    require_both: bool,
) -> np.ndarray:
    """Pairwise-product adjacency over 2x2 matrices given by entry encodings.

    Joins i and j when the product ij vanishes or ji vanishes; with
    require_both set, both must vanish.  Returns a symmetric uint8
    matrix with zero diagonal.
    """
    add = add_table.tolist()
    mul = mul_table.tolist()
    ents = np.asarray(entry_reps).tolist()
    n = len(ents)
    adj = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        a1, b1, c1, d1 = ents[i]
        for j in range(i + 1, n):
            a2, b2, c2, d2 = ents[j]
            left = (
                add[mul[a1][a2]][mul[b1][c2]] == 0
                and add[mul[a1][b2]][mul[b1][d2]] == 0
                and add[mul[c1][a2]][mul[d1][c2]] == 0
                and add[mul[c1][b2]][mul[d1][d2]] == 0
            )
            if require_both:
                if not left:
                    continue
                hit = (
                    add[mul[a2][a1]][mul[b2][c1]] == 0
                    and add[mul[a2][b1]][mul[b2][d1]] == 0
                    and add[mul[c2][a1]][mul[d2][c1]] == 0
                    and add[mul[c2][b1]][mul[d2][d1]] == 0
                )
            else:
                hit = left or (
                    add[mul[a2][a1]][mul[b2][c1]] == 0
                    and add[mul[a2][b1]][mul[b2][d1]] == 0
                    and add[mul[c2][a1]][mul[d2][c1]] == 0
                    and add[mul[c2][b1]][mul[d2][d1]] == 0
                )
            if hit:
                adj[i, j] = adj[j, i] = 1
    return adj


def all_pairs_distances(adj: np.ndarray) -> np.ndarray:
    """BFS from every vertex; -1 marks unreachable pairs."""
    n = adj.shape[0]
    nbrs = [np.nonzero(adj[i])[0].tolist() for i in range(n)]
    dist = np.full((n, n), -1, dtype=np.int16)
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = d[u] + 1
            for v in nbrs[u]:
                if d[v] < 0:
                    d[v] = du
                    queue.append(v)
        dist[s] = d
    return dist
