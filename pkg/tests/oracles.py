"""Independent reference implementations used as test oracles.

Nothing here imports the package under test: prime-field matrix algebra
is plain integer arithmetic mod p, GF(4) is hardcoded from its only
irreducible quadratic, and BFS is a dict-based textbook version.  Tests
compare package output against these.
"""

import itertools
from collections import deque
from fractions import Fraction


# --- prime fields: matrices as (a, b, c, d) tuples of ints mod p ---

def mat_mul_mod(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def idempotents_mod(p):
    """All idempotent 2x2 matrices over Z_p by direct search."""
    out = []
    for m in itertools.product(range(p), repeat=4):
        if mat_mul_mod(m, m, p) == m:
            out.append(m)
    return out


def canonical_id(m, q):
    a, b, c, d = m
    return ((a * q + b) * q + c) * q + d


# --- GF(4): reps 0..3, reduction by X^2 = X + 1 hardcoded ---

def gf4_add(x, y):
    return ((x % 2 + y % 2) % 2) + 2 * ((x // 2 + y // 2) % 2)


def gf4_mul(x, y):
    a0, a1 = x % 2, x // 2
    b0, b1 = y % 2, y // 2
    c0 = (a0 * b0 + a1 * b1) % 2
    c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
    return c0 + 2 * c1


def mat_mul_gf4(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (
        gf4_add(gf4_mul(a, e), gf4_mul(b, g)),
        gf4_add(gf4_mul(a, f), gf4_mul(b, h)),
        gf4_add(gf4_mul(c, e), gf4_mul(d, g)),
        gf4_add(gf4_mul(c, f), gf4_mul(d, h)),
    )


def idempotents_gf4():
    out = []
    for m in itertools.product(range(4), repeat=4):
        if mat_mul_gf4(m, m) == m:
            out.append(m)
    return out


# --- graphs: vertices hashable, adjacency as dict of sets ---

def graph_mod_p(p, require_both):
    """Idempotent graph over Z_p built with nothing but int arithmetic."""
    zero = (0, 0, 0, 0)
    one = (1, 0, 0, 1)
    verts = sorted(
        (m for m in idempotents_mod(p) if m not in (zero, one)),
        key=lambda m: canonical_id(m, p),
    )
    adj = {v: set() for v in verts}
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            left = mat_mul_mod(x, y, p) == zero
            right = mat_mul_mod(y, x, p) == zero
            if (left and right) if require_both else (left or right):
                adj[x].add(y)
                adj[y].add(x)
    return verts, adj


def bfs_lengths(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def wiener_harary(adj):
    """(wiener, harary): distance sum over unordered pairs, reciprocal sum
    over ordered pairs.  Raises if disconnected."""
    verts = list(adj)
    w = 0
    h = Fraction(0)
    for u in verts:
        lengths = bfs_lengths(adj, u)
        if len(lengths) != len(verts):
            raise ValueError("disconnected")
        for v, d in lengths.items():
            if v != u:
                w += d
                h += Fraction(1, d)
    return w // 2, h


def has_triangle(adj):
    for u, nbrs in adj.items():
        for v in nbrs:
            if nbrs & adj[v]:
                return True
    return False


def shortest_cycle(adj):
    """Exhaustive shortest-cycle search: try all cycle lengths upward."""
    verts = list(adj)
    if has_triangle(adj):
        return 3
    # 4-cycles: two vertices with two common neighbors.
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if len(adj[u] & adj[v]) >= 2:
                return 4
    # Longer cycles do not occur in these tests; fall back to brute force.
    for length in range(5, len(verts) + 1):
        for cyc in itertools.permutations(verts, length):
            if cyc[0] != min(cyc, key=id):
                continue
            if all(cyc[i + 1] in adj[cyc[i]] for i in range(length - 1)) and cyc[0] in adj[cyc[-1]]:
                return length
    return None
