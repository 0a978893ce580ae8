"""Graphs on the nontrivial idempotents of the 2x2 matrix ring.

Two adjacency rules share the same vertex set (all idempotents except
zero and identity, in canonical id order):

    kind IR   h ~ k  iff  hk = 0 and kh = 0   (orthogonal pairs)
    kind GID  h ~ k  iff  hk = 0 or  kh = 0

IR is always a subgraph of GID.  Besides the naive O(V^2) builder there
is a closed-form neighbor generator that emits each vertex's 2q-1 GID
neighbors directly from its class parameters, without scanning; the two
routes are checked against each other in the verification suite.

Distances are kept as a flat V x V table (-1 for unreachable); the
Harary value is the reciprocal-distance sum over ordered pairs of
distinct vertices (each unordered pair counted twice), kept as an exact
rational.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

from . import kernels
from .field import GF
from .idempotents import (
    IdempotentClass,
    IdempotentSet,
    NotIdempotent,
    classify,
    complement,
    entry_rep_array,
    p3_member,
    p4_member,
    p5_member,
    p6_member,
    p7_member,
)
from .matring import Mat2


class TrivialIdempotent(ValueError):
    """Zero and identity are not graph vertices."""


class Disconnected(ValueError):
    """Metric undefined on a disconnected graph."""


class GraphKind(enum.Enum):
    IR = "IR"
    GID = "GID"


class IdemGraph:
    """Vertex-indexed simple graph over the nontrivial idempotents.

    Vertices are fixed in canonical id order; neighbor lists hold vertex
    indices, sorted ascending.  Immutable after construction.
    """

    def __init__(self, kind: GraphKind, field: GF, vertices: tuple[Mat2, ...],
                 adj_matrix: np.ndarray):
        self.kind = kind
        self.field = field
        self.vertices = vertices
        self.adj_matrix = adj_matrix
        self.adj = tuple(
            tuple(int(j) for j in np.nonzero(adj_matrix[i])[0])
            for i in range(len(vertices))
        )
        self._index = {m.canonical_id: i for i, m in enumerate(vertices)}

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def index_of(self, m: Mat2) -> int:
        return self._index[m.canonical_id]

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with i < j, sorted."""
        return [(i, j) for i in range(self.vertex_count) for j in self.adj[i] if i < j]

    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def neighbors(self, m: Mat2) -> list[Mat2]:
        return [self.vertices[j] for j in self.adj[self.index_of(m)]]

    def has_edge(self, x: Mat2, y: Mat2) -> bool:
        return bool(self.adj_matrix[self.index_of(x), self.index_of(y)])


def build_graph(idems: IdempotentSet, kind: GraphKind) -> IdemGraph:
    """Decide every edge by the pairwise matrix products (naive route)."""
    vertices = idems.nontrivial
    adj = kernels.adjacency_matrix(
        entry_rep_array(vertices),
        idems.field.add_table,
        idems.field.mul_table,
        require_both=(kind is GraphKind.IR),
    )
    return IdemGraph(kind, idems.field, vertices, adj)


def neighbors_closed_form(e: Mat2) -> list[Mat2]:
    """All 2q-1 GID neighbors of a nontrivial idempotent, emitted directly
    from its class parameters (no vertex scan).

    Per class the neighbor set is: for the two matrix units, the opposite
    unit plus two full parameter families; for the one-parameter classes,
    one full opposite family, one sporadic partner in the mirror family,
    the adjacent matrix unit, and one member of P7 per admissible
    upper-left entry; for P7, four one-parameter sporadics plus two
    (q-2)-families of P7 members (right- and left-annihilating) that
    overlap exactly in the orthogonal partner 1 - E.
    """
    field = e.field
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    if e.is_zero() or e == Mat2.identity(field):
        raise TrivialIdempotent(f"{e} has no vertex in the graph")
    one = field.one
    q = field.q
    e11 = Mat2.unit(field, 1, 1)
    e22 = Mat2.unit(field, 2, 2)
    nonzero = field.nonzero_elements()
    inner = [a for a in field.elements() if a != field.zero and a != one]

    cls = classify(e)
    out: list[Mat2]
    if cls is IdempotentClass.P1:
        out = [e22]
        out += [p3_member(field, t) for t in nonzero]
        out += [p4_member(field, t) for t in nonzero]
    elif cls is IdempotentClass.P2:
        out = [e11]
        out += [p5_member(field, t) for t in nonzero]
        out += [p6_member(field, t) for t in nonzero]
    elif cls is IdempotentClass.P3:
        c = e.c
        out = [p5_member(field, t) for t in nonzero]
        out.append(p4_member(field, -c.inverse()))
        out.append(e11)
        out += [p7_member(field, a, -(one - a) * c.inverse()) for a in inner]
    elif cls is IdempotentClass.P4:
        s = e.b
        out = [p6_member(field, t) for t in nonzero]
        out.append(p3_member(field, -s.inverse()))
        out.append(e11)
        out += [p7_member(field, a, -a * s) for a in inner]
    elif cls is IdempotentClass.P5:
        c = e.c
        out = [p3_member(field, t) for t in nonzero]
        out.append(p6_member(field, -c.inverse()))
        out.append(e22)
        out += [p7_member(field, a, -a * c.inverse()) for a in inner]
    elif cls is IdempotentClass.P6:
        s = e.b
        out = [p4_member(field, t) for t in nonzero]
        out.append(p5_member(field, -s.inverse()))
        out.append(e22)
        out += [p7_member(field, a, (a - one) * s) for a in inner]
    else:  # P7
        a, b = e.a, e.b
        sporadic = [
            p3_member(field, (a - one) * b.inverse()),
            p4_member(field, -(a.inverse() * b)),
            p6_member(field, (a - one).inverse() * b),
            p5_member(field, -(a * b.inverse())),
        ]
        right = [p7_member(field, a1, -(one - a1) * a.inverse() * b) for a1 in inner]
        left = [p7_member(field, a2, -(a2 * (one - a).inverse() * b)) for a2 in inner]
        seen: dict[int, Mat2] = {}
        dups = []
        for m in sporadic + right + left:
            key = m.canonical_id
            if key in seen:
                dups.append(m)
            else:
                seen[key] = m
        # The two P7 families must meet exactly once, at 1 - E.
        assert dups == [complement(e)], f"unexpected overlap {dups} for {e}"
        out = list(seen.values())
    out.sort(key=lambda m: m.canonical_id)
    assert len(out) == 2 * q - 1, f"{e}: {len(out)} neighbors, expected {2 * q - 1}"
    assert len({m.canonical_id for m in out}) == len(out)
    return out


# --- metrics ---

def all_pairs_distances(g: IdemGraph) -> np.ndarray:
    """V x V BFS distance table; -1 marks unreachable pairs."""
    return kernels.all_pairs_distances(g.adj_matrix)


def diameter(g: IdemGraph, dist: np.ndarray | None = None):
    """Largest finite distance; math.inf when the graph is disconnected."""
    if dist is None:
        dist = all_pairs_distances(g)
    if g.vertex_count <= 1:
        return 0
    if (dist < 0).any():
        return math.inf
    return int(dist.max())


def components(g: IdemGraph) -> int:
    return max(component_labels(g)) + 1 if g.vertex_count else 0


def component_labels(g: IdemGraph) -> list[int]:
    """BFS labeling: vertex index -> component number (0-based)."""
    labels = [-1] * g.vertex_count
    comp = 0
    for s in range(g.vertex_count):
        if labels[s] >= 0:
            continue
        queue = [s]
        labels[s] = comp
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.adj[u]:
                if labels[v] < 0:
                    labels[v] = comp
                    queue.append(v)
        comp += 1
    return labels


def girth(g: IdemGraph):
    """Length of a shortest cycle, math.inf if the graph is a forest.

    Per-root BFS: every non-tree edge (u, v) seen from root r closes a
    cycle of length depth[u] + depth[v] + 1; the minimum over all roots
    and edges is exact.
    """
    best = math.inf
    n = g.vertex_count
    for root in range(n):
        depth = [-1] * n
        parent = [-1] * n
        depth[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in g.adj[u]:
                if depth[v] < 0:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle = depth[u] + depth[v] + 1
                    if cycle < best:
                        best = cycle
    return best


def wiener(g: IdemGraph, dist: np.ndarray | None = None) -> int:
    """Sum of distances over all unordered vertex pairs."""
    if dist is None:
        dist = all_pairs_distances(g)
    if (dist < 0).any():
        raise Disconnected(f"{g.kind.value} graph is disconnected")
    return int(np.triu(dist, 1).sum())


def harary(g: IdemGraph, dist: np.ndarray | None = None) -> Fraction:
    """Sum of reciprocal distances over all ordered pairs of distinct
    vertices (each unordered pair counted twice); exact rational."""
    if dist is None:
        dist = all_pairs_distances(g)
    if (dist < 0).any():
        raise Disconnected(f"{g.kind.value} graph is disconnected")
    total = Fraction(0)
    values, counts = np.unique(dist, return_counts=True)
    for d, n in zip(values.tolist(), counts.tolist()):
        if d > 0:
            total += Fraction(n, d)
    return total


# --- exports ---

def edgelist_text(g: IdemGraph) -> str:
    """Tab-separated canonical-id pairs under a '# q=.. kind=..' header."""
    lines = [f"# q={g.field.q} kind={g.kind.value}"]
    pairs = sorted(
        (g.vertices[i].canonical_id, g.vertices[j].canonical_id)
        for i, j in g.edges()
    )
    lines += [f"{u}\t{v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def dot_text(g: IdemGraph) -> str:
    """Undirected DOT document; nodes named by canonical id, labeled with
    the matrix text [[a,b],[c,d]]."""
    lines = ["graph idemgraph {", f"  // q={g.field.q} kind={g.kind.value}"]
    for m in g.vertices:
        lines.append(f'  {m.canonical_id} [label="{m}"];')
    for u, v in sorted(
        (g.vertices[i].canonical_id, g.vertices[j].canonical_id) for i, j in g.edges()
    ):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
