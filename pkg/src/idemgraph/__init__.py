"""Idempotents of 2x2 matrix rings over finite fields and their graphs.

The package builds GF(p^k) with exact table-driven arithmetic, lists the
q^2+q+2 idempotent matrices two independent ways, constructs the graphs
whose vertices are the nontrivial idempotents (adjacency: one or both
pairwise products vanish), and verifies the structural facts that hold
for them: regularity of degree 2q-1, diameter 2, the girth dichotomy,
the perfect-matching structure of the orthogonal-pairs graph, and the
closed forms of the Wiener and Harary indices.
"""

from .field import (
    GF,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    Fq,
    NonPrimeP,
    ReducibleModulus,
    make_field,
)
from .graph import (
    Disconnected,
    GraphKind,
    IdemGraph,
    TrivialIdempotent,
    all_pairs_distances,
    build_graph,
    components,
    diameter,
    dot_text,
    edgelist_text,
    girth,
    harary,
    neighbors_closed_form,
    wiener,
)
from .idempotents import (
    DEFAULT_BRUTE_FORCE_CAP,
    CapExceeded,
    IdempotentClass,
    IdempotentSet,
    NotIdempotent,
    classify,
    complement,
    enumerate_bruteforce,
    enumerate_constructive,
)
from .kernels import BACKEND
from .matring import Mat2
from .verify import GraphReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "GF",
    "Fq",
    "Mat2",
    "make_field",
    "NonPrimeP",
    "ReducibleModulus",
    "DegreeMismatch",
    "FieldMismatch",
    "DivisionByZero",
    "NotIdempotent",
    "CapExceeded",
    "TrivialIdempotent",
    "Disconnected",
    "IdempotentClass",
    "IdempotentSet",
    "classify",
    "complement",
    "enumerate_bruteforce",
    "enumerate_constructive",
    "DEFAULT_BRUTE_FORCE_CAP",
    "GraphKind",
    "IdemGraph",
    "build_graph",
    "neighbors_closed_form",
    "all_pairs_distances",
    "diameter",
    "girth",
    "components",
    "wiener",
    "harary",
    "edgelist_text",
    "dot_text",
    "GraphReport",
    "verify_all",
    "BACKEND",
    "__version__",
]
