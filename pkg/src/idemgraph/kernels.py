"""Kernel backend selection.

The three hot loops (brute-force idempotent scan, pairwise-product
adjacency, all-pairs BFS) exist twice: compiled (Cython, _ckernels) and
pure Python (_pykernels).  The compiled backend is preferred when the
extension was built; the pure one is the always-available fallback and
the reference the compiled one is tested against.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels as _impl

    BACKEND = "compiled"
except ImportError:
    _impl = _pykernels
    BACKEND = "pure-python"

find_idempotent_ids = _impl.find_idempotent_ids
adjacency_matrix = _impl.adjacency_matrix
all_pairs_distances = _impl.all_pairs_distances


def available_backends() -> dict[str, object]:
    """Name -> module for every importable backend (for tests/benchmarks)."""
    backends = {"pure-python": _pykernels}
    if _impl is not _pykernels:
        backends["compiled"] = _impl
    return backends
