"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot loops on growing field orders: the q^4 idempotent
scan, the O(V^2) pairwise-product adjacency build (V = q^2 + q), and
all-pairs BFS.  Usage:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --scan-q 13 31 47 --graph-q 13 23 --repeats 5
"""

from __future__ import annotations

import argparse
import time

from idemgraph import kernels
from idemgraph.field import GF, is_prime
from idemgraph.graph import GraphKind, build_graph
from idemgraph.idempotents import entry_rep_array, enumerate_constructive


def prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        k, n = 0, 1
        while n < q:
            n *= p
            k += 1
        if n == q:
            return p, k
    raise ValueError(f"{q} is not a prime power")


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def run(args) -> None:
    backends = kernels.available_backends()
    names = sorted(backends)
    if "compiled" not in backends:
        print("note: compiled backend not built; timing pure-python only")
    rows = []
    for q in args.scan_q:
        gf = GF(*prime_power(q))
        timings = {
            name: best_of(
                lambda b=backends[name]: b.find_idempotent_ids(gf.add_table, gf.mul_table),
                args.repeats,
            )
            for name in names
        }
        rows.append((f"scan q={q} ({q**4} candidates)", timings))
    for q in args.graph_q:
        gf = GF(*prime_power(q))
        idems = enumerate_constructive(gf)
        ents = entry_rep_array(idems.nontrivial)
        v = len(idems.nontrivial)
        timings = {
            name: best_of(
                lambda b=backends[name]: b.adjacency_matrix(
                    ents, gf.add_table, gf.mul_table, False
                ),
                args.repeats,
            )
            for name in names
        }
        rows.append((f"adjacency q={q} (V={v})", timings))
        adj = build_graph(idems, GraphKind.GID).adj_matrix
        timings = {
            name: best_of(
                lambda b=backends[name]: b.all_pairs_distances(adj), args.repeats
            )
            for name in names
        }
        rows.append((f"bfs q={q} (V={v})", timings))

    label_w = max(len(r[0]) for r in rows)
    header = f"{'kernel'.ljust(label_w)}  " + "  ".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        line = label.ljust(label_w) + "  " + "  ".join(
            f"{timings[n] * 1000:10.2f}ms" for n in names
        )
        if len(names) == 2:
            line += f"  {timings['pure-python'] / timings['compiled']:7.1f}x"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scan-q", type=int, nargs="+", default=[13, 31, 47])
    parser.add_argument("--graph-q", type=int, nargs="+", default=[13, 23])
    parser.add_argument("--repeats", type=int, default=3)
    run(parser.parse_args())


if __name__ == "__main__":
    main()
