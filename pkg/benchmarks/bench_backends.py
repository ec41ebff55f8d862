#!/usr/bin/env python3
"""Compare the compiled and pure-Python search backends on the exact solver.

Runs exact_min over a fixed corpus with each backend, checks that results
are identical, and prints a timing table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import seppaths as sp
from seppaths import kernel


def corpus():
    yield "path-10", sp.make_path_graph(10)
    yield "path-11", sp.make_path_graph(11)
    yield "path-12", sp.make_path_graph(12)
    yield "comb-3", sp.make_hair_comb(3)
    yield "comb-4", sp.make_hair_comb(4)
    yield "star-8", sp.make_star(8)
    yield "K4", sp.Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    yield "K5", sp.Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    yield "tree-9", sp.random_tree(9, seed=4)
    yield "tree-10", sp.random_tree(10, seed=7)
    yield "gnp-9-0.4", sp.gnp(9, 0.4, seed=3)
    yield "gnp-10-0.3", sp.gnp(10, 0.3, seed=5)


def run(g, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = sp.exact_min(g, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernel.HAVE_COMPILED:
        print("compiled backend not available; build the extension first")
        return 1
    header = f"{'graph':<12} {'m':>3} {'f':>2} {'nodes':>9} {'pure':>9} {'compiled':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    total_p = total_c = 0.0
    for name, g in corpus():
        rp, tp = run(g, "pure", args.repeat)
        rc, tc = run(g, "compiled", args.repeat)
        assert (rp.value, rp.nodes_explored) == (rc.value, rc.nodes_explored), name
        assert [p.vertices for p in rp.witness] == [p.vertices for p in rc.witness]
        total_p += tp
        total_c += tc
        print(
            f"{name:<12} {g.m:>3} {rp.value:>2} {rp.nodes_explored:>9} "
            f"{tp * 1000:>7.1f}ms {tc * 1000:>7.1f}ms {tp / max(tc, 1e-9):>7.1f}x"
        )
    print("-" * len(header))
    print(
        f"{'total':<12} {'':>3} {'':>2} {'':>9} "
        f"{total_p * 1000:>7.1f}ms {total_c * 1000:>7.1f}ms "
        f"{total_p / max(total_c, 1e-9):>7.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
