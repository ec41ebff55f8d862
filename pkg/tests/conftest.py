"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive facts from definitions (pairwise
containment checks, BFS, exhaustive walks) so that library code is never
used to certify itself.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

import pytest
from hypothesis import strategies as st

import seppaths as sp


def brute_separating(g: sp.Graph, ps: sp.PathSystem) -> bool:
    """Direct definition: every edge pair is split by some path."""
    edge_sets = [set(p.edge_ids()) for p in ps]
    for e, f in combinations(range(g.m), 2):
        if not any((e in s) != (f in s) for s in edge_sets):
            return False
    return True


def bfs_path(g: sp.Graph, u: int, v: int) -> list[int]:
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in g.neighbors(x):
            if w not in parent:
                parent[w] = x
                queue.append(w)
    out = [v]
    while out[-1] != u:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def count_simple_paths(g: sp.Graph) -> int:
    """Number of simple paths with >= 1 edge, up to reversal."""
    total = 0

    def walk(v: int, visited: set[int]) -> None:
        nonlocal total
        for w in g.neighbors(v):
            if w not in visited:
                total += 1
                walk(w, visited | {w})

    for s in range(g.n):
        walk(s, {s})
    assert total % 2 == 0
    return total // 2


def complete_graph(n: int) -> sp.Graph:
    return sp.Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@st.composite
def small_graphs(draw, max_n: int = 8, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return sp.Graph.from_unordered(n, chosen)


@st.composite
def small_trees(draw, max_n: int = 9, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10**6))
    return sp.random_tree(n, seed)


@pytest.fixture
def p3() -> sp.Graph:
    return sp.parse_graph("3 2\n0 1\n1 2")


@pytest.fixture
def triangle() -> sp.Graph:
    return sp.Graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4() -> sp.Graph:
    return complete_graph(4)
