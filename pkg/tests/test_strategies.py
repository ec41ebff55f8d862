from __future__ import annotations

import math

import pytest

import seppaths as sp
from seppaths.errors import StrategyFailed
from seppaths.strategies import (
    CommonNeighborGraph,
    _iceil,
    _k_core_vertices,
    _neighbor_cycles,
    _peel_cores,
    _rainbow_decompose,
)

from .conftest import complete_graph


def conditioned_gnp(n: int, p: float, min_deg: int, start_seed: int = 0) -> sp.Graph:
    seed = start_seed
    while True:
        g = sp.gnp(n, p, seed)
        if g.min_degree() >= min_deg:
            return g
        seed += 1


class TestRandomSplit:
    def test_k6_succeeds(self):
        pair = sp.random_split(complete_graph(6), 1, max_retries=100, seed=0)
        assert pair.g1.min_degree() >= 1 and pair.g2.min_degree() >= 1
        assert set(pair.g1.edges).isdisjoint(pair.g2.edges)
        assert set(pair.g1.edges) | set(pair.g2.edges) == set(complete_graph(6).edges)

    def test_p3_target_two_exhausts(self):
        with pytest.raises(StrategyFailed) as exc:
            sp.random_split(sp.make_path_graph(3), 2, max_retries=100, seed=0)
        assert exc.value.stage == "random-split"

    def test_target_zero_first_try(self):
        pair = sp.random_split(sp.make_path_graph(3), 0, max_retries=1, seed=0)
        assert pair.g1.m + pair.g2.m == 2

    def test_deterministic(self):
        a = sp.random_split(complete_graph(8), 2, seed=5)
        b = sp.random_split(complete_graph(8), 2, seed=5)
        assert a.g1.edges == b.g1.edges


class TestCommonNeighborGraph:
    def test_four_cycle(self):
        c4 = sp.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        aux = sp.common_neighbor_graph(c4, 2)
        assert aux.neighbors(0) == (2,) and aux.neighbors(1) == (3,)
        aux1 = sp.common_neighbor_graph(c4, 1)
        assert aux1.neighbors(0) == (2,)  # adjacent pairs share no neighbor in C4

    def test_within_restriction(self):
        g = complete_graph(6)
        aux = sp.common_neighbor_graph(g, 2, within={0, 1, 2, 3})
        assert aux.neighbors(4) == ()
        assert aux.neighbors(0) == (1, 2, 3)


class TestAlternatingCover:
    def aux_with_edges(self, n, pairs):
        adj = [[] for _ in range(n)]
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        return CommonNeighborGraph(n, 1, tuple(tuple(sorted(a)) for a in adj))

    def test_singleton(self):
        out = sp.alternating_cover([(0, 1)], self.aux_with_edges(2, []))
        assert out == [[0, 1]]

    def test_two_edges_joined_by_red(self):
        aux = self.aux_with_edges(4, [(1, 2)])
        out = sp.alternating_cover([(0, 1), (2, 3)], aux)
        assert out == [[0, 1, 2, 3]]

    def test_two_edges_no_connector(self):
        out = sp.alternating_cover([(0, 1), (2, 3)], self.aux_with_edges(4, []))
        assert out == [[0, 1], [2, 3]]

    def test_blue_edges_exactly_once_and_alternation(self):
        g = complete_graph(10)
        aux = sp.common_neighbor_graph(g, 1)
        matching = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]
        out = sp.alternating_cover(matching, aux)
        seen = []
        for seq in out:
            assert len(seq) == len(set(seq))
            for i, (a, b) in enumerate(zip(seq, seq[1:])):
                key = (min(a, b), max(a, b))
                if i % 2 == 0:
                    assert key in matching
                    seen.append(key)
                else:
                    assert b in aux.neighbors(a)
            assert len(seq) % 2 == 0, "paths start and end with a blue edge"
        assert sorted(seen) == sorted(matching)

    def test_rejects_non_matching(self):
        with pytest.raises(ValueError):
            sp.alternating_cover([(0, 1), (1, 2)], self.aux_with_edges(3, []))


class TestMinDegreeStrategy:
    def test_k8(self):
        out = sp.min_degree_strategy(complete_graph(8), 0.5, seed=1)
        assert out.verified
        assert out.size <= _iceil(122 * 8 / 0.25)
        assert sp.verify(complete_graph(8), out.system).separating == out.verified

    def test_precondition(self):
        with pytest.raises(StrategyFailed) as exc:
            sp.min_degree_strategy(sp.make_path_graph(10), 0.5)
        assert exc.value.stage == "degree-precondition"

    def test_conditioned_dense_random(self):
        g = conditioned_gnp(60, 0.8, 30, start_seed=0)
        out = sp.min_degree_strategy(g, 0.5, seed=7)
        assert out.verified
        assert sp.verify(g, out.system).separating

    def test_blue_edges_unique_per_direction(self):
        # each half's edges are partitioned by the matchings, and the
        # alternating cover uses each matching edge exactly once
        g = conditioned_gnp(30, 0.8, 15, start_seed=0)
        split = sp.random_split(g, _iceil(0.5 * 30 / 3), seed=3)
        blue = split.g1
        fam = sp.matching_decompose(blue, sp.path_decompose(blue))
        aux = sp.common_neighbor_graph(split.g2, _iceil(0.25 * 30 / 24))
        counts = {e: 0 for e in range(blue.m)}
        for medges in fam.matchings:
            cover = sp.alternating_cover([blue.edges[e] for e in medges], aux)
            for seq in cover:
                for i, (a, b) in enumerate(zip(seq, seq[1:])):
                    if i % 2 == 0:
                        counts[blue.edge_id(a, b)] += 1
        assert all(c == 1 for c in counts.values())

    def test_deterministic(self):
        g = complete_graph(9)
        a = sp.min_degree_strategy(g, 0.6, seed=2)
        b = sp.min_degree_strategy(g, 0.6, seed=2)
        assert [p.vertices for p in a.system] == [p.vertices for p in b.system]
        assert a.diagnostics == b.diagnostics


def two_level_graph() -> sp.Graph:
    """A 20-clique plus five satellites with three clique neighbors each;
    peeling with c=0.8 strips the satellites, exercising the neighbor-cycle
    machinery for the crossing edges."""
    pairs = [(u, v) for u in range(20) for v in range(u + 1, 20)]
    for i, y in enumerate(range(20, 25)):
        base = 3 * i
        pairs.extend((x, y) for x in (base, base + 1, base + 2))
    return sp.Graph.from_unordered(25, pairs)


class TestDenseStrategy:
    def test_clique_single_level(self):
        g = complete_graph(12)
        out = sp.dense_strategy(g, 0.25, seed=3)
        assert out.verified
        assert out.diagnostics["core_levels"] == 1
        assert out.diagnostics["core_size_0"] == 12

    def test_random_graph(self):
        g = sp.gnp(100, 0.6, seed=3)
        out = sp.dense_strategy(g, 0.1, seed=3)
        assert out.verified
        # under the density hypothesis the first core swallows nearly everything
        assert out.diagnostics["core_size_0"] >= math.sqrt(0.1) * 100

    def test_two_level_instance_exercises_crossing_edges(self):
        g = two_level_graph()
        out = sp.dense_strategy(g, 0.8, seed=1)
        assert out.verified
        assert out.diagnostics["core_levels"] == 2
        assert out.diagnostics["rainbow_matchings_0"] >= 2
        assert sp.verify(g, out.system).separating

    def test_core_partition(self):
        g = two_level_graph()
        levels = _peel_cores(g, 0.8)
        flat = [v for level in levels for v in level]
        assert sorted(flat) == list(range(g.n))
        assert levels[0] == list(range(20))

    def test_k_core(self):
        g = two_level_graph()
        assert _k_core_vertices(g, set(range(g.n)), 10) == set(range(20))
        assert _k_core_vertices(g, set(range(g.n)), 25) == set()

    def test_neighbor_cycles_structure(self):
        g = two_level_graph()
        multi = _neighbor_cycles(g, set(range(20)), set(range(20, 25)))
        classes = multi.color_classes()
        assert set(classes) == {20, 21, 22, 23, 24}
        h, rest = 20, 5
        degree: dict[int, int] = {}
        for u, v, _c in multi.edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        assert all(len(es) <= h for es in classes.values())
        assert all(d <= 2 * rest for d in degree.values())

    def test_rainbow_properties(self):
        g = two_level_graph()
        multi = _neighbor_cycles(g, set(range(20)), set(range(20, 25)))
        for avoid in (False, True):
            slots = _rainbow_decompose(multi, avoid)
            placed = sorted(e for s in slots for e in s)
            assert placed == list(range(len(multi.edges)))
            for s in slots:
                verts = [v for e in s for v in multi.edges[e][:2]]
                colors = [multi.edges[e][2] for e in s]
                assert len(verts) == len(set(verts))
                assert len(colors) == len(set(colors)), "at most one edge per color"

    def test_second_family_avoids_cycle_neighbors(self):
        g = two_level_graph()
        multi = _neighbor_cycles(g, set(range(20)), set(range(20, 25)))
        by_color: dict[int, list[int]] = {}
        for i, (_u, _v, c) in enumerate(multi.edges):
            by_color.setdefault(c, []).append(i)
        cyc_nbrs = {i: set() for i in range(len(multi.edges))}
        for idxs in by_color.values():
            k = len(idxs)
            for a, ei in enumerate(idxs):
                cyc_nbrs[ei].update((idxs[(a - 1) % k], idxs[(a + 1) % k]))
        for s in _rainbow_decompose(multi, True):
            for e in s:
                assert not cyc_nbrs[e] & set(s)

    def test_empty_core_fails_loudly(self):
        sparse = sp.gnp(30, 0.05, seed=2)
        with pytest.raises(StrategyFailed):
            sp.dense_strategy(sparse, 0.9, seed=0)


class TestRandomGraphStrategy:
    def test_sparse_case_uses_edges(self):
        g = sp.gnp(50, 0.1, seed=2)
        assert g.m <= 20 * 50
        out = sp.random_graph_strategy(g, 0.1, seed=2)
        assert out.diagnostics["case"] == 2
        assert out.verified and out.size == g.m

    def test_dense_case_completes_matchings(self):
        g = sp.gnp(80, 0.7, seed=5)
        assert g.m > 20 * 80
        out = sp.random_graph_strategy(g, 0.7, seed=5)
        assert out.diagnostics["case"] == 1
        assert out.verified
        assert sp.verify(g, out.system).separating
        assert out.size < g.m

    def test_empty_graph(self):
        g = sp.Graph(5, [])
        out = sp.random_graph_strategy(g, 0.3, seed=0)
        assert out.verified and out.size == 0


class TestPortfolio:
    def test_path_graph_uses_path_construction(self):
        out = sp.portfolio(sp.make_path_graph(7), seed=0)
        assert out.strategy_name == "path" and out.size == 3

    def test_comb_uses_comb_construction(self):
        out = sp.portfolio(sp.make_hair_comb(4), seed=0)
        assert out.strategy_name == "comb" and out.size == 5

    def test_always_verified(self):
        for seed, (n, p) in enumerate([(12, 0.2), (18, 0.5), (25, 0.9)]):
            g = sp.gnp(n, p, seed=seed)
            out = sp.portfolio(g, seed=seed)
            assert out.verified
            assert sp.verify(g, out.system).separating
            assert out.size <= max(g.m, 1)

    def test_deterministic(self):
        g = sp.gnp(24, 0.6, seed=4)
        a = sp.portfolio(g, seed=9)
        b = sp.portfolio(g, seed=9)
        assert a.strategy_name == b.strategy_name
        assert [p.vertices for p in a.system] == [p.vertices for p in b.system]

    def test_single_edge_graph_prefers_empty_tree_system(self):
        g = sp.Graph(2, [(0, 1)])
        out = sp.portfolio(g, seed=0)
        assert out.size == 0 and out.verified


class TestOutcomeConsistency:
    def test_verified_flag_double_entry(self):
        g = complete_graph(8)
        for out in (
            sp.min_degree_strategy(g, 0.5, seed=1),
            sp.dense_strategy(g, 0.3, seed=1),
            sp.random_graph_strategy(g, 0.9, seed=1),
            sp.portfolio(g, seed=1),
        ):
            assert out.verified == sp.verify(g, out.system).separating
            assert out.size == len(out.system)
