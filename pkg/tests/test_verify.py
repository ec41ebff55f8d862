from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import seppaths as sp
from seppaths.errors import DecodeError
from seppaths.verify import Violation

from .conftest import brute_separating, small_trees


class TestVerify:
    def test_p3_single_path(self, p3):
        rep = sp.verify(p3, sp.path_system(p3, [[1, 2]]))
        assert rep.separating
        assert rep.uncovered == (0,)
        assert rep.witness is None

    def test_empty_system_two_edges(self, p3):
        rep = sp.verify(p3, sp.PathSystem(p3, ()))
        assert not rep.separating
        assert rep.witness == (0, 1)

    def test_hair_comb_figure_family(self):
        g = sp.make_hair_comb(6)
        rep = sp.verify(g, sp.separate_hair_comb(6))
        assert rep.separating and len(sp.separate_hair_comb(6)) == 7

    def test_witness_is_lexicographically_first(self):
        g = sp.Graph(4, [(0, 1), (1, 2), (2, 3)])
        # one path covering everything: all three signatures equal
        rep = sp.verify(g, sp.path_system(g, [[0, 1, 2, 3]]))
        assert rep.witness == (0, 1)

    def test_verdict_matches_brute_force(self, k4):
        seqs = [[0, 1, 2, 3], [3, 1, 0], [0, 2, 3]]
        ps = sp.path_system(k4, seqs)
        assert sp.verify(k4, ps).separating == brute_separating(k4, ps) is True

    @given(small_trees(min_n=3, max_n=8), st.randoms(use_true_random=False))
    def test_permutation_preserves_verdict(self, t, rng):
        ps = sp.separate_tree(t)
        seqs = [list(p.vertices) for p in ps]
        rng.shuffle(seqs)
        if not seqs:
            return
        assert sp.verify(t, sp.path_system(t, seqs)).separating

    def test_single_edge_vacuous(self):
        g = sp.parse_graph("2 1\n0 1")
        assert sp.verify(g, sp.PathSystem(g, ())).separating


class TestSignature:
    def test_examples(self, p3, triangle):
        ps = sp.path_system(p3, [[1, 2]])
        assert sp.signature(p3, ps, p3.edge_id(1, 2)) == {0}
        assert sp.signature(p3, ps, p3.edge_id(0, 1)) == frozenset()
        tri = sp.path_system(triangle, [[0, 1, 2], [1, 2, 0]])
        assert sp.signature(triangle, tri, triangle.edge_id(1, 2)) == {0, 1}

    def test_matches_report(self, k4):
        ps = sp.path_system(k4, [[0, 1, 2, 3], [3, 1, 0]])
        rep = sp.verify(k4, ps)
        for e in range(k4.m):
            assert sp.signature(k4, ps, e) == rep.signatures[e]


class TestDecode:
    def test_p3_examples(self, p3):
        ps = sp.path_system(p3, [[1, 2]])
        assert sp.decode(p3, ps, {0}) == p3.edge_id(1, 2)
        assert sp.decode(p3, ps, set()) == p3.edge_id(0, 1)

    def test_round_trip_on_comb(self):
        g = sp.make_hair_comb(6)
        ps = sp.separate_hair_comb(6)
        rep = sp.verify(g, ps)
        for e in range(g.m):
            assert sp.decode(g, ps, set(rep.signatures[e])) == e

    def test_impossible_outcome(self, p3):
        ps = sp.path_system(p3, [[1, 2]])
        with pytest.raises(DecodeError):
            sp.decode(p3, ps, {0, 5})

    def test_empty_outcome_with_full_coverage(self, p3):
        ps = sp.path_system(p3, [[0, 1], [1, 2]])
        with pytest.raises(DecodeError):
            sp.decode(p3, ps, set())

    def test_requires_separating_system(self, p3):
        with pytest.raises(ValueError):
            sp.decode(p3, sp.PathSystem(p3, ()), {0})


class TestBounds:
    @pytest.mark.parametrize("m,want", [(1, 0), (8, 3), (9, 4), (2, 1), (1024, 10)])
    def test_info_lower_bound(self, m, want):
        assert sp.info_lower_bound(m) == want

    def test_info_lower_bound_rejects_zero(self):
        with pytest.raises(ValueError):
            sp.info_lower_bound(0)

    @pytest.mark.parametrize("n,want", [(10, 9), (2, 1), (4, 3)])
    def test_complete_lower_bound(self, n, want):
        assert sp.complete_lower_bound(n) == want

    def test_complete_lower_bound_closed_form(self):
        for n in range(2, 60):
            assert sp.complete_lower_bound(n) == n - 1

    def test_tree_lower_bound(self):
        assert sp.tree_lower_bound(sp.make_path_graph(7)) == 3
        assert sp.tree_lower_bound(sp.make_star(4)) == 2
        assert sp.tree_lower_bound(sp.make_hair_comb(4)) == 5

    def test_tree_lower_bound_errors(self, triangle):
        with pytest.raises(ValueError):
            sp.tree_lower_bound(triangle)
        with pytest.raises(ValueError):
            sp.tree_lower_bound(sp.make_path_graph(3))

    @given(small_trees(min_n=3, max_n=9))
    def test_separating_size_respects_info_bound(self, t):
        ps = sp.separate_tree(t)
        if t.m >= 2:
            assert sp.verify(t, ps).separating
            assert len(ps) >= sp.info_lower_bound(t.m)


class TestEndpointConditions:
    def test_separating_system_has_no_violations(self):
        t = sp.make_path_graph(5)
        assert sp.tree_endpoint_violations(t, sp.separate_path_graph(5)) == []

    def test_single_spanning_path_violates_degree2(self):
        t = sp.make_path_graph(4)
        vs = sp.tree_endpoint_violations(t, sp.path_system(t, [[0, 1, 2, 3]]))
        kinds = {(v.kind, v.vertices) for v in vs}
        assert ("degree2-without-endpoint", (1,)) in kinds
        assert ("degree2-without-endpoint", (2,)) in kinds

    def test_star_with_missed_leaves(self):
        t = sp.make_star(5)
        vs = sp.tree_endpoint_violations(t, sp.path_system(t, [[1, 0, 2]]))
        assert any(
            v.kind == "leaves-without-endpoint" and set(v.vertices) == {3, 4}
            for v in vs
        )

    def test_leaf_pair_without_distinguisher(self):
        t = sp.make_star(4)
        # both paths join leaf pairs and no path uses exactly one endpoint of [1,0,2]
        vs = sp.tree_endpoint_violations(t, sp.path_system(t, [[1, 0, 2]]))
        assert any(v.kind == "leaf-pair-without-distinguisher" for v in vs)

    @given(small_trees(min_n=3, max_n=9))
    def test_no_violations_on_verified_systems(self, t):
        ps = sp.separate_tree(t)
        assert sp.verify(t, ps).separating
        assert sp.tree_endpoint_violations(t, ps) == []

    def test_violation_type(self):
        v = Violation("degree2-without-endpoint", (3,))
        assert v.vertices == (3,)


class TestReportSerialization:
    def test_json_fields(self, p3):
        rep = sp.verify(p3, sp.path_system(p3, [[1, 2]]))
        data = json.loads(rep.to_json())
        assert data["separating"] is True
        assert data["uncovered"] == [0]
        assert data["signatures"] == [[], [0]]
