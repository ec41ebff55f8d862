from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import seppaths as sp
from seppaths.errors import FormatError, PathError
from seppaths.graph import ColoredMultigraph, induced_subgraph

from .conftest import bfs_path, small_graphs, small_trees


class TestParse:
    def test_smallest_path_graph(self):
        g = sp.parse_graph("3 2\n0 1\n1 2")
        assert g.n == 3 and g.edges == ((0, 1), (1, 2))

    def test_single_edge(self):
        g = sp.parse_graph("2 1\n0 1")
        assert (g.n, g.m) == (2, 1)

    def test_duplicate_edge_reports_line(self):
        with pytest.raises(FormatError) as exc:
            sp.parse_graph("3 3\n0 1\n1 2\n0 1")
        assert exc.value.line == 4
        assert "duplicate" in str(exc.value)

    def test_vertex_out_of_range_reports_line(self):
        with pytest.raises(FormatError) as exc:
            sp.parse_graph("3 2\n0 1\n1 5")
        assert exc.value.line == 3

    def test_self_loop_rejected(self):
        with pytest.raises(FormatError):
            sp.parse_graph("3 1\n2 2")

    def test_malformed_header(self):
        with pytest.raises(FormatError) as exc:
            sp.parse_graph("3\n0 1")
        assert exc.value.line == 1

    def test_missing_edge_lines(self):
        with pytest.raises(FormatError):
            sp.parse_graph("3 2\n0 1")

    def test_edge_index_is_file_order(self):
        g = sp.parse_graph("4 3\n2 3\n0 1\n1 2")
        assert g.edge_id(2, 3) == 0
        assert g.edge_id(0, 1) == 1

    @given(small_graphs())
    def test_serialize_parse_identity(self, g):
        again = sp.parse_graph(sp.serialize_graph(g))
        assert again == g and again.edges == g.edges

    @given(small_graphs())
    def test_serialized_text_round_trips(self, g):
        text = sp.serialize_graph(g)
        assert sp.serialize_graph(sp.parse_graph(text)) == text


class TestGraph:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            sp.Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            sp.Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            sp.Graph(3, [(0, 1), (1, 0)])

    def test_neighbors_sorted(self):
        g = sp.Graph(4, [(2, 0), (0, 3), (0, 1)])
        assert g.neighbors(0) == (1, 2, 3)
        assert g.degree(0) == 3 and g.min_degree() == 1

    def test_induced_subgraph_relabels(self):
        g = sp.Graph(5, [(0, 2), (2, 4), (1, 3)])
        sub, old = induced_subgraph(g, [0, 2, 4])
        assert old == [0, 2, 4]
        assert sub.edges == ((0, 1), (1, 2))


class TestPath:
    def test_path_from_vertices(self, p3):
        p = sp.path_from_vertices(p3, [0, 1, 2])
        assert p.length == 2 and p.edge_ids() == (0, 1)

    def test_missing_edge(self, p3):
        with pytest.raises(PathError, match=r"missing edge \(0, 2\)"):
            sp.path_from_vertices(p3, [0, 2])

    def test_repeated_vertex(self, triangle):
        with pytest.raises(PathError, match="repeated vertex 0"):
            sp.path_from_vertices(triangle, [0, 1, 2, 0])

    def test_single_vertex_allowed_but_not_in_system(self, p3):
        p = sp.path_from_vertices(p3, [1])
        assert p.length == 0
        with pytest.raises(ValueError):
            sp.PathSystem(p3, (p,))

    @given(small_trees(min_n=2), st.integers(0, 10**6))
    def test_path_edges_subset_of_host(self, t, seed):
        import random

        rng = random.Random(seed)
        v = rng.randrange(t.n)
        vs = [v]
        while True:
            nxt = [w for w in t.neighbors(vs[-1]) if w not in vs]
            if not nxt or rng.random() < 0.3:
                break
            vs.append(rng.choice(nxt))
        if len(vs) < 2:
            return
        p = sp.path_from_vertices(t, vs)
        ids = p.edge_ids()
        assert len(ids) == len(vs) - 1
        assert set(ids) <= set(range(t.m))


class TestTreePath:
    def test_path_graph(self):
        t = sp.make_path_graph(4)
        assert sp.tree_path(t, 0, 3).vertices == (0, 1, 2, 3)

    def test_star(self):
        t = sp.make_star(4)
        assert sp.tree_path(t, 1, 2).vertices == (1, 0, 2)

    def test_spider(self):
        t = sp.Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        got = sp.tree_path(t, 2, 4).vertices
        assert list(got) == bfs_path(t, 2, 4) == [2, 1, 3, 4]

    def test_errors(self, triangle):
        with pytest.raises(ValueError):
            sp.tree_path(triangle, 0, 1)
        t = sp.make_path_graph(3)
        with pytest.raises(ValueError):
            sp.tree_path(t, 1, 1)

    @given(small_trees(min_n=2), st.data())
    def test_matches_bfs_oracle_and_reverses(self, t, data):
        u = data.draw(st.integers(0, t.n - 1))
        v = data.draw(st.integers(0, t.n - 1))
        if u == v:
            return
        p = sp.tree_path(t, u, v)
        assert list(p.vertices) == bfs_path(t, u, v)
        assert tuple(reversed(p.vertices)) == sp.tree_path(t, v, u).vertices


class TestPathSystemFormat:
    def test_round_trip(self, p3):
        ps = sp.path_system(p3, [[1, 2], [0, 1, 2]])
        text = sp.serialize_path_system(ps)
        assert text == "2\n1 2\n0 1 2\n"
        again = sp.parse_path_system(text, p3)
        assert [p.vertices for p in again] == [(1, 2), (0, 1, 2)]

    def test_bad_path_reports_line(self, p3):
        with pytest.raises(FormatError) as exc:
            sp.parse_path_system("2\n1 2\n0 2\n", p3)
        assert exc.value.line == 3

    def test_zero_length_rejected(self, p3):
        with pytest.raises(FormatError):
            sp.parse_path_system("1\n1\n", p3)


class TestColoredMultigraph:
    def test_cycle_classes_accepted(self):
        m = ColoredMultigraph(4, ((0, 1, 9), (1, 2, 9), (2, 0, 9), (0, 1, 7), (1, 3, 7), (3, 0, 7)))
        assert set(m.color_classes()) == {9, 7}

    def test_open_path_class_rejected(self):
        with pytest.raises(ValueError):
            ColoredMultigraph(3, ((0, 1, 5), (1, 2, 5)))

    def test_two_cycles_one_color_rejected(self):
        edges = tuple(
            (a, b, 1)
            for a, b in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        with pytest.raises(ValueError):
            ColoredMultigraph(6, edges)
