import pytest
from hypothesis import given, strategies as st

from pauvc.errors import BudgetExceeded, ParseError
from pauvc.graph import (Graph, enumerate_min_vcs, format_graph, is_vertex_cover, min_vc_size,
                         parse_graph, verify_preassignment)

from helpers import exhaustive_min_covers, graph, path


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph(n, chosen)


class TestParse:
    def test_native_path(self):
        g = parse_graph("3 2\n1 2\n2 3")
        assert g.names == ("1", "2", "3")
        assert g.edge_names() == [("1", "2"), ("2", "3")]

    def test_dimacs_edge(self):
        g = parse_graph("p edge 2 1\ne 1 2")
        assert g.n == 2 and g.m == 1

    def test_self_loop_names_line(self):
        with pytest.raises(ParseError) as err:
            parse_graph("1 1\n1 1")
        assert err.value.line == 2
        assert "self-loop" in str(err.value)

    def test_comments_and_isolated(self):
        g = parse_graph("# header\n4 1\n\n2 3\n")
        assert g.n == 4 and g.degree(0) == 0 and g.degree(3) == 0

    def test_dimacs_comments(self):
        g = parse_graph("c hello\np edge 3 2\ne 1 2\nc mid\ne 2 3\n")
        assert g.m == 2

    @pytest.mark.parametrize("text, line", [
        ("3 2\n1 2\n2 2", 3),
        ("3 2\n1 2\n1 4", 3),
        ("3 2\n1 2\n2 1", 3),
        ("3 2\n1 2", 2),
        ("3 1\n1 x", 2),
        ("3\n", 1),
        ("p edge 2 1\ne 1", 2),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert err.value.line == line

    @given(graphs())
    def test_round_trip(self, g):
        for dimacs in (False, True):
            assert parse_graph(format_graph(g, dimacs=dimacs)) == g


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph("ab", [("a", "a")])
    with pytest.raises(ValueError):
        Graph("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        Graph("ab", [("a", "c")])
    with pytest.raises(ValueError):
        Graph("aa")


class TestCover:
    def test_k2(self):
        assert is_vertex_cover(Graph("uv", [("u", "v")]), {"u"})

    def test_p3(self):
        g = path("abc")
        assert is_vertex_cover(g, {"a", "c"})
        assert not is_vertex_cover(g, {"a"})

    def test_empty(self):
        assert is_vertex_cover(Graph([]), set())

    def test_unknown_vertex(self):
        with pytest.raises(KeyError):
            is_vertex_cover(path("ab"), {"z"})


class TestMinVc:
    def test_examples(self):
        assert min_vc_size(Graph("uvw", [("u", "v"), ("v", "w"), ("u", "w")])) == 2
        assert min_vc_size(path("abcd")) == 2
        assert min_vc_size(graph(5, [])) == 0

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            min_vc_size(graph(10, []), budget=9)

    @given(graphs(max_n=10))
    def test_matches_exhaustive(self, g):
        best, covers = exhaustive_min_covers(g)
        assert min_vc_size(g) == best
        found = enumerate_min_vcs(g, cap=(1 << g.n) + 1)
        assert len(found) == len(set(found))
        assert set(found) == set(covers)
        assert all(len(c) == best for c in found)


class TestEnumerate:
    def test_k2(self):
        assert enumerate_min_vcs(Graph("uv", [("u", "v")]), cap=2) == [{"u"}, {"v"}]

    def test_p4(self):
        got = enumerate_min_vcs(path("abcd"), cap=3)
        assert got == [{"a", "c"}, {"b", "c"}, {"b", "d"}]

    def test_p3(self):
        assert enumerate_min_vcs(path("abc"), cap=2) == [{"b"}]

    def test_cap(self):
        assert len(enumerate_min_vcs(graph(6, [(0, 1), (2, 3), (4, 5)]), cap=3)) == 3
        with pytest.raises(ValueError):
            enumerate_min_vcs(path("ab"), cap=0)


class TestVerify:
    def test_p4_single(self):
        v = verify_preassignment(path("abcd"), {"a"})
        assert v.num_min_vcs_capped == 1 and v.witness == {"a", "c"}
        assert v.min_vc_size == 2

    def test_k3_single(self):
        v = verify_preassignment(Graph("uvw", [("u", "v"), ("v", "w"), ("u", "w")]), {"u"})
        assert v.num_min_vcs_capped == 2 and v.witness is None

    def test_p4_pair_outside(self):
        v = verify_preassignment(path("abcd"), {"a", "b"})
        assert v.num_min_vcs_capped == 0

    @given(graphs())
    def test_minimum_cover_forces_itself(self, g):
        for cover in enumerate_min_vcs(g, cap=4):
            v = verify_preassignment(g, cover)
            assert v.num_min_vcs_capped == 1 and v.witness == cover
