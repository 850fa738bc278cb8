import pytest
from hypothesis import given, strategies as st

from pauvc.errors import ExpressionError, NotInClass, ParseError
from pauvc.expr import (CwExpr, Join, Leaf, NlcExpr, Union, eval_cw, eval_expr, eval_nlc,
                        format_expr, linear_nlc_expr, parse_cw_expr, parse_expr,
                        parse_nlc_expr, tree_to_cw_expr)
from pauvc.graph import Graph

from helpers import P4_EXPR, graph, path, random_expr, seeded
from pauvc.cli.generators import random_tree


def edges(lg):
    return set(map(frozenset, lg.graph.edge_names()))


def E(*pairs):
    return {frozenset(p) for p in pairs}


class TestParseCw:
    def test_p4_expression(self):
        e = parse_cw_expr(P4_EXPR)
        assert e.k == 3
        assert [leaf.name for leaf in e.leaves()] == ["a", "b", "c", "d"]

    def test_leaf(self):
        e = parse_cw_expr("1(x)")
        assert isinstance(e.root, Leaf) and e.k == 1

    def test_equal_join_labels(self):
        with pytest.raises(ValueError, match="distinct labels"):
            parse_cw_expr("e(1,1,1(x))")

    def test_header_overrides_k(self):
        assert parse_cw_expr("k 4\n1(x)").k == 4
        with pytest.raises(ValueError, match="outside"):
            parse_cw_expr("k 1\nu(1(x),2(y))")

    def test_label_zero(self):
        with pytest.raises(ValueError, match="labels start at 1"):
            parse_cw_expr("0(x)")

    def test_duplicate_name(self):
        with pytest.raises(ValueError, match="duplicate"):
            parse_cw_expr("u(1(x),1(x))")

    @pytest.mark.parametrize("text", ["u(1(a)", "e(1,2)", "q(1(a))", "1(a) 1(b)", "x([],1(a),1(b))"])
    def test_syntax_errors(self, text):
        with pytest.raises((ParseError, ExpressionError)):
            parse_cw_expr(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_cw_expr("u(1(a),,1(b))")
        assert err.value.pos == 7


class TestParseNlc:
    def test_product(self):
        lg = eval_nlc(parse_nlc_expr("x([(1,2)],1(a),2(b))"))
        assert edges(lg) == E("ab")
        assert lg.label_of("a") == 1 and lg.label_of("b") == 2

    def test_relabel_leaf(self):
        lg = eval_nlc(parse_nlc_expr("p([1->2],1(a))"))
        assert lg.label_of("a") == 2

    def test_empty_product(self):
        lg = eval_nlc(parse_nlc_expr("x([],1(a),1(b))"))
        assert lg.graph.n == 2 and lg.graph.m == 0

    def test_asts_reject_foreign_nodes(self):
        with pytest.raises(ExpressionError):
            NlcExpr(Union(Leaf(1, "a"), Leaf(1, "b")))

    def test_mixed_algebra_rejected(self):
        with pytest.raises((ParseError, ExpressionError)):
            parse_nlc_expr("u(1(a),1(b))")

    def test_dispatching_parser(self):
        assert isinstance(parse_expr("x([],1(a),1(b))"), NlcExpr)
        assert isinstance(parse_expr(P4_EXPR), CwExpr)


class TestEval:
    def test_p4_expression(self):
        lg = eval_cw(parse_cw_expr(P4_EXPR))
        assert edges(lg) == E("ab", "bc", "cd")
        assert [lg.label_of(v) for v in "abcd"] == [1, 2, 3, 1]

    def test_union_isolated(self):
        lg = eval_cw(parse_cw_expr("u(1(a),1(b))"))
        assert lg.graph.m == 0

    def test_join(self):
        assert edges(eval_cw(parse_cw_expr("e(1,2,u(1(a),2(b)))"))) == E("ab")

    def test_join_with_empty_class(self):
        assert eval_cw(parse_cw_expr("k 3\ne(1,3,u(1(a),2(b)))")).graph.m == 0

    def test_product_is_directional(self):
        g1 = eval_nlc(parse_nlc_expr("x([(1,2)],1(a),2(b))")).graph
        g2 = eval_nlc(parse_nlc_expr("x([(2,1)],1(a),2(b))")).graph
        assert g1.m == 1 and g2.m == 0

    def test_total_relabel(self):
        lg = eval_nlc(parse_nlc_expr("p([1->3,2->3],x([],1(a),2(b)))"))
        assert lg.graph.m == 0 and set(lg.labels) == {3}

    def test_relabel_swap_is_simultaneous(self):
        lg = eval_nlc(parse_nlc_expr("p([1->2,2->1],x([],1(a),2(b)))"))
        assert lg.label_of("a") == 2 and lg.label_of("b") == 1


class TestTreeExpr:
    def test_single_vertex(self):
        e = tree_to_cw_expr(Graph("x"))
        assert (e.root.label, e.root.name) == (1, "x")
        assert e.k == 3 and format_expr(e).splitlines()[-1] == "1(x)"

    def test_p4(self):
        e = tree_to_cw_expr(path("abcd"))
        assert e.k == 3
        assert edges(eval_cw(e)) == E("ab", "bc", "cd")

    def test_cycle_rejected(self):
        with pytest.raises(NotInClass):
            tree_to_cw_expr(Graph("uvw", [("u", "v"), ("v", "w"), ("u", "w")]))

    def test_forest(self):
        g = graph(5, [(0, 1), (3, 4)])
        assert eval_cw(tree_to_cw_expr(g)).graph.edge_set() == g.edge_set()

    @given(st.integers(0, 2**32 - 1), st.integers(1, 50), st.integers(1, 3))
    def test_random_forests(self, seed, n, parts):
        rng = seeded(seed)
        # a forest: delete a few edges from a random tree
        t = random_tree(n, rng)
        kept = [e for e in t.edges() if rng.random() > (parts - 1) / 10]
        g = graph(n, kept)
        e = tree_to_cw_expr(g)
        e.validate()      # built without the constructor's checks
        assert e == CwExpr(e.root, 3)
        assert eval_cw(e).graph.edge_set() == g.edge_set()

    def test_deep_tree_is_iterative(self):
        n = 20000
        g = graph(n, [(i, i + 1) for i in range(n - 1)])
        e = tree_to_cw_expr(g)
        assert eval_cw(e).graph.m == n - 1
        assert len(format_expr(e)) > n


class TestRoundTrip:
    @given(st.integers(0, 2**32 - 1))
    def test_format_parse(self, seed):
        e = random_expr(seeded(seed))
        again = parse_expr(format_expr(e))
        assert type(again) is type(e) and again.k == e.k
        assert format_expr(again) == format_expr(e)

    @given(st.integers(0, 2**32 - 1))
    def test_eval_deterministic_and_names(self, seed):
        e = random_expr(seeded(seed))
        a, b = eval_expr(e), eval_expr(e)
        assert a == b
        assert set(a.graph.names) == {leaf.name for leaf in e.leaves()}


def test_linear_nlc_expr_rebuilds_graph():
    rng = seeded(3)
    for _ in range(30):
        n = rng.randint(1, 8)
        g = graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < .4])
        lg = eval_nlc(linear_nlc_expr(g))
        assert lg.graph.edge_set() == g.edge_set()


def test_ast_constructors():
    e = CwExpr(Join(1, 2, Union(Leaf(1, "a"), Leaf(2, "b"))))
    assert e.k == 2 and str(e) == "e(1,2,u(1(a),2(b)))"
