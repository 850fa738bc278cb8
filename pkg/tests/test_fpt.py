import pytest
from hypothesis import given, settings, strategies as st

from pauvc.errors import BudgetExceeded, ExpressionError
from pauvc.expr import CwExpr, Join, Leaf, LabeledGraph, Relabel, Union, eval_expr, \
    parse_cw_expr, parse_nlc_expr, tree_to_cw_expr
from pauvc.fpt import (DpCache, apply_join, apply_relabel, combine_product, leaf_table, run_dp,
                       solve_expr, submasks, valid_characteristics)
from pauvc.graph import Graph, is_vertex_cover, verify_preassignment
from pauvc.unit_interval import recognize_unit_interval, solve_unit_interval
from pauvc.oracle import labeled_tables_oracle, pauvc_bruteforce

from helpers import P4_EXPR, random_expr, seeded, subexpressions
from pauvc.cli.generators import random_tree


def same_table(t, ref):
    return t.ne == ref.ne and t.mu == ref.mu and t.chars == ref.chars


def k2(labels=(1, 2), k=2):
    return LabeledGraph(Graph("xy", [("x", "y")]), k, labels)


class TestLeaf:
    def test_leaf_1(self):
        t = leaf_table(1, "x")
        assert t.ne == 1 and t.mu == (0, 1)
        assert t.chars == {(1, 1): 0, (0, 1): 1}

    def test_leaf_in_wider_budget(self):
        t = leaf_table(2, "x", k=3)
        assert t.ne == 0b010
        assert t.mu_map() == {0: 0, 0b010: 1}

    def test_label_out_of_range(self):
        with pytest.raises(ExpressionError):
            leaf_table(3, "x", k=2)

    def test_matches_oracle(self):
        ref = labeled_tables_oracle(LabeledGraph(Graph("x"), 1, (1,)))
        assert same_table(leaf_table(1, "x"), ref)


class TestProduct:
    def test_k2_mu(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(1, 2)])
        assert t.mu == (None, 1, 1, 2)
        assert same_table(t, labeled_tables_oracle(k2()))

    def test_union_shared_label(self):
        t = combine_product(leaf_table(1, "x"), leaf_table(1, "y"))
        assert t.mu == (0, 2)
        ref = labeled_tables_oracle(LabeledGraph(Graph("xy"), 1, (1, 1)))
        assert same_table(t, ref)

    def test_characteristic_of_x(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(1, 2)])
        # S = {x}: beta({1}) = 1, beta({2}) = 0, beta({1,2}) = 1
        assert t.chars[(0, 1, 0, 1)] == 1

    def test_pairs_are_directional(self):
        a = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(2, 1)])
        assert a.mu[0] == 0       # no edge, the empty cover exists

    def test_mismatched_k(self):
        with pytest.raises(ValueError):
            combine_product(leaf_table(1, "x", 1), leaf_table(1, "y", 2))


class TestRelabel:
    def test_identity(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(1, 2)])
        same = apply_relabel(t, {})
        assert same.mu == t.mu and same.chars == t.chars

    def test_merge_k2(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(1, 2)])
        r = apply_relabel(t, {2: 1})
        assert r.mu == (1, 2, None, None)
        # S = {} sees both one-vertex covers at the empty full set
        assert r.chars[(2, 1, 0, 0)] == 0
        assert same_table(r, labeled_tables_oracle(k2((1, 1))))

    def test_merge_isolated(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2))
        r = apply_relabel(t, {2: 1})
        assert r.mu[0] == 0 and r.mu[1] == 2
        ref = labeled_tables_oracle(LabeledGraph(Graph("xy"), 2, (1, 1)))
        assert same_table(r, ref)

    def test_swap(self):
        t = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2), [(1, 2)])
        r = apply_relabel(t, {1: 2, 2: 1})
        ref = labeled_tables_oracle(k2((2, 1)))
        assert same_table(r, ref)


class TestJoin:
    def test_k2_from_union(self):
        u = combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2))
        j = apply_join(u, 1, 2)
        assert j.mu == (None, 1, 1, 2)
        assert same_table(j, labeled_tables_oracle(k2()))

    def test_absent_class_is_identity(self):
        t = leaf_table(1, "x", 3)
        assert apply_join(t, 1, 3) is t

    def test_filter_already_satisfied(self):
        u = apply_join(combine_product(leaf_table(1, "x", 2), leaf_table(2, "y", 2)), 1, 2)
        again = apply_join(u, 1, 2)
        assert again.mu == u.mu and again.chars == u.chars

    def test_equal_labels(self):
        with pytest.raises(ExpressionError):
            apply_join(leaf_table(1, "x", 2), 1, 1)

    @given(st.integers(0, 2**32 - 1))
    def test_idempotent(self, seed):
        rng = seeded(seed)
        e = random_expr(rng, kind="cw", max_leaves=7)
        if e.k < 2:
            return
        t = run_dp(e).root
        i, j = rng.sample(range(1, e.k + 1), 2)
        once = apply_join(t, i, j)
        twice = apply_join(once, i, j)
        assert once.mu == twice.mu and once.chars == twice.chars


class TestP4Expression:
    def test_every_node_matches_oracle(self):
        e = parse_cw_expr(P4_EXPR)
        run = run_dp(e, check=True)
        for node, lg in subexpressions(e):
            assert same_table(run.table(node), labeled_tables_oracle(lg))

    def test_solution(self):
        e = parse_cw_expr(P4_EXPR)
        sol = solve_expr(e, check=True)
        assert sol.size == 1 and sol.min_vc_size == 2
        g = eval_expr(e).graph
        v = verify_preassignment(g, sol.preassign)
        assert v.num_min_vcs_capped == 1 and v.witness == sol.unique_cover
        assert sol.method == "fpt-cw"


class TestSolve:
    def test_single_vertex(self):
        assert solve_expr(parse_cw_expr("1(x)")).preassign == frozenset()

    def test_k2_cw(self):
        assert solve_expr(parse_cw_expr("e(1,2,u(1(a),2(b)))")).size == 1

    def test_k2_nlc(self):
        sol = solve_expr(parse_nlc_expr("x([(1,2)],1(a),2(b))"))
        assert sol.preassign in ({"a"}, {"b"}) and sol.method == "fpt-nlc"

    def test_label_budget(self):
        e = parse_cw_expr("k 5\n1(x)")
        with pytest.raises(BudgetExceeded, match="k <= 4"):
            solve_expr(e)

    def test_rejects_non_expression(self):
        with pytest.raises(TypeError):
            solve_expr("1(x)")

    def test_random_tree_50(self):
        g = random_tree(50, seeded(11))
        sol = solve_expr(tree_to_cw_expr(g))
        v = verify_preassignment(g, sol.preassign)
        assert v.num_min_vcs_capped == 1 and v.witness == sol.unique_cover

    @settings(max_examples=40)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 14))
    def test_trees_match_bruteforce(self, seed, n):
        g = random_tree(n, seeded(seed))
        assert solve_expr(tree_to_cw_expr(g)).size == len(pauvc_bruteforce(g))


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_random_expressions_match_oracle(seed):
    e = random_expr(seeded(seed), max_leaves=8)
    run = run_dp(e, check=True)
    for node, lg in subexpressions(e):
        assert same_table(run.table(node), labeled_tables_oracle(lg))
    g = eval_expr(e).graph
    sol = solve_expr(e)
    assert sol.size == len(pauvc_bruteforce(g))
    v = verify_preassignment(g, sol.preassign)
    assert v.num_min_vcs_capped == 1 and v.witness == sol.unique_cover


def test_shared_cache_gives_same_tables():
    cache = DpCache()
    e = parse_cw_expr(P4_EXPR)
    a = run_dp(e, cache=cache).root
    b = run_dp(e, cache=cache).root
    c = run_dp(e).root
    assert a.chars == b.chars == c.chars and a.mu == c.mu


def test_valid_characteristics_root():
    run = run_dp(parse_cw_expr(P4_EXPR))
    low, gamma, valid = valid_characteristics(run.root)
    assert low == 2
    assert all(sum(b[m] for m in gamma) == 1 for b in valid)


def test_submasks():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]


def test_deep_path_expression():
    # path grown one vertex at a time: tail on label 1, the rest on 3
    n = 3000
    root = Leaf(1, "v0")
    for i in range(1, n):
        root = Relabel(2, 1, Relabel(1, 3, Join(1, 2, Union(root, Leaf(2, f"v{i}")))))
    e = CwExpr(root, 3)
    g = eval_expr(e).graph
    assert g.m == n - 1
    sol = solve_expr(e)
    assert sol.min_vc_size == n // 2
    assert is_vertex_cover(g, sol.unique_cover)
    rep = recognize_unit_interval(g)
    assert sol.size == solve_unit_interval(rep).size
