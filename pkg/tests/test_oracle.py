import pytest
from hypothesis import given, strategies as st

from pauvc.errors import BudgetExceeded
from pauvc.expr import LabeledGraph
from pauvc.graph import Graph, min_vc_size, verify_preassignment
from pauvc.oracle import labeled_tables_oracle, pauvc_bruteforce

from helpers import graph, seeded, random_graph

K3 = Graph("uvw", [("u", "v"), ("v", "w"), ("u", "w")])


class TestBruteforce:
    def test_single_vertex(self):
        assert pauvc_bruteforce(Graph("x")) == frozenset()

    def test_k2(self):
        assert pauvc_bruteforce(Graph("uv", [("u", "v")])) == {"u"}

    def test_k3(self):
        s = pauvc_bruteforce(K3)
        assert len(s) == 2

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            pauvc_bruteforce(graph(17, []))
        with pytest.raises(BudgetExceeded):
            pauvc_bruteforce(graph(5, []), budget=4)

    def test_canonical_order(self):
        # C4: every singleton leaves one cover; the smallest index wins
        c4 = graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert pauvc_bruteforce(c4) == {"1"}

    @given(st.integers(0, 2**32 - 1), st.integers(0, 9))
    def test_properties(self, seed, n):
        g = random_graph(seeded(seed), n)
        s = pauvc_bruteforce(g)
        assert verify_preassignment(g, s).num_min_vcs_capped == 1
        assert len(s) <= min_vc_size(g)


def _lg(names, edges, labels, k):
    return LabeledGraph(Graph(names, edges), k, tuple(labels))


class TestTables:
    def test_leaf(self):
        t = labeled_tables_oracle(_lg("x", [], [1], 1))
        assert t.mu == (0, 1)
        assert t.chars == {(1, 1): 0, (0, 1): 1}

    def test_k2_same_label(self):
        t = labeled_tables_oracle(_lg("xy", [("x", "y")], [1, 1], 1))
        assert t.mu == (1, 2)
        # S = {} sees both covers of size one
        assert t.chars[(2, 1)] == 0

    def test_edgeless_two_labels(self):
        t = labeled_tables_oracle(_lg("xy", [], [1, 2], 2))
        assert t.mu == (0, 1, 1, 2)
        assert t.ne == 0b11

    def test_empty_class_not_full(self):
        # k = 2 but only label 1 used: label 2 never counts as full
        t = labeled_tables_oracle(_lg("x", [], [1], 2))
        assert t.ne == 0b01
        assert t.mu == (0, 1, None, None)

    def test_witnesses_realize_keys(self):
        t = labeled_tables_oracle(_lg("abc", [("a", "b"), ("b", "c")], [1, 2, 1], 2))
        for beta, s in t.witness.items():
            assert len(s) == t.chars[beta]

    def test_budgets(self):
        with pytest.raises(BudgetExceeded):
            labeled_tables_oracle(_lg([str(i) for i in range(13)], [], [1] * 13, 1))
        with pytest.raises(BudgetExceeded):
            labeled_tables_oracle(_lg("x", [], [1], 5))

    @given(st.integers(0, 2**32 - 1))
    def test_structural_invariants(self, seed):
        rng = seeded(seed)
        n, k = rng.randint(1, 7), rng.randint(1, 3)
        g = random_graph(rng, n)
        t = labeled_tables_oracle(LabeledGraph(g, k, tuple(rng.randint(1, k) for _ in range(n))))
        assert t.mu[t.ne] == n
        assert all(beta[t.ne] == 1 for beta in t.chars)
