"""Shared builders for the test suite."""

import itertools
import random

from pauvc.expr import (CwExpr, Join, Leaf, NlcExpr, Product, Relabel, RelabelMap, Union,
                        eval_expr, postorder)
from pauvc.graph import Graph

P4_EXPR = "e(2,3,u(e(1,2,u(1(a),2(b))),e(1,3,u(3(c),1(d)))))"


def graph(n, edges, names=None):
    """Graph on names (default "1".."n") from 0-based index pairs."""
    names = names or [str(i + 1) for i in range(n)]
    return Graph.from_index_edges(names, edges)


def path(names):
    return Graph(names, list(zip(names, names[1:])))


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def exhaustive_min_covers(g):
    """All minimum vertex covers by scanning every subset."""
    edges = list(g.edges())
    best, found = None, []
    for x in range(1 << g.n):
        if all(x >> u & 1 or x >> v & 1 for u, v in edges):
            size = bin(x).count("1")
            if best is None or size < best:
                best, found = size, [x]
            elif size == best:
                found.append(x)
    return best, [g.subset_names(i for i in range(g.n) if x >> i & 1) for x in found]


def random_cw_root(rng, leaves, k, start=0):
    """Random clique-width AST over leaves named v<start>..; labels in 1..k."""
    nodes = [Leaf(rng.randint(1, k), f"v{start + i}") for i in range(leaves)]
    while True:
        op = rng.random()
        if len(nodes) > 1 and op < 0.45:
            a = nodes.pop(rng.randrange(len(nodes)))
            b = nodes.pop(rng.randrange(len(nodes)))
            nodes.append(Union(a, b))
        elif op < 0.75 and k > 1:
            i, j = rng.sample(range(1, k + 1), 2)
            x = rng.randrange(len(nodes))
            nodes[x] = Join(i, j, nodes[x])
        elif k > 1:
            i, j = rng.sample(range(1, k + 1), 2)
            x = rng.randrange(len(nodes))
            nodes[x] = Relabel(i, j, nodes[x])
        if len(nodes) == 1 and rng.random() < 0.3:
            return nodes[0]


def random_nlc_root(rng, leaves, k, start=0):
    nodes = [Leaf(rng.randint(1, k), f"v{start + i}") for i in range(leaves)]
    while True:
        if len(nodes) > 1 and rng.random() < 0.6:
            a = nodes.pop(rng.randrange(len(nodes)))
            b = nodes.pop(rng.randrange(len(nodes)))
            pairs = frozenset((i, j) for i in range(1, k + 1) for j in range(1, k + 1)
                              if rng.random() < 0.35)
            nodes.append(Product(pairs, a, b))
        else:
            mapping = {}
            for s in range(1, k + 1):
                d = rng.randint(1, k)
                if d != s and rng.random() < 0.5:
                    mapping[s] = d
            x = rng.randrange(len(nodes))
            nodes[x] = RelabelMap(tuple(sorted(mapping.items())), nodes[x])
        if len(nodes) == 1 and rng.random() < 0.3:
            return nodes[0]


def random_expr(rng, kind=None, max_leaves=10, max_k=3):
    """A random cw or NLC expression (kind picked at random if None)."""
    kind = kind or rng.choice(("cw", "nlc"))
    k = rng.randint(1, max_k)
    leaves = rng.randint(1, max_leaves)
    if kind == "cw":
        return CwExpr(random_cw_root(rng, leaves, k), k)
    return NlcExpr(random_nlc_root(rng, leaves, k), k)


def subexpressions(expr):
    """(node, labelled graph of its subtree) for every node, in postorder."""
    cls = type(expr)
    return [(node, eval_expr(cls(node, expr.k))) for node in postorder(expr.root)]


def seeded(seed):
    return random.Random(seed)
