"""Exhaustive reference implementations.

Nothing here shares code with the solvers: answers come from scanning
vertex subsets directly, so they can be used to check everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import BudgetExceeded
from .expr import LabeledGraph
from .graph import Graph, enumerate_min_vcs

#: Default vertex budget for :func:`pauvc_bruteforce`.
BRUTE_BUDGET = 16
#: Limits for :func:`labeled_tables_oracle`.
TABLE_BUDGET = 12
TABLE_MAX_K = 4


def _check(n: int, budget: int, what: str):
    if n > budget:
        raise BudgetExceeded(f"{what}: {n} vertices exceeds the oracle budget of {budget}")


def pauvc_bruteforce(g: Graph, *, budget: int = BRUTE_BUDGET) -> frozenset:
    """A smallest S contained in exactly one minimum vertex cover.

    Candidates are scanned by size, then lexicographically by vertex index,
    so the answer is canonical.  A candidate is accepted when exactly one
    minimum cover contains it (the same test verify_preassignment makes,
    run against the full list of minimum covers computed once).
    """
    _check(g.n, budget, "pauvc_bruteforce")
    covers = [sum(1 << i for i in g.indices(c)) for c in enumerate_min_vcs(g, cap=1 << g.n)]
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            s = 0
            for i in combo:
                s |= 1 << i
            hits = 0
            for c in covers:
                if c & s == s:
                    hits += 1
                    if hits > 1:
                        break
            if hits == 1:
                return g.subset_names(combo)
    raise AssertionError("a minimum vertex cover always qualifies")


@dataclass
class ReferenceTable:
    """Exhaustively computed table of a labelled graph.

    Same layout as the DP's tables: label sets are bitmasks, ``mu`` has
    length ``2**k`` with None for unattained full sets, and ``chars`` maps a
    characteristic tuple to the size of a smallest set achieving it.
    ``witness`` gives one such smallest set (as vertex indices) per key.
    """

    k: int
    ne: int
    mu: tuple
    chars: dict
    witness: dict = field(repr=False, default_factory=dict)


def labeled_tables_oracle(lg: LabeledGraph, *, budget: int = TABLE_BUDGET,
                          max_k: int = TABLE_MAX_K) -> ReferenceTable:
    """mu and the characteristic set of ``lg`` by scanning all subsets."""
    g, k = lg.graph, lg.k
    n = g.n
    _check(n, budget, "labeled_tables_oracle")
    if k > max_k:
        raise BudgetExceeded(f"labeled_tables_oracle: k={k} exceeds {max_k}")
    classes = [0] * k
    for v, lab in enumerate(lg.labels):
        classes[lab - 1] |= 1 << v
    ne = 0
    for i, members in enumerate(classes):
        if members:
            ne |= 1 << i
    edges = list(g.edges())

    # every vertex cover, grouped by its full set
    by_full: dict[int, list[int]] = {}
    for x in range(1 << n):
        if all(x >> u & 1 or x >> v & 1 for u, v in edges):
            full = 0
            for i, members in enumerate(classes):
                if members and members & x == members:
                    full |= 1 << i
            by_full.setdefault(full, []).append(x)
    mu = [None] * (1 << k)
    minimum: dict[int, list[int]] = {}
    for full, xs in by_full.items():
        low = min(bin(x).count("1") for x in xs)
        mu[full] = low
        minimum[full] = [x for x in xs if bin(x).count("1") == low]

    chars: dict[tuple, int] = {}
    witness: dict[tuple, tuple] = {}
    for s in range(1 << n):
        beta = [0] * (1 << k)
        for full, xs in minimum.items():
            count = sum(1 for x in xs if x & s == s)
            beta[full] = min(count, 2)
        beta = tuple(beta)
        size = bin(s).count("1")
        if beta not in chars or size < chars[beta]:
            chars[beta] = size
            witness[beta] = tuple(i for i in range(n) if s >> i & 1)
    return ReferenceTable(k, ne, tuple(mu), chars, witness)
