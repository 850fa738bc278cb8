"""Seeded random instance families.

Every generator takes an explicit :class:`random.Random`, so an instance is
a pure function of (family, n, seed).  Vertices are named ``"1".."n"``.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from ..graph import Graph
from ..unit_interval import IntervalRep

FAMILIES = ("gnp", "tree", "split", "unit-interval")

#: Above this size the split generator keeps the clique near sqrt(2n) and
#: the B-degrees small, so the edge count stays linear.
_SMALL = 30


def _names(n: int) -> list[str]:
    return [str(i + 1) for i in range(n)]


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_index_edges(_names(n), pairs, check=False)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random attachment tree with shuffled vertex numbering."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[rng.randrange(i)], perm[i]) for i in range(1, n)]
    return Graph.from_index_edges(_names(n), pairs, check=False)


def random_split(n: int, rng: random.Random) -> tuple[Graph, list[int], list[int]]:
    """A split graph with its planted partition ``(A, B)`` as index lists."""
    perm = list(range(n))
    rng.shuffle(perm)
    if n <= _SMALL:
        na = rng.randint(0, n)
    else:
        na = rng.randint(1, max(1, math.isqrt(2 * n)))
    a, b = sorted(perm[:na]), sorted(perm[na:])
    pairs = list(combinations(a, 2))
    if n <= _SMALL:
        p = rng.random()
        pairs.extend((u, v) for v in b for u in a if rng.random() < p)
    elif a:
        for v in b:
            k = min(len(a), rng.choice((0, 1, 1, 1, 2, 3)))
            pairs.extend((u, v) for u in rng.sample(a, k))
    return Graph.from_index_edges(_names(n), pairs, check=False), a, b


def random_unit_intervals(n: int, rng: random.Random) -> IntervalRep:
    """Left endpoints with random gaps in quarter units (some zero).

    Gaps up to 5/4 keep mostly-connected, long runs of overlap.
    """
    lefts = []
    x = Fraction(0)
    for _ in range(n):
        lefts.append(x)
        x += Fraction(rng.randint(0, 5), 4)
    return IntervalRep.from_lefts(_names(n), lefts)


def family_rng(family: str, n: int, seed: int) -> random.Random:
    return random.Random(f"{family}:{n}:{seed}")


def random_instance(family: str, n: int, seed: int, *, p: float = 0.3):
    """Graph (or IntervalRep for ``unit-interval``) for a family and seed."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = family_rng(family, n, seed)
    if family == "gnp":
        return random_gnp(n, p, rng)
    if family == "tree":
        if n < 1:
            raise ValueError("a tree needs at least one vertex")
        return random_tree(n, rng)
    if family == "split":
        return random_split(n, rng)[0]
    if family == "unit-interval":
        return random_unit_intervals(n, rng)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
