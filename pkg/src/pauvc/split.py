"""PAU-VC on split graphs in linear time.

A split graph has a vertex partition into a clique A and an independent set
B.  Any minimum cover misses at most one clique vertex, and an A-vertex with
two or more B-neighbours lies in every minimum cover, so after stripping
those (and the isolated vertices left behind) each A-vertex has at most one
B-neighbour and the answer has a closed form.

"Smallest" always means smallest vertex index (see :mod:`pauvc.graph`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInClass
from .graph import Graph
from .solution import PreassignmentSolution, Rejection

#: Work cap (adjacency probes) for the forbidden-subgraph witness search.
WITNESS_WORK = 2_000_000


@dataclass(frozen=True)
class SplitPartition:
    """Clique ``a`` and independent set ``b``, as name tuples in index order."""

    a: tuple
    b: tuple

    def check(self, g: Graph) -> None:
        """Raise ValueError unless this is a valid split partition of ``g``."""
        a, b = g.indices(self.a), g.indices(self.b)
        if len(a) + len(b) != g.n or len(set(a) | set(b)) != g.n:
            raise ValueError("A and B must partition the vertex set")
        for x, i in enumerate(a):
            for j in a[x + 1:]:
                if not g.has_edge(i, j):
                    raise ValueError(f"A is not a clique: {g.names[i]} {g.names[j]}")
        inb = set(b)
        for i in b:
            for j in g.adj[i]:
                if j in inb:
                    raise ValueError(f"B is not independent: {g.names[i]} {g.names[j]}")


def recognize_split(g: Graph, *, witness_work: int = WITNESS_WORK) -> SplitPartition | Rejection:
    """Split partition by the degree-sequence test, or a rejection.

    With degrees sorted non-increasingly and m the largest i with
    d_i >= i - 1, the graph is split iff the top m degrees sum to
    m(m-1) plus the remaining degrees; then the top m vertices form the
    clique.  On rejection an induced 2K2, C4 or C5 is searched for and
    returned as the witness (kind ``"degree-sequence"`` with an empty
    witness if the search exceeds ``witness_work``).
    """
    n = g.n
    deg = [len(nb) for nb in g.adj]
    order = sorted(range(n), key=deg.__getitem__, reverse=True)
    m = 0
    for i, v in enumerate(order, 1):
        if deg[v] >= i - 1:
            m = i
        else:
            break
    top = sum(deg[v] for v in order[:m])
    rest = 2 * g.m - top
    if top == m * (m - 1) + rest:
        names = g.names
        a = sorted(order[:m])
        b = sorted(order[m:])
        return SplitPartition(tuple(names[i] for i in a), tuple(names[i] for i in b))
    return _reject(g, witness_work)


def _reject(g: Graph, work: int) -> Rejection:
    found = _find_2k2_c4(g, work)
    if found is None:
        found = _find_c5(g, work)
    if found is None:
        return Rejection("degree-sequence", (), "degree sequence fails the split test")
    kind, verts = found
    return Rejection(kind, tuple(g.names[v] for v in verts),
                     f"induced {kind} on " + " ".join(g.names[v] for v in verts))


def _find_2k2_c4(g: Graph, work: int):
    adj = [set(nb) for nb in g.adj]
    edges = list(g.edges())
    for x, (u, v) in enumerate(edges):
        for p, q in edges[x + 1:]:
            work -= 1
            if work < 0:
                return None
            if p == u or p == v or q == u or q == v:
                continue
            up, uq, vp, vq = p in adj[u], q in adj[u], p in adj[v], q in adj[v]
            if not (up or uq or vp or vq):
                return "2K2", (u, v, p, q)
            if up and vq and not uq and not vp:
                return "C4", (u, v, q, p)
            if uq and vp and not up and not vq:
                return "C4", (u, v, p, q)
    return None


def _find_c5(g: Graph, work: int):
    adj = [set(nb) for nb in g.adj]
    for a in range(g.n):
        for b in g.adj[a]:
            for c in g.adj[b]:
                if c == a or c in adj[a]:
                    continue
                for d in g.adj[c]:
                    work -= 1
                    if work < 0:
                        return None
                    if d == b or d in adj[a] or d in adj[b] or d == a:
                        continue
                    for e in g.adj[d]:
                        if e in adj[a] and e != b and e not in adj[b] and e not in adj[c] \
                                and e != c:
                            return "C5", (a, b, c, d, e)
    return None


def _require(g: Graph) -> SplitPartition:
    p = recognize_split(g)
    if not p:
        raise NotInClass(f"not a split graph: {p.message}", p.witness)
    return p


def _reduce(g: Graph, a_idx: list[int]):
    """Index-level reduction: (forced, kept A, kept B, in_a flags)."""
    n = g.n
    adj = g.adj
    in_a = bytearray(n)
    for i in a_idx:
        in_a[i] = 1
    inner = len(a_idx) - 1
    forced = [i for i in a_idx if len(adj[i]) - inner >= 2]
    dead = bytearray(n)
    for i in forced:
        dead[i] = 1
    keep_a = [i for i in a_idx if not dead[i]]
    keep_b = []
    for i in range(n):
        if in_a[i]:
            continue
        for j in adj[i]:
            if not dead[j]:
                keep_b.append(i)
                break
    if len(keep_a) == 1 and len(adj[keep_a[0]]) - inner == 0:
        keep_a = []          # lone clique vertex with nothing left to cover
    return forced, keep_a, keep_b, dead


def reduce_split(g: Graph, p: SplitPartition):
    """Strip forced A-vertices, then isolated vertices.

    Returns ``(reduced graph, reduced partition, forced names)``.  Forced
    vertices are those of A with at least two B-neighbours; they lie in every
    minimum cover.  Removing B-vertices creates no new such A-vertex, so a
    single pass of each rule reaches the fixed point.
    """
    forced, keep_a, keep_b, _ = _reduce(g, sorted(g.indices(p.a)))
    red = g.induced(sorted(keep_a + keep_b))
    names = g.names
    part = SplitPartition(tuple(names[i] for i in keep_a), tuple(names[i] for i in keep_b))
    return red, part, [names[i] for i in forced]


@dataclass(frozen=True)
class SplitAnalysis:
    """Everything :func:`solve_split` decided, for inspection and tests.

    ``case`` is ``"empty"``, ``"a0"`` or ``"b-star"``.  ``a0`` lists the
    reduced clique vertices without a B-neighbour; ``b_star`` and
    ``n_b_star`` are the chosen independent vertex and its reduced
    neighbourhood (None outside the b-star case).
    """

    partition: SplitPartition
    forced: tuple
    case: str
    a0: tuple
    b_star: str | None
    n_b_star: tuple | None
    solution: PreassignmentSolution


def analyze_split(g: Graph) -> SplitAnalysis:
    """Recognize, reduce and solve, keeping the intermediate choices."""
    p = _require(g)
    names = g.names
    adj = g.adj
    a_idx = sorted(g.indices(p.a))
    forced, keep_a, keep_b, dead = _reduce(g, a_idx)
    inner = len(a_idx) - 1
    b_star = nb = None
    if not keep_a and not keep_b:
        case, a0 = "empty", []
        s, cover = [], []
    else:
        a0 = [i for i in keep_a if len(adj[i]) == inner]
        if a0:
            case = "a0"
            v = a0[0]
            s = a0[1:]
            cover = [i for i in keep_a if i != v]
        else:
            case = "b-star"
            best = None
            for b in keep_b:
                k = 0
                for j in adj[b]:
                    if not dead[j]:
                        k += 1
                if best is None or k < best:
                    best, b_star = k, b
            nb = [j for j in adj[b_star] if not dead[j]]
            v = nb[0]
            s = nb[1:] + [b_star]
            cover = [i for i in keep_a if i != v] + [b_star]
    cover = forced + cover
    sol = PreassignmentSolution(g.subset_names(s), len(cover), g.subset_names(cover), "split")
    return SplitAnalysis(
        partition=p,
        forced=tuple(names[i] for i in forced),
        case=case,
        a0=tuple(names[i] for i in a0),
        b_star=None if b_star is None else names[b_star],
        n_b_star=None if nb is None else tuple(names[i] for i in nb),
        solution=sol,
    )


def solve_split(g: Graph) -> PreassignmentSolution:
    """Optimal pre-assignment of a split graph.

    Raises :class:`~pauvc.errors.NotInClass` when ``g`` is not split.
    """
    return analyze_split(g).solution
