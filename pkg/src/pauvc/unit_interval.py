"""PAU-VC on unit interval graphs in linear time.

Intervals are closed and of unit length; ``[a, a+1]`` and ``[b, b+1]``
intersect iff ``|a - b| <= 1``.  Left endpoints are stored as integers over
a common ``scale`` (the interval length), so all comparisons are exact.

The solver partitions the sorted intervals greedily into cliques
I_1..I_m whose first members form a maximum independent set.  Every
minimum cover leaves out exactly one interval per group, and a dynamic
program over "which interval is left out of group i" finds the smallest
forcing set.  Only sizes and back-pointers are stored.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .graph import Graph
from .solution import PreassignmentSolution, Rejection

# --------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class IntervalRep:
    """Unit intervals sorted by left endpoint.

    Interval ``i`` is ``[lefts[i] / scale, lefts[i] / scale + 1]``.  Equal
    left endpoints are allowed; such intervals are twins and keep their
    input order.
    """

    names: tuple
    lefts: tuple
    scale: int = 1

    def __post_init__(self):
        if len(self.names) != len(self.lefts):
            raise ValueError("names and lefts differ in length")
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")
        if len(set(self.names)) != len(self.names):
            raise ValueError("interval names must be unique")
        lefts = self.lefts
        for i in range(1, len(lefts)):
            if lefts[i] < lefts[i - 1]:
                raise ValueError("intervals must be sorted by left endpoint")

    @classmethod
    def from_lefts(cls, names: Sequence[str], lefts: Sequence) -> "IntervalRep":
        """Build from rational (or numeric string) endpoints in any order."""
        values = [Fraction(x) for x in lefts]
        scale = math.lcm(*(v.denominator for v in values)) if values else 1
        ints = [v.numerator * (scale // v.denominator) for v in values]
        order = sorted(range(len(ints)), key=ints.__getitem__)
        return cls(tuple(str(names[i]) for i in order), tuple(ints[i] for i in order), scale)

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def left(self, i: int) -> Fraction:
        return Fraction(self.lefts[i], self.scale)

    def intersects(self, i: int, j: int) -> bool:
        return abs(self.lefts[i] - self.lefts[j]) <= self.scale

    def reach(self) -> list[int]:
        """For each interval the last position whose interval meets it."""
        lefts, scale, n = self.lefts, self.scale, len(self.lefts)
        out = [0] * n
        r = 0
        for i in range(n):
            if r < i:
                r = i
            while r + 1 < n and lefts[r + 1] - lefts[i] <= scale:
                r += 1
            out[i] = r
        return out

    def edges(self):
        """Intersecting pairs as position pairs (i < j)."""
        for i, r in enumerate(self.reach()):
            for j in range(i + 1, r + 1):
                yield i, j

    def graph(self) -> Graph:
        """The intersection graph, vertices in interval order."""
        return Graph.from_index_edges(self.names, self.edges(), check=False)


def parse_intervals(text) -> IntervalRep:
    """Parse ``name left`` lines (``#`` starts a comment).

    ``left`` is any rational accepted by :class:`fractions.Fraction`,
    e.g. ``2``, ``0.5`` or ``3/7``.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode()
    names: list[str] = []
    lefts: list[Fraction] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'name left', got {line!r}", line=lineno)
        name, tok = parts
        try:
            value = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"unparsable rational {tok!r}", line=lineno) from None
        if name in seen:
            raise ParseError(f"duplicate interval name {name!r} (first on line {seen[name]})",
                             line=lineno)
        seen[name] = lineno
        names.append(name)
        lefts.append(value)
    return IntervalRep.from_lefts(names, lefts)


def format_intervals(rep: IntervalRep) -> str:
    lines = [f"{name} {rep.left(i)}" for i, name in enumerate(rep.names)]
    return "\n".join(lines) + ("\n" if lines else "")


# --------------------------------------------------------------------------
# recognition


def _lexbfs(g: Graph, verts: list[int], initial: list[int]) -> list[int]:
    """Lexicographic BFS of the component ``verts``.

    Ties are broken by position in ``initial``: classes stay sorted by it
    and the first member of the first class is taken.  Passing the reverse
    of the previous sweep gives the '+' variant.
    """
    rank = {v: i for i, v in enumerate(initial)}
    adj = {v: sorted(g.adj[v], key=rank.__getitem__) for v in verts}
    # class list and member lists as doubly linked lists over ids
    nxt_v, prv_v, cls = {}, {}, {}
    c_head, c_tail, c_next, c_prev = [], [], [], []

    def new_class(before):
        cid = len(c_head)
        c_head.append(None)
        c_tail.append(None)
        c_next.append(None)
        c_prev.append(None)
        if before is not None:
            p = c_prev[before]
            c_prev[cid], c_next[cid] = p, before
            c_prev[before] = cid
            if p is not None:
                c_next[p] = cid
        return cid

    def append(cid, v):
        cls[v] = cid
        prv_v[v], nxt_v[v] = c_tail[cid], None
        if c_tail[cid] is None:
            c_head[cid] = v
        else:
            nxt_v[c_tail[cid]] = v
        c_tail[cid] = v

    def unlink(v):
        cid = cls[v]
        p, q = prv_v[v], nxt_v[v]
        if p is None:
            c_head[cid] = q
        else:
            nxt_v[p] = q
        if q is None:
            c_tail[cid] = p
        else:
            prv_v[q] = p
        return cid

    first = new_class(None)
    for v in initial:
        append(first, v)
    visited = set()
    order = []
    split_of: dict[int, int] = {}
    while first is not None:
        v = c_head[first]
        cid = unlink(v)
        visited.add(v)
        order.append(v)
        if c_head[cid] is None:
            first = c_next[cid]
            if first is not None:
                c_prev[first] = None
        split_of.clear()
        for w in adj[v]:
            if w in visited:
                continue
            old = unlink(w)
            part = split_of.get(old)
            if part is None:
                part = split_of[old] = new_class(old)
                if old == first:
                    first = part
            append(part, w)
            if c_head[old] is None:
                p, q = c_prev[old], c_next[old]
                if p is not None:
                    c_next[p] = q
                if q is not None:
                    c_prev[q] = p
    return order


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def unit_interval_order(g: Graph) -> list[int]:
    """Three-sweep LexBFS (plain, then '+' twice) per component.

    For unit interval graphs the result is an ordering in which every
    closed neighbourhood is consecutive.
    """
    order = []
    for comp in _components(g):
        sigma = _lexbfs(g, comp, comp)
        sigma = _lexbfs(g, comp, sigma[::-1])
        sigma = _lexbfs(g, comp, sigma[::-1])
        order.extend(sigma)
    return order


def _find_claw(g: Graph, limit: int = 200_000):
    """An induced K_{1,3} as (centre, a, b, c), or None (search is capped)."""
    work = 0
    for v in range(g.n):
        nb = g.adj[v]
        if len(nb) < 3:
            continue
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if g.has_edge(a, b):
                    continue
                for c in nb[j + 1:]:
                    work += 1
                    if work > limit:
                        return None
                    if not g.has_edge(a, c) and not g.has_edge(b, c):
                        return v, a, b, c
    return None


def recognize_unit_interval(g: Graph) -> IntervalRep | Rejection:
    """A unit interval representation of ``g`` or a rejection.

    The vertex ordering comes from :func:`unit_interval_order`.  Vertices
    are then cut into blocks of pairwise adjacent vertices, block t
    starting after the last neighbour of block t-1's first vertex.  Block t
    occupies lefts in ``[t, t+1)``; between consecutive blocks, adjacency
    is decided by the offsets inside the block, which are obtained from a
    topological order of the resulting "must be left of" constraints.
    The representation is checked against ``g`` before it is returned.
    """
    n = g.n
    if n == 0:
        return IntervalRep((), (), 1)
    order = unit_interval_order(g)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    lo = [0] * n
    hi = [0] * n
    for p, v in enumerate(order):
        ps = [pos[w] for w in g.adj[v]]
        lo[p] = min(ps + [p])
        hi[p] = max(ps + [p])
        if hi[p] - lo[p] != len(ps):
            return _reject(g, order, v, "closed neighbourhood not consecutive in the ordering")

    # blocks
    block = [0] * n
    starts = []
    p, t = 0, 0
    while p < n:
        starts.append(p)
        end = hi[p] + 1
        for q in range(p, end):
            block[q] = t
        p, t = end, t + 1

    # offsets: a DAG over positions, drained in topological order
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n

    def before(a, b):
        succ[a].append(b)
        indeg[b] += 1

    for t, s in enumerate(starts):
        end = starts[t + 1] if t + 1 < len(starts) else n
        for q in range(s + 1, end):
            before(q - 1, q)
        if t == 0:
            continue
        prev_start = starts[t - 1]
        for q in range(s, end):
            left = lo[q]
            if left < prev_start:
                return _reject(g, order, order[q], "neighbour two blocks back")
            bound = min(left, s)
            if bound > prev_start:
                before(bound - 1, q)
            if left < s:
                before(q, left)
    ready = deque(q for q in range(n) if indeg[q] == 0)
    rank = [0] * n
    done = 0
    while ready:
        q = ready.popleft()
        rank[q] = done
        done += 1
        for r in succ[q]:
            indeg[r] -= 1
            if indeg[r] == 0:
                ready.append(r)
    if done != n:
        return _reject(g, order, order[0], "inconsistent block offsets")

    names = tuple(g.names[v] for v in order)
    lefts = tuple(block[q] * n + rank[q] for q in range(n))
    try:
        rep = IntervalRep(names, lefts, n)
    except ValueError:
        return _reject(g, order, order[0], "offsets not monotone along the ordering")
    reach = rep.reach()
    for q in range(n):
        if reach[q] != hi[q]:
            return _reject(g, order, order[q], "representation disagrees with the graph")
    return rep


def _reject(g: Graph, order, v, why) -> Rejection:
    claw = _find_claw(g)
    if claw is not None:
        names = tuple(g.names[x] for x in claw)
        return Rejection("claw", names, f"induced claw centred at {names[0]}")
    return Rejection("ordering", (g.names[v],), f"3-sweep ordering fails at {g.names[v]}: {why}")


# --------------------------------------------------------------------------
# clique partition


@dataclass(frozen=True)
class CliquePartition:
    """Greedy clique partition of a sorted interval list.

    Group ``i`` (0-based here) is the position range
    ``starts[i] .. starts[i+1]-1``; its first member is the representative.
    """

    starts: tuple
    n: int

    @property
    def m(self) -> int:
        return len(self.starts)

    @property
    def representatives(self) -> tuple:
        return self.starts

    def group(self, i: int) -> range:
        end = self.starts[i + 1] if i + 1 < len(self.starts) else self.n
        return range(self.starts[i], end)

    @property
    def groups(self) -> list[range]:
        return [self.group(i) for i in range(self.m)]

    def group_of(self) -> list[int]:
        out = [0] * self.n
        for i, r in enumerate(self.groups):
            for p in r:
                out[p] = i
        return out


def build_clique_partition(rep: IntervalRep) -> CliquePartition:
    """One sweep: a group runs until the first interval missing its
    representative."""
    lefts, scale = rep.lefts, rep.scale
    starts = []
    rep_left = None
    for p, x in enumerate(lefts):
        if rep_left is None or x - rep_left > scale:
            starts.append(p)
            rep_left = x
    return CliquePartition(tuple(starts), rep.n)


# --------------------------------------------------------------------------
# the dynamic program


@dataclass
class UIDpState:
    """Sizes and back-pointers of the interval DP, indexed by position.

    ``s[p]`` is the size of the smallest set forcing a unique minimum cover
    of the prefix up to ``p`` that leaves ``p`` out.  For ``p`` outside the
    first group, ``kptr[p]`` is the last position of the previous group
    whose interval misses ``p`` and ``pred[p]`` the position left out of the
    previous group in that smallest set.  ``ops`` counts pointer moves and
    candidate comparisons.
    """

    partition: CliquePartition
    s: list
    pred: list
    kptr: list
    ops: int = 0
    last: int = -1
    total: int = 0

    def s_at(self, i: int, j: int) -> int:
        """``s[i, j]`` with 1-based group and member indices."""
        return self.s[self.partition.starts[i - 1] + j - 1]


def unit_interval_table(rep: IntervalRep, partition: CliquePartition | None = None) -> UIDpState:
    """Fill the DP with the two-pointer recurrence.

    For consecutive groups (members ``a`` of group i, ``b`` of group i+1):
    leaving out ``a`` and ``b`` forces the members of group i after ``a``
    that miss ``b`` and the members of group i+1 before ``b`` that miss
    ``a``.  With ``k(b)`` the last member of group i missing ``b``, moving
    from ``b-1`` to ``b`` grows every old candidate's forced set by
    ``k(b) - k(b-1) + 1``, so only the new candidates ``a`` in
    ``(k(b-1), k(b)]`` need evaluating.
    """
    if partition is None:
        partition = build_clique_partition(rep)
    n = rep.n
    lefts, scale = rep.lefts, rep.scale
    s = [0] * n
    pred = [-1] * n
    kptr = [-1] * n
    starts = partition.starts
    m = len(starts)
    ops = 0
    if n == 0:
        return UIDpState(partition, s, pred, kptr, 0, -1, 0)
    first_end = starts[1] if m > 1 else n
    for p in range(first_end):
        s[p] = p
    for i in range(1, m):
        g0, q0 = starts[i - 1], starts[i]
        end = starts[i + 1] if i + 1 < m else n
        x = g0 - 1          # last member of the previous group missing b
        kprev = g0 - 1
        best = arg = None
        for b in range(q0, end):
            lb = lefts[b] - scale
            while x + 1 < q0 and lefts[x + 1] < lb:
                x += 1
                ops += 1
            if b == q0:
                best = arg = None
            else:
                best = best + (x - kprev) + 1
                ops += 1
            for a in range(kprev + 1, x + 1):
                cand = s[a] + x - a
                ops += 1
                if best is None or cand < best:
                    best, arg = cand, a
            s[b] = best
            pred[b] = arg
            kptr[b] = x
            kprev = x
    # close off the last group: members after the one left out are forced
    g0 = starts[-1]
    last, total = None, None
    for a in range(g0, n):
        cand = s[a] + n - 1 - a
        ops += 1
        if total is None or cand < total:
            last, total = a, cand
    return UIDpState(partition, s, pred, kptr, ops, last, total)


def _forced_between(state: UIDpState, a: int, b: int, q0: int, out: list):
    """Members forced when ``a`` (group i) and ``b`` (group i+1) are left out."""
    out.extend(range(a + 1, state.kptr[b] + 1))
    kptr = state.kptr
    y = b - 1
    while y >= q0 and kptr[y] >= a:
        out.append(y)
        y -= 1


def solve_unit_interval(rep: IntervalRep, counters: dict | None = None) -> PreassignmentSolution:
    """Smallest pre-assignment for the intersection graph of ``rep``.

    ``counters``, when given, receives ``ops`` (work done by the DP and the
    reconstruction) and ``intervals``.
    """
    n = rep.n
    if n == 0:
        return PreassignmentSolution(frozenset(), 0, frozenset(), "unit-interval")
    state = unit_interval_table(rep)
    starts = state.partition.starts
    m = len(starts)
    # the left-out member of every group, last group first
    out = [state.last]
    for i in range(m - 1, 0, -1):
        out.append(state.pred[out[-1]])
    out.reverse()
    picked: list[int] = list(range(starts[0], out[0]))
    for i in range(m - 1):
        _forced_between(state, out[i], out[i + 1], starts[i + 1], picked)
    picked.extend(range(out[-1] + 1, n))
    if len(picked) != state.total:
        raise AssertionError(f"reconstructed {len(picked)} intervals, table says {state.total}")
    names = rep.names
    excluded = set(out)
    cover = frozenset(names[p] for p in range(n) if p not in excluded)
    if counters is not None:
        counters["ops"] = state.ops + len(picked) + m
        counters["intervals"] = n
    return PreassignmentSolution(frozenset(names[p] for p in picked), n - m, cover,
                                 "unit-interval")


def reference_s_table(rep: IntervalRep) -> dict[tuple[int, int], int]:
    """Quadratic version of the same recurrence that builds every set.

    Keys are 1-based ``(group, member)``.  Forced sets are computed from
    their definition by testing intersections directly.
    """
    part = build_clique_partition(rep)
    groups = [list(r) for r in part.groups]
    sets: dict[tuple[int, int], frozenset] = {}
    for j, p in enumerate(groups[0] if groups else [], 1):
        sets[(1, j)] = frozenset(groups[0][: j - 1])
    for i in range(1, len(groups)):
        prev, cur = groups[i - 1], groups[i]
        for j, b in enumerate(cur, 1):
            best = None
            for jp, a in enumerate(prev, 1):
                if rep.intersects(a, b):
                    continue
                forced = {x for x in prev if x > a and not rep.intersects(x, b)}
                forced |= {y for y in cur if y < b and not rep.intersects(y, a)}
                cand = sets[(i, jp)] | forced
                if best is None or len(cand) < len(best):
                    best = cand
            sets[(i + 1, j)] = frozenset(best)
    return {key: len(v) for key, v in sets.items()}
