"""Graph container, text formats and exact vertex-cover primitives.

Vertices are addressed by string names; internally every vertex also has an
integer index (its position in ``Graph.names``) and all algorithms work on
indices.  The index order is the canonical vertex order used for every
deterministic tie-break in the package.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceeded, ParseError

#: Largest vertex count the exponential exact solvers accept by default.
DEFAULT_EXACT_BUDGET = 64


class Graph:
    """Immutable simple undirected graph with named vertices.

    ``adj[i]`` is the sorted tuple of neighbour indices of vertex ``i``.
    """

    __slots__ = ("names", "index", "adj", "m", "_masks")

    def __init__(self, names: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        names = tuple(str(v) for v in names)
        index = {v: i for i, v in enumerate(names)}
        if len(index) != len(names):
            raise ValueError("vertex names must be unique")
        pairs = []
        for u, v in edges:
            try:
                pairs.append((index[str(u)], index[str(v)]))
            except KeyError as exc:
                raise ValueError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
        self._build(names, index, pairs)

    @classmethod
    def from_index_edges(cls, names, pairs, *, check=True) -> "Graph":
        """Build from index pairs; skips validation when ``check`` is false."""
        g = cls.__new__(cls)
        names = tuple(names)
        index = {v: i for i, v in enumerate(names)}
        if check and len(index) != len(names):
            raise ValueError("vertex names must be unique")
        g._build(names, index, pairs, check=check)
        return g

    @classmethod
    def from_n(cls, n: int, pairs=(), *, check=True) -> "Graph":
        """Graph on vertices named ``"1"..str(n)`` with 0-based index pairs."""
        return cls.from_index_edges([str(i + 1) for i in range(n)], pairs, check=check)

    def _build(self, names, index, pairs, check=True):
        n = len(names)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        m = 0
        if check:
            seen = set()
            for u, v in pairs:
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u}, {v}) out of range")
                if u == v:
                    raise ValueError(f"self-loop at {names[u]!r}")
                key = (u, v) if u < v else (v, u)
                if key in seen:
                    raise ValueError(f"duplicate edge {names[key[0]]}-{names[key[1]]}")
                seen.add(key)
                nbrs[u].append(v)
                nbrs[v].append(u)
            m = len(seen)
        else:
            for u, v in pairs:
                nbrs[u].append(v)
                nbrs[v].append(u)
                m += 1
        self.names = names
        self.index = index
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self.m = m
        self._masks = None

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.names == other.names and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((self.names, self.edge_set()))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, a in enumerate(self.adj):
            for v in a:
                if v > u:
                    yield u, v

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.names[u], self.names[v]) for u, v in self.edges()]

    def edge_set(self) -> frozenset:
        return frozenset(frozenset((self.names[u], self.names[v])) for u, v in self.edges())

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        k = bisect_left(a, v)
        return k < len(a) and a[k] == v

    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks over vertex indices (cached)."""
        if self._masks is None:
            out = []
            for a in self.adj:
                mask = 0
                for v in a:
                    mask |= 1 << v
                out.append(mask)
            self._masks = tuple(out)
        return self._masks

    def indices(self, vertices: Iterable[str]) -> list[int]:
        """Map vertex names to indices, rejecting unknown names."""
        out = []
        for v in vertices:
            try:
                out.append(self.index[str(v)])
            except KeyError:
                raise KeyError(f"unknown vertex {v!r}") from None
        return out

    def subset_names(self, idx: Iterable[int]) -> frozenset:
        names = self.names
        return frozenset(names[i] for i in idx)

    def remove_vertices(self, vertices: Iterable[str]) -> "Graph":
        """The vertex-deleted subgraph ``G - X`` (names and order preserved)."""
        drop = set(self.indices(vertices))
        keep = [i for i in range(self.n) if i not in drop]
        return self.induced(keep)

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = list(keep)
        pos = {v: i for i, v in enumerate(keep)}
        pairs = []
        for i, v in enumerate(keep):
            for w in self.adj[v]:
                j = pos.get(w)
                if j is not None and j > i:
                    pairs.append((i, j))
        return Graph.from_index_edges([self.names[v] for v in keep], pairs, check=False)


def sort_names(g: Graph, vertices: Iterable[str]) -> list[str]:
    """Vertex names in canonical (index) order."""
    idx = g.index
    return sorted(vertices, key=idx.__getitem__)


# --------------------------------------------------------------------------
# text formats


def parse_graph(text) -> Graph:
    """Parse the native ``n m`` edge-list format or DIMACS ``p edge``.

    The format is chosen by the first data token: ``p`` selects DIMACS.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    lines = text.splitlines()
    data = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line.split()))
    if not data:
        raise ParseError("empty graph input", line=len(lines) or 1)
    if data[0][1][0] == "p" or data[0][1][0] == "c":
        return _parse_dimacs(data)
    return _parse_native(data)


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line=lineno) from None


def _collect(n, m, edge_lines):
    pairs = []
    seen = set()
    for lineno, a, b in edge_lines:
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"endpoint out of range 1..{n}", line=lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", line=lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]}-{key[1]}", line=lineno)
        seen.add(key)
        pairs.append((a - 1, b - 1))
    if m is not None and len(pairs) != m:
        raise ParseError(f"header declares {m} edges, found {len(pairs)}",
                         line=edge_lines[-1][0] if edge_lines else 1)
    return Graph.from_n(n, pairs, check=False)


def _parse_native(data) -> Graph:
    lineno, head = data[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", line=lineno)
    n, m = _int(head[0], lineno), _int(head[1], lineno)
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count", line=lineno)
    edge_lines = []
    for lineno, toks in data[1:]:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
        edge_lines.append((lineno, _int(toks[0], lineno), _int(toks[1], lineno)))
    return _collect(n, m, edge_lines)


def _parse_dimacs(data) -> Graph:
    n = m = None
    edge_lines = []
    for lineno, toks in data:
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise ParseError("second problem line", line=lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("problem line must be 'p edge n m'", line=lineno)
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge before problem line", line=lineno)
            if len(toks) != 3:
                raise ParseError("edge line must be 'e u v'", line=lineno)
            edge_lines.append((lineno, _int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise ParseError(f"unknown line type {kind!r}", line=lineno)
    if n is None:
        raise ParseError("missing problem line", line=data[-1][0])
    return _collect(n, m, edge_lines)


def format_graph(g: Graph, *, dimacs=False) -> str:
    """Serialize in the native format (vertices numbered by index + 1)."""
    edges = list(g.edges())
    if dimacs:
        out = [f"p edge {g.n} {len(edges)}"]
        out.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    else:
        out = [f"{g.n} {len(edges)}"]
        out.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# vertex covers


@dataclass(frozen=True)
class VcVerdict:
    """Outcome of checking a pre-assignment.

    ``num_min_vcs_capped`` is 0, 1 or 2, the last meaning "two or more".
    """

    is_cover: bool
    min_vc_size: int | None
    num_min_vcs_capped: int
    witness: frozenset | None = None

    def __post_init__(self):
        if self.num_min_vcs_capped not in (0, 1, 2):
            raise ValueError("capped count must be 0, 1 or 2")
        if self.num_min_vcs_capped == 1 and self.witness is None:
            raise ValueError("a unique verdict needs its witness cover")


def is_vertex_cover(g: Graph, s: Iterable[str]) -> bool:
    chosen = set(g.indices(s))
    for u, a in enumerate(g.adj):
        if u in chosen:
            continue
        for v in a:
            if v not in chosen:
                return False
    return True


def _check_budget(g: Graph, budget):
    limit = DEFAULT_EXACT_BUDGET if budget is None else budget
    if g.n > limit:
        raise BudgetExceeded(f"exact vertex cover on {g.n} vertices exceeds budget {limit}")


class _ExactVC:
    """Branch-and-bound minimum vertex cover on bitmask graphs, memoised by
    the set of still-active vertices."""

    def __init__(self, masks):
        self.masks = masks
        self.memo: dict[int, int] = {}

    def mvc(self, active: int) -> int:
        memo = self.memo
        hit = memo.get(active)
        if hit is not None:
            return hit
        masks = self.masks
        taken = 0
        cur = active
        while True:
            best_v, best_d = -1, 0
            leaf_nb = -1
            rest = cur
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                d = (masks[v] & cur).bit_count()
                if d == 0:
                    cur ^= low
                elif d == 1:
                    leaf_nb = (masks[v] & cur).bit_length() - 1
                    break
                elif d > best_d:
                    best_v, best_d = v, d
            if leaf_nb >= 0:
                # degree-1 rule: the neighbour of a pendant vertex is always safe
                taken += 1
                cur &= ~(1 << leaf_nb)
                continue
            break
        if best_d == 0:
            result = taken
        else:
            nb = masks[best_v] & cur
            with_v = 1 + self.mvc(cur & ~(1 << best_v))
            without_v = _popcount(nb) + self.mvc(cur & ~nb & ~(1 << best_v))
            result = taken + min(with_v, without_v)
        memo[active] = result
        return result


def _popcount(x: int) -> int:
    return x.bit_count()


def min_vc_size(g: Graph, *, budget: int | None = None) -> int:
    """Size of a minimum vertex cover (exact, exponential)."""
    _check_budget(g, budget)
    return _ExactVC(g.masks()).mvc((1 << g.n) - 1)


def _enumerate(g: Graph, target: int, cap: int, solver: _ExactVC) -> list[frozenset]:
    """Vertex covers of size exactly ``target`` that are minimal in the
    index-order DFS sense, lexicographic by sorted indices, at most ``cap``."""
    masks = g.masks()
    n = g.n
    found: list[int] = []

    # stack frames: (next index, active mask, chosen mask, chosen count)
    stack = [(0, (1 << n) - 1, 0, 0)]
    while stack and len(found) < cap:
        i, active, chosen, cnt = stack.pop()
        while i < n and not (active >> i) & 1:
            i += 1
        rest = solver.mvc(active)
        if cnt + rest > target:
            continue
        if rest == 0:
            if cnt == target:
                found.append(chosen)
            continue
        bit = 1 << i
        nb = masks[i] & active
        if not nb:
            stack.append((i + 1, active & ~bit, chosen, cnt))
            continue
        # push exclude first so include is explored first (lexicographic)
        stack.append((i + 1, active & ~nb & ~bit, chosen | nb, cnt + _popcount(nb)))
        stack.append((i + 1, active & ~bit, chosen | bit, cnt + 1))
    return [g.subset_names(_bits(c)) for c in found]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_min_vcs(g: Graph, cap: int, *, budget: int | None = None) -> list[frozenset]:
    """Up to ``cap`` minimum vertex covers in lexicographic order of their
    sorted vertex indices."""
    if cap < 1:
        raise ValueError("cap must be positive")
    _check_budget(g, budget)
    solver = _ExactVC(g.masks())
    target = solver.mvc((1 << g.n) - 1)
    return _enumerate(g, target, cap, solver)


def verify_preassignment(g: Graph, s: Iterable[str], *, budget: int | None = None) -> VcVerdict:
    """Count (capped at 2) the minimum vertex covers of ``g`` containing ``s``."""
    s = frozenset(str(v) for v in s)
    g.indices(s)
    _check_budget(g, budget)
    full = min_vc_size(g, budget=budget)
    rest = g.remove_vertices(s)
    target = full - len(s)
    covers: list[frozenset] = []
    if target >= 0:
        solver = _ExactVC(rest.masks())
        if solver.mvc((1 << rest.n) - 1) == target:
            covers = _enumerate(rest, target, 2, solver)
    count = min(2, len(covers))
    witness = s | covers[0] if count == 1 else None
    return VcVerdict(is_vertex_cover(g, s), full, count, witness)
