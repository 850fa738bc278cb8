"""Bottom-up dynamic programming for PAU-VC over labelled expressions.

A table for a labelled graph H summarises, for every set I of labels, the
size of a smallest vertex cover whose *full set* is exactly I (the labels
whose whole, nonempty class lies in the cover), and the set of achievable
*characteristics*: for a pre-assignment S, the map I -> number of such
minimum covers containing S, capped at 2.  Only the smallest S per
characteristic is kept, as a back-pointer chain.

Label sets are bitmasks (label i is bit i-1).  A characteristic is a tuple
of length 2**k indexed by mask and is zero outside the subsets of ``ne``.
"""

from __future__ import annotations

import os

from operator import add, itemgetter
from typing import Callable, Iterable

from ._util import gc_paused
from .errors import BudgetExceeded, ExpressionError
from .expr import CwExpr, Join, Leaf, NlcExpr, Product, Relabel, RelabelMap, Union
from .solution import PreassignmentSolution

#: When true, run_dp asserts DpTable.check() on every table regardless of
#: its ``check`` argument; test suites switch this on.
CHECK_TABLES = os.environ.get("PAUVC_CHECK_TABLES", "") not in ("", "0")
#: Number of tables checked so far (diagnostics for the debug mode).
tables_checked = 0

#: Largest label budget solve_expr accepts by default.
MAX_K = 4


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            return out
        sub = (sub - mask) & mask


def mask_of(labels: Iterable[int]) -> int:
    out = 0
    for lab in labels:
        out |= 1 << (lab - 1)
    return out


def labels_of(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


class Skeleton:
    """The set of achievable characteristics of a table, interned.

    Which characteristics a combine step produces, and from which inputs,
    depends only on the operand skeletons and on the pattern of
    minimum-cost feeders; the vertex-set sizes vary from node to node.
    """

    __slots__ = ("id", "ne", "betas", "index", "checked")

    def __init__(self, sid: int, ne: int, betas: tuple):
        self.id = sid
        self.ne = ne
        self.betas = betas
        self.index = {b: i for i, b in enumerate(betas)}
        self.checked = set()    # mu presence masks already validated


class _Step:
    """Memoised characteristic map of one operation.

    ``groups[o]`` lists the inputs (an index, or a pair of indices for a
    product) whose characteristic maps to output characteristic ``o``;
    ``feeders[mask]`` lists the minimum-cost child full sets of ``mask``.
    """

    __slots__ = ("skel", "groups", "feeders", "gather", "multi")

    def __init__(self, skel, groups, feeders, binary: bool):
        self.skel = skel
        self.groups = groups
        self.feeders = feeders
        # gather every group's first input, then patch the (few) groups
        # with several inputs
        if binary:
            self.gather = (_getter([g[0][0] for g in groups]),
                           _getter([g[0][1] for g in groups]))
        else:
            self.gather = _getter([g[0] for g in groups])
        self.multi = tuple((o, g) for o, g in enumerate(groups) if len(g) > 1)


def _getter(indices):
    if len(indices) == 1:
        i = indices[0]
        return lambda seq: (seq[i],)
    return itemgetter(*indices)


class DpTable:
    """DP state of one subexpression.

    ``mu[I]`` is None when no vertex cover has full set exactly I.  Each
    characteristic ``skel.betas[o]`` is achieved by a set of ``sizes_[o]``
    vertices at minimum.  Which input of ``step.groups[o]`` attains it is
    recomputed during traceback; only leaves store ``choice`` (whether the
    vertex is taken).
    """

    __slots__ = ("k", "n_vertices", "mu", "present", "skel", "sizes_", "choice", "step")

    def __init__(self, k, n_vertices, mu, present, skel, sizes, choice, step=None):
        self.k = k
        self.n_vertices = n_vertices
        self.mu = mu
        self.present = present
        self.skel = skel
        self.sizes_ = sizes
        self.choice = choice
        self.step = step

    @property
    def ne(self) -> int:
        return self.skel.ne

    @property
    def chars(self) -> dict[tuple, int]:
        """Characteristic -> size of a smallest set achieving it."""
        return dict(zip(self.skel.betas, self.sizes_))

    def mu_map(self) -> dict[int, int]:
        return {i: v for i, v in enumerate(self.mu) if v is not None}

    def sizes(self) -> dict[tuple, int]:
        return self.chars

    def check(self):
        """Assert the structural invariants every table must satisfy.

        The parts that depend only on the skeleton and on which mu entries
        are present are checked once per combination.
        """
        full = self.ne
        mu = self.mu
        if mu[full] != self.n_vertices:
            raise AssertionError(f"mu(NE) = {mu[full]}, expected {self.n_vertices}")
        if self.sizes_ and max(self.sizes_) > self.n_vertices:
            raise AssertionError("beta-set larger than the vertex set")
        if self.present in self.skel.checked:
            return
        for i, v in enumerate(mu):
            if v is not None and i & ~full:
                raise AssertionError(f"mu defined outside NE at mask {i}")
        for beta in self.skel.betas:
            if beta[full] != 1:
                raise AssertionError("characteristic with beta(NE) != 1")
            for i, b in enumerate(beta):
                if b and mu[i] is None:
                    raise AssertionError(f"beta positive at mask {i} where mu is absent")
        self.skel.checked.add(self.present)


class DpCache:
    """Memo tables shared by the operations of one solve.

    ``shapes`` holds the valid feeders of an operation given which mu
    entries of the operands are present; ``steps`` holds characteristic
    maps keyed by feeder pattern and operand skeletons.  Real expressions
    use a few dozen of each, so after warm-up a node costs a short loop
    over its mu entries plus a min over each characteristic's inputs.
    """

    def __init__(self):
        self.skeletons: dict[tuple, Skeleton] = {}
        self.shapes: dict[tuple, object] = {}
        self.patterns: dict[tuple, int] = {}
        self.pattern_list: list[tuple] = []
        self.steps: dict[tuple, _Step] = {}
        self.products: dict[tuple, tuple] = {}
        self.leaves: dict[tuple, DpTable] = {}

    def skeleton(self, ne: int, betas) -> Skeleton:
        key = (ne, tuple(sorted(betas)))
        sk = self.skeletons.get(key)
        if sk is None:
            sk = self.skeletons[key] = Skeleton(len(self.skeletons), ne, key[1])
        return sk

    def pattern_id(self, pattern) -> int:
        pid = self.patterns.get(pattern)
        if pid is None:
            pid = self.patterns[pattern] = len(self.patterns)
            self.pattern_list.append(pattern)
        return pid


def _presence(mu) -> int:
    out = 0
    for m, v in enumerate(mu):
        if v is not None:
            out |= 1 << m
    return out


def _check_label(i: int, k: int):
    if not 1 <= i <= k:
        raise ExpressionError(f"label {i} outside 1..{k}")


def leaf_table(i: int, name: str | None = None, k: int = 1,
               cache: DpCache | None = None) -> DpTable:
    """Table of the one-vertex graph ``i(x)``."""
    _check_label(i, k)
    if cache is None:
        cache = DpCache()
    t = cache.leaves.get((i, k))
    if t is None:
        bit = 1 << (i - 1)
        mu = [None] * (1 << k)
        mu[0] = 0
        mu[bit] = 1
        empty = [0] * (1 << k)
        empty[0] = empty[bit] = 1
        full = [0] * (1 << k)
        full[bit] = 1
        taken = {tuple(empty): (0, False), tuple(full): (1, True)}
        sk = cache.skeleton(bit, taken)
        t = cache.leaves[(i, k)] = DpTable(
            k, 1, tuple(mu), _presence(mu), sk,
            [taken[b][0] for b in sk.betas], [taken[b][1] for b in sk.betas])
    return t


def _product_shape(tg: DpTable, th: DpTable, pairs) -> list:
    """Valid pairs (J_G, J_H, resulting full set) of a product."""
    k = tg.k
    ne_g, ne_h = tg.ne, th.ne
    constraints = set()
    for i, j in pairs:
        _check_label(i, k)
        _check_label(j, k)
        a, b = 1 << (i - 1), 1 << (j - 1)
        if a & ne_g and b & ne_h:
            constraints.add((a, b))
    ne = ne_g | ne_h
    out_g, out_h = ~ne_g, ~ne_h
    js_h = [j for j in submasks(ne_h) if th.mu[j] is not None]
    shape = []
    for jg in submasks(ne_g):
        if tg.mu[jg] is None:
            continue
        for jh in js_h:
            if all(jg & a or jh & b for a, b in constraints):
                shape.append((jg, jh, (jg | out_g) & (jh | out_h) & ne))
    return shape


def _product_step(sg: Skeleton, sh: Skeleton, pattern: tuple, k: int,
                  cache: DpCache) -> _Step:
    width = 1 << k
    produced: dict[tuple, list] = {}
    for gi, bg in enumerate(sg.betas):
        for hi, bh in enumerate(sh.betas):
            beta = [0] * width
            for mask, plist in pattern:
                total = 0
                for jg, jh in plist:
                    total += bg[jg] * bh[jh]
                beta[mask] = total if total < 2 else 2
            produced.setdefault(tuple(beta), []).append((gi, hi))
    sk = cache.skeleton(sg.ne | sh.ne, produced)
    return _Step(sk, tuple(tuple(produced[b]) for b in sk.betas), dict(pattern), True)


def _map_step(s: Skeleton, new_ne: int, pattern: tuple, k: int, cache: DpCache) -> _Step:
    """Each result mask sums the child counts at the listed masks."""
    width = 1 << k
    produced: dict[tuple, list] = {}
    for ci, beta in enumerate(s.betas):
        out = [0] * width
        for mask, js in pattern:
            total = 0
            for j in js:
                total += beta[j]
            out[mask] = total if total < 2 else 2
        produced.setdefault(tuple(out), []).append(ci)
    sk = cache.skeleton(new_ne, produced)
    return _Step(sk, tuple(tuple(produced[b]) for b in sk.betas), dict(pattern), False)


def _pick_pairs(step: _Step, sg, sh):
    """Per output characteristic, the least total size over its inputs."""
    get_g, get_h = step.gather
    if not step.multi:
        return tuple(map(add, get_g(sg), get_h(sh)))
    sizes = list(map(add, get_g(sg), get_h(sh)))
    for o, group in step.multi:
        sizes[o] = min([sg[a] + sh[b] for a, b in group])
    return sizes


def _pick_single(step: _Step, st):
    if not step.multi:
        return step.gather(st)
    sizes = list(step.gather(st))
    for o, group in step.multi:
        sizes[o] = min([st[a] for a in group])
    return sizes


def _argmin(values) -> int:
    """Position of the first minimum."""
    best = 0
    low = values[0]
    for t in range(1, len(values)):
        if values[t] < low:
            best, low = t, values[t]
    return best


def _product_mu(shape, mu_g, mu_h, k: int, cache: DpCache):
    """(mu, presence mask, pattern id) of a product from the child mu."""
    best: dict[int, int] = {}
    proper: dict[int, list] = {}
    for jg, jh, mask in shape:
        cost = mu_g[jg] + mu_h[jh]
        cur = best.get(mask)
        if cur is None or cost < cur:
            best[mask] = cost
            proper[mask] = [(jg, jh)]
        elif cost == cur:
            proper[mask].append((jg, jh))
    mu = [None] * (1 << k)
    present = 0
    for mask, cost in best.items():
        mu[mask] = cost
        present |= 1 << mask
    pattern = tuple(sorted((mask, tuple(pl)) for mask, pl in proper.items()))
    return tuple(mu), present, cache.pattern_id(pattern)


def combine_product(tg: DpTable, th: DpTable, pairs: Iterable[tuple[int, int]] = (),
                    cache: DpCache | None = None) -> DpTable:
    """Table of ``G x_M H`` where ``pairs`` are (left label, right label).

    A valid pair (J_G, J_H) of child full sets covers every M-edge; it
    yields full set ``f = {i in NE : (i not in NE_G or i in J_G) and
    (i not in NE_H or i in J_H)}``.  mu takes the cheapest pair per f and a
    characteristic pair induces, per f, the capped sum of products over
    the cheapest pairs.
    """
    if tg.k != th.k:
        raise ValueError(f"tables over different label budgets {tg.k} and {th.k}")
    if cache is None:
        cache = DpCache()
    if type(pairs) is not frozenset:
        pairs = frozenset(pairs)
    key = (tg.ne, th.ne, pairs, tg.present, th.present)
    shape = cache.shapes.get(key)
    if shape is None:
        shape = cache.shapes[key] = _product_shape(tg, th, pairs)
    # the outcome depends on mu only through its offsets from mu(NE) = |V|
    base_g, base_h = tg.n_vertices, th.n_vertices
    rel_g = tuple([None if v is None else v - base_g for v in tg.mu])
    rel_h = tuple([None if v is None else v - base_h for v in th.mu])
    mkey = (key, rel_g, rel_h)
    hit = cache.products.get(mkey)
    if hit is None:
        hit = cache.products[mkey] = _product_mu(shape, rel_g, rel_h, tg.k, cache)
    rel, present, pid = hit
    base = base_g + base_h
    mu = tuple([None if v is None else v + base for v in rel])
    skey = ("x", pid, tg.skel.id, th.skel.id)
    step = cache.steps.get(skey)
    if step is None:
        step = cache.steps[skey] = _product_step(tg.skel, th.skel, cache.pattern_list[pid],
                                                 tg.k, cache)
    return DpTable(tg.k, base, mu, present,
                   step.skel, _pick_pairs(step, tg.sizes_, th.sizes_), None, step)


def _normalize_map(mapping) -> tuple:
    items = mapping.items() if isinstance(mapping, dict) else mapping
    return tuple(sorted((s, d) for s, d in items if s != d))


class _UnaryShape:
    """Result full sets of a relabel or join and the child full sets
    feeding each, given which child mu entries are present.

    When every result full set has a single feeder the step does not depend
    on mu values, and ``mu_get`` gathers the new mu straight from the old
    one (extended by a trailing None).
    """

    __slots__ = ("sid", "new_ne", "groups", "fixed", "present", "mu_get")

    def __init__(self, sid: int, new_ne: int, groups: tuple, width: int):
        self.sid = sid
        self.new_ne = new_ne
        self.groups = groups
        self.fixed = all(len(js) == 1 for _, js in groups)
        self.present = 0
        for mask, _ in groups:
            self.present |= 1 << mask
        self.mu_get = None
        if self.fixed:
            src = [width] * width
            for mask, js in groups:
                src[mask] = js[0]
            self.mu_get = itemgetter(*src)


def _relabel_groups(t: DpTable, mapping: tuple) -> tuple[int, tuple]:
    """New ne and the present full sets grouped by their image.

    An old full set J becomes ``h(J)``: the new labels whose whole preimage
    class lies in J.
    """
    for s, d in mapping:
        _check_label(s, t.k)
        _check_label(d, t.k)
    move = dict(mapping)
    pre: dict[int, int] = {}
    for lab in labels_of(t.ne):
        dst = 1 << (move.get(lab, lab) - 1)
        pre[dst] = pre.get(dst, 0) | (1 << (lab - 1))
    new_ne = 0
    for dst in pre:
        new_ne |= dst
    groups: dict[int, list] = {}
    for j in submasks(t.ne):
        if t.mu[j] is None:
            continue
        mask = 0
        for dst, src in pre.items():
            if not src & ~j:
                mask |= dst
        groups.setdefault(mask, []).append(j)
    return new_ne, tuple((mask, tuple(js)) for mask, js in sorted(groups.items()))


_NONE = (None,)


def _apply_unary(t: DpTable, shape: _UnaryShape, cache: DpCache) -> DpTable:
    if shape.fixed:
        mu = shape.mu_get(t.mu + _NONE)
        present = shape.present
        skey = (shape.sid, t.skel.id)
        pattern = shape.groups
    else:
        old = t.mu
        mu = [None] * (1 << t.k)
        pattern = []
        for mask, js in shape.groups:
            if len(js) == 1:
                mu[mask] = old[js[0]]
                pattern.append((mask, js))
            else:
                low = min([old[j] for j in js])
                mu[mask] = low
                pattern.append((mask, tuple([j for j in js if old[j] == low])))
        mu = tuple(mu)
        present = shape.present
        pattern = tuple(pattern)
        skey = (shape.sid, t.skel.id, cache.pattern_id(pattern))
    step = cache.steps.get(skey)
    if step is None:
        step = cache.steps[skey] = _map_step(t.skel, shape.new_ne, pattern, t.k, cache)
    return DpTable(t.k, t.n_vertices, mu, present, step.skel, _pick_single(step, t.sizes_),
                   None, step)


def _unary_shape(cache: DpCache, key: tuple, build) -> _UnaryShape:
    shape = cache.shapes.get(key)
    if shape is None:
        new_ne, groups, width = build()
        shape = cache.shapes[key] = _UnaryShape(len(cache.shapes), new_ne, groups, width)
    return shape


def apply_relabel(t: DpTable, mapping, cache: DpCache | None = None) -> DpTable:
    """Table after relabelling with a total map on labels.

    ``mapping`` is a dict or (src, dst) pairs; labels it does not move stay
    fixed.  mu takes the minimum over the old full sets with the same image
    and characteristics sum over the preimages attaining it.
    """
    return _relabel(t, _normalize_map(mapping), DpCache() if cache is None else cache)


def _relabel(t: DpTable, mapping: tuple, cache: DpCache) -> DpTable:
    shape = _unary_shape(cache, ("p", t.ne, mapping, t.present),
                         lambda: (*_relabel_groups(t, mapping), 1 << t.k))
    return _apply_unary(t, shape, cache)


def apply_join(t: DpTable, i: int, j: int, cache: DpCache | None = None) -> DpTable:
    """Table after adding all edges between label classes i and j.

    Covers must now contain class i or class j entirely, so entries whose
    full set contains neither are dropped.  Returns ``t`` itself when either
    class is empty.
    """
    if i == j:
        raise ExpressionError("join needs two distinct labels")
    _check_label(i, t.k)
    _check_label(j, t.k)
    keep = (1 << (i - 1)) | (1 << (j - 1))
    ne = t.ne
    if ne & keep != keep:
        return t
    if cache is None:
        cache = DpCache()
    width = 1 << t.k

    def build():
        kept = [m for m in range(width) if m & keep and t.mu[m] is not None]
        return ne, tuple((m, (m,)) for m in kept), width

    return _apply_unary(t, _unary_shape(cache, ("e", ne, keep, t.present), build), cache)


# --------------------------------------------------------------------------
# driving the DP over an expression


class DpRun:
    """Result of running the DP over an expression: the per-node tables and
    the leaf names needed to turn characteristics back into vertex sets."""

    def __init__(self, expr, tables: dict, nodes: list, cache: DpCache):
        self.expr = expr
        self.tables = tables
        self.nodes = nodes
        self.cache = cache

    @property
    def root(self) -> DpTable:
        return self.tables[id(self.expr.root)]

    def table(self, node) -> DpTable:
        return self.tables[id(node)]

    def leaves(self) -> list[Leaf]:
        return [node for node in self.nodes if isinstance(node, Leaf)]

    def _walk(self, beta: tuple, mask: int | None) -> tuple[list[str], list[str]]:
        """Trace characteristic ``beta`` of the root down to the leaves.

        Returns the leaves of a minimum beta-set and, when ``mask`` is
        given, the unique minimum cover with that full set: at each node
        exactly one minimum-cost feeder carries a positive count.
        """
        tables = self.tables
        root = self.expr.root
        picked, cover = [], []
        follow = mask is not None
        stack = [(root, tables[id(root)].skel.index[beta], mask)]
        pop, push = stack.pop, stack.append
        while stack:
            node, o, m = pop()
            table = tables[id(node)]
            kind = type(node)
            if kind is Leaf:
                if table.choice[o]:
                    picked.append(node.name)
                if m:
                    cover.append(node.name)
                continue
            if kind is Union or kind is Product:
                group = table.step.groups[o]
                if len(group) == 1:
                    gi, hi = group[0]
                else:
                    sg = tables[id(node.left)].sizes_
                    sh = tables[id(node.right)].sizes_
                    gi, hi = group[_argmin([sg[a] + sh[b] for a, b in group])]
                jg = jh = None
                if follow:
                    bg = tables[id(node.left)].skel.betas[gi]
                    bh = tables[id(node.right)].skel.betas[hi]
                    for jg, jh in table.step.feeders[m]:
                        if bg[jg] and bh[jh]:
                            break
                push((node.right, hi, jh))
                push((node.left, gi, jg))
                continue
            child = tables[id(node.child)]
            if child is table:
                push((node.child, o, m))
                continue
            group = table.step.groups[o]
            ci = group[0] if len(group) == 1 else group[_argmin([child.sizes_[a] for a in group])]
            if follow:
                cb = child.skel.betas[ci]
                for m in table.step.feeders[m]:
                    if cb[m]:
                        break
            push((node.child, ci, m))
        return picked, cover

    def reconstruct(self, beta: tuple) -> list[str]:
        """A minimum beta-set of the root table, as leaf names."""
        return self._walk(beta, None)[0]

    def trace(self, beta: tuple, mask: int) -> tuple[list[str], list[str]]:
        """Both a minimum beta-set and the unique cover it forces."""
        if beta[mask] != 1:
            raise ValueError("beta does not force a unique cover at this full set")
        return self._walk(beta, mask)

    def unique_cover(self, beta: tuple, mask: int) -> list[str]:
        """The unique minimum cover w.r.t. ``mask`` containing the beta-set
        (requires ``beta[mask] == 1``), traced back to the leaves."""
        return self.trace(beta, mask)[1]


_NO_PAIRS = frozenset()


def run_dp(expr, *, cache: DpCache | None = None, check: bool = False,
           on_table: Callable | None = None, max_k: int = MAX_K) -> DpRun:
    """Compute the table of every node of ``expr`` bottom-up."""
    global tables_checked
    if expr.k > max_k:
        raise BudgetExceeded(f"label budget k={expr.k} exceeds the DP bound k <= {max_k}")
    if cache is None:
        cache = DpCache()
    k = expr.k
    tables: dict[int, DpTable] = {}
    nodes = expr.nodes()
    for node in nodes:
        kind = type(node)
        if kind is Leaf:
            t = leaf_table(node.label, node.name, k, cache)
        elif kind is Union:
            t = combine_product(tables[id(node.left)], tables[id(node.right)], _NO_PAIRS, cache)
        elif kind is Product:
            t = combine_product(tables[id(node.left)], tables[id(node.right)], node.pairs, cache)
        elif kind is Join:
            t = apply_join(tables[id(node.child)], node.i, node.j, cache)
        elif kind is Relabel:
            child = tables[id(node.child)]
            t = child if node.src == node.dst else _relabel(child, ((node.src, node.dst),), cache)
        elif kind is RelabelMap:
            child = tables[id(node.child)]
            t = child if not node.mapping else _relabel(child, _normalize_map(node.mapping), cache)
        else:
            raise ExpressionError(f"unknown node {type(node).__name__}")
        if check or CHECK_TABLES:
            t.check()
            tables_checked += 1
        if on_table is not None:
            on_table(node, t)
        tables[id(node)] = t
    return DpRun(expr, tables, nodes, cache)


def valid_characteristics(t: DpTable):
    """Characteristics whose sets force a unique minimum vertex cover,
    together with the minimum cover size and the optimal full sets."""
    low = min(v for v in t.mu if v is not None)
    gamma = [m for m, v in enumerate(t.mu) if v == low]
    valid = [b for b in t.chars if sum(b[m] for m in gamma) == 1]
    return low, gamma, valid


def extract_solution(run: DpRun, method: str | None = None) -> PreassignmentSolution:
    """Read the optimal pre-assignment off the root table."""
    t = run.root
    low, gamma, valid = valid_characteristics(t)
    if not valid:
        raise AssertionError("root table has no valid characteristic")
    chars = t.chars
    best_size = min(chars[b] for b in valid)
    best = [b for b in valid if chars[b] == best_size]
    traced = []
    for b in best:
        mask = next(m for m in gamma if b[m] == 1)
        traced.append(run.trace(b, mask))
    if len(traced) == 1:
        preassign, cover = traced[0]
    else:
        order = {leaf.name: i for i, leaf in enumerate(run.leaves())}
        preassign, cover = min(traced, key=lambda pc: sorted(order[v] for v in pc[0]))
    if method is None:
        method = "fpt-cw" if isinstance(run.expr, CwExpr) else "fpt-nlc"
    return PreassignmentSolution(
        preassign=frozenset(preassign),
        min_vc_size=low,
        unique_cover=frozenset(cover),
        method=method,
    )


def solve_expr(expr, *, check: bool = False, max_k: int = MAX_K,
               on_table: Callable | None = None) -> PreassignmentSolution:
    """Solve PAU-VC on the graph an expression denotes."""
    if not isinstance(expr, (CwExpr, NlcExpr)):
        raise TypeError("solve_expr expects a CwExpr or NlcExpr")
    with gc_paused():
        run = run_dp(expr, check=check, on_table=on_table, max_k=max_k)
        return extract_solution(run)
