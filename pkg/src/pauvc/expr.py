"""Clique-width and NLC-width expressions.

Both algebras share the leaf node ``i(x)``.  Clique-width adds disjoint
union ``u(a,b)``, join ``e(i,j,a)`` (all edges between labels i and j) and
relabel ``r(i,j,a)`` (i becomes j).  NLC-width has the labelled product
``x([(i,j),...],a,b)`` (edges from left label i to right label j) and the
total relabelling ``p([i->j,...],a)``.

Everything here is iterative: expressions built for large trees are
hundreds of thousands of nodes deep.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._util import gc_paused
from .errors import ExpressionError, NotInClass, ParseError
from .graph import Graph


@dataclass(eq=False, slots=True)
class Leaf:
    label: int
    name: str


@dataclass(eq=False, slots=True)
class Union:
    left: object
    right: object


@dataclass(eq=False, slots=True)
class Join:
    i: int
    j: int
    child: object


@dataclass(eq=False, slots=True)
class Relabel:
    """Clique-width relabel: every vertex of label ``src`` gets ``dst``."""

    src: int
    dst: int
    child: object


@dataclass(eq=False, slots=True)
class Product:
    """NLC product; ``pairs`` holds (left label, right label)."""

    pairs: frozenset
    left: object
    right: object


@dataclass(eq=False, slots=True)
class RelabelMap:
    """NLC relabel with a total map; unlisted labels are fixed."""

    mapping: tuple  # sorted (src, dst) pairs with src != dst
    child: object

    def image(self, label: int) -> int:
        for s, d in self.mapping:
            if s == label:
                return d
        return label


def children(node) -> tuple:
    if isinstance(node, Leaf):
        return ()
    if isinstance(node, (Union, Product)):
        return (node.left, node.right)
    return (node.child,)


def postorder(root) -> list:
    """All nodes, children before parents, left before right."""
    # reversed preorder that visits the right child first
    out = []
    stack = [root]
    while stack:
        node = stack.pop()
        out.append(node)
        kind = type(node)
        if kind is Leaf:
            continue
        if kind is Union or kind is Product:
            stack.append(node.left)
            stack.append(node.right)
        else:
            stack.append(node.child)
    out.reverse()
    return out


class _Expr:
    kind = ""

    def __init__(self, root, k: int | None = None):
        self.root = root
        self._nodes = postorder(root)
        labels = set()
        for node in self._nodes:
            labels.update(_node_labels(node))
        top = max(labels) if labels else 1
        self.k = top if k is None else k
        self.validate()

    @classmethod
    def _trusted(cls, root, k: int):
        """Wrap a tree built internally with valid labels and unique names."""
        e = cls.__new__(cls)
        e.root = root
        e._nodes = postorder(root)
        e.k = k
        return e

    def leaves(self) -> list[Leaf]:
        return [node for node in self._nodes if type(node) is Leaf]

    def nodes(self) -> list:
        """Postorder node list (computed once; expressions are immutable)."""
        return self._nodes

    def validate(self):
        if self.k < 1:
            raise ExpressionError("label budget k must be positive")
        seen = set()
        k = self.k
        check = self._check_node
        for node in self._nodes:
            for label in _node_labels(node):
                if not 1 <= label <= k:
                    raise ExpressionError(f"label {label} outside 1..{k}")
            if type(node) is Leaf:
                if node.name in seen:
                    raise ExpressionError(f"duplicate vertex name {node.name!r}")
                seen.add(node.name)
            elif type(node) is Join and node.i == node.j:
                raise ExpressionError(f"join needs distinct labels, got {node.i},{node.i}")
            check(node)

    def _check_node(self, node):
        pass

    def __eq__(self, other):
        return type(self) is type(other) and self.k == other.k and str(self) == str(other)

    def __hash__(self):
        return hash((type(self).__name__, self.k, str(self)))

    def __repr__(self):
        text = str(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"{type(self).__name__}(k={self.k}, {text!r})"


class CwExpr(_Expr):
    """A clique-width expression with label budget ``k``."""

    kind = "cw"

    def _check_node(self, node):
        if type(node) not in _CW_NODES:
            raise ExpressionError(f"{type(node).__name__} is not a clique-width operation")

    def __str__(self):
        return format_expr(self)


class NlcExpr(_Expr):
    """An NLC-width expression with label budget ``k``."""

    kind = "nlc"

    def _check_node(self, node):
        if type(node) not in _NLC_NODES:
            raise ExpressionError(f"{type(node).__name__} is not an NLC operation")

    def __str__(self):
        return format_expr(self)


_CW_NODES = (Leaf, Union, Join, Relabel)
_NLC_NODES = (Leaf, Product, RelabelMap)


def _node_labels(node):
    kind = type(node)
    if kind is Leaf:
        return (node.label,)
    if kind is Join:
        return (node.i, node.j)
    if kind is Relabel:
        return (node.src, node.dst)
    if kind is Product:
        return tuple(x for p in node.pairs for x in p)
    if kind is RelabelMap:
        return tuple(x for p in node.mapping for x in p)
    return ()


def _labels_used(root):
    out = set()
    for node in postorder(root):
        out.update(_node_labels(node))
    return out


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with a label in ``1..k`` for every vertex (by index)."""

    graph: Graph
    k: int
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("every vertex needs a label")
        for lab in self.labels:
            if not 1 <= lab <= self.k:
                raise ValueError(f"label {lab} outside 1..{self.k}")

    def label_of(self, name: str) -> int:
        return self.labels[self.graph.index[name]]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(v)
        return out


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(->)|([A-Za-z0-9_]+)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        arrow, word, punct = m.groups()
        start = m.start(1) if arrow else m.start(2) if word else m.start(3)
        if arrow or word or (punct and not punct.isspace()):
            toks.append((arrow or word or punct, start))
        pos = m.end()
    return toks


def _split_header(text: str):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    lines = text.splitlines()
    body_lines = []
    k = None
    offset = 0
    started = False
    for line in lines:
        stripped = line.strip()
        if not started and (not stripped or stripped.startswith("#")):
            offset += len(line) + 1
            continue
        if not started:
            started = True
            m = re.fullmatch(r"k\s+(\d+)", stripped)
            if m:
                k = int(m.group(1))
                offset += len(line) + 1
                continue
        body_lines.append(line)
    return k, "\n".join(body_lines), offset


class _Parser:
    def __init__(self, text: str, offset: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.offset = offset
        self.end = len(text)

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.offset + (self.toks[self.i][1] if self.i < len(self.toks) else self.end)

    def take(self, want=None, desc=None):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input, expected {desc or want or 'a token'}",
                             pos=self.pos())
        tok = self.toks[self.i][0]
        if want is not None and tok != want:
            raise ParseError(f"expected {want!r}, got {tok!r}", pos=self.pos())
        self.i += 1
        return tok

    def integer(self):
        p = self.pos()
        tok = self.take(desc="an integer")
        if not tok.isdigit():
            raise ParseError(f"expected an integer, got {tok!r}", pos=p)
        value = int(tok)
        if value < 1:
            raise ParseError("labels start at 1", pos=p)
        return value

    def leaf(self):
        label = self.integer()
        self.take("(")
        p = self.pos()
        name = self.take(desc="a vertex name")
        if not re.fullmatch(r"[A-Za-z0-9_]+", name):
            raise ParseError(f"bad vertex name {name!r}", pos=p)
        self.take(")")
        return Leaf(label, name)

    def pairs(self):
        self.take("[")
        out = set()
        if self.peek() != "]":
            while True:
                self.take("(")
                i = self.integer()
                self.take(",")
                j = self.integer()
                self.take(")")
                out.add((i, j))
                if self.peek() != ",":
                    break
                self.take(",")
        self.take("]")
        return frozenset(out)

    def maps(self):
        self.take("[")
        out = {}
        if self.peek() != "]":
            while True:
                p = self.pos()
                i = self.integer()
                self.take("->")
                j = self.integer()
                if i in out and out[i] != j:
                    raise ParseError(f"label {i} mapped twice", pos=p)
                out[i] = j
                if self.peek() != ",":
                    break
                self.take(",")
        self.take("]")
        return tuple(sorted((s, d) for s, d in out.items() if s != d))

    def parse(self, ops):
        """Iterative parse; ``ops`` maps an operator keyword to a function
        reading its non-expression arguments and the number of subexpressions."""
        # frame: [keyword, args, collected children, arity]
        stack: list[list] = []
        result = None
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError("unexpected end of input", pos=self.pos())
            if tok in ops:
                self.take()
                self.take("(")
                read_args, arity = ops[tok]
                args = read_args(self)
                if args is not None:
                    self.take(",")
                stack.append([tok, args, [], arity])
                continue
            if tok.isdigit():
                node = self.leaf()
            else:
                raise ParseError(f"unexpected token {tok!r}", pos=self.pos())
            # reduce completed frames
            while True:
                if not stack:
                    result = node
                    break
                frame = stack[-1]
                frame[2].append(node)
                if len(frame[2]) < frame[3]:
                    self.take(",")
                    node = None
                    break
                self.take(")")
                stack.pop()
                node = _build(frame[0], frame[1], frame[2])
            if result is not None:
                break
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", pos=self.pos())
        return result


def _build(op, args, kids):
    if op == "u":
        return Union(kids[0], kids[1])
    if op == "e":
        return Join(args[0], args[1], kids[0])
    if op == "r":
        return Relabel(args[0], args[1], kids[0])
    if op == "x":
        return Product(args, kids[0], kids[1])
    return RelabelMap(args, kids[0])


def _two_ints(p: _Parser):
    i = p.integer()
    p.take(",")
    j = p.integer()
    return (i, j)


_CW_OPS = {"u": (lambda p: None, 2), "e": (_two_ints, 1), "r": (_two_ints, 1)}
_NLC_OPS = {"x": (_Parser.pairs, 2), "p": (_Parser.maps, 1)}


def _finish(cls, text):
    k, body, offset = _split_header(text)
    root = _Parser(body, offset).parse(_CW_OPS if cls is CwExpr else _NLC_OPS)
    try:
        return cls(root, k)
    except ExpressionError as exc:
        raise ParseError(str(exc), pos=offset) from None


def parse_cw_expr(text) -> CwExpr:
    """Parse a clique-width expression, optionally preceded by ``k <int>``."""
    return _finish(CwExpr, text)


def parse_nlc_expr(text) -> NlcExpr:
    """Parse an NLC-width expression, optionally preceded by ``k <int>``."""
    return _finish(NlcExpr, text)


def parse_expr(text):
    """Parse either algebra, deciding by the first operator keyword."""
    _, body, _ = _split_header(text)
    if re.match(r"\s*[xp]\s*\(", body):
        return parse_nlc_expr(text)
    return parse_cw_expr(text)


def format_expr(expr) -> str:
    """Serialize an expression; the header is emitted only when ``k`` is
    larger than the largest label mentioned."""
    # iterative pretty printer: emit pieces from an explicit work stack
    parts: list[str] = []
    stack: list = [expr.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        node = item
        if isinstance(node, Leaf):
            parts.append(f"{node.label}({node.name})")
        elif isinstance(node, Union):
            parts.append("u(")
            stack.extend([")", node.right, ",", node.left])
        elif isinstance(node, Join):
            parts.append(f"e({node.i},{node.j},")
            stack.extend([")", node.child])
        elif isinstance(node, Relabel):
            parts.append(f"r({node.src},{node.dst},")
            stack.extend([")", node.child])
        elif isinstance(node, Product):
            pairs = ",".join(f"({i},{j})" for i, j in sorted(node.pairs))
            parts.append(f"x([{pairs}],")
            stack.extend([")", node.right, ",", node.left])
        elif isinstance(node, RelabelMap):
            maps = ",".join(f"{s}->{d}" for s, d in node.mapping)
            parts.append(f"p([{maps}],")
            stack.extend([")", node.child])
    body = "".join(parts)
    labels = _labels_used(expr.root)
    if labels and expr.k == max(labels):
        return body
    return f"k {expr.k}\n{body}"


# --------------------------------------------------------------------------
# evaluation


def _merge(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    a.extend(b)
    return a


def _union_classes(ca: dict, cb: dict, size_a: int, size_b: int) -> dict:
    if size_a < size_b:
        ca, cb = cb, ca
    for lab, vs in cb.items():
        if lab in ca:
            ca[lab] = _merge(ca[lab], vs)
        else:
            ca[lab] = vs
    return ca


def _evaluate(expr) -> LabeledGraph:
    leaves = expr.leaves()
    order = {leaf.name: i for i, leaf in enumerate(leaves)}
    edges: set = set()
    # per node: (label -> list of vertex indices, vertex count)
    value: dict[int, tuple] = {}
    for node in expr.nodes():
        key = id(node)
        if isinstance(node, Leaf):
            value[key] = ({node.label: [order[node.name]]}, 1)
            continue
        if isinstance(node, (Union, Product)):
            ca, na = value.pop(id(node.left))
            cb, nb = value.pop(id(node.right))
            if isinstance(node, Product):
                for i, j in node.pairs:
                    for u in ca.get(i, ()):
                        for v in cb.get(j, ()):
                            edges.add((u, v) if u < v else (v, u))
            value[key] = (_union_classes(ca, cb, na, nb), na + nb)
            continue
        classes, size = value.pop(id(node.child))
        if isinstance(node, Join):
            for u in classes.get(node.i, ()):
                for v in classes.get(node.j, ()):
                    edges.add((u, v) if u < v else (v, u))
        elif isinstance(node, Relabel):
            moved = classes.pop(node.src, None)
            if moved is not None:
                classes[node.dst] = _merge(classes[node.dst], moved) if node.dst in classes else moved
        else:
            regrouped: dict = {}
            for lab, vs in classes.items():
                dst = node.image(lab)
                regrouped[dst] = _merge(regrouped[dst], vs) if dst in regrouped else vs
            classes = regrouped
        value[key] = (classes, size)
    classes, _ = value[id(expr.root)]
    labels = [0] * len(leaves)
    for lab, vs in classes.items():
        for v in vs:
            labels[v] = lab
    g = Graph.from_index_edges([leaf.name for leaf in leaves], sorted(edges), check=False)
    return LabeledGraph(g, expr.k, tuple(labels))


def eval_cw(e: CwExpr) -> LabeledGraph:
    """The labelled graph a clique-width expression denotes."""
    if not isinstance(e, CwExpr):
        raise TypeError("eval_cw expects a CwExpr")
    return _evaluate(e)


def eval_nlc(e: NlcExpr) -> LabeledGraph:
    """The labelled graph an NLC expression denotes."""
    if not isinstance(e, NlcExpr):
        raise TypeError("eval_nlc expects an NlcExpr")
    return _evaluate(e)


def eval_expr(e) -> LabeledGraph:
    return _evaluate(e)


# --------------------------------------------------------------------------
# constructions


def forest_parents(g: Graph) -> list[int] | None:
    """BFS parent array (roots get -1) if ``g`` is a forest, else None."""
    parent = [-2] * g.n
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w == parent[v]:
                    continue
                if parent[w] != -2:
                    return None
                parent[w] = v
                queue.append(w)
    return parent


def tree_to_cw_expr(g: Graph) -> CwExpr:
    """A 3-label clique-width expression for a forest.

    Each component is rooted at its first vertex.  A subtree expression keeps
    its root on label 1 and everything else on label 3; a child subtree is
    attached as ``r(2,3, e(1,2, u(acc, r(1,2, child))))``.
    """
    parent = forest_parents(g)
    if parent is None:
        raise NotInClass("graph has a cycle, not a forest")
    if g.n == 0:
        raise ExpressionError("cannot build an expression for the empty graph")
    with gc_paused():
        return _forest_expr(g, parent)


def _forest_expr(g: Graph, parent: list[int]) -> CwExpr:
    order = []
    kids: list[list[int]] = [[] for _ in range(g.n)]
    roots = []
    for v in range(g.n):
        if parent[v] == -1:
            roots.append(v)
    # BFS order per component so children come after parents
    for root in roots:
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in g.adj[v]:
                if parent[w] == v:
                    kids[v].append(w)
                    queue.append(w)
    built: list = [None] * g.n
    names = g.names
    for v in reversed(order):
        acc = Leaf(1, names[v])
        for c in kids[v]:
            acc = Relabel(2, 3, Join(1, 2, Union(acc, Relabel(1, 2, built[c]))))
            built[c] = None
        built[v] = acc
    root = built[roots[0]]
    for r in roots[1:]:
        root = Union(root, built[r])
    return CwExpr._trusted(root, 3)


def linear_nlc_expr(g: Graph, order: Sequence[int] | None = None) -> NlcExpr:
    """A linear NLC expression adding vertices one at a time in ``order``.

    Processed vertices share a label exactly when they have the same
    neighbours among the vertices still to come, which is the fewest labels
    any linear construction along this order can use.
    """
    if g.n == 0:
        raise ExpressionError("cannot build an expression for the empty graph")
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertex indices")
    pos = {v: t for t, v in enumerate(order)}
    names = g.names
    label_of: dict[int, int] = {}
    root = None
    for t, v in enumerate(order):
        used = set(label_of.values())
        new = 1
        while new in used:
            new += 1
        leaf = Leaf(new, names[v])
        if root is None:
            root = leaf
        else:
            pairs = frozenset((label_of[u], new) for u in g.adj[v] if pos[u] < t)
            root = Product(pairs, root, leaf)
        label_of[v] = new
        # coarsen by neighbourhood among the remaining vertices
        target: dict[frozenset, int] = {}
        for u in order[: t + 1]:
            key = frozenset(w for w in g.adj[u] if pos[w] > t)
            lab = label_of[u]
            if key not in target or lab < target[key]:
                target[key] = lab
        mapping = {}
        for u in order[: t + 1]:
            key = frozenset(w for w in g.adj[u] if pos[w] > t)
            dst = target[key]
            if label_of[u] != dst:
                mapping[label_of[u]] = dst
            label_of[u] = dst
        if mapping:
            root = RelabelMap(tuple(sorted(mapping.items())), root)
    return NlcExpr(root)


def iter_nodes(expr) -> Iterator:
    return iter(expr.nodes())
