"""``pauvc`` command line: solve, verify, generate, random, oracle, tables.

Exit codes: 0 success, 1 internal error, 2 classification or input error,
3 budget exceeded, 4 verification found no unique minimum cover.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field

from ..errors import BudgetExceeded, NotInClass, PauvcError
from ..expr import parse_cw_expr, parse_nlc_expr, tree_to_cw_expr
from ..fpt import run_dp
from ..graph import DEFAULT_EXACT_BUDGET, Graph, format_graph, parse_graph, sort_names, \
    verify_preassignment
from ..oracle import BRUTE_BUDGET
from ..unit_interval import format_intervals, parse_intervals
from .dispatch import CLASS_TAGS, brute_solution, expression_graph, generate_instance, \
    solve_graph
from .generators import FAMILIES, family_rng, random_instance, random_split

EXIT_OK, EXIT_INTERNAL, EXIT_CLASS, EXIT_BUDGET, EXIT_NOT_UNIQUE = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    input_digest: str
    tag: str
    preassign: list
    min_vc_size: int
    unique_cover: list
    method: str
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    def fields(self, timing: bool = False) -> dict:
        out = {
            "input_digest": self.input_digest,
            "class": self.tag,
            "preassign": self.preassign,
            "preassign_size": len(self.preassign),
            "min_vc_size": self.min_vc_size,
            "unique_cover": self.unique_cover,
            "method": self.method,
        }
        out.update(self.extra)
        if timing:
            out["wall_time_s"] = round(self.wall_time, 6)
        return out

    def render(self, *, timing: bool = False, as_json: bool = False) -> str:
        data = self.fields(timing)
        if as_json:
            return json.dumps(data, sort_keys=False) + "\n"
        lines = []
        for key, value in data.items():
            if isinstance(value, list):
                value = " ".join(value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


class _Input:
    """What was read from the input flag: the graph plus optional extras."""

    def __init__(self, raw: bytes, graph: Graph, rep=None, expr=None):
        self.digest = "sha256:" + hashlib.sha256(raw).hexdigest()[:16]
        self.graph = graph
        self.rep = rep
        self.expr = expr


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(args) -> _Input:
    if args.graph:
        raw = _read(args.graph)
        return _Input(raw, parse_graph(raw))
    if args.intervals:
        raw = _read(args.intervals)
        rep = parse_intervals(raw)
        return _Input(raw, rep.graph(), rep=rep)
    if args.cw_expr or args.nlc_expr:
        raw = _read(args.cw_expr or args.nlc_expr)
        expr = parse_cw_expr(raw) if args.cw_expr else parse_nlc_expr(raw)
        return _Input(raw, expression_graph(expr), expr=expr)
    raise NotInClass("no input given")


def _add_inputs(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE", help="edge list (native 'n m' or DIMACS)")
    group.add_argument("--intervals", metavar="FILE", help="unit intervals, 'name left' lines")
    group.add_argument("--cw-expr", metavar="FILE", help="clique-width expression")
    group.add_argument("--nlc-expr", metavar="FILE", help="NLC-width expression")
    p.add_argument("--class", dest="tag", choices=CLASS_TAGS, help="force a solver")
    p.add_argument("--budget", type=int, help="vertex budget for exact (exponential) steps")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    start = time.perf_counter()
    inp = _load(args)
    tag, sol = solve_graph(inp.graph, tag=args.tag, rep=inp.rep, expr=inp.expr,
                           budget=args.budget)
    g = inp.graph
    report = RunReport(inp.digest, tag, sort_names(g, sol.preassign), sol.min_vc_size,
                       sort_names(g, sol.unique_cover), sol.method)
    if args.verify:
        limit = DEFAULT_EXACT_BUDGET if args.budget is None else args.budget
        verdict = verify_preassignment(g, sol.preassign, budget=limit)
        report.extra["verified_count"] = verdict.num_min_vcs_capped
    report.wall_time = time.perf_counter() - start
    _emit(report.render(timing=args.timing, as_json=args.json), args.out)
    if args.verify and report.extra["verified_count"] != 1:
        return EXIT_NOT_UNIQUE
    return EXIT_OK


def _read_names(path: str) -> list[str]:
    text = _read(path).decode()
    names = []
    for line in text.splitlines():
        names.extend(line.split("#", 1)[0].split())
    return names


def cmd_verify(args) -> int:
    raw = _read(args.graph)
    g = parse_graph(raw)
    s = _read_names(args.preassign)
    verdict = verify_preassignment(g, s, budget=args.budget)
    count = "2+" if verdict.num_min_vcs_capped == 2 else str(verdict.num_min_vcs_capped)
    witness = " ".join(sort_names(g, verdict.witness)) if verdict.witness else "-"
    lines = [
        f"input_digest: sha256:{hashlib.sha256(raw).hexdigest()[:16]}",
        f"preassign: {' '.join(sort_names(g, s))}",
        f"preassign_is_cover: {str(verdict.is_cover).lower()}",
        f"min_vc_size: {verdict.min_vc_size}",
        f"count: {count}",
        f"witness: {witness}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if verdict.num_min_vcs_capped == 1 else EXIT_NOT_UNIQUE


def cmd_generate(args) -> int:
    inp = _load(args)
    rest, cert, sol = generate_instance(inp.graph, tag=args.tag, rep=inp.rep, expr=inp.expr,
                                        budget=args.budget)
    order = list(range(rest.n))
    if args.seed is not None:
        random.Random(args.seed).shuffle(order)
    # output vertex t + 1 is vertex order[t] of G - S
    pos = {v: t for t, v in enumerate(order)}
    pairs = [(pos[u], pos[v]) for u, v in rest.edges()]
    out = Graph.from_n(rest.n, pairs, check=False)
    header = (f"# G - S for input {inp.digest}\n"
              f"# S = {' '.join(sort_names(inp.graph, sol.preassign))}\n")
    with open(args.out + ".graph", "w") as fh:
        fh.write(header + format_graph(out))
    cover = sorted(pos[i] + 1 for i in rest.indices(cert))
    with open(args.out + ".cert", "w") as fh:
        fh.write(f"# unique minimum vertex cover of {args.out}.graph ({len(cover)} vertices)\n")
        fh.write(" ".join(map(str, cover)) + "\n")
    sys.stdout.write(f"wrote {args.out}.graph ({rest.n} vertices, {rest.m} edges) "
                     f"and {args.out}.cert\n")
    return EXIT_OK


def cmd_random(args) -> int:
    if args.n < 0:
        raise _Usage("--n must be non-negative")
    try:
        if args.family == "split":
            g, a, _ = random_split(args.n, family_rng("split", args.n, args.seed))
            text = (f"# split partition A: {' '.join(g.names[i] for i in a)}\n"
                    + format_graph(g))
        else:
            obj = random_instance(args.family, args.n, args.seed, p=args.p)
            text = format_intervals(obj) if args.family == "unit-interval" else format_graph(obj)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    _emit(text, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    raw = _read(args.graph)
    g = parse_graph(raw)
    sol = brute_solution(g, budget=BRUTE_BUDGET if args.budget is None else args.budget)
    report = RunReport("sha256:" + hashlib.sha256(raw).hexdigest()[:16], "brute-fallback",
                       sort_names(g, sol.preassign), sol.min_vc_size,
                       sort_names(g, sol.unique_cover), sol.method)
    _emit(report.render(as_json=args.json), args.out)
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.graph:
        expr = tree_to_cw_expr(parse_graph(_read(args.graph)))
    else:
        raw = _read(args.cw_expr or args.nlc_expr)
        expr = parse_cw_expr(raw) if args.cw_expr else parse_nlc_expr(raw)
    run = run_dp(expr, check=True)
    lines = [f"k {expr.k}"]
    for nid, node in enumerate(run.nodes):
        t = run.table(node)
        lines.append(f"node {nid} {type(node).__name__.lower()} ne {t.ne}")
        for mask, size in enumerate(t.mu):
            if size is not None:
                lines.append(f"node {nid} mu {mask} {size}")
        for beta, size in sorted(t.chars.items()):
            lines.append(f"node {nid} beta {','.join(map(str, beta))} {size}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pauvc", description="Minimum pre-assignments that "
                                     "make the minimum vertex cover unique.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a minimum pre-assignment")
    _add_inputs(p)
    p.add_argument("--verify", action="store_true", help="re-check uniqueness by enumeration")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="append wall time to the report")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="count minimum covers containing a vertex set")
    p.add_argument("--graph", metavar="FILE", required=True)
    p.add_argument("--preassign", metavar="FILE", required=True,
                   help="whitespace-separated vertex names")
    p.add_argument("--budget", type=int)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write G - S and its unique cover")
    _add_inputs(p)
    p.add_argument("--out", metavar="PREFIX", required=True)
    p.add_argument("--seed", type=int, help="shuffle the output vertex numbering")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("random", help="seeded random instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3, help="edge probability for gnp")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("oracle", help="exhaustive reference answer")
    p.add_argument("--graph", metavar="FILE", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tables", help="dump the DP tables of an expression")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cw-expr", metavar="FILE")
    group.add_argument("--nlc-expr", metavar="FILE")
    group.add_argument("--graph", metavar="FILE", help="a forest, via its 3-label expression")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"pauvc: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotInClass, _Usage) as exc:
        print(f"pauvc: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (PauvcError, ValueError, OSError) as exc:
        print(f"pauvc: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except Exception as exc:  # pragma: no cover - last resort
        print(f"pauvc: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
