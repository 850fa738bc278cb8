"""Graph classification and solver dispatch used by the command line."""

from __future__ import annotations

from ..errors import NotInClass
from ..expr import CwExpr, NlcExpr, eval_expr, forest_parents, tree_to_cw_expr
from ..fpt import solve_expr
from ..graph import Graph, enumerate_min_vcs, verify_preassignment
from ..oracle import BRUTE_BUDGET, pauvc_bruteforce
from ..solution import PreassignmentSolution
from ..split import recognize_split, solve_split
from ..unit_interval import IntervalRep, recognize_unit_interval, solve_unit_interval

#: Class tags in dispatch order.
CLASS_TAGS = ("split", "unit-interval", "forest", "expression-given", "brute-fallback")

#: Largest G - S that :func:`generate_instance` re-checks by enumeration.
GENERATE_CHECK_BUDGET = 40


def classify(g: Graph, *, expression: bool = False) -> str:
    """First class tag in dispatch order whose recognizer accepts ``g``.

    ``expression`` says whether a width expression came with the input.
    """
    if recognize_split(g):
        return "split"
    if recognize_unit_interval(g):
        return "unit-interval"
    if g.n and forest_parents(g) is not None:
        return "forest"
    if expression:
        return "expression-given"
    return "brute-fallback"


def brute_solution(g: Graph, *, budget: int | None = None) -> PreassignmentSolution:
    s = pauvc_bruteforce(g, budget=BRUTE_BUDGET if budget is None else budget)
    verdict = verify_preassignment(g, s, budget=g.n)
    return PreassignmentSolution(s, verdict.min_vc_size, verdict.witness, "brute")


def solve_as(tag: str, g: Graph, *, rep: IntervalRep | None = None,
             expr: CwExpr | NlcExpr | None = None,
             budget: int | None = None) -> PreassignmentSolution:
    """Run the solver for ``tag``; NotInClass if ``g`` is outside the class."""
    if tag == "split":
        return solve_split(g)
    if tag == "unit-interval":
        if rep is None:
            rep = recognize_unit_interval(g)
            if not rep:
                raise NotInClass(f"not a unit interval graph: {rep.message}", rep.witness)
        return solve_unit_interval(rep)
    if tag == "forest":
        return solve_expr(tree_to_cw_expr(g))
    if tag == "expression-given":
        if expr is None:
            raise NotInClass("no width expression was supplied")
        return solve_expr(expr)
    if tag == "brute-fallback":
        return brute_solution(g, budget=budget)
    raise ValueError(f"unknown class tag {tag!r}")


def solve_graph(g: Graph, *, tag: str | None = None, rep: IntervalRep | None = None,
                expr=None, budget: int | None = None) -> tuple[str, PreassignmentSolution]:
    """Classify (unless ``tag`` forces a class) and solve."""
    if tag is None:
        tag = classify(g, expression=expr is not None)
    return tag, solve_as(tag, g, rep=rep, expr=expr, budget=budget)


def expression_graph(expr) -> Graph:
    return eval_expr(expr).graph


def generate_instance(g: Graph, **kw) -> tuple[Graph, frozenset, PreassignmentSolution]:
    """Solve ``g`` and return ``(G - S, its unique minimum cover, solution)``.

    The certificate is the forced cover minus S.  When G - S has at most
    :data:`GENERATE_CHECK_BUDGET` vertices its uniqueness is re-checked by
    enumeration and a failure raises AssertionError.
    """
    _, sol = solve_graph(g, **kw)
    rest = g.remove_vertices(sol.preassign)
    cert = sol.unique_cover - sol.preassign
    if rest.n <= GENERATE_CHECK_BUDGET:
        covers = enumerate_min_vcs(rest, cap=2)
        if len(covers) != 1 or covers[0] != cert:
            raise AssertionError("generated instance does not have a unique minimum cover")
    return rest, cert, sol

