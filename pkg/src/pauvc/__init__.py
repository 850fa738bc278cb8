"""Minimum pre-assignments that make the minimum vertex cover unique.

Given a graph G, find a smallest vertex set S such that exactly one minimum
vertex cover of G contains S.  Solvers: a dynamic program over clique-width
and NLC-width expressions, linear-time algorithms for unit interval and
split graphs, and an exhaustive oracle for small graphs.
"""

from .errors import BudgetExceeded, ExpressionError, NotInClass, ParseError, PauvcError
from .expr import (CwExpr, LabeledGraph, NlcExpr, eval_cw, eval_expr, eval_nlc, format_expr,
                   linear_nlc_expr, parse_cw_expr, parse_expr, parse_nlc_expr, tree_to_cw_expr)
from .fpt import DpTable, run_dp, solve_expr
from .graph import (Graph, VcVerdict, enumerate_min_vcs, format_graph, is_vertex_cover,
                    min_vc_size, parse_graph, verify_preassignment)
from .oracle import labeled_tables_oracle, pauvc_bruteforce
from .solution import PreassignmentSolution, Rejection
from .split import SplitPartition, recognize_split, reduce_split, solve_split
from .unit_interval import (IntervalRep, build_clique_partition, parse_intervals,
                            recognize_unit_interval, solve_unit_interval)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CwExpr", "DpTable", "ExpressionError", "Graph", "IntervalRep",
    "LabeledGraph", "NlcExpr", "NotInClass", "ParseError", "PauvcError",
    "PreassignmentSolution", "Rejection", "SplitPartition", "VcVerdict",
    "build_clique_partition", "enumerate_min_vcs", "eval_cw", "eval_expr", "eval_nlc",
    "format_expr", "format_graph", "is_vertex_cover", "labeled_tables_oracle",
    "linear_nlc_expr", "min_vc_size", "parse_cw_expr", "parse_expr", "parse_graph",
    "parse_intervals", "parse_nlc_expr", "pauvc_bruteforce", "recognize_split",
    "recognize_unit_interval", "reduce_split", "run_dp", "solve_expr", "solve_split",
    "solve_unit_interval", "tree_to_cw_expr", "verify_preassignment",
]
