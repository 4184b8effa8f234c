"""Minimum branch vertices spanning trees.

Library for finding spanning trees with as few vertices of degree greater than
two as possible: a linear-time combinatorial lower bound, a graph decomposition
that breaks instances into independent components, two constructive heuristics,
an exact branch-and-bound solver, and a brute-force oracle for desk-scale
verification.
"""
from . import errors
from .bench import Report, bench, bench_graph, summarize
from .bound import LowerBoundResult, graph_fingerprint, obligatory_branch_bound
from .decompose import (
    Component,
    Decomposition,
    Original,
    SplitCopy,
    component_branch_count,
    decompose,
    decomposed_objective,
    recombine,
)
from .graph import (
    Graph,
    SpanningTree,
    StructuralReport,
    UnionFind,
    branch_count,
    build_graph,
    connected_components,
    is_spanning_tree,
    spanning_tree,
    structural_report,
)
from .heuristics import (
    HeuristicOverlay,
    HeuristicState,
    best_heuristic,
    multi_path_expanding,
    overlay_branch_value,
    path_expanding,
    start_restart_select,
)
from .io import (
    generate_random_connected,
    load_graph,
    parse_dimacs,
    parse_instance,
    write_dimacs,
    write_instance,
)
from .oracle import OracleResult, brute_force_optimum, enumerate_spanning_trees
from .solver import (
    SolveOptions,
    SolveReport,
    solve_component,
    solve_plain,
    solve_with_decomposition,
)

__all__ = [
    "Component",
    "Decomposition",
    "Graph",
    "HeuristicOverlay",
    "HeuristicState",
    "LowerBoundResult",
    "OracleResult",
    "Original",
    "Report",
    "SolveOptions",
    "SolveReport",
    "SpanningTree",
    "SplitCopy",
    "StructuralReport",
    "UnionFind",
    "bench",
    "bench_graph",
    "best_heuristic",
    "branch_count",
    "brute_force_optimum",
    "build_graph",
    "component_branch_count",
    "connected_components",
    "decompose",
    "decomposed_objective",
    "enumerate_spanning_trees",
    "errors",
    "generate_random_connected",
    "graph_fingerprint",
    "is_spanning_tree",
    "load_graph",
    "multi_path_expanding",
    "obligatory_branch_bound",
    "overlay_branch_value",
    "parse_dimacs",
    "parse_instance",
    "path_expanding",
    "recombine",
    "solve_component",
    "solve_plain",
    "solve_with_decomposition",
    "spanning_tree",
    "start_restart_select",
    "structural_report",
    "summarize",
    "write_dimacs",
    "write_instance",
]
