"""Combinatorial lower bound from obligatory branch vertices.

An articulation point whose removal leaves at least three components must have
degree >= 3 in every spanning tree, so it is a branch vertex no matter what.
Counting these vertices is a valid lower bound on the optimum, computable in
linear time. The bound is not tight in general: K_{2,4} has no such vertex yet
every one of its spanning trees has a branch vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedInputError
from .graph import Graph, structural_report


@dataclass(frozen=True)
class LowerBoundResult:
    """Obligatory branch vertices of a connected graph.

    ``split_counts`` maps each obligatory vertex to the number of components
    its removal leaves (always >= 3); ``value`` is the lower bound itself,
    i.e. the number of obligatory vertices. ``fingerprint`` ties the result to
    the graph it was computed on.
    """

    obligatory: frozenset[int]
    split_counts: dict[int, int]
    value: int
    fingerprint: int


def graph_fingerprint(g: Graph) -> int:
    """Stable identity of a graph's vertex count and edge set."""
    return hash((g.n, g.edges))


def obligatory_branch_bound(g: Graph) -> LowerBoundResult:
    """Obligatory branch vertices, their split counts, and the lower bound.

    Requires a connected graph. Thin wrapper over structural_report: the split
    counts come from the same single DFS that later feeds the decomposition.
    """
    report = structural_report(g)
    if report.component_count != 1:
        raise DisconnectedInputError(
            f"lower bound needs a connected graph, got {report.component_count} components"
        )
    split_counts = {v: a for v, a in report.articulation.items() if a >= 3}
    return LowerBoundResult(
        obligatory=frozenset(split_counts),
        split_counts=split_counts,
        value=len(split_counts),
        fingerprint=graph_fingerprint(g),
    )
