"""Split a connected graph into independently solvable components.

Two reductions are applied in one pass, both computed on the input graph:

* every obligatory branch vertex v is replaced by one stub vertex per
  component of the graph without v, each stub keeping the edges into its own
  component;
* every bridge is deleted, crediting each original endpoint with one unit of
  extra degree, because a bridge sits in every spanning tree anyway.

Splitting never breaks a cycle (a cycle through v enters and leaves within a
single component of the graph without v), so the bridge set of the split graph
is exactly the image of the input graph's bridge set; computing bridges once on
the input is enough. The surviving pieces are returned as ordinary graphs with
dense local ids; provenance is the only mapping back.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .bound import LowerBoundResult, graph_fingerprint
from .errors import DisconnectedInputError, NotASpanningTreeError, StaleBoundError
from .graph import Edge, Graph, _dfs_structure, build_graph, is_spanning_tree, spanning_tree, SpanningTree


@dataclass(frozen=True)
class Original(object):
    """A component vertex that is an input-graph vertex."""

    vertex: int


@dataclass(frozen=True)
class SplitCopy(object):
    """A stub created for one piece of the graph without an obligatory branch.

    ``piece`` is the 1-based index of that piece; for a fixed source vertex the
    copies are exactly piece = 1..split_count.
    """

    vertex: int
    piece: int


Provenance = Original | SplitCopy


@dataclass(frozen=True)
class Component:
    """One connected piece of the decomposed graph.

    ``extra_degree`` holds, for original vertices only, the number of deleted
    bridges that were incident to them; it is added to the local tree degree
    when deciding whether a vertex is a branch. ``original_degree`` is the
    degree the original vertices had in the input graph.
    """

    graph: Graph
    provenance: tuple[Provenance, ...]
    extra_degree: dict[int, int]
    original_degree: dict[int, int]
    edge_origin: dict[Edge, Edge]


@dataclass(frozen=True)
class Decomposition:
    """All components plus the data needed to stitch solutions back together."""

    source: Graph
    components: tuple[Component, ...]
    obligatory: LowerBoundResult
    cut_edges: frozenset[Edge]


def decompose(g: Graph, lb: LowerBoundResult) -> Decomposition:
    """Apply both reductions to a connected graph.

    A component may legally be a single split copy or a single original vertex
    of degree zero; that happens when a leg hanging off an obligatory branch is
    a lone bridge.
    """
    if lb.fingerprint != graph_fingerprint(g):
        raise StaleBoundError("lower bound was computed on a different graph")
    s = _dfs_structure(g)
    if s.component_count != 1:
        raise DisconnectedInputError("decompose needs a connected graph")

    n = g.n
    obligatory = lb.obligatory
    bridges = s.bridges
    entry = s.entry
    subtree = s.subtree

    # piece lookup for an obligatory vertex v: piece 1 is the side containing
    # v's DFS parent (absent for roots), the split-child subtrees follow in
    # visit order. Neighbor membership is interval containment on entry times.
    starts: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {}
    for v in obligatory:
        starts[v] = [entry[c] for c in s.split_children[v]]
        ends[v] = [entry[c] + subtree[c] for c in s.split_children[v]]

    def piece_of(v: int, u: int) -> int:
        base = 0 if s.root[v] else 1
        vs = starts[v]
        j = bisect_right(vs, entry[u]) - 1
        if j >= 0 and entry[u] < ends[v][j]:
            return base + j + 1
        return 1  # only reachable for non-roots: u sits on the parent side

    # assign ids in the split graph: surviving originals first, then copies
    node_origin: list[Provenance] = []
    orig_id: dict[int, int] = {}
    copy_id: dict[tuple[int, int], int] = {}
    for v in range(n):
        if v not in obligatory:
            orig_id[v] = len(node_origin)
            node_origin.append(Original(v))
    for v in sorted(obligatory):
        for p in range(1, lb.split_counts[v] + 1):
            copy_id[(v, p)] = len(node_origin)
            node_origin.append(SplitCopy(v, p))
    n_split = len(node_origin)

    def mapped(x: int, other: int) -> int:
        if x not in obligatory:
            return orig_id[x]
        return copy_id[(x, piece_of(x, other))]

    split_adj: list[list[int]] = [[] for _ in range(n_split)]
    origin_of: dict[Edge, Edge] = {}
    for u, w in g.edges:
        if (u, w) in bridges:
            continue
        a, b = mapped(u, w), mapped(w, u)
        split_adj[a].append(b)
        split_adj[b].append(a)
        origin_of[(a, b) if a < b else (b, a)] = (u, w)

    # label the split graph's connected pieces
    comp_of = [-1] * n_split
    count = 0
    for start in range(n_split):
        if comp_of[start] != -1:
            continue
        comp_of[start] = count
        stack = [start]
        while stack:
            x = stack.pop()
            for y in split_adj[x]:
                if comp_of[y] == -1:
                    comp_of[y] = count
                    stack.append(y)
        count += 1

    bridge_deg = [0] * n
    for u, w in bridges:
        bridge_deg[u] += 1
        bridge_deg[w] += 1

    members: list[list[int]] = [[] for _ in range(count)]
    for x in range(n_split):
        members[comp_of[x]].append(x)

    components = []
    for k in range(count):
        ids = members[k]  # ascending: ids were scanned in order
        local = {x: i for i, x in enumerate(ids)}
        local_edges = []
        edge_origin: dict[Edge, Edge] = {}
        for x in ids:
            for y in split_adj[x]:
                if x < y:
                    a, b = local[x], local[y]
                    local_edges.append((a, b))
                    key = (a, b) if a < b else (b, a)
                    edge_origin[key] = origin_of[(x, y)]
        cg = build_graph(len(ids), local_edges)
        provenance = tuple(node_origin[x] for x in ids)
        extra = {}
        orig_deg = {}
        for i, p in enumerate(provenance):
            if isinstance(p, Original):
                orig_deg[i] = g.degree(p.vertex)
                if bridge_deg[p.vertex]:
                    extra[i] = bridge_deg[p.vertex]
        components.append(Component(cg, provenance, extra, orig_deg, edge_origin))

    return Decomposition(g, tuple(components), lb, bridges)


def component_branch_count(c: Component, tree_edges) -> int:
    """Branch vertices of a component spanning tree under component semantics.

    An original vertex counts when its local tree degree plus its extra degree
    exceeds two; split copies never count.
    """
    if not is_spanning_tree(c.graph, tree_edges):
        raise NotASpanningTreeError("edge set is not a spanning tree of the component")
    deg = [0] * c.graph.n
    for u, v in tree_edges:
        deg[u] += 1
        deg[v] += 1
    extra = c.extra_degree
    return sum(
        1
        for i, p in enumerate(c.provenance)
        if isinstance(p, Original) and deg[i] + extra.get(i, 0) > 2
    )


def recombine(d: Decomposition, component_trees) -> SpanningTree:
    """Stitch per-component spanning trees and the deleted bridges back together.

    The result is a spanning tree of the source graph whose branch count equals
    the number of obligatory vertices plus the component branch counts.
    """
    trees = list(component_trees)
    if len(trees) != len(d.components):
        raise NotASpanningTreeError(
            f"expected {len(d.components)} component trees, got {len(trees)}"
        )
    edges: set[Edge] = set(d.cut_edges)
    for k, (comp, te) in enumerate(zip(d.components, trees)):
        if not is_spanning_tree(comp.graph, te):
            raise NotASpanningTreeError(f"component {k}: edge set is not a spanning tree")
        for u, v in te:
            edges.add(comp.edge_origin[(u, v) if u < v else (v, u)])
    return spanning_tree(d.source, edges)


def decomposed_objective(lo_size: int, component_values) -> int:
    """Objective of a recombined solution: obligatory count plus component values."""
    return lo_size + sum(component_values)
