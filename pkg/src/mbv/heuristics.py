"""Constructive spanning-tree heuristics that grow long paths.

A branch-free spanning tree is a Hamiltonian path, so both builders chase long
paths and only spend degree on vertices that are already doomed to be branches.
They share one start-restart rule for picking where to grow next, in priority
order: an obligatory branch vertex, then a vertex whose tree degree already
exceeds two, then the vertex with the most neighbors still outside the tree.
Within a tier the largest unvisited-neighbor count wins, remaining ties go to
the smallest vertex id. All selections are deterministic so repeated runs build
identical trees.

Both algorithms also accept an overlay so they can run on decomposition
components: tree degrees start at the vertex's extra degree and split copies
are exempt from branch accounting (they behave like obligatory vertices:
preferred for restarts, never retired).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Mapping

from .bound import LowerBoundResult
from .errors import DisconnectedInputError, NoEligibleVertexError
from .graph import Graph, SpanningTree, connected_components, spanning_tree


@dataclass(frozen=True)
class HeuristicOverlay:
    """Component-mode adjustments: starting degrees and objective-exempt vertices."""

    extra_degree: Mapping[int, int] = field(default_factory=dict)
    exempt: frozenset[int] = frozenset()


class HeuristicState:
    """Incremental bookkeeping shared by both heuristics.

    ``unvisited[v]`` is the number of neighbors of v not yet in the tree; it is
    updated whenever the tree grows so every greedy test stays O(1) per vertex
    looked at. ``open_vertices`` tracks tree vertices that can still grow.
    """

    __slots__ = (
        "graph",
        "in_tree",
        "tree_degree",
        "unvisited",
        "tree_edges",
        "candidates",
        "open_vertices",
        "priority",
    )

    def __init__(self, g: Graph, lb: LowerBoundResult, overlay: HeuristicOverlay | None = None):
        n = g.n
        extra = overlay.extra_degree if overlay else {}
        exempt = overlay.exempt if overlay else frozenset()
        self.graph = g
        self.in_tree = [False] * n
        self.tree_degree = [extra.get(v, 0) for v in range(n)]
        self.unvisited = [g.degree(v) for v in range(n)]
        self.tree_edges: list[tuple[int, int]] = []
        self.candidates: set[int] = set()
        self.open_vertices: set[int] = set()
        self.priority = frozenset(lb.obligatory) | exempt

    def add_vertex(self, w: int) -> None:
        self.in_tree[w] = True
        unvisited = self.unvisited
        open_vertices = self.open_vertices
        for x in self.graph.adjacency[w]:
            unvisited[x] -= 1
            if unvisited[x] == 0:
                open_vertices.discard(x)
        if unvisited[w] > 0:
            open_vertices.add(w)

    def add_edge(self, u: int, v: int) -> None:
        self.tree_edges.append((u, v) if u < v else (v, u))
        self.tree_degree[u] += 1
        self.tree_degree[v] += 1


def start_restart_select(
    g: Graph, lb: LowerBoundResult, state: HeuristicState, restrict_to_tree: bool
) -> int:
    """Pick the vertex the next path should grow from.

    With ``restrict_to_tree`` the pool is the tree vertices that still have
    unvisited neighbors; otherwise (the initial start) any vertex with
    unvisited neighbors qualifies.
    """
    pool = state.open_vertices if restrict_to_tree else range(g.n)
    unvisited = state.unvisited
    tree_degree = state.tree_degree
    priority = state.priority
    b1 = b2 = b3 = -1
    c1 = c2 = c3 = -1
    for v in pool:
        c = unvisited[v]
        if c <= 0:
            continue
        if v in priority and (c > c1 or (c == c1 and v < b1)):
            b1, c1 = v, c
        if tree_degree[v] > 2 and (c > c2 or (c == c2 and v < b2)):
            b2, c2 = v, c
        if c > c3 or (c == c3 and v < b3):
            b3, c3 = v, c
    if b1 >= 0:
        return b1
    if b2 >= 0:
        return b2
    if b3 >= 0:
        return b3
    raise NoEligibleVertexError("no vertex with unvisited neighbors")


def _require_connected(g: Graph) -> None:
    count, _ = connected_components(g)
    if count != 1:
        raise DisconnectedInputError(f"heuristics need a connected graph, got {count} components")


def path_expanding(
    g: Graph, lb: LowerBoundResult, overlay: HeuristicOverlay | None = None
) -> SpanningTree:
    """Grow one path at a time, restarting from tree endpoints when stuck.

    Restarts prefer a tree vertex of degree at most one that can still grow
    (fewest unvisited neighbors first, then smallest id) and fall back to the
    start-restart rule. Expansion always moves to the unvisited neighbor with
    the fewest unvisited neighbors of its own, steering each path into dead
    ends rather than leaving strands the tree would later branch around.
    """
    _require_connected(g)
    st = HeuristicState(g, lb, overlay)
    if g.n == 1:
        return spanning_tree(g, ())
    adj = g.adjacency
    in_tree = st.in_tree
    unvisited = st.unvisited
    tree_degree = st.tree_degree
    st.add_vertex(start_restart_select(g, lb, st, False))
    target = g.n - 1
    sentinel = 1 << 60
    while len(st.tree_edges) < target:
        u, uc = -1, sentinel
        for v in st.open_vertices:
            if tree_degree[v] <= 1:
                c = unvisited[v]
                if c < uc or (c == uc and v < u):
                    u, uc = v, c
        if u < 0:
            u = start_restart_select(g, lb, st, True)
        while unvisited[u] > 0:
            v, vc = -1, sentinel
            for x in adj[u]:
                if not in_tree[x]:
                    c = unvisited[x]
                    if c < vc or (c == vc and x < v):
                        v, vc = x, c
            st.add_vertex(v)
            st.add_edge(u, v)
            u = v
    return spanning_tree(g, st.tree_edges)


def multi_path_expanding(
    g: Graph, lb: LowerBoundResult, overlay: HeuristicOverlay | None = None
) -> SpanningTree:
    """Grow several paths at once from a retiring candidate set.

    Each step attaches the outside vertex with the fewest unvisited neighbors
    among those adjacent to a candidate (smallest-id candidate on ties). A
    candidate retires once its tree degree reaches two, unless it is obligatory
    or exempt; those stay available no matter their degree.
    """
    _require_connected(g)
    st = HeuristicState(g, lb, overlay)
    if g.n == 1:
        return spanning_tree(g, ())
    adj = g.adjacency
    st.add_vertex(start_restart_select(g, lb, st, False))

    cand_nbrs = [0] * g.n  # per outside vertex: how many candidates it touches
    heap: list[tuple[int, int]] = []

    def enqueue(x: int) -> None:
        heappush(heap, (st.unvisited[x], x))

    def cand_add(u: int) -> None:
        if u in st.candidates:
            return
        st.candidates.add(u)
        for x in adj[u]:
            if not st.in_tree[x]:
                cand_nbrs[x] += 1
                if cand_nbrs[x] == 1:
                    enqueue(x)

    def cand_drop(u: int) -> None:
        st.candidates.discard(u)
        for x in adj[u]:
            if not st.in_tree[x]:
                cand_nbrs[x] -= 1

    def absorb(w: int) -> None:
        # add_vertex plus heap refresh for neighbors whose key just changed
        st.in_tree[w] = True
        for x in adj[w]:
            st.unvisited[x] -= 1
            if st.unvisited[x] == 0:
                st.open_vertices.discard(x)
            if not st.in_tree[x] and cand_nbrs[x] > 0:
                enqueue(x)
        if st.unvisited[w] > 0:
            st.open_vertices.add(w)

    def pop_eligible() -> int | None:
        while heap:
            c, v = heap[0]
            if st.in_tree[v] or cand_nbrs[v] == 0 or c != st.unvisited[v]:
                heappop(heap)
                continue
            heappop(heap)
            return v
        return None

    target = g.n - 1
    while len(st.tree_edges) < target:
        cand_add(start_restart_select(g, lb, st, True))
        while (v := pop_eligible()) is not None:
            u = min(x for x in adj[v] if x in st.candidates)
            absorb(v)
            st.add_edge(u, v)
            if st.tree_degree[u] == 2 and u not in st.priority:
                cand_drop(u)
            if not (st.tree_degree[v] == 2 and v not in st.priority):
                cand_add(v)
    return spanning_tree(g, st.tree_edges)


def overlay_branch_value(tree: SpanningTree, overlay: HeuristicOverlay | None) -> int:
    """Branch count of a tree under an overlay's extra degrees and exemptions."""
    if overlay is None:
        return tree.branches
    deg = [0] * tree.n
    for u, v in tree.edges:
        deg[u] += 1
        deg[v] += 1
    extra = overlay.extra_degree
    return sum(
        1
        for v in range(tree.n)
        if v not in overlay.exempt and deg[v] + extra.get(v, 0) > 2
    )


def best_heuristic(
    g: Graph, lb: LowerBoundResult, overlay: HeuristicOverlay | None = None
) -> SpanningTree:
    """Run both heuristics and keep the tree with fewer branches (ties: path)."""
    a = path_expanding(g, lb, overlay)
    b = multi_path_expanding(g, lb, overlay)
    if overlay_branch_value(a, overlay) <= overlay_branch_value(b, overlay):
        return a
    return b
