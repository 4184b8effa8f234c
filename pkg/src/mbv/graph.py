"""Simple undirected graphs and the linear-time structure scans everything else uses.

Vertices are dense integers 0..n-1, edges are normalized tuples (u, v) with
u < v. Graphs are immutable after construction; all functions here are pure.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    LoopEdgeError,
    NotASpanningTreeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is sorted and normalized, adjacency lists are sorted. Connectivity
    is deliberately not a construction invariant: decomposition produces
    disconnected intermediates, and operations that need a connected input check
    for themselves and raise DisconnectedInputError.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class StructuralReport:
    """Connected components, articulation points with split counts, and bridges.

    ``articulation`` maps exactly the articulation points to the number of
    connected components the whole graph falls into once that vertex is
    removed (always >= 2). ``bridges`` holds exactly the cut edges.
    """

    component_count: int
    component_of: tuple[int, ...]
    articulation: dict[int, int]
    bridges: frozenset[Edge]


@dataclass(frozen=True)
class SpanningTree:
    """An edge subset certified to be a spanning tree, with its branch count."""

    n: int
    edges: frozenset[Edge]
    branches: int


class UnionFind:
    """Array union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def build_graph(n: int, edge_pairs) -> Graph:
    """Validate and normalize (n, pairs) into a Graph.

    Rejects loops, duplicate edges (either orientation) and endpoints outside
    [0, n).
    """
    seen: set[Edge] = set()
    for u, v in edge_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside vertex range [0, {n})")
        if u == v:
            raise LoopEdgeError(f"loop edge at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # iterating sorted edges appends every neighbor list in ascending order
    return Graph(n, edges, tuple(tuple(a) for a in adj))


def connected_components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Label vertices with component ids 0..count-1, assigned in discovery order."""
    comp = [-1] * g.n
    count = 0
    for start in range(g.n):
        if comp[start] != -1:
            continue
        comp[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if comp[w] == -1:
                    comp[w] = count
                    stack.append(w)
        count += 1
    return count, tuple(comp)


@dataclass(frozen=True)
class _DfsStructure:
    """Raw depth-first artifacts shared by structural_report and decompose.

    ``split_children[v]`` lists the DFS children whose subtree cannot reach
    above v; removing v cuts each of them off. Entry times of a root are
    minimal within its component, so roots automatically collect every child.
    """

    component_count: int
    component_of: tuple[int, ...]
    entry: tuple[int, ...]
    subtree: tuple[int, ...]
    root: tuple[bool, ...]
    split_children: tuple[tuple[int, ...], ...]
    bridges: frozenset[Edge]

    def pieces(self, v: int) -> int:
        """Number of parts v's own component splits into when v is removed."""
        return len(self.split_children[v]) + (0 if self.root[v] else 1)


def _dfs_structure(g: Graph) -> _DfsStructure:
    # Iterative DFS so path graphs with n = 10^5 cannot overflow the call stack.
    n = g.n
    adj = g.adjacency
    entry = [-1] * n
    low = [0] * n
    subtree = [1] * n
    comp_of = [-1] * n
    split_children: list[list[int]] = [[] for _ in range(n)]
    root = [False] * n
    bridges: set[Edge] = set()
    comp = 0
    timer = 0
    for r in range(n):
        if entry[r] != -1:
            continue
        root[r] = True
        entry[r] = low[r] = timer
        timer += 1
        comp_of[r] = comp
        # frame: vertex, parent, next adjacency index, parent edge consumed
        stack = [[r, -1, 0, False]]
        while stack:
            frame = stack[-1]
            v = frame[0]
            nbrs = adj[v]
            i = frame[2]
            if i < len(nbrs):
                frame[2] = i + 1
                w = nbrs[i]
                if w == frame[1] and not frame[3]:
                    frame[3] = True  # a simple graph has exactly one parent edge
                    continue
                t = entry[w]
                if t == -1:
                    entry[w] = low[w] = timer
                    timer += 1
                    comp_of[w] = comp
                    stack.append([w, v, 0, False])
                elif t < low[v]:
                    low[v] = t
            else:
                stack.pop()
                p = frame[1]
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    subtree[p] += subtree[v]
                    if low[v] >= entry[p]:
                        split_children[p].append(v)
                        if low[v] > entry[p]:
                            bridges.add((p, v) if p < v else (v, p))
        comp += 1
    return _DfsStructure(
        comp,
        tuple(comp_of),
        tuple(entry),
        tuple(subtree),
        tuple(root),
        tuple(tuple(c) for c in split_children),
        frozenset(bridges),
    )


def structural_report(g: Graph) -> StructuralReport:
    """Components, articulation points with their split counts, and bridges.

    Runs in time linear in n + m. A vertex appears in ``articulation`` exactly
    when removing it increases the number of components, mapped to the total
    component count of the graph without it.
    """
    s = _dfs_structure(g)
    articulation: dict[int, int] = {}
    for v in range(g.n):
        pieces = s.pieces(v)
        if pieces >= 2:
            articulation[v] = s.component_count - 1 + pieces
    return StructuralReport(s.component_count, s.component_of, articulation, s.bridges)


def is_spanning_tree(g: Graph, tree_edges) -> bool:
    """True iff tree_edges has exactly n-1 edges and connects all n vertices."""
    n = g.n
    edges = list(tree_edges)
    if len(edges) != n - 1:
        return False
    uf = UnionFind(n)
    for u, v in edges:
        if not uf.union(u, v):
            return False
    return True


def branch_count(n: int, tree_edges) -> int:
    """Number of vertices of degree greater than two in the given edge subset."""
    deg = [0] * n
    for u, v in tree_edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg if d > 2)


def spanning_tree(g: Graph, tree_edges) -> SpanningTree:
    """Certify an edge set as a spanning tree of g and compute its branch count."""
    edges = frozenset((u, v) if u < v else (v, u) for u, v in tree_edges)
    if not edges.issubset(g.edges):
        raise NotASpanningTreeError("edge set is not a subset of the graph's edges")
    if not is_spanning_tree(g, edges):
        raise NotASpanningTreeError(
            f"edge set of size {len(edges)} does not span {g.n} vertices"
        )
    return SpanningTree(g.n, edges, branch_count(g.n, edges))


def _edge_dfs(n: int, adj: list[list[tuple[int, int]]]) -> tuple[int, list[int]]:
    """Component count and bridge edge ids for an edge-id-annotated adjacency list.

    Tolerates parallel edges (skips the incoming edge by id, exactly once) and
    ignores self loops; used on live subgraphs inside the solver and the oracle.
    """
    entry = [-1] * n
    low = [0] * n
    comp = 0
    bridges: list[int] = []
    timer = 0
    for r in range(n):
        if entry[r] != -1:
            continue
        comp += 1
        entry[r] = low[r] = timer
        timer += 1
        stack = [[r, -1, 0, False]]  # vertex, incoming edge id, index, skip done
        while stack:
            frame = stack[-1]
            v = frame[0]
            nbrs = adj[v]
            i = frame[2]
            if i < len(nbrs):
                frame[2] = i + 1
                w, eid = nbrs[i]
                if eid == frame[1] and not frame[3]:
                    frame[3] = True
                    continue
                if w == v:
                    continue
                t = entry[w]
                if t == -1:
                    entry[w] = low[w] = timer
                    timer += 1
                    stack.append([w, eid, 0, False])
                elif t < low[v]:
                    low[v] = t
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > entry[parent]:
                        bridges.append(frame[1])
    return comp, bridges
