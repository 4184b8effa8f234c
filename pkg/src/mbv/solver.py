"""Exact minimum-branch-vertices solving by combinatorial branch and bound.

The search branches on one undecided edge at a time (exclude child explored
first), keeps the chosen edges acyclic, and prunes any node whose exclusions
disconnect the graph. Each node first propagates what is already decided:
bridges of the remaining graph go into the tree, edges that would close a
cycle with the chosen forest are dropped, repeated to a fixpoint.

The node lower bound sums three terms over disjoint vertex sets, each sound
for every completion of the node:

* forced branches: a completion gives v at least its extra degree, plus one
  edge per incident bridge of the remaining graph, plus (within v's
  two-edge-connected class) the larger of its chosen class degree and the
  number of pieces the class falls into without v; when that total exceeds
  two, v is a branch no matter what.
* contracted groups: a group of vertices joined by chosen edges whose removal
  splits the contracted remaining graph into three or more pieces needs three
  outside connections, but its members jointly have at most two units of
  branch-free degree left, so some member branches. Only groups where every
  member is scored and none is already forced are counted.
* class degree accounting: inside one two-edge-connected class of h vertices,
  any completion's class degrees sum to 2(h-1) with every vertex at least 1;
  a branch-free vertex absorbs at most 2 minus its extra degree minus its
  bridge degree, so the leftover excess forces fresh branches, counted
  greedily against the largest physical-degree gains.

Branching picks the undecided edge at the most constrained endpoint (largest
extra-plus-bridge-plus-chosen degree), then the highest remaining degree, then
the smallest edge index, and explores the exclude child first. These are
measured defaults, not load-bearing for correctness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from time import perf_counter

from .bound import obligatory_branch_bound
from .decompose import Component, Original, decompose, recombine
from .graph import Graph, SpanningTree, UnionFind, _edge_dfs, spanning_tree
from .heuristics import HeuristicOverlay, best_heuristic, overlay_branch_value


@dataclass(frozen=True)
class SolveOptions:
    """Search controls; the gap tolerance mirrors integer-objective stopping."""

    time_limit: float | None = None
    use_warm_start: bool = True
    node_limit: int | None = None
    absolute_gap_tolerance: float = 0.9999


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve: bounds, witness tree, and search statistics."""

    lower_bound: float
    upper_bound: int
    tree: SpanningTree
    optimal: bool
    nodes_explored: int
    elapsed: float
    gap_percent: float


def _gap_percent(lower: float, upper: int) -> float:
    return 100.0 * (upper - lower) / upper if upper > 0 else 0.0


def _report(lower, upper, tree, optimal, nodes, elapsed) -> SolveReport:
    return SolveReport(
        lower_bound=lower,
        upper_bound=upper,
        tree=tree,
        optimal=optimal,
        nodes_explored=nodes,
        elapsed=elapsed,
        gap_percent=_gap_percent(lower, upper),
    )


def _class_structure(n: int, adj: list[list[int]]) -> tuple[list[int], list[int], list[list[int]]]:
    """Component labels and per-vertex split counts for a plain adjacency list.

    Returns (class_of, pieces, members): class_of[v] is -1 for vertices with
    no edges, pieces[v] is how many parts v's own component falls into when v
    is removed (0 for isolated vertices).
    """
    entry = [-1] * n
    low = [0] * n
    hits = [0] * n
    class_of = [-1] * n
    members: list[list[int]] = []
    pieces = [0] * n
    timer = 0
    for r in range(n):
        if entry[r] != -1 or not adj[r]:
            continue
        cid = len(members)
        group = [r]
        members.append(group)
        class_of[r] = cid
        entry[r] = low[r] = timer
        timer += 1
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
                    frame[3] = True
                    continue
                t = entry[w]
                if t == -1:
                    entry[w] = low[w] = timer
                    timer += 1
                    class_of[w] = cid
                    group.append(w)
                    stack.append([w, v, 0, False])
                elif t < low[v]:
                    low[v] = t
            else:
                stack.pop()
                p = frame[1]
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= entry[p]:
                        hits[p] += 1
        pieces[r] = hits[r]  # the root's hits count every child
        for v in group:
            if v != r:
                pieces[v] = hits[v] + 1
    return class_of, pieces, members


def _pieces_of(adj: dict[int, list[int]]) -> dict[int, int]:
    """Per vertex of a small adjacency dict: parts its component splits into."""
    entry: dict[int, int] = {}
    low: dict[int, int] = {}
    hits: dict[int, int] = {}
    timer = 0
    pieces: dict[int, int] = {}
    for r in adj:
        if r in entry:
            continue
        entry[r] = low[r] = timer
        timer += 1
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
                    frame[3] = True
                    continue
                if w in entry:
                    if entry[w] < low[v]:
                        low[v] = entry[w]
                else:
                    entry[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0, False])
            else:
                stack.pop()
                p = frame[1]
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= entry[p]:
                        hits[p] = hits.get(p, 0) + 1
        # roots gathered every child in hits, so the uniform rule below works
        pieces[r] = hits.get(r, 0)
    for v in adj:
        if v not in pieces:
            pieces[v] = hits.get(v, 0) + 1
    return pieces


def _fallback_tree_ids(g: Graph) -> set[int]:
    """Deterministic DFS spanning tree by edge ids, for reports with no incumbent."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for ei, (u, v) in enumerate(g.edges):
        adj[u].append((v, ei))
        adj[v].append((u, ei))
    seen = [False] * g.n
    seen[0] = True
    picked: set[int] = set()
    stack = [0]
    while stack:
        v = stack.pop()
        for w, ei in adj[v]:
            if not seen[w]:
                seen[w] = True
                picked.add(ei)
                stack.append(w)
    return picked


def _search(
    g: Graph,
    extra: dict[int, int],
    countable: list[bool],
    warm_ids: set[int] | None,
    warm_value: int | None,
    opts: SolveOptions,
) -> tuple[float, int, frozenset[int], bool, int, float]:
    """Core branch and bound over edge ids; returns (lb, ub, tree_ids, optimal, nodes, elapsed)."""
    t0 = perf_counter()
    deadline = t0 + opts.time_limit if opts.time_limit is not None else None
    n, m = g.n, g.m
    edges = g.edges
    gamma = [extra.get(v, 0) for v in range(n)]
    tol = opts.absolute_gap_tolerance

    best_ids: frozenset[int] | None = None
    best_val = math.inf
    if warm_ids is not None:
        best_ids = frozenset(warm_ids)
        best_val = warm_value

    nodes = 0
    stopped = False
    pruned_floor = math.inf  # best bound among tolerance-pruned subtrees
    stack: list[tuple[frozenset[int], frozenset[int], float]] = [
        (frozenset(), frozenset(), 0.0)
    ]
    while stack:
        if opts.node_limit is not None and nodes >= opts.node_limit:
            stopped = True
            break
        if deadline is not None and perf_counter() > deadline:
            stopped = True
            break
        excluded_f, included_f, inherited = stack.pop()
        if best_val - inherited < tol:
            if inherited < pruned_floor:
                pruned_floor = inherited
            continue
        nodes += 1

        excluded = set(excluded_f)
        included = set(included_f)
        uf = UnionFind(n)
        for ei in included:
            uf.union(*edges[ei])

        # propagate: force bridges of the live graph, drop cycle closers
        feasible = True
        while True:
            live_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
            for ei in range(m):
                if ei not in excluded:
                    u, v = edges[ei]
                    live_adj[u].append((v, ei))
                    live_adj[v].append((u, ei))
            comp, bridge_ids = _edge_dfs(n, live_adj)
            if comp != 1:
                feasible = False
                break
            changed = False
            for ei in bridge_ids:
                if ei in included:
                    continue
                u, v = edges[ei]
                if not uf.union(u, v):
                    feasible = False  # a mandatory edge would close a cycle
                    break
                included.add(ei)
                changed = True
            if not feasible:
                break
            closers = [
                ei
                for ei in range(m)
                if ei not in excluded
                and ei not in included
                and uf.find(edges[ei][0]) == uf.find(edges[ei][1])
            ]
            if closers:
                excluded.update(closers)
                changed = True
            if not changed:
                break
        if not feasible:
            continue

        inc_deg = [0] * n
        for ei in included:
            u, v = edges[ei]
            inc_deg[u] += 1
            inc_deg[v] += 1

        if len(included) == n - 1:
            value = sum(
                1 for v in range(n) if countable[v] and inc_deg[v] + gamma[v] > 2
            )
            if value < best_val:
                best_val = value
                best_ids = frozenset(included)
            continue

        # node lower bound, term 1: branches forced by guaranteed degree
        bridge_set = set(bridge_ids)
        bridge_deg = [0] * n
        for ei in bridge_set:
            u, v = edges[ei]
            bridge_deg[u] += 1
            bridge_deg[v] += 1
        inc_class_deg = [0] * n
        for ei in included:
            if ei not in bridge_set:
                u, v = edges[ei]
                inc_class_deg[u] += 1
                inc_class_deg[v] += 1
        class_adj: list[list[int]] = [[] for _ in range(n)]
        for ei in range(m):
            if ei not in excluded and ei not in bridge_set:
                u, v = edges[ei]
                class_adj[u].append(v)
                class_adj[v].append(u)
        class_of, class_pieces, class_members = _class_structure(n, class_adj)
        forced_branch = [False] * n
        c1 = 0
        for v in range(n):
            if not countable[v]:
                continue
            base = class_pieces[v]
            if inc_class_deg[v] > base:
                base = inc_class_deg[v]
            if gamma[v] + bridge_deg[v] + base > 2:
                forced_branch[v] = True
                c1 += 1

        # term 2: contracted groups whose removal leaves three or more pieces
        super_adj: dict[int, list[int]] = {}
        super_edges: set[tuple[int, int]] = set()
        for ei in range(m):
            if ei in excluded:
                continue
            u, v = edges[ei]
            ru, rv = uf.find(u), uf.find(v)
            if ru == rv:
                continue
            key = (ru, rv) if ru < rv else (rv, ru)
            if key in super_edges:
                continue
            super_edges.add(key)
            super_adj.setdefault(ru, []).append(rv)
            super_adj.setdefault(rv, []).append(ru)
        in_c2_group = [False] * n
        c2 = 0
        if super_adj:
            pieces = _pieces_of(super_adj)
            group_absorbs: dict[int, bool] = {}
            group_members: dict[int, list[int]] = {}
            for v in range(n):
                r = uf.find(v)
                group_members.setdefault(r, []).append(v)
                if not countable[v] or forced_branch[v]:
                    group_absorbs[r] = True
            for r, p in pieces.items():
                if p >= 3 and not group_absorbs.get(r, False):
                    c2 += 1
                    for v in group_members[r]:
                        in_c2_group[v] = True

        # term 3: degree accounting inside each two-edge-connected class
        c3 = 0
        for group in class_members:
            h = len(group)
            free = 0
            gains = []
            for v in group:
                d = len(class_adj[v])
                if not countable[v] or forced_branch[v] or in_c2_group[v]:
                    free += d - 1
                    continue
                cap = 2 - gamma[v] - bridge_deg[v]
                if d <= cap:
                    free += d - 1
                else:
                    free += cap - 1
                    gains.append(d - cap)
            need = h - 2 - free
            if need > 0:
                gains.sort(reverse=True)
                for gain in gains:
                    c3 += 1
                    need -= gain
                    if need <= 0:
                        break

        bound = float(c1 + c2 + c3)
        if best_val - bound < tol:
            if bound < pruned_floor:
                pruned_floor = bound
            continue

        # branch on the undecided edge at the most constrained endpoint,
        # then the densest; deciding tight vertices first moves the bound
        live_deg = [len(a) for a in live_adj]
        tightness = [
            gamma[v] + bridge_deg[v] + inc_class_deg[v] if countable[v] else -1
            for v in range(n)
        ]
        pick = -1
        pick_score = (-2, -1)
        for ei in range(m):
            if ei in excluded or ei in included:
                continue
            u, v = edges[ei]
            tu, tv = tightness[u], tightness[v]
            du, dv = live_deg[u], live_deg[v]
            score = (tu if tu >= tv else tv, du if du >= dv else dv)
            if score > pick_score:
                pick_score = score
                pick = ei
        stack.append((frozenset(excluded), frozenset(included | {pick}), bound))
        stack.append((frozenset(excluded | {pick}), frozenset(included), bound))

    elapsed = perf_counter() - t0
    if stopped:
        if best_ids is None:
            best_ids = frozenset(_fallback_tree_ids(g))
            best_val = sum(
                1
                for v, d in enumerate(_ids_degree(g, best_ids))
                if countable[v] and d + gamma[v] > 2
            )
        open_bounds = [b for _, _, b in stack]
        lower = min([float(best_val), pruned_floor] + open_bounds)
        optimal = best_val == lower or best_val - lower < tol
    else:
        # with the default tolerance and an integer objective the pruned floor
        # is never below the incumbent, so this reports lower == upper
        lower = min(float(best_val), pruned_floor)
        optimal = True
    return lower, int(best_val), best_ids, optimal, nodes, elapsed


def _ids_degree(g: Graph, ids) -> list[int]:
    deg = [0] * g.n
    for ei in ids:
        u, v = g.edges[ei]
        deg[u] += 1
        deg[v] += 1
    return deg


def _edge_ids(g: Graph, tree_edges) -> set[int]:
    index = {e: i for i, e in enumerate(g.edges)}
    return {index[(u, v) if u < v else (v, u)] for u, v in tree_edges}


def solve_plain(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveReport:
    """Exact solve on the whole graph; anytime-sound when limits cut it short."""
    t0 = perf_counter()
    lb0 = obligatory_branch_bound(g)  # also rejects disconnected input
    if g.n == 1:
        return _report(0.0, 0, spanning_tree(g, ()), True, 0, perf_counter() - t0)
    warm_ids = warm_val = None
    if opts.use_warm_start:
        warm = best_heuristic(g, lb0)
        warm_ids = _edge_ids(g, warm.edges)
        warm_val = warm.branches
    lower, upper, ids, optimal, nodes, _ = _search(
        g, {}, [True] * g.n, warm_ids, warm_val, opts
    )
    tree = spanning_tree(g, [g.edges[ei] for ei in ids])
    return _report(lower, upper, tree, optimal, nodes, perf_counter() - t0)


def solve_component(
    c: Component, opts: SolveOptions = SolveOptions(), seed_tree=None
) -> SolveReport:
    """Exact solve of one decomposition component under component semantics.

    Split copies never count toward the objective; original vertices carry
    their extra degree. Single-vertex components are answered immediately.
    ``seed_tree`` is an optional extra incumbent (local edges); the enhanced
    pipeline passes the projection of a whole-graph heuristic tree, which is
    sometimes better than the component's own heuristics.
    """
    t0 = perf_counter()
    g = c.graph
    if g.n == 1:
        return _report(0.0, 0, spanning_tree(g, ()), True, 0, perf_counter() - t0)
    countable = [isinstance(p, Original) for p in c.provenance]
    overlay = HeuristicOverlay(
        extra_degree=dict(c.extra_degree),
        exempt=frozenset(i for i, keep in enumerate(countable) if not keep),
    )
    warm_ids = warm_val = None
    if opts.use_warm_start:
        lb0 = obligatory_branch_bound(g)
        warm = best_heuristic(g, lb0, overlay)
        warm_ids = _edge_ids(g, warm.edges)
        warm_val = overlay_branch_value(warm, overlay)
    if seed_tree is not None:
        seed = spanning_tree(g, seed_tree)
        seed_val = overlay_branch_value(seed, overlay)
        if warm_val is None or seed_val < warm_val:
            warm_ids = _edge_ids(g, seed.edges)
            warm_val = seed_val
    lower, upper, ids, optimal, nodes, _ = _search(
        g, dict(c.extra_degree), countable, warm_ids, warm_val, opts
    )
    tree = spanning_tree(g, [g.edges[ei] for ei in ids])
    return _report(lower, upper, tree, optimal, nodes, perf_counter() - t0)


def solve_with_decomposition(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveReport:
    """Bound, decompose, solve every component, and recombine the witness.

    Any remaining time budget is split across unfinished components in
    proportion to their edge counts, recomputed as components finish.
    """
    t0 = perf_counter()
    deadline = t0 + opts.time_limit if opts.time_limit is not None else None
    lb = obligatory_branch_bound(g)
    d = decompose(g, lb)
    global_warm_edges = None
    if opts.use_warm_start and g.n > 1:
        global_warm_edges = best_heuristic(g, lb).edges
    reports = []
    for k, comp in enumerate(d.components):
        sub = opts
        if deadline is not None:
            remaining_edges = sum(c.graph.m for c in d.components[k:])
            remaining_time = max(deadline - perf_counter(), 0.0)
            if remaining_edges:
                share = remaining_time * comp.graph.m / remaining_edges
            else:
                share = remaining_time
            sub = replace(opts, time_limit=max(share, 1e-3))
        seed = None
        if global_warm_edges is not None and comp.graph.n > 1:
            # a whole-graph tree restricted to a component spans it
            seed = [
                e for e, origin in comp.edge_origin.items()
                if origin in global_warm_edges
            ]
        reports.append(solve_component(comp, sub, seed_tree=seed))
    upper = lb.value + sum(r.upper_bound for r in reports)
    lower = float(lb.value) + sum(r.lower_bound for r in reports)
    tree = recombine(d, [r.tree.edges for r in reports])
    return _report(
        lower,
        upper,
        tree,
        all(r.optimal for r in reports),
        sum(r.nodes_explored for r in reports),
        perf_counter() - t0,
    )
