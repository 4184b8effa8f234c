import random

import pytest

from mbv import (
    branch_count,
    build_graph,
    connected_components,
    generate_random_connected,
    is_spanning_tree,
    spanning_tree,
    structural_report,
)
from mbv.errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    LoopEdgeError,
    NotASpanningTreeError,
)


def test_build_graph_normalizes(p4):
    assert p4.n == 4
    assert p4.edges == ((0, 1), (1, 2), (2, 3))
    assert p4.adjacency == ((1,), (0, 2), (1, 3), (2,))
    assert p4.degree(1) == 2


def test_build_graph_rejects_loop():
    with pytest.raises(LoopEdgeError):
        build_graph(3, [(0, 0)])


def test_build_graph_rejects_duplicate():
    with pytest.raises(DuplicateEdgeError):
        build_graph(2, [(0, 1), (1, 0)])


def test_build_graph_rejects_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        build_graph(2, [(0, 2)])
    with pytest.raises(IndexOutOfRangeError):
        build_graph(2, [(-1, 1)])


def test_connected_components(p4, c5):
    assert connected_components(p4)[0] == 1
    assert connected_components(c5)[0] == 1
    count, labels = connected_components(build_graph(5, [(0, 1), (2, 3)]))
    assert count == 3
    assert labels[0] == labels[1]
    assert labels[2] == labels[3]
    assert len({labels[0], labels[2], labels[4]}) == 3


def test_structural_report_star(star):
    rep = structural_report(star)
    assert rep.component_count == 1
    assert rep.articulation == {0: 3}
    assert rep.bridges == {(0, 1), (0, 2), (0, 3)}


def test_structural_report_cycle(c5):
    rep = structural_report(c5)
    assert rep.articulation == {}
    assert rep.bridges == frozenset()


def test_structural_report_two_triangles(two_triangles):
    rep = structural_report(two_triangles)
    assert rep.articulation == {2: 2, 3: 2}
    assert rep.bridges == {(2, 3)}


def _components_without_vertex(g, v):
    seen = {v}
    count = 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def _components_without_edge(g, e):
    seen = set()
    count = 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if (x, y) == e or (y, x) == e:
                    continue
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def test_structural_report_matches_deletion_recount():
    # cross-check articulation split counts and bridges against brute force
    rng = random.Random(7)
    for trial in range(60):
        n = rng.randrange(2, 13)
        max_m = n * (n - 1) // 2
        m = rng.randrange(0, max_m + 1)
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = build_graph(n, rng.sample(pool, m))
        rep = structural_report(g)
        base = rep.component_count
        assert base == connected_components(g)[0]
        for v in range(n):
            recount = _components_without_vertex(g, v)
            if recount > base:
                assert rep.articulation[v] == recount
            else:
                assert v not in rep.articulation
        for e in g.edges:
            assert (e in rep.bridges) == (_components_without_edge(g, e) > base)


def test_bridge_endpoints_are_articulation_points():
    # an endpoint of degree >= 2 with two incident bridges, or one bridge plus
    # any non-bridge edge, must be an articulation point
    rng = random.Random(71)
    for trial in range(40):
        n = rng.randrange(4, 13)
        m = min(n * (n - 1) // 2, n - 1 + rng.randrange(0, 6))
        g = generate_random_connected(n, m, rng.randrange(10**6))
        rep = structural_report(g)
        for v in range(n):
            if g.degree(v) < 2:
                continue
            incident = [e for e in rep.bridges if v in e]
            if len(incident) >= 2 or (incident and g.degree(v) > len(incident)):
                assert v in rep.articulation


def test_is_spanning_tree(p4, c5):
    assert is_spanning_tree(p4, p4.edges)
    assert not is_spanning_tree(c5, c5.edges)
    assert is_spanning_tree(c5, c5.edges[1:])


def test_spanning_tree_implies_connected_and_sized():
    for seed in range(20):
        g = generate_random_connected(9, 12, seed)
        tree = spanning_tree(g, next_tree_edges(g))
        assert len(tree.edges) == g.n - 1
        count, _ = connected_components(build_graph(g.n, tree.edges))
        assert count == 1


def next_tree_edges(g):
    # greedy forest: the lexicographically first spanning tree
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    picked = []
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            picked.append((u, v))
    return picked


def test_branch_count(p4, star, spider):
    assert branch_count(4, p4.edges) == 0
    assert branch_count(4, star.edges) == 1
    assert branch_count(7, spider.edges) == 1


def test_branch_count_relabel_invariant():
    rng = random.Random(3)
    for _ in range(20):
        g = generate_random_connected(8, 10, rng.randrange(10**6))
        tree = next_tree_edges(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = [(perm[u], perm[v]) for u, v in tree]
        assert branch_count(g.n, tree) == branch_count(g.n, relabeled)


def test_spanning_tree_certifier_rejects(c5):
    with pytest.raises(NotASpanningTreeError):
        spanning_tree(c5, c5.edges)  # too many edges
    with pytest.raises(NotASpanningTreeError):
        spanning_tree(c5, [(0, 1), (1, 2), (2, 3), (1, 3)])  # not a subset / cycle
