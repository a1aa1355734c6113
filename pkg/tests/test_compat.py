"""Compatibility graph tests against direct pairwise checks."""

import math
from itertools import combinations

from treespan.compat import analyze, bfs_distance, build_compat_graph
from treespan.trees import canon_tree, is_compatible

import pytest

from treespan.errors import NodeMissingError


def test_k3_complete_graph(pk3):
    g = build_compat_graph(pk3)
    assert len(g.nodes) == 3
    assert g.edge_count() == 3
    a = analyze(g)
    assert a.connected and a.diameter == 1


def test_adjacency_matches_is_compatible(sq):
    g = build_compat_graph(sq)
    assert len(g.nodes) == 12
    for i, j in combinations(range(len(g.nodes)), 2):
        want = is_compatible(sq, g.nodes[i], g.nodes[j])
        got = bool(g.adjacency[i] >> j & 1)
        assert got == want


def test_square_connected(sq):
    a = analyze(build_compat_graph(sq))
    assert a.connected
    assert a.diameter == max(a.eccentricities)


def test_bfs_distance(sq):
    g = build_compat_graph(sq)
    t = canon_tree([(0, 1), (1, 2), (2, 3)])
    assert bfs_distance(g, t, t) == 0
    u = canon_tree([(0, 1), (0, 3), (1, 2)])
    assert bfs_distance(g, t, u) == 1
    star1 = canon_tree([(0, 1), (0, 2), (0, 3)])
    star2 = canon_tree([(0, 1), (1, 2), (1, 3)])
    assert bfs_distance(g, star1, star2) <= 2


def test_missing_node(sq):
    g = build_compat_graph(sq)
    with pytest.raises(NodeMissingError):
        bfs_distance(g, [(0, 2), (1, 3), (0, 1)], g.nodes[0])


def test_restricted_subset(sq):
    g_all = build_compat_graph(sq)
    g_star = build_compat_graph(sq, restricted=True)
    assert set(g_star.nodes) <= set(g_all.nodes)
    # at n=4 every plane spanning tree is a star or a twin star path
    assert set(g_star.nodes) == set(g_all.nodes)


def test_disconnected_reports_inf():
    # artificial two-node graph with no edges
    from treespan.compat import CompatGraph

    g = CompatGraph(nodes=[((0, 1),), ((1, 2),)], adjacency=[0, 0],
                    restricted=False, index={((0, 1),): 0, ((1, 2),): 1})
    a = analyze(g)
    assert not a.connected and a.diameter == math.inf and a.components == 2
