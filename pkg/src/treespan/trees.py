"""Plane spanning trees as canonical edge sets.

Trees are identified with their sorted tuple of (u, v) edges.  Certification
covers spanning/acyclicity/planarity plus a k-star kind; the star-family
transformations additionally use the representation helpers below, because
the star, double-star and twin-star classes overlap (one tree can admit
several fixed-path representations).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .drawing import Drawing, Edge, edge
from .errors import IncompatibleError, TooLargeError, UnknownEdgeError

Tree = Tuple[Edge, ...]

ENUM_LIMIT_ALL = 8
ENUM_LIMIT_SPECIAL = 10


def canon_tree(edges: Iterable[Edge]) -> Tree:
    out = sorted(edge(u, v) for u, v in edges)
    if len(set(out)) != len(out):
        raise ValueError("duplicate edges")
    return tuple(out)


@dataclass(frozen=True)
class TreeCert:
    spanning: bool
    acyclic_connected: bool
    plane: bool
    kind: Optional[tuple] = None  # ("star", c) | ("double_star", g, r)
    #                             | ("twin_star", g, s, r)
    #                             | ("k_star", k, path) | ("generic",)

    @property
    def is_plane_spanning_tree(self) -> bool:
        return self.spanning and self.acyclic_connected and self.plane


# ---------------------------------------------------------------------------
# basic graph structure
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_spanning_tree(n: int, tree: Iterable[Edge]) -> bool:
    tree = list(tree)
    if len(tree) != n - 1:
        return False
    uf = _UnionFind(n)
    return all(uf.union(u, v) for u, v in tree)


def _adjacency(tree: Iterable[Edge]) -> Dict[int, List[int]]:
    adj: Dict[int, List[int]] = {}
    for u, v in tree:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


# ---------------------------------------------------------------------------
# k-star representations
# ---------------------------------------------------------------------------

def star_centers(tree: Tree) -> List[int]:
    verts = {v for e in tree for v in e}
    return sorted(c for c in verts if all(c in e for e in tree))


def double_star_paths(tree: Tree) -> List[Tuple[int, int]]:
    """All (g, r) with edge gr in the tree and every edge touching g or r."""
    out = []
    for g, r in tree:
        if all(g in e or r in e for e in tree):
            out.extend([(g, r), (r, g)])
    return sorted(out)


def twin_star_paths(tree: Tree) -> List[Tuple[int, int, int]]:
    """All (g, s, r) with edges gs, sr in the tree, gr absent, and every
    edge touching g or r."""
    edges = set(tree)
    adj = _adjacency(tree)
    out = []
    for s, nbrs in adj.items():
        for g, r in itertools.permutations(nbrs, 2):
            if g >= r:
                continue
            if edge(g, r) in edges:
                continue
            if all(g in e or r in e for e in tree):
                out.extend([(g, s, r), (r, s, g)])
    return sorted(out)


def _is_path_on_four(tree: Tree) -> bool:
    if len(tree) != 3:
        return False
    degs = {}
    for u, v in tree:
        degs[u] = degs.get(u, 0) + 1
        degs[v] = degs.get(v, 0) + 1
    return sorted(degs.values()) == [1, 1, 2, 2]


def _strip_leaf_path(tree: Tree) -> Optional[Tuple[int, ...]]:
    """If the tree is a path plus leaves hanging off the path's two ends,
    return that path (the non-leaf core); otherwise None."""
    adj = _adjacency(tree)
    deg = {v: len(ns) for v, ns in adj.items()}
    core = [v for v, k in deg.items() if k >= 2]
    if not core:  # single edge
        return None
    core_set = set(core)
    ends = [v for v in core if sum(1 for w in adj[v] if w in core_set) <= 1]
    if len(core) == 1:
        path = [core[0]]
    else:
        if len(ends) != 2:
            return None
        path = [ends[0]]
        prev = None
        while path[-1] != ends[1]:
            nxt = [w for w in adj[path[-1]] if w in core_set and w != prev]
            if len(nxt) != 1:
                return None
            prev = path[-1]
            path.append(nxt[0])
        if set(path) != core_set:
            return None
    p0, pk = path[0], path[-1]
    for v, k in deg.items():
        if v in core_set:
            continue
        if not (edge(v, p0) in set(tree) or edge(v, pk) in set(tree)):
            return None
    for v in path[1:-1]:
        if deg[v] != 2:
            return None
    return tuple(path)


def classify_kind(n: int, tree: Tree) -> tuple:
    """Most specific k-star kind; a 4-vertex path is reported as a twin star
    (its canonical fixed path), larger overlaps resolve to the smaller k."""
    centers = star_centers(tree)
    if centers:
        return ("star", centers[0])
    if n == 4 and _is_path_on_four(tree):
        return ("twin_star",) + twin_star_paths(tree)[0]
    doubles = double_star_paths(tree)
    if doubles:
        g, r = doubles[0]
        return ("double_star", min(g, r), max(g, r))
    twins = twin_star_paths(tree)
    if twins:
        return ("twin_star",) + twins[0]
    path = _strip_leaf_path(tree)
    if path is not None:
        return ("k_star", len(path) - 1, path)
    return ("generic",)


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

def check_tree(d: Drawing, edges_in: Iterable[Edge]) -> TreeCert:
    tree = canon_tree(edges_in)
    cached = d._cert_cache.get(tree)
    if cached is not None:
        return cached
    known = set(d.curves)
    for e in tree:
        if e not in known:
            raise UnknownEdgeError(f"edge {e} not in drawing")
    verts = {v for e in tree for v in e}
    spanning = verts == set(range(d.n))
    uf = _UnionFind(d.n)
    acyclic = all(uf.union(u, v) for u, v in tree)
    connected = acyclic and len(tree) == len(verts) - 1 if verts else False
    cross = d.crossings
    plane = not any(f in cross[e] for e, f in itertools.combinations(tree, 2))
    kind = None
    if spanning and connected and plane:
        kind = classify_kind(d.n, tree)
    cert = TreeCert(spanning=spanning, acyclic_connected=connected,
                    plane=plane, kind=kind)
    d._cert_cache[tree] = cert
    return cert


def is_compatible(d: Drawing, t1: Iterable[Edge], t2: Iterable[Edge]) -> bool:
    cross = d.crossings
    t2 = list(t2)
    return not any(f in cross[e] for e in t1 for f in t2)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_plane_trees(d: Drawing, kind: str = "all",
                          limit: Optional[int] = None) -> List[Tree]:
    """All plane spanning trees of the drawing, canonically ordered.

    Incremental growth over the sorted edge list with cycle and crossing
    pruning; ``kind`` filters by certificate kind ('all', 'star',
    'double_star', 'twin_star', or 'special' for the union of the three).
    """
    if kind not in ("all", "star", "double_star", "twin_star", "special"):
        raise ValueError(f"unknown filter {kind!r}")
    if limit is None:
        limit = ENUM_LIMIT_ALL if kind == "all" else ENUM_LIMIT_SPECIAL
    if d.n > limit:
        raise TooLargeError(d.n, limit)

    edges = d.edges
    cross = d.crossings
    m = len(edges)
    need = d.n - 1
    out: List[Tree] = []
    chosen: List[Edge] = []

    def grow(start: int, uf_parent: List[int], blocked: frozenset) -> None:
        if len(chosen) == need:
            out.append(tuple(chosen))
            return
        remaining = need - len(chosen)
        for i in range(start, m - remaining + 1):
            e = edges[i]
            if e in blocked:
                continue
            uf = _UnionFind(0)
            uf.parent = uf_parent[:]
            if not uf.union(e[0], e[1]):
                continue
            chosen.append(e)
            grow(i + 1, uf.parent, blocked | cross[e])
            chosen.pop()

    grow(0, list(range(d.n)), frozenset())

    if kind == "all":
        return out
    keep = {"star": ("star",), "double_star": ("double_star",),
            "twin_star": ("twin_star",),
            "special": ("star", "double_star", "twin_star")}[kind]
    return [t for t in out if classify_kind(d.n, t)[0] in keep]


# ---------------------------------------------------------------------------
# flips
# ---------------------------------------------------------------------------

def _cycle_with(tree: List[Edge], e: Edge) -> List[Edge]:
    """The unique cycle of tree + e, as a list of tree edges on it."""
    adj: Dict[int, List[Tuple[int, Edge]]] = {}
    for f in tree:
        adj.setdefault(f[0], []).append((f[1], f))
        adj.setdefault(f[1], []).append((f[0], f))
    target = e[1]
    path: List[Edge] = []
    seen = set()

    def dfs(v: int) -> bool:
        if v == target:
            return True
        seen.add(v)
        for w, f in adj.get(v, []):
            if w in seen:
                continue
            path.append(f)
            if dfs(w):
                return True
            path.pop()
        return False

    dfs(e[0])
    return path


def compatible_step_to_flips(d: Drawing, t1: Iterable[Edge],
                             t2: Iterable[Edge]) -> List[Tuple[Edge, Edge]]:
    """Expand one compatible tree pair into single edge flips: add each edge
    of t2 - t1 in canonical order, removing from the created cycle the
    highest-id edge of t1 - t2 on it.  Every intermediate stays a plane
    spanning tree."""
    t1, t2 = canon_tree(t1), canon_tree(t2)
    if not is_compatible(d, t1, t2):
        raise IncompatibleError("trees are not compatible")
    current = list(t1)
    t2set = set(t2)
    flips: List[Tuple[Edge, Edge]] = []
    for e in sorted(t2set - set(t1)):
        cycle = _cycle_with(current, e)
        removable = [f for f in cycle if f not in t2set]
        out = max(removable)
        current.remove(out)
        current.append(e)
        flips.append((out, e))
    return flips
