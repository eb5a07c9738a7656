"""Brute-force ground truth for decomposable graphs.

Nothing here is shared with the sampler backends: chordality comes from
maximum cardinality search, cliques from Bron-Kerbosch, separators from a
Prim-style perfect ordering.  Slow on purpose, fine for tens of vertices.
"""
from __future__ import annotations

import random
from collections import Counter
from collections.abc import Iterable, Mapping
from itertools import combinations

from .graph import UndirectedGraph
from .setgraph import SetDigraph

__all__ = [
    "NotDecomposableError",
    "mcs_order",
    "is_decomposable",
    "enumerate_cliques",
    "perfect_ordering",
    "separator_multiset",
    "check_junction_property",
    "check_junction_property_exhaustive",
    "is_tree",
    "rebuild_ibarra",
    "legality_oracle",
    "random_decomposable",
    "graph_from_cliques",
]


class NotDecomposableError(ValueError):
    pass


def mcs_order(g: UndirectedGraph, rng: random.Random | None = None) -> list[int]:
    """Maximum cardinality search visiting order (ties broken by ``rng`` or by id)."""
    n = g.n
    weight = [0] * n
    done = [False] * n
    order = []
    for _ in range(n):
        best = -1
        cands = []
        for v in range(n):
            if not done[v]:
                if weight[v] > best:
                    best = weight[v]
                    cands = [v]
                elif weight[v] == best:
                    cands.append(v)
        v = rng.choice(cands) if rng is not None else cands[0]
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                weight[u] += 1
    return order


def is_decomposable(g: UndirectedGraph) -> bool:
    """Chordality test: the reverse MCS order must be a perfect elimination order."""
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        for u in earlier:
            if u != parent and u not in g.adj[parent]:
                return False
    return True


def enumerate_cliques(g: UndirectedGraph) -> set[frozenset[int]]:
    """All maximal complete sets, via Bron-Kerbosch with pivoting."""
    out: set[frozenset[int]] = set()
    adj = g.adj

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.add(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(set(), set(range(g.n)), set())
    if g.n == 0:
        return set()
    return out


def perfect_ordering(
    g: UndirectedGraph, rng: random.Random | None = None
) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """A perfect clique ordering and its separators ``S_2..S_c``.

    Cliques are appended greedily by largest overlap with some placed clique,
    which grows a heaviest spanning tree of the clique intersection graph.
    ``rng`` randomises the first clique and tie-breaking.
    """
    if not is_decomposable(g):
        raise NotDecomposableError("graph is not decomposable")
    cliques = sorted(enumerate_cliques(g), key=sorted)
    if rng is not None:
        rng.shuffle(cliques)
    if not cliques:
        return [], []
    placed = [cliques[0]]
    rest = cliques[1:]
    best = [len(c & cliques[0]) for c in rest]
    union = set(cliques[0])
    seps = []
    while rest:
        i = max(range(len(rest)), key=best.__getitem__)
        c = rest.pop(i)
        best.pop(i)
        s = frozenset(c & union)
        if not any(s <= p for p in placed):
            raise NotDecomposableError("running intersection property violated")
        placed.append(c)
        seps.append(s)
        union |= c
        best = [max(w, len(r & c)) for w, r in zip(best, rest)]
    return placed, seps


def separator_multiset(g: UndirectedGraph, rng: random.Random | None = None) -> Counter:
    return Counter(perfect_ordering(g, rng)[1])


def _as_adjacency(sg) -> Mapping:
    return sg if isinstance(sg, Mapping) else sg.adjacency()


def _connected(adj: Mapping, members: set) -> bool:
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b in members and b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(members)


def check_junction_property(sg) -> bool:
    """Junction property of a set graph (undirected view).

    For any ``A`` the vertices containing ``A`` are exactly those containing
    the intersection of all vertices that contain ``A``.  So it suffices to
    test ``A`` over the empty set, singletons and the closure of the vertex
    sets under pairwise intersection.  On a tree the singletons are enough,
    since subtrees of a tree intersect in a subtree.
    """
    adj = _as_adjacency(sg)
    nodes = list(adj)
    tests: set[frozenset] = {frozenset()}
    for v in nodes:
        tests.update(frozenset([u]) for u in v)
    if is_tree(adj):
        return all(_connected(adj, {v for v in nodes if a <= v}) for a in tests)
    layer = set(nodes)
    closure = set(nodes)
    while layer:
        fresh = set()
        for a in layer:
            for b in nodes:
                c = a & b
                if c not in closure:
                    fresh.add(c)
        closure |= fresh
        layer = fresh
    tests |= closure
    for a in tests:
        members = {v for v in nodes if a <= v}
        if not _connected(adj, members):
            return False
    return True


def check_junction_property_exhaustive(sg, universe: Iterable[int]) -> bool:
    """Junction property tested on every subset of ``universe`` (tiny inputs only)."""
    adj = _as_adjacency(sg)
    nodes = list(adj)
    u = sorted(universe)
    for r in range(len(u) + 1):
        for a in combinations(u, r):
            fa = frozenset(a)
            if not _connected(adj, {v for v in nodes if fa <= v}):
                return False
    return True


def is_tree(sg) -> bool:
    adj = _as_adjacency(sg)
    n = len(adj)
    m = sum(len(nb) for nb in adj.values()) // 2
    return n > 0 and m == n - 1 and _connected(adj, set(adj))


def rebuild_ibarra(g: UndirectedGraph, cliques=None, separators=None) -> SetDigraph:
    """The Ibarra clique-separator graph built straight from its definition.

    Precomputed ``cliques`` and ``separators`` of ``g`` may be passed in.
    """
    if cliques is None:
        cliques = enumerate_cliques(g)
    seps = set(separator_multiset(g) if separators is None else separators)
    vertices = cliques | seps
    ig = SetDigraph()
    for v in vertices:
        ig.add_node(v)
    for s in seps:
        for t in vertices:
            if s < t and not any(s < u < t for u in seps):
                ig.add_edge(s, t)
    return ig


def legality_oracle(g: UndirectedGraph, x: int, y: int) -> bool:
    """Whether toggling the edge ``(x, y)`` leaves ``g`` decomposable."""
    h = g.copy()
    if h.has_edge(x, y):
        h.remove_edge(x, y)
    else:
        h.add_edge(x, y)
    return is_decomposable(h)


def random_decomposable(n: int, moves: int, rng: random.Random) -> UndirectedGraph:
    """Random walk of legal single-edge toggles from the empty graph."""
    g = UndirectedGraph(n)
    if n < 2:
        return g
    for _ in range(moves):
        x, y = rng.sample(range(n), 2)
        if legality_oracle(g, x, y):
            if g.has_edge(x, y):
                g.remove_edge(x, y)
            else:
                g.add_edge(x, y)
    return g


def graph_from_cliques(n: int, cliques: Iterable[Iterable[int]]) -> UndirectedGraph:
    g = UndirectedGraph(n)
    for c in cliques:
        for a, b in combinations(sorted(c), 2):
            g.add_edge(a, b)
    return g
