"""Graphs whose vertices are vertex sets.

``SetGraph`` is undirected (junction trees).  ``SetDigraph`` keeps parent and
child maps separately (Almond trees, Ibarra graphs); its undirected view is
the union of the two.
"""
from __future__ import annotations

from collections.abc import Iterator
from itertools import chain

from .graph import Discipline, StructuralError, reachable, search

Node = frozenset


class SetGraph:
    __slots__ = ("_nbrs",)

    directed = False

    def __init__(self) -> None:
        self._nbrs: dict[Node, set[Node]] = {}

    def __contains__(self, node: object) -> bool:
        return node in self._nbrs

    def __len__(self) -> int:
        return len(self._nbrs)

    def nodes(self) -> Iterator[Node]:
        return iter(self._nbrs)

    def add_node(self, node: Node) -> None:
        if node not in self._nbrs:
            self._nbrs[node] = set()

    def remove_node(self, node: Node) -> None:
        for m in self._nbrs.pop(node):
            self._nbrs[m].discard(node)

    def add_edge(self, a: Node, b: Node) -> None:
        if a == b:
            raise StructuralError(f"self-loop at {set(a)}")
        self._nbrs[a].add(b)
        self._nbrs[b].add(a)

    def remove_edge(self, a: Node, b: Node) -> None:
        if b not in self._nbrs[a]:
            raise StructuralError(f"no edge {set(a)} - {set(b)}")
        self._nbrs[a].discard(b)
        self._nbrs[b].discard(a)

    def has_edge(self, a: Node, b: Node) -> bool:
        return b in self._nbrs.get(a, ())

    def neighbours(self, node: Node) -> set[Node]:
        return self._nbrs[node]

    def edges(self) -> Iterator[tuple[Node, Node]]:
        seen: set[Node] = set()
        for a, nb in self._nbrs.items():
            for b in nb:
                if b not in seen:
                    yield (a, b)
            seen.add(a)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs.values()) // 2

    def adjacency(self) -> dict[Node, set[Node]]:
        """Undirected adjacency as a fresh dict of sets."""
        return {a: set(nb) for a, nb in self._nbrs.items()}


class SetDigraph:
    __slots__ = ("parents", "children")

    directed = True

    def __init__(self) -> None:
        self.parents: dict[Node, set[Node]] = {}
        self.children: dict[Node, set[Node]] = {}

    def __contains__(self, node: object) -> bool:
        return node in self.children

    def __len__(self) -> int:
        return len(self.children)

    def nodes(self) -> Iterator[Node]:
        return iter(self.children)

    def add_node(self, node: Node) -> None:
        if node not in self.children:
            self.children[node] = set()
            self.parents[node] = set()

    def remove_node(self, node: Node) -> None:
        for c in self.children.pop(node):
            self.parents[c].discard(node)
        for p in self.parents.pop(node):
            self.children[p].discard(node)

    def add_edge(self, parent: Node, child: Node) -> None:
        """Add the directed edge ``parent -> child``."""
        if parent == child:
            raise StructuralError(f"self-loop at {set(parent)}")
        self.children[parent].add(child)
        self.parents[child].add(parent)

    def remove_edge(self, parent: Node, child: Node) -> None:
        if child not in self.children[parent]:
            raise StructuralError(f"no edge {set(parent)} -> {set(child)}")
        self.children[parent].discard(child)
        self.parents[child].discard(parent)

    def disconnect(self, a: Node, b: Node) -> None:
        """Remove the edge between ``a`` and ``b`` whichever way it points."""
        if b in self.children[a]:
            self.remove_edge(a, b)
        else:
            self.remove_edge(b, a)

    def has_edge(self, parent: Node, child: Node) -> bool:
        return child in self.children.get(parent, ())

    def neighbours(self, node: Node) -> Iterator[Node]:
        return chain(self.children[node], self.parents[node])

    def is_clique_node(self, node: Node) -> bool:
        return not self.children[node]

    def edges(self) -> Iterator[tuple[Node, Node]]:
        for p, cs in self.children.items():
            for c in cs:
                yield (p, c)

    def edge_count(self) -> int:
        return sum(len(cs) for cs in self.children.values())

    def ancestors(self, node: Node) -> set[Node]:
        out: set[Node] = set()
        stack = list(self.parents[node])
        while stack:
            a = stack.pop()
            if a not in out:
                out.add(a)
                stack.extend(self.parents[a])
        return out

    def descendants(self, node: Node) -> set[Node]:
        out: set[Node] = set()
        stack = list(self.children[node])
        while stack:
            a = stack.pop()
            if a not in out:
                out.add(a)
                stack.extend(self.children[a])
        return out

    def adjacency(self) -> dict[Node, set[Node]]:
        return {a: self.children[a] | self.parents[a] for a in self.children}


def endpoint_path(neighbours, start: Node, x: int, y: int, discipline: Discipline = Discipline.FIFO) -> list[Node]:
    """Search from ``start`` (a set holding ``x``) to the first set holding ``y``.

    The backtracked path is trimmed so that it begins at the last set on it
    that still holds ``x``.
    """
    path = search(neighbours, start, discipline, is_target=lambda c: y in c)
    if path is None:
        raise StructuralError("set graph is not connected")
    for i in range(len(path) - 1, -1, -1):
        if x in path[i]:
            return path[i:]
    raise StructuralError(f"start set {sorted(start)} does not hold vertex {x}")


def find_sxy(neighbours, start: Node, x: int, y: int, discipline: Discipline = Discipline.FIFO) -> tuple[Node, bool]:
    """Common neighbours of ``x`` and ``y`` read off a set graph with the junction property."""
    path = endpoint_path(neighbours, start, x, y, discipline)
    last = path[-1]
    if x in last:
        both = {x, y}
        region = reachable(neighbours, last, proceed=lambda c: both <= c)
        members = set().union(*(c for c in region if both <= c))
        return frozenset(members - both), True
    return path[0] & last, False
