"""Undirected graphs over integer vertex ids and a generic path search.

Vertex sets are plain ``frozenset`` objects.  Python caches the hash of a
frozenset after the first lookup, so content-keyed dictionaries of sets stay
cheap without a separate interning table.
"""
from __future__ import annotations

import enum
import heapq
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Iterator
from typing import TypeVar

VertexSet = frozenset
EMPTY: frozenset[int] = frozenset()

T = TypeVar("T", bound=Hashable)


class StructuralError(ValueError):
    """Raised for malformed graph edits (self-loops, unknown vertices, absent edges)."""


class Discipline(enum.Enum):
    FIFO = "fifo"
    LIFO = "lifo"
    LIGHTEST_FIRST = "lightest"
    HEAVIEST_FIRST = "heaviest"


class UndirectedGraph:
    """Symmetric adjacency-set graph on the fixed universe ``{0, ..., n-1}``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise StructuralError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for x, y in edges:
            self.add_edge(x, y)

    @property
    def universe(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def _check(self, x: int, y: int) -> None:
        if x == y:
            raise StructuralError(f"self-loop at vertex {x}")
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise StructuralError(f"vertex pair ({x}, {y}) outside universe of size {self.n}")

    def add_edge(self, x: int, y: int) -> UndirectedGraph:
        self._check(x, y)
        self.adj[x].add(y)
        self.adj[y].add(x)
        return self

    def remove_edge(self, x: int, y: int) -> UndirectedGraph:
        self._check(x, y)
        if y not in self.adj[x]:
            raise StructuralError(f"no edge ({x}, {y}) to remove")
        self.adj[x].discard(y)
        self.adj[y].discard(x)
        return self

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adj[x]

    def neighbours(self, x: int) -> set[int]:
        return self.adj[x]

    def common_neighbors(self, x: int, y: int) -> frozenset[int]:
        """Return the common neighbours of ``x`` and ``y`` (never containing either)."""
        if x == y:
            raise StructuralError("common_neighbors needs two distinct vertices")
        return frozenset(self.adj[x] & self.adj[y])

    def is_complete(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        adj = self.adj
        for i, u in enumerate(vs):
            nu = adj[u]
            for v in vs[i + 1:]:
                if v not in nu:
                    return False
        return True

    def edges(self) -> Iterator[tuple[int, int]]:
        for x, nx in enumerate(self.adj):
            for y in nx:
                if x < y:
                    yield (x, y)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def copy(self) -> UndirectedGraph:
        g = UndirectedGraph(self.n)
        g.adj = [set(a) for a in self.adj]
        return g

    def is_symmetric(self) -> bool:
        for x, nx in enumerate(self.adj):
            if x in nx:
                return False
            for y in nx:
                if not 0 <= y < self.n or x not in self.adj[y]:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={sorted(self.edges())})"


def search(
    neighbours: Callable[[T], Iterable[T]],
    start: T,
    discipline: Discipline = Discipline.FIFO,
    proceed: Callable[[T], bool] | None = None,
    is_target: Callable[[T], bool] | None = None,
    weight: Callable[[T], int] = len,  # type: ignore[assignment]
) -> list[T] | None:
    """Prioritised path search with a backtracking map.

    Every newly seen vertex is marked explored.  A vertex satisfying
    ``is_target`` ends the search and the path ``[start, ..., target]`` is
    rebuilt from the backtracking map; otherwise it is queued only if it
    satisfies ``proceed``.  Returns ``None`` when the queue runs dry.

    ``LIGHTEST_FIRST`` / ``HEAVIEST_FIRST`` order the queue by ``weight``
    (set size by default); equal weights leave in insertion order.
    """
    if is_target is not None and is_target(start):
        return [start]
    back: dict[T, T | None] = {start: None}
    if discipline is Discipline.FIFO or discipline is Discipline.LIFO:
        queue: deque[T] = deque([start])
        pop = queue.popleft if discipline is Discipline.FIFO else queue.pop
        push = queue.append
        pending = queue.__len__
    else:
        sign = 1 if discipline is Discipline.LIGHTEST_FIRST else -1
        heap: list[tuple[int, int, T]] = [(0, 0, start)]
        counter = 1

        def push(v: T) -> None:
            nonlocal counter
            heapq.heappush(heap, (sign * weight(v), counter, v))
            counter += 1

        def pop() -> T:
            return heapq.heappop(heap)[2]

        pending = heap.__len__

    while pending():
        b = pop()
        for c in neighbours(b):
            if c in back:
                continue
            back[c] = b
            if is_target is not None and is_target(c):
                path = [c]
                p = back[c]
                while p is not None:
                    path.append(p)
                    p = back[p]
                path.reverse()
                return path
            if proceed is None or proceed(c):
                push(c)
    return None


def reachable(
    neighbours: Callable[[T], Iterable[T]],
    start: T,
    proceed: Callable[[T], bool] | None = None,
) -> set[T]:
    """All vertices explored by an exhaustive search from ``start``."""
    seen = {start}
    stack = [start]
    while stack:
        b = stack.pop()
        for c in neighbours(b):
            if c not in seen:
                seen.add(c)
                if proceed is None or proceed(c):
                    stack.append(c)
    return seen


def separates(g: UndirectedGraph, blockers: Iterable[int], x: int, y: int) -> bool:
    """True iff every x-y path in ``g`` meets ``blockers``."""
    blocked = blockers if isinstance(blockers, (set, frozenset)) else set(blockers)
    if x in blocked or y in blocked:
        raise StructuralError("separates() requires x and y outside the blocking set")
    adj = g.adj
    if y in adj[x]:
        return False
    seen = set(blocked)
    seen.add(x)
    frontier = [x]
    while frontier:
        nxt = []
        for b in frontier:
            fresh = adj[b] - seen
            if fresh:
                if y in fresh:
                    return False
                seen |= fresh
                nxt.extend(fresh)
        frontier = nxt
    return True
