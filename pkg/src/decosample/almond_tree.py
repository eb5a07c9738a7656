"""Directed Almond tree backend.

The tree spans cliques and separators (one vertex per distinct separator),
every edge pointing from a subset to a superset.  Cliques are the childless
vertices; a separator has one more child than its multiplicity.
"""
from __future__ import annotations

from .graph import EMPTY, Discipline, search
from .representation import ContractViolation, MoveKind, MoveReport, Representation
from .setgraph import SetDigraph, find_sxy


class AlmondTree(Representation):
    name = "almond"

    def __init__(self, n: int, strict: bool = False) -> None:
        super().__init__(n, strict)
        self.dag = SetDigraph()
        self.vmap: list[frozenset] = [frozenset([v]) for v in range(n)]
        for c in self.vmap:
            self.dag.add_node(c)
        if n > 1:
            self.dag.add_node(EMPTY)
            for c in self.vmap:
                self.dag.add_edge(EMPTY, c)

    def cliques(self) -> set[frozenset]:
        return {v for v, cs in self.dag.children.items() if not cs}

    def separator_vertices(self) -> set[frozenset]:
        return {v for v, cs in self.dag.children.items() if cs}

    def vertex_map(self) -> list[frozenset]:
        return list(self.vmap)

    def _path(self, start: frozenset, goal: frozenset) -> list[frozenset]:
        path = search(self.dag.neighbours, start, Discipline.FIFO, is_target=lambda v: v == goal)
        assert path is not None, "Almond tree must be connected"
        return path

    def find_sxy(self, x: int, y: int) -> tuple[frozenset, bool]:
        return find_sxy(self.dag.neighbours, self.vmap[x], x, y)

    def remove_redundant(self, s: frozenset) -> bool:
        """Splice out ``s`` if it has exactly one child; report whether it went."""
        dag = self.dag
        kids = dag.children[s]
        if len(kids) != 1:
            return False
        (child,) = kids
        for p in list(dag.parents[s]):
            dag.add_edge(p, child)
        dag.remove_node(s)
        return True

    def disconnect_if_enabled(self, x: int, y: int, cxy: frozenset) -> MoveReport:
        self._require_edge(x, y, True)
        dag = self.dag
        if cxy not in dag or dag.children[cxy]:
            return MoveReport(False, cxy, MoveKind.DISCONNECT)
        sxy = cxy - {x, y}
        sx = sxy | {x}
        sy = sxy | {y}
        if sxy in dag:
            path = self._path(cxy, sxy)
            dag.disconnect(sxy, path[-2])
        else:
            dag.add_node(sxy)
        ends = []
        for s in (sx, sy):
            if s not in dag:
                dag.add_node(s)
                ends.append(s)
                continue
            dag.remove_edge(s, cxy)
            kids = dag.children[s]
            if len(kids) == 1:
                (child,) = kids
                self.remove_redundant(s)
                ends.append(child)
            else:
                ends.append(s)
        cx, cy = ends
        for s in list(dag.parents[cxy]):
            dag.add_edge(s, cx if x in s else cy)
        dag.remove_node(cxy)
        dag.add_edge(sxy, cx)
        dag.add_edge(sxy, cy)
        for c in ends:
            target = c if not dag.children[c] else self._clique_below(c)
            for v in c:
                self.vmap[v] = target
        return MoveReport(True, cxy, MoveKind.DISCONNECT)

    def _clique_below(self, s: frozenset) -> frozenset:
        children = self.dag.children
        while children[s]:
            s = next(iter(children[s]))
        return s

    def connect_if_enabled(self, x: int, y: int, sxy: frozenset) -> MoveReport:
        dag = self.dag
        if self.strict:
            self._require_edge(x, y, False)
        if sxy not in dag:
            return MoveReport(False, sxy, MoveKind.CONNECT)
        ends = []
        for v in (x, y):
            path = self._path(self.vmap[v], sxy)
            last = max(i for i, a in enumerate(path) if v in a)
            if len(path) < 2:
                raise ContractViolation("separator vertex cannot hold an endpoint")
            ends.append((path[last], path[-2]))
        (cx, px), (cy, py) = ends
        if px == py:
            return MoveReport(False, sxy, MoveKind.CONNECT)
        if y in cx:
            raise ContractViolation(f"({x}, {y}) is already an edge")
        dag.disconnect(sxy, px)
        dag.disconnect(sxy, py)
        cxy = sxy | {x, y}
        dag.add_node(cxy)
        for s, c in ((sxy | {x}, cx), (sxy | {y}, cy)):
            if s in dag:
                dag.add_edge(s, cxy)
                self.remove_redundant(s)
            else:
                dag.add_node(s)
                dag.add_edge(s, cxy)
                dag.add_edge(s, c)
        dag.add_edge(sxy, cxy)
        self.remove_redundant(sxy)
        for v in cxy:
            self.vmap[v] = cxy
        return MoveReport(True, sxy, MoveKind.CONNECT)
