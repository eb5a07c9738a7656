"""Ibarra clique-separator graph backend.

The DAG has one vertex per clique and per distinct separator, with an edge
``S -> T`` whenever ``S`` is a strict subset of ``T`` and no separator lies
strictly between them.  Unlike junction and Almond trees it is uniquely
determined by the graph.  Ancestors of a vertex are exactly its subsets among
the vertices, descendants its supersets.

An empty graph on several vertices is disconnected, so the empty set appears
as a separator; it disappears once the graph becomes connected.
"""
from __future__ import annotations

from .graph import EMPTY, Discipline, reachable
from .representation import ContractViolation, MoveKind, MoveReport, Representation
from .setgraph import SetDigraph, endpoint_path, find_sxy


class IbarraGraph(Representation):
    name = "ibarra"

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

    def find_sxy(self, x: int, y: int) -> tuple[frozenset, bool]:
        sxy, connected = find_sxy(self.dag.neighbours, self.vmap[y], y, x, Discipline.HEAVIEST_FIRST)
        return sxy, connected

    def add_above(self, new: frozenset, sup: frozenset) -> None:
        """Insert ``new`` given an existing vertex ``sup`` that strictly contains it."""
        dag = self.dag
        if new in dag:
            return
        if sup not in dag or not new < sup:
            raise ContractViolation(f"{sorted(new)} is not below vertex {sorted(sup)}")
        dag.add_node(new)
        done: set[frozenset] = set()
        for a in sorted(dag.ancestors(sup), key=len, reverse=True):
            if a in done:
                continue
            done.add(a)
            if a < new:
                dag.add_edge(a, new)
                done |= dag.ancestors(a)
        region = reachable(dag.neighbours, sup, proceed=lambda v: new <= v)
        done.clear()
        for a in sorted((v for v in region if new < v), key=len):
            if a in done:
                continue
            dag.add_edge(new, a)
            done |= dag.descendants(a)
        kids = dag.children[new]
        for p in dag.parents[new]:
            shortcut = dag.children[p] & kids
            for c in shortcut:
                dag.remove_edge(p, c)

    def is_redundant(self, s: frozenset) -> bool:
        dag = self.dag
        kids = dag.children[s]
        if not kids:
            return False
        desc = dag.descendants(s)
        seen = reachable(dag.neighbours, next(iter(kids)), proceed=desc.__contains__)
        return desc <= seen

    def remove_redundant(self, s: frozenset) -> bool:
        """Delete ``s`` when its descendants form a single component."""
        if not self.is_redundant(s):
            return False
        dag = self.dag
        parents = list(dag.parents[s])
        kids = list(dag.children[s])
        dag.remove_node(s)
        for c in kids:
            above = dag.ancestors(c)
            for p in parents:
                if p not in above:
                    dag.add_edge(p, c)
                    above.add(p)
        return True

    def _clique_below(self, s: frozenset) -> frozenset:
        children = self.dag.children
        while children[s]:
            s = min(children[s], key=len)
        return s

    def disconnect_if_enabled(self, x: int, y: int, cxy: frozenset) -> MoveReport:
        self._require_edge(x, y, True)
        dag = self.dag
        if cxy not in dag or dag.children[cxy]:
            return MoveReport(False, cxy, MoveKind.DISCONNECT)
        sxy = cxy - {x, y}
        sx = sxy | {x}
        sy = sxy | {y}
        for s in (sxy, sx, sy):
            self.add_above(s, cxy)
        dag.remove_node(cxy)
        for s in (sx, sy):
            if dag.children[s]:
                target = self._clique_below(s)
                self.remove_redundant(s)
            else:
                target = s
            for v in s:
                self.vmap[v] = target
        return MoveReport(True, cxy, MoveKind.DISCONNECT)

    def connect_if_enabled(self, x: int, y: int, sxy: frozenset) -> MoveReport:
        dag = self.dag
        if self.strict:
            self._require_edge(x, y, False)
        if sxy not in dag:
            return MoveReport(False, sxy, MoveKind.CONNECT)
        path = endpoint_path(dag.neighbours, self.vmap[y], y, x, Discipline.HEAVIEST_FIRST)
        cy, cx = path[0], path[-1]
        if y in cx:
            raise ContractViolation(f"({x}, {y}) is already an edge")
        if sxy not in path:
            return MoveReport(False, sxy, MoveKind.CONNECT)
        sx = sxy | {x}
        sy = sxy | {y}
        cxy = sxy | {x, y}
        self.add_above(sx, cx)
        self.add_above(sy, cy)
        dag.add_node(cxy)
        dag.add_edge(sx, cxy)
        dag.add_edge(sy, cxy)
        for s in (sx, sy, sxy):
            self.remove_redundant(s)
        for v in cxy:
            self.vmap[v] = cxy
        return MoveReport(True, sxy, MoveKind.CONNECT)
