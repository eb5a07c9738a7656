"""Junction tree backend: a tree over the cliques with the junction property.

Separators are implicit as intersections of adjacent cliques.  A vertex map
points every graph vertex at one clique containing it, which seeds the
searches.
"""
from __future__ import annotations

from .representation import ContractViolation, MoveKind, MoveReport, Representation
from .setgraph import SetGraph, endpoint_path, find_sxy


class JunctionTree(Representation):
    name = "junction"

    def __init__(self, n: int, strict: bool = False) -> None:
        super().__init__(n, strict)
        self.tree = SetGraph()
        self.vmap: list[frozenset] = [frozenset([v]) for v in range(n)]
        for c in self.vmap:
            self.tree.add_node(c)
        hub = self.vmap[0]
        for c in self.vmap[1:]:
            self.tree.add_edge(hub, c)

    def cliques(self) -> set[frozenset]:
        return set(self.tree.nodes())

    def vertex_map(self) -> list[frozenset]:
        return list(self.vmap)

    def find_sxy(self, x: int, y: int) -> tuple[frozenset, bool]:
        return find_sxy(self.tree.neighbours, self.vmap[x], x, y)

    def disconnect_if_enabled(self, x: int, y: int, cxy: frozenset) -> MoveReport:
        self._require_edge(x, y, True)
        tree = self.tree
        if cxy not in tree:
            return MoveReport(False, cxy, MoveKind.DISCONNECT)
        sx = cxy - {y}
        sy = cxy - {x}
        nbrs = tree.neighbours(cxy)
        cx = next((c for c in nbrs if sx <= c), None)
        cy = next((c for c in nbrs if sy <= c), None)
        if cx is None:
            cx = sx
            tree.add_node(cx)
        else:
            tree.remove_edge(cxy, cx)
        if cy is None:
            cy = sy
            tree.add_node(cy)
        else:
            tree.remove_edge(cxy, cy)
        for c in list(tree.neighbours(cxy)):
            tree.add_edge(cx if x in c else cy, c)
        tree.remove_node(cxy)
        tree.add_edge(cx, cy)
        for v in cx:
            self.vmap[v] = cx
        for v in cy:
            self.vmap[v] = cy
        return MoveReport(True, cxy, MoveKind.DISCONNECT)

    def connect_if_enabled(self, x: int, y: int, sxy: frozenset) -> MoveReport:
        tree = self.tree
        if self.strict:
            self._require_edge(x, y, False)
        path = endpoint_path(tree.neighbours, self.vmap[x], x, y)
        cx, cy = path[0], path[-1]
        if x in cy:
            raise ContractViolation(f"({x}, {y}) is already an edge")
        k = len(sxy)
        cut = None
        for a, b in zip(path, path[1:]):
            if len(a & b) == k:
                cut = (a, b)
                break
        if cut is None:
            return MoveReport(False, sxy, MoveKind.CONNECT)
        tree.remove_edge(*cut)
        cxy = sxy | {x, y}
        tree.add_node(cxy)
        for c in (cx, cy):
            if len(c) < len(cxy):
                for d in list(tree.neighbours(c)):
                    tree.add_edge(cxy, d)
                tree.remove_node(c)
            else:
                tree.add_edge(c, cxy)
        for v in cxy:
            self.vmap[v] = cxy
        return MoveReport(True, sxy, MoveKind.CONNECT)
