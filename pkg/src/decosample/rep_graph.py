"""The sampler state kept on the graph itself.

Alongside the adjacency sets the state tracks the clique set, the separator
multiset (as a count map) and ``log pi``.  A disconnection is legal iff
``C_xy`` is a current clique; a connection is legal iff ``S_xy`` is a current
separator that separates ``x`` from ``y``.
"""
from __future__ import annotations

from collections import Counter

from .graph import EMPTY, UndirectedGraph, separates
from .potentials import PotentialModel, uniform_model
from .representation import ContractViolation, MoveKind, MoveReport, Representation


class GraphState(Representation):
    name = "graph"

    def __init__(
        self,
        n: int,
        model: PotentialModel | None = None,
        restricted_search: bool = False,
        strict: bool = False,
    ) -> None:
        super().__init__(n, strict)
        self.model = model if model is not None else uniform_model()
        self.restricted_search = restricted_search
        self.g = UndirectedGraph(n)
        self.clique_set: set[frozenset[int]] = {frozenset([v]) for v in range(n)}
        self.separators: Counter = Counter({EMPTY: n - 1}) if n > 1 else Counter()
        lphi = self.model.log_phi
        self.logpi = sum(lphi(c) for c in self.clique_set) - (n - 1) * lphi(EMPTY)

    # -- queries ---------------------------------------------------------

    def find_sxy(self, x: int, y: int) -> tuple[frozenset, bool]:
        return self.g.common_neighbors(x, y), self.g.has_edge(x, y)

    def cliques(self) -> set[frozenset]:
        return set(self.clique_set)

    def vertex_map(self) -> list[frozenset]:
        vmap: list[frozenset | None] = [None] * self.n
        for c in self.clique_set:
            for v in c:
                vmap[v] = c
        return vmap  # type: ignore[return-value]

    def export_graph(self) -> UndirectedGraph:
        return self.g.copy()

    def legality_disconnect(self, x: int, y: int, sxy: frozenset | None = None) -> bool:
        if sxy is None:
            sxy = self.g.common_neighbors(x, y)
        return sxy | {x, y} in self.clique_set

    def legality_connect(self, x: int, y: int, sxy: frozenset | None = None) -> bool:
        if sxy is None:
            sxy = self.g.common_neighbors(x, y)
        if sxy not in self.separators:
            return False
        if self.restricted_search:
            return self.restricted_separates(sxy, x, y)
        return separates(self.g, sxy, x, y)

    def restricted_separates(self, sxy: frozenset, x: int, y: int) -> bool:
        """Separation test confined to vertices adjacent to all of ``S_xy``.

        Only valid when ``S_xy`` is complete, which holds for the common
        neighbours of two vertices in a decomposable graph.
        """
        adj = self.g.adj
        if sxy:
            members = sorted(sxy, key=lambda v: len(adj[v]))
            allowed = set(adj[members[0]])
            for v in members[1:]:
                allowed &= adj[v]
                if not allowed:
                    break
            allowed -= sxy
        else:
            allowed = None
        if y in adj[x]:
            return False
        seen = {x}
        stack = [x]
        while stack:
            b = stack.pop()
            nb = adj[b] if allowed is None else adj[b] & allowed
            for c in nb:
                if c in seen or c in sxy:
                    continue
                if c == y:
                    return False
                seen.add(c)
                stack.append(c)
        return True

    # -- updates ---------------------------------------------------------

    def apply_disconnect(self, x: int, y: int, sxy: frozenset | None = None) -> None:
        if sxy is None:
            sxy = self.g.common_neighbors(x, y)
        if not self.g.has_edge(x, y) or not self.legality_disconnect(x, y, sxy):
            raise ContractViolation(f"disconnecting ({x}, {y}) is not legal")
        self._disconnect(x, y, sxy)

    def apply_connect(self, x: int, y: int, sxy: frozenset | None = None) -> None:
        if sxy is None:
            sxy = self.g.common_neighbors(x, y)
        if self.g.has_edge(x, y) or not self.legality_connect(x, y, sxy):
            raise ContractViolation(f"connecting ({x}, {y}) is not legal")
        self._connect(x, y, sxy)

    def _disconnect(self, x: int, y: int, sxy: frozenset) -> None:
        cxy = sxy | {x, y}
        sx = sxy | {x}
        sy = sxy | {y}
        lphi = self.model.log_phi
        self.g.remove_edge(x, y)
        self.logpi += lphi(sx) + lphi(sy) - lphi(cxy) - lphi(sxy)
        seps = self.separators
        self.clique_set.discard(cxy)
        seps[sxy] += 1
        for s in (sx, sy):
            m = seps.get(s, 0)
            if m > 1:
                seps[s] = m - 1
            elif m == 1:
                del seps[s]
            else:
                self.clique_set.add(s)

    def _connect(self, x: int, y: int, sxy: frozenset) -> None:
        cxy = sxy | {x, y}
        sx = sxy | {x}
        sy = sxy | {y}
        lphi = self.model.log_phi
        self.g.add_edge(x, y)
        self.logpi += lphi(sxy) + lphi(cxy) - lphi(sx) - lphi(sy)
        seps = self.separators
        self.clique_set.add(cxy)
        m = seps[sxy]
        if m > 1:
            seps[sxy] = m - 1
        else:
            del seps[sxy]
        for s in (sx, sy):
            if s in self.clique_set:
                self.clique_set.discard(s)
            else:
                seps[s] += 1

    def disconnect_if_enabled(self, x: int, y: int, cxy: frozenset) -> MoveReport:
        if not self.g.has_edge(x, y):
            raise ContractViolation(f"({x}, {y}) is not an edge")
        if cxy not in self.clique_set:
            return MoveReport(False, cxy, MoveKind.DISCONNECT)
        self._disconnect(x, y, cxy - {x, y})
        return MoveReport(True, cxy, MoveKind.DISCONNECT)

    def connect_if_enabled(self, x: int, y: int, sxy: frozenset) -> MoveReport:
        if x == y or self.g.has_edge(x, y):
            raise ContractViolation(f"({x}, {y}) is already an edge")
        if not self.legality_connect(x, y, sxy):
            return MoveReport(False, sxy, MoveKind.CONNECT)
        self._connect(x, y, sxy)
        return MoveReport(True, sxy, MoveKind.CONNECT)
