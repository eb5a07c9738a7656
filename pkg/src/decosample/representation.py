"""The interface shared by every graph representation backend."""
from __future__ import annotations

import abc
import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import UndirectedGraph


class ContractViolation(RuntimeError):
    """A backend operation was called with its precondition broken."""


class MoveKind(enum.Enum):
    CONNECT = "connect"
    DISCONNECT = "disconnect"


@dataclass(frozen=True, slots=True)
class MoveReport:
    applied: bool
    enabler: frozenset
    kind: MoveKind


class Representation(abc.ABC):
    """A decomposable graph held in some structure that supports edge toggles.

    Backends start from the empty graph on ``n`` vertices.  The enabling set
    (``C_xy`` for a disconnection, ``S_xy`` for a connection) is supplied by
    the caller; ``find_sxy`` recovers it from the structure alone.

    With ``strict=True`` the edge-presence preconditions of the two move
    methods are verified (at the cost of a search) and a violation raises
    ``ContractViolation``.
    """

    name: str = "abstract"

    def __init__(self, n: int, strict: bool = False) -> None:
        if n < 1:
            raise ValueError("a representation needs at least one vertex")
        self.n = n
        self.strict = strict

    @abc.abstractmethod
    def find_sxy(self, x: int, y: int) -> tuple[frozenset, bool]:
        """Common neighbours of ``x`` and ``y`` and whether they are adjacent."""

    @abc.abstractmethod
    def disconnect_if_enabled(self, x: int, y: int, cxy: frozenset) -> MoveReport:
        ...

    @abc.abstractmethod
    def connect_if_enabled(self, x: int, y: int, sxy: frozenset) -> MoveReport:
        ...

    @abc.abstractmethod
    def cliques(self) -> set[frozenset]:
        ...

    @abc.abstractmethod
    def vertex_map(self) -> list[frozenset]:
        """For each vertex, some current clique containing it."""

    def export_graph(self) -> UndirectedGraph:
        g = UndirectedGraph(self.n)
        for c in self.cliques():
            for a, b in combinations(c, 2):
                g.add_edge(a, b)
        return g

    def _require_edge(self, x: int, y: int, present: bool) -> None:
        if x == y:
            raise ContractViolation("x and y must differ")
        if self.strict and self.find_sxy(x, y)[1] != present:
            state = "an edge" if present else "a non-edge"
            raise ContractViolation(f"({x}, {y}) must be {state}")


BACKENDS = ("graph", "junction", "almond", "ibarra")


def init_trivial(kind: str, n: int, **kwargs) -> Representation:
    """Backend ``kind`` representing the empty graph on ``n`` vertices."""
    from .almond_tree import AlmondTree
    from .ibarra import IbarraGraph
    from .junction_tree import JunctionTree
    from .rep_graph import GraphState

    classes = {
        "graph": GraphState,
        "junction": JunctionTree,
        "almond": AlmondTree,
        "ibarra": IbarraGraph,
    }
    try:
        cls = classes[kind]
    except KeyError:
        raise ValueError(f"unknown backend {kind!r}; expected one of {BACKENDS}") from None
    return cls(n, **kwargs)
