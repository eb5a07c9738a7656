"""Shared fixtures: named small graphs and a way to drive any backend to them.

Vertex letters follow the usual a, b, c, d, e = 0, 1, 2, 3, 4.
"""
from __future__ import annotations

import random
import sys

import pytest

from decosample import oracle
from decosample.graph import UndirectedGraph
from decosample.representation import BACKENDS, init_trivial

A, B, C, D, E = range(5)

TWO_TRIANGLES = (4, [(A, B), (A, C), (B, C), (B, D), (C, D)])
TRIANGLE = (3, [(A, B), (A, C), (B, C)])
PATH3 = (3, [(A, B), (B, C)])
PATH4 = (4, [(A, B), (B, C), (C, D)])
STAR_B = (4, [(B, A), (B, C), (B, D)])
BOWTIE = (5, [(A, B), (A, C), (B, C), (B, D), (B, E), (D, E)])
K4 = (4, [(A, B), (A, C), (A, D), (B, C), (B, D), (C, D)])


def fs(*vs) -> frozenset:
    return frozenset(vs)


def insertion_order(n: int, edges) -> list[tuple[int, int]]:
    """Order the edges of a decomposable graph so each insertion is legal.

    Between two nested chordal graphs there is always a chordal graph with
    one more edge, so the greedy choice never gets stuck.
    """
    target = UndirectedGraph(n, edges)
    assert oracle.is_decomposable(target)
    g = UndirectedGraph(n)
    left = sorted(target.edges())
    order = []
    while left:
        for e in left:
            if oracle.legality_oracle(g, *e):
                g.add_edge(*e)
                order.append(e)
                left.remove(e)
                break
        else:  # pragma: no cover - contradicts the sandwich property
            raise AssertionError("no legal insertion")
    return order


def build(kind: str, n: int, edges, **kwargs):
    """A backend of type ``kind`` representing the given decomposable graph."""
    rep = init_trivial(kind, n, **kwargs)
    g = UndirectedGraph(n)
    for x, y in insertion_order(n, edges):
        report = rep.connect_if_enabled(x, y, g.common_neighbors(x, y))
        assert report.applied, (kind, x, y)
        g.add_edge(x, y)
    return rep


def toggle(rep, g: UndirectedGraph, x: int, y: int) -> bool:
    """Propose toggling ``(x, y)`` on ``rep``, keeping the mirror graph ``g`` in step."""
    sxy = g.common_neighbors(x, y)
    if g.has_edge(x, y):
        applied = rep.disconnect_if_enabled(x, y, sxy | {x, y}).applied
        if applied:
            g.remove_edge(x, y)
    else:
        applied = rep.connect_if_enabled(x, y, sxy).applied
        if applied:
            g.add_edge(x, y)
    return applied


@pytest.fixture(params=BACKENDS)
def backend(request) -> str:
    return request.param


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def snapshot(rep):
    """Everything a rejected move must leave untouched."""
    vmap = tuple(rep.vertex_map())
    if rep.name == "graph":
        return (rep.g.edge_set(), frozenset(rep.clique_set), frozenset(rep.separators.items()), rep.logpi)
    if rep.name == "junction":
        return (frozenset(rep.tree.nodes()), frozenset(map(frozenset, rep.tree.edges())), vmap)
    return (frozenset(rep.dag.nodes()), frozenset(rep.dag.edges()), vmap)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
