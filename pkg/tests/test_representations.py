"""Behaviour every backend shares, run once per backend."""
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import A, B, C, D, PATH3, PATH4, TRIANGLE, TWO_TRIANGLES, build, fs, snapshot, toggle
from decosample import oracle
from decosample.graph import UndirectedGraph
from decosample.representation import BACKENDS, ContractViolation, MoveKind, init_trivial


def test_init_trivial_single_vertex(backend):
    rep = init_trivial(backend, 1)
    assert rep.cliques() == {fs(0)}
    assert rep.export_graph() == UndirectedGraph(1)


def test_init_trivial_needs_vertices(backend):
    with pytest.raises(ValueError):
        init_trivial(backend, 0)


def test_unknown_backend():
    with pytest.raises(ValueError):
        init_trivial("hypergraph", 3)


def test_trivial_export_is_empty(backend):
    rep = init_trivial(backend, 4)
    assert rep.export_graph() == UndirectedGraph(4)
    assert rep.cliques() == {fs(v) for v in range(4)}


def test_find_sxy_examples(backend):
    rep = build(backend, *TWO_TRIANGLES)
    assert rep.find_sxy(A, D) == (fs(B, C), False)
    assert rep.find_sxy(D, A) == (fs(B, C), False)
    assert rep.find_sxy(B, C) == (fs(A, D), True)
    trivial = init_trivial(backend, 3)
    assert all(trivial.find_sxy(x, y) == (frozenset(), False) for x, y in combinations(range(3), 2))


def test_disconnect_examples(backend):
    rep = build(backend, *TWO_TRIANGLES)
    report = rep.disconnect_if_enabled(A, B, fs(A, B, C))
    assert report.applied and report.kind is MoveKind.DISCONNECT and report.enabler == fs(A, B, C)
    assert rep.cliques() == {fs(A, C), fs(B, C, D)}

    rep = build(backend, *TWO_TRIANGLES)
    before = snapshot(rep)
    assert not rep.disconnect_if_enabled(B, C, fs(A, B, C, D)).applied
    assert snapshot(rep) == before

    rep = build(backend, *TRIANGLE)
    assert rep.disconnect_if_enabled(A, B, fs(A, B, C)).applied
    assert rep.cliques() == {fs(A, C), fs(B, C)}


def test_connect_examples(backend):
    rep = build(backend, *PATH3)
    report = rep.connect_if_enabled(A, C, fs(B))
    assert report.applied and report.kind is MoveKind.CONNECT and report.enabler == fs(B)
    assert rep.cliques() == {fs(A, B, C)}

    rep = build(backend, *PATH4)
    before = snapshot(rep)
    assert not rep.connect_if_enabled(A, D, frozenset()).applied
    assert snapshot(rep) == before

    rep = init_trivial(backend, 2)
    assert rep.connect_if_enabled(A, B, frozenset()).applied
    assert rep.cliques() == {fs(A, B)}


def test_export_two_triangles(backend):
    assert build(backend, *TWO_TRIANGLES).export_graph() == UndirectedGraph(*TWO_TRIANGLES)


def test_fan_with_pendant_rejects_connection(backend):
    # {b} is a separator (it cuts off e) but a and f are joined by a-c-d-f
    f = 5
    edges = [(B, A), (B, C), (B, D), (B, f), (A, C), (C, D), (D, f), (B, 4)]
    rep = build(backend, 6, edges)
    before = snapshot(rep)
    assert not rep.connect_if_enabled(A, f, fs(B)).applied
    assert snapshot(rep) == before


def test_disconnect_of_non_edge_is_a_contract_violation(backend):
    rep = build(backend, *TWO_TRIANGLES, strict=True)
    with pytest.raises(ContractViolation):
        rep.disconnect_if_enabled(A, D, fs(A, B, C, D))


def test_connect_of_edge_is_a_contract_violation(backend):
    rep = build(backend, *TWO_TRIANGLES, strict=True)
    with pytest.raises(ContractViolation):
        rep.connect_if_enabled(A, B, fs(C))


def check_vertex_map(rep, cliques):
    for v, c in enumerate(rep.vertex_map()):
        assert v in c and c in cliques, (rep.name, v, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32 - 1))
def test_random_walk_round_trip(n, seed):
    rng = random.Random(seed)
    reps = {b: init_trivial(b, n) for b in BACKENDS}
    mirrors = {b: UndirectedGraph(n) for b in BACKENDS}
    for _ in range(120):
        x, y = rng.sample(range(n), 2)
        ref = mirrors["graph"]
        legal = oracle.legality_oracle(ref, x, y)
        expected = (ref.common_neighbors(x, y), ref.has_edge(x, y))
        for b in BACKENDS:
            before = snapshot(reps[b])
            assert reps[b].find_sxy(x, y) == expected
            assert toggle(reps[b], mirrors[b], x, y) == legal, b
            if not legal:
                assert snapshot(reps[b]) == before, b
    cliques = oracle.enumerate_cliques(mirrors["graph"])
    for b, rep in reps.items():
        assert rep.export_graph() == mirrors["graph"]
        assert rep.cliques() == cliques
        check_vertex_map(rep, cliques)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**32 - 1))
def test_connect_then_disconnect_is_reversible(n, seed):
    rng = random.Random(seed)
    g = oracle.random_decomposable(n, 40, rng)
    for b in BACKENDS:
        rep = build(b, n, list(g.edges()))
        for x, y in combinations(range(n), 2):
            if g.has_edge(x, y) or not oracle.legality_oracle(g, x, y):
                continue
            mirror = g.copy()
            assert toggle(rep, mirror, x, y)
            assert toggle(rep, mirror, x, y)
            assert rep.export_graph() == g
            assert rep.cliques() == oracle.enumerate_cliques(g)
