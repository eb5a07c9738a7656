"""Graphviz DOT text for a graph and its set-graph representations."""
from __future__ import annotations

from .graph import UndirectedGraph
from .setgraph import SetDigraph, SetGraph


def set_label(s: frozenset) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def graph_dot(g: UndirectedGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for x, y in sorted(g.edges()):
        lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_ids(nodes) -> dict[frozenset, str]:
    order = sorted(nodes, key=lambda s: (len(s), sorted(s)))
    return {s: f"n{i}" for i, s in enumerate(order)}


def junction_tree_dot(tree: SetGraph, name: str = "J") -> str:
    """Undirected clique tree; each edge is labelled with its separator."""
    ids = _node_ids(tree.nodes())
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for s, i in ids.items():
        lines.append(f"  {i} [label={_quote(set_label(s))}];")
    rows = sorted((ids[a], ids[b], a & b) if ids[a] < ids[b] else (ids[b], ids[a], a & b) for a, b in tree.edges())
    for a, b, sep in rows:
        lines.append(f"  {a} -- {b} [label={_quote(set_label(sep))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def set_digraph_dot(dag: SetDigraph, name: str = "D") -> str:
    """Directed set graph; cliques as boxes, separators as ellipses."""
    ids = _node_ids(dag.nodes())
    lines = [f"digraph {name} {{"]
    for s, i in ids.items():
        shape = "box" if not dag.children[s] else "ellipse"
        lines.append(f"  {i} [label={_quote(set_label(s))}, shape={shape}];")
    for a, b in sorted((ids[p], ids[c]) for p, c in dag.edges()):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
