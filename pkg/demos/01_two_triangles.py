"""
Legal moves on a small decomposable graph
=========================================

Two triangles glued along an edge: {a,b,c} and {b,c,d}.  We ask each
representation which single-edge toggles keep the graph decomposable.
"""

from itertools import combinations

from decosample import init_trivial
from decosample.dot import junction_tree_dot, set_digraph_dot

a, b, c, d = range(4)
names = "abcd"

# start every backend from the empty graph and add edges in an order that
# stays decomposable the whole way
order = [(b, c), (a, b), (a, c), (b, d), (c, d)]
reps = {kind: init_trivial(kind, 4) for kind in ("graph", "junction", "almond", "ibarra")}
for x, y in order:
    sxy = reps["graph"].g.common_neighbors(x, y)
    for rep in reps.values():
        assert rep.connect_if_enabled(x, y, sxy).applied

gs = reps["graph"]
print("cliques:   ", sorted("".join(names[v] for v in sorted(c_)) for c_ in gs.clique_set))
print("separators:", {"".join(names[v] for v in sorted(s)): m for s, m in gs.separators.items()})

# which toggles are legal?  the graph backend answers from its clique set and
# a separation search
for x, y in combinations(range(4), 2):
    if gs.g.has_edge(x, y):
        verdict = gs.legality_disconnect(x, y)
        move = "remove"
    else:
        verdict = gs.legality_connect(x, y)
        move = "add"
    print(f"{move:6} {names[x]}{names[y]}: {'legal' if verdict else 'illegal'}")

# the set-graph backends recover common neighbours without the graph
for kind in ("junction", "almond", "ibarra"):
    print(kind, "S_ad =", sorted(names[v] for v in reps[kind].find_sxy(a, d)[0]))

# graphviz text for two of the structures
print(junction_tree_dot(reps["junction"].tree))
print(set_digraph_dot(reps["ibarra"].dag))
