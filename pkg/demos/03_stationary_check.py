"""
Does the chain hit its target?
==============================

On 4 vertices there are only 64 graphs, 61 of them decomposable, so the
target distribution can be written down exactly and compared with how
often the chain visits each graph.
"""

import math
from itertools import combinations

import numpy as np

from decosample import Sampler, SamplerConfig, UndirectedGraph, edge_penalty_model, graph_log_prob
from decosample import oracle

n = 4
pairs = list(combinations(range(n), 2))
bit = {p: 1 << i for i, p in enumerate(pairs)}
alpha = 1.0
model = edge_penalty_model(alpha)

# exact probabilities from cliques and separators of every decomposable graph
exact = np.zeros(64)
for mask in range(64):
    g = UndirectedGraph(n, [p for p in pairs if mask & bit[p]])
    if oracle.is_decomposable(g):
        cl = oracle.enumerate_cliques(g)
        exact[mask] = math.exp(graph_log_prob(model, cl, oracle.separator_multiset(g)))
print("decomposable graphs:", np.count_nonzero(exact))
exact /= exact.sum()

# the chain; each graph is tracked as a bitmask of its edges
counts = np.zeros(64)
mask = 0
iterations = 1_000_000
sampler = Sampler(SamplerConfig(n=n, seed=3, model="edge-penalty", alpha=alpha))
for rec in sampler.steps(iterations):
    if rec.applied:
        mask ^= bit[(rec.x, rec.y)]
    counts[mask] += 1
empirical = counts / iterations

tv = 0.5 * np.abs(empirical - exact).sum()
print(f"total variation distance after {iterations} steps: {tv:.4f}")

# probability mass by edge count, exact against sampled
sizes = np.array([bin(m).count("1") for m in range(64)])
for k in range(7):
    print(k, "edges:", f"{exact[sizes == k].sum():.4f}", f"{empirical[sizes == k].sum():.4f}")
