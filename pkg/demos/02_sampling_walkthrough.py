"""
A first sampling run
====================

Run the Metropolis chain on 20 vertices under three target distributions
and look at how many edges the sampled graphs carry.
"""

import numpy as np

from decosample import SamplerConfig, run

n = 20
iterations = 50_000

for model, params in [("uniform", {}), ("max-clique", {"k": 3}), ("edge-penalty", {"alpha": 1.0})]:
    trace, sampler = run(SamplerConfig(n=n, iterations=iterations, seed=11, model=model, **params))
    edges = np.array(trace.edges)
    burned = edges[len(edges) // 5:]  # drop the first fifth as burn-in
    print(f"{model:13} mean edges {burned.mean():6.2f}  sd {burned.std():5.2f}  "
          f"acceptance {trace.acceptance_rate:.3f}  final log pi {sampler.logpi:.2f}")

# the trace is plain columns; thin it and save it for plotting elsewhere
trace, _ = run(SamplerConfig(n=n, iterations=iterations, seed=11, trace_thin=100))
trace.to_csv("trace_uniform_n20.csv")
print("wrote trace_uniform_n20.csv with", len(trace), "rows")

# the largest clique of the final graph, straight from the graph backend
_, sampler = run(SamplerConfig(n=n, iterations=iterations, seed=11))
biggest = max(sampler.backends["graph"].clique_set, key=len)
print("largest clique at the end:", sorted(biggest))
