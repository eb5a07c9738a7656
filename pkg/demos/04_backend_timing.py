"""
How fast is each representation?
================================

Same chain, same seed, four backends.  They make identical decisions, so
only the time differs.
"""

import time

from decosample import Sampler, SamplerConfig

iterations = 50_000
print(f"{'n':>4} {'backend':>9} {'seconds':>8} {'edges':>6}")
for n in (25, 50, 100):
    finals = set()
    for backend in ("graph", "junction", "almond", "ibarra"):
        sampler = Sampler(SamplerConfig(n=n, seed=1, backend=backend))
        t0 = time.perf_counter()
        sampler.run(iterations)
        seconds = time.perf_counter() - t0
        finals.add(sampler.edges)
        print(f"{n:4} {backend:>9} {seconds:8.2f} {sampler.edges:6}")
    assert len(finals) == 1  # every backend ended on the same graph

# the graph backend can confine its separation search to vertices adjacent
# to all of S_xy; whether that pays off depends on the graph
for restricted in (False, True):
    sampler = Sampler(SamplerConfig(n=100, seed=1, restricted_search=restricted))
    t0 = time.perf_counter()
    sampler.run(iterations)
    print("restricted search" if restricted else "plain search     ", f"{time.perf_counter() - t0:.2f}s")
