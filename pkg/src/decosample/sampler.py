"""Metropolis sampler over decomposable graphs.

Each iteration proposes an unordered vertex pair uniformly, draws
``U ~ Uniform(0, 1)``, and toggles the edge when ``log U`` is at most the log
acceptance ratio *and* the toggle keeps the graph decomposable.  The cheap
random test runs first; the legality test only when it passes.

Random numbers come from numpy's PCG64 seeded with ``seed`` and are drawn in
blocks of ``BLOCK`` iterations: first ``BLOCK`` pair indices from
``integers(0, n(n-1)/2)``, then ``BLOCK`` 53-bit integers ``r`` giving
``U = (r + 0.5) / 2**53``, which lies strictly inside (0, 1).  Pair index
``k`` maps to the ``k``-th pair ``(x, y)``, ``x < y``, in row-major order.
"""
from __future__ import annotations

import csv
from dataclasses import asdict, dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from .graph import EMPTY, UndirectedGraph
from .potentials import PotentialModel, make_model
from .representation import BACKENDS, Representation, init_trivial

BLOCK = 4096


class BackendDisagreement(RuntimeError):
    """Representations disagreed on a legality decision or on the graph they hold."""

    def __init__(self, iteration: int, pair: tuple[int, int], detail: dict) -> None:
        self.iteration = iteration
        self.pair = pair
        self.detail = detail
        super().__init__(f"backends disagree at iteration {iteration}, pair {pair}: {detail}")


def pair_from_index(k: int, n: int) -> tuple[int, int]:
    """Unrank ``k`` into the ``k``-th pair ``x < y`` of ``{0..n-1}`` in row-major order."""
    x = 0
    row = n - 1
    while k >= row:
        k -= row
        x += 1
        row -= 1
    return x, x + 1 + k


def propose_pair(rng: np.random.Generator, n: int) -> tuple[int, int]:
    """One uniformly random unordered pair of distinct vertices."""
    if n < 2:
        raise ValueError("need at least two vertices to propose a pair")
    k = int(rng.integers(0, n * (n - 1) // 2))
    return pair_from_index(k, n)


class ProposalStream:
    """Block-buffered stream of ``(x, y, log U)`` triples."""

    def __init__(self, n: int, seed: int) -> None:
        if n < 2:
            raise ValueError("need at least two vertices to propose a pair")
        self.n = n
        self.rng = np.random.Generator(np.random.PCG64(seed))
        xs, ys = np.triu_indices(n, 1)
        self._xs = xs.tolist()
        self._ys = ys.tolist()
        self._npairs = len(self._xs)
        self._buf: list[tuple[int, int, float]] = []
        self._pos = 0

    def _refill(self) -> None:
        ks = self.rng.integers(0, self._npairs, size=BLOCK).tolist()
        r = self.rng.integers(0, 1 << 53, size=BLOCK, dtype=np.int64)
        logu = np.log((r + 0.5) * 2.0**-53).tolist()
        xs, ys = self._xs, self._ys
        self._buf = [(xs[k], ys[k], lu) for k, lu in zip(ks, logu)]
        self._pos = 0

    def next(self) -> tuple[int, int, float]:
        if self._pos >= len(self._buf):
            self._refill()
        item = self._buf[self._pos]
        self._pos += 1
        return item


@dataclass
class SamplerConfig:
    n: int
    iterations: int = 0
    seed: int = 1
    model: str = "uniform"
    k: int = 3
    alpha: float = 1.0
    backend: str = "graph"
    trace_thin: int = 1
    restricted_search: bool = False
    verify_every: int = 0
    window: int = 10_000

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        if self.trace_thin < 1:
            raise ValueError("trace_thin must be >= 1")
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.backend not in BACKENDS + ("all",):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.iterations > 0 and self.n < 2:
            raise ValueError("sampling needs n >= 2")

    def potential_model(self) -> PotentialModel:
        return make_model(self.model, k=self.k, alpha=self.alpha)

    def as_dict(self) -> dict:
        return asdict(self)


class StepRecord(NamedTuple):
    iteration: int
    x: int
    y: int
    disconnect: bool
    draw_passed: bool
    legal: bool | None  # None: legality not evaluated because the draw failed
    applied: bool
    edges: int
    logpi: float


@dataclass
class SamplerTrace:
    """Recorded iterations, one row per ``thin`` iterations."""

    window: int = 10_000
    iteration: list[int] = field(default_factory=list)
    x: list[int] = field(default_factory=list)
    y: list[int] = field(default_factory=list)
    disconnect: list[bool] = field(default_factory=list)
    draw_passed: list[bool] = field(default_factory=list)
    legal: list[bool | None] = field(default_factory=list)
    applied: list[bool] = field(default_factory=list)
    edges: list[int] = field(default_factory=list)
    logpi: list[float] = field(default_factory=list)
    acceptance: list[float] = field(default_factory=list)
    total_iterations: int = 0
    total_applied: int = 0

    def __len__(self) -> int:
        return len(self.iteration)

    def append(self, rec: StepRecord, window_rate: float) -> None:
        self.iteration.append(rec.iteration)
        self.x.append(rec.x)
        self.y.append(rec.y)
        self.disconnect.append(rec.disconnect)
        self.draw_passed.append(rec.draw_passed)
        self.legal.append(rec.legal)
        self.applied.append(rec.applied)
        self.edges.append(rec.edges)
        self.logpi.append(rec.logpi)
        self.acceptance.append(window_rate)

    @property
    def acceptance_rate(self) -> float:
        """Proportion of all iterations whose proposal was applied."""
        return self.total_applied / self.total_iterations if self.total_iterations else 0.0

    def mean_window_acceptance(self) -> float:
        return float(np.mean(self.acceptance)) if self.acceptance else 0.0

    CSV_COLUMNS = ("iteration", "edges", "acceptance", "log_pi")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(self.CSV_COLUMNS)
            for row in zip(self.iteration, self.edges, self.acceptance, self.logpi):
                w.writerow((row[0], row[1], f"{row[2]:.6f}", repr(float(row[3]))))


class Sampler:
    """One Markov chain started from the empty graph.

    ``backend="all"`` drives all four representations on the same proposals
    and raises ``BackendDisagreement`` as soon as their decisions differ.
    """

    def __init__(self, config: SamplerConfig) -> None:
        self.config = config
        n = config.n
        self.n = n
        self.model = config.potential_model()
        self._table = self.model.size_table(n + 2)
        names = BACKENDS if config.backend == "all" else (config.backend,)
        self.backends: dict[str, Representation] = {}
        for name in names:
            if name == "graph":
                rep = init_trivial(name, n, model=self.model, restricted_search=config.restricted_search)
            else:
                rep = init_trivial(name, n)
            self.backends[name] = rep
        graph_state = self.backends.get("graph")
        self.g: UndirectedGraph = graph_state.g if graph_state is not None else UndirectedGraph(n)
        self._own_graph = graph_state is None
        self._reps = list(self.backends.values())
        lphi = self.model.log_phi
        self.logpi = sum(lphi(frozenset([v])) for v in range(n)) - (n - 1) * lphi(EMPTY)
        self.edges = 0
        self.iteration = 0
        self.applied_total = 0
        self._stream = ProposalStream(n, config.seed) if n >= 2 else None

    def log_ratio(self, x: int, y: int, sxy: frozenset, disconnect: bool) -> float:
        """``log pi(new) - log pi(current)`` for toggling ``(x, y)``; NaN when undefined."""
        t = self._table
        if t is not None:
            s = len(sxy)
            ends, mid = t[s + 1] + t[s + 1], t[s] + t[s + 2]
        else:
            lphi = self.model.log_phi
            ends = lphi(sxy | {x}) + lphi(sxy | {y})
            mid = lphi(sxy) + lphi(sxy | {x, y})
        return ends - mid if disconnect else mid - ends

    def step(self) -> StepRecord:
        x, y, logu = self._stream.next()  # type: ignore[union-attr]
        return self.step_with(x, y, logu)

    def step_with(self, x: int, y: int, logu: float) -> StepRecord:
        self.iteration += 1
        adj = self.g.adj
        disconnect = y in adj[x]
        sxy = frozenset(adj[x] & adj[y])
        ratio = self.log_ratio(x, y, sxy, disconnect)
        if not logu <= ratio:  # NaN ratio fails too
            return StepRecord(self.iteration, x, y, disconnect, False, None, False, self.edges, self.logpi)
        if disconnect:
            cxy = sxy | {x, y}
            flags = [rep.disconnect_if_enabled(x, y, cxy).applied for rep in self._reps]
        else:
            flags = [rep.connect_if_enabled(x, y, sxy).applied for rep in self._reps]
        applied = flags[0]
        if len(flags) > 1 and any(f != applied for f in flags):
            raise BackendDisagreement(self.iteration, (x, y), dict(zip(self.backends, flags)))
        if applied:
            if self._own_graph:
                if disconnect:
                    self.g.remove_edge(x, y)
                else:
                    self.g.add_edge(x, y)
            self.edges += -1 if disconnect else 1
            self.logpi += ratio
            self.applied_total += 1
        return StepRecord(self.iteration, x, y, disconnect, True, applied, applied, self.edges, self.logpi)

    def steps(self, count: int) -> Iterator[StepRecord]:
        verify = self.config.verify_every if len(self._reps) > 1 else 0
        for _ in range(count):
            rec = self.step()
            if verify and rec.iteration % verify == 0:
                self.verify_agreement()
            yield rec

    def verify_agreement(self) -> None:
        """Check every backend exports the graph the chain currently holds."""
        ref = self.g
        bad = sorted(name for name, rep in self.backends.items() if rep.export_graph() != ref)
        if bad:
            raise BackendDisagreement(self.iteration, (-1, -1), {"export_mismatch": bad})

    def run(self, iterations: int | None = None) -> SamplerTrace:
        cfg = self.config
        count = cfg.iterations if iterations is None else iterations
        trace = SamplerTrace(window=cfg.window)
        if count == 0:
            return trace
        thin = cfg.trace_thin
        window = cfg.window
        ring = bytearray(window)
        in_window = 0
        for rec in self.steps(count):
            slot = rec.iteration % window
            in_window += rec.applied - ring[slot]
            ring[slot] = rec.applied
            if rec.iteration % thin == 0:
                trace.append(rec, in_window / min(rec.iteration, window))
        trace.total_iterations = count
        trace.total_applied = self.applied_total
        return trace

    def graph(self) -> UndirectedGraph:
        return self.g.copy()


def run(config: SamplerConfig) -> tuple[SamplerTrace, Sampler]:
    """Run ``config.iterations`` steps from the empty graph."""
    sampler = Sampler(config)
    trace = sampler.run()
    return trace, sampler

