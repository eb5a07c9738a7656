"""Structurally Markov target distributions in the log domain.

A model assigns ``log phi(A)`` to every vertex set ``A``; a decomposable
graph then has

    log pi(G) = sum_C log phi(C) - sum_S log phi(S)

over its cliques and its separators counted with multiplicity.  ``phi = 0``
is encoded as ``-inf``.
"""
from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field

NEG_INF = -math.inf


class ModelError(ValueError):
    """The model gives an undefined probability (a zero separator potential)."""


@dataclass(frozen=True)
class PotentialModel:
    """Log potential over vertex sets.

    Models that depend only on set size provide ``by_size``; the sampler uses
    it to precompute a lookup table.
    """

    name: str
    by_size: Callable[[int], float] | None = None
    by_set: Callable[[frozenset], float] | None = None
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if (self.by_size is None) == (self.by_set is None):
            raise ValueError("exactly one of by_size / by_set must be given")
        if not math.isfinite(self.log_phi(frozenset())):
            raise ModelError("log phi of the empty set must be finite")

    def log_phi(self, a: frozenset) -> float:
        if self.by_size is not None:
            return self.by_size(len(a))
        return self.by_set(a)  # type: ignore[misc]

    def size_table(self, n: int) -> list[float] | None:
        """``log phi`` for sizes ``0..n`` or ``None`` if not size-only."""
        if self.by_size is None:
            return None
        return [float(self.by_size(k)) for k in range(n + 1)]


def uniform_model() -> PotentialModel:
    return PotentialModel("uniform", by_size=lambda k: 0.0)


def max_clique_model(k: int) -> PotentialModel:
    """Uniform over decomposable graphs whose cliques have at most ``k`` vertices."""
    if k < 1:
        raise ValueError(f"maximum clique size must be >= 1, got {k}")
    return PotentialModel(
        f"max-clique-{k}",
        by_size=lambda s: 0.0 if s <= k else NEG_INF,
        params={"k": k},
    )


def edge_penalty_model(alpha: float) -> PotentialModel:
    """``pi(G)`` proportional to ``exp(-alpha * |E|)``.

    Uses ``log phi(A) = -alpha * |A|(|A|-1)/2`` so that the clique terms minus
    the separator terms count every edge exactly once.
    """
    alpha = float(alpha)
    return PotentialModel(
        f"edge-penalty-{alpha:g}",
        by_size=lambda s: -alpha * s * (s - 1) / 2.0,
        params={"alpha": alpha},
    )


def make_model(name: str, k: int | None = None, alpha: float | None = None) -> PotentialModel:
    if name == "uniform":
        return uniform_model()
    if name == "max-clique":
        return max_clique_model(3 if k is None else k)
    if name == "edge-penalty":
        return edge_penalty_model(1.0 if alpha is None else alpha)
    raise ValueError(f"unknown model {name!r}")


def graph_log_prob(
    model: PotentialModel,
    cliques: Iterable[frozenset],
    separators: Mapping[frozenset, int] | Iterable[frozenset],
) -> float:
    """Unnormalised ``log pi`` from a clique set and a separator multiset.

    ``separators`` is either a count mapping or a plain iterable with repeats.
    """
    if not isinstance(separators, Mapping):
        separators = Counter(separators)
    total = 0.0
    zero_clique = False
    for c in cliques:
        v = model.log_phi(c)
        if v == NEG_INF:
            zero_clique = True
        else:
            total += v
    if zero_clique:
        return NEG_INF
    for s, m in separators.items():
        v = model.log_phi(s)
        if v == NEG_INF:
            raise ModelError(f"separator {sorted(s)} has zero potential while all cliques are positive")
        total -= m * v
    return total
