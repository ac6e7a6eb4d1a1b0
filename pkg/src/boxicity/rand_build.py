"""Randomized construction from uniformly random vertex orders."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .boxrep import BoxRepresentation, adjacency_matrix, verify
from .graph import Graph
from .intervals import (IntervalRepresentation, Permutation, intersection_matrix, m_map,
                        random_permutation)
from .rng import Rng

LOG2_E = 1.0 / math.log(2.0)


class AttemptsExhausted(RuntimeError):
    """No attempt produced a valid representation.

    ``misses[i]`` counts the non-edges that survived in all dimensions of
    attempt ``i``.
    """

    def __init__(self, misses: list[int], dimension: int) -> None:
        self.misses = misses
        self.dimension = dimension
        super().__init__(f"{len(misses)} attempt(s) of dimension {dimension} failed; "
                         f"uncovered non-edges per attempt: {misses}")


def default_dimension(g: Graph) -> int:
    """``ceil((Δ + 2) ln n)``, at least 1 (0 for complete graphs)."""
    if g.is_complete():
        return 0
    return max(1, math.ceil((g.max_degree + 2) * math.log(g.n)))


def default_attempts(n: int) -> int:
    return max(1, math.ceil(LOG2_E * math.log(n))) if n > 1 else 1


@dataclass(frozen=True)
class RandBuildConfig:
    seed: int = 0
    t_override: int | None = None
    max_attempts: int | None = None
    direct_interval: bool = False
    """Build graphs with Δ <= 1 directly in one dimension instead of via RAND."""

    def __post_init__(self) -> None:
        if self.t_override is not None and self.t_override < 1:
            raise ValueError("t_override must be >= 1")
        if self.max_attempts is not None and self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def rand_supergraph(g: Graph, rng: Rng) -> IntervalRepresentation:
    """M(g, π) for a uniformly random π."""
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return m_map(g, random_permutation(g.n, rng))


def edge_presence_probability(g: Graph, u: int, v: int) -> Fraction:
    """Exact probability that non-edge (u, v) appears in a RAND output."""
    if u == v or g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a non-edge")
    du, dv = g.degree[u], g.degree[v]
    return Fraction(1, 2) * (Fraction(du, du + 2) + Fraction(dv, dv + 2))


def rand_attempt(g: Graph, t: int, rng: Rng) -> tuple[BoxRepresentation, int]:
    """One attempt: ``t`` RAND outputs, each from its own substream of ``rng``.

    Returns the candidate representation and how many non-edges are present
    in all ``t`` interval graphs (0 means the candidate is valid).
    """
    dims = tuple(rand_supergraph(g, rng.substream(j)) for j in range(t))
    common = np.ones((g.n + 1, g.n + 1), dtype=bool)
    for d in dims:
        common &= intersection_matrix(d)
    missed = int(np.count_nonzero(np.triu(common & ~adjacency_matrix(g), 1)))
    return BoxRepresentation(g.n, dims), missed


def direct_interval_rep(g: Graph) -> BoxRepresentation:
    """One-dimensional representation of a graph with maximum degree <= 1.

    M(g, π) is exact when each matched pair sits at consecutive ranks.
    """
    if g.max_degree > 1:
        raise ValueError("direct construction needs maximum degree <= 1")
    order: list[int] = []
    seen: set[int] = set()
    for v in g.vertices:
        if v not in seen:
            order.append(v)
            order.extend(g.adj[v])
            seen.add(v)
            seen.update(g.adj[v])
    return BoxRepresentation(g.n, (m_map(g, Permutation.from_order(order)),))


def build_randomized(g: Graph, cfg: RandBuildConfig = RandBuildConfig(),
                     rng: Rng | None = None) -> BoxRepresentation:
    """Repeat sets of t RAND outputs until one represents ``g`` exactly.

    Attempt ``i`` draws from substream ``i`` of ``rng`` (default
    ``Rng(cfg.seed)``); attempts are tried in index order. Raises
    :class:`AttemptsExhausted` after ``max_attempts``.
    """
    if g.is_complete():
        return BoxRepresentation(g.n)
    if cfg.direct_interval and g.max_degree <= 1:
        return direct_interval_rep(g)
    t = cfg.t_override if cfg.t_override is not None else default_dimension(g)
    attempts = cfg.max_attempts if cfg.max_attempts is not None else default_attempts(g.n)
    root = rng if rng is not None else Rng(cfg.seed)
    misses = []
    for i in range(attempts):
        rep, missed = rand_attempt(g, t, root.substream(i))
        if missed == 0:
            if not verify(g, rep).valid:
                raise AssertionError("randomized candidate failed verification")
            return rep
        misses.append(missed)
    raise AttemptsExhausted(misses, t)
