"""Brute-force ground truth for small graphs.

Nothing here is polynomial; every routine refuses inputs above its
:class:`OracleLimits`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .derand import PartialPermutation
from .graph import Edge, Graph


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_n_perm: int = 7
    """Largest n for factorial permutation enumeration."""
    max_non_edges: int = 12
    max_n_box: int = 8
    """Largest n for interval recognition and exact boxicity."""

    def __post_init__(self) -> None:
        if min(self.max_n_perm, self.max_non_edges, self.max_n_box) < 1:
            raise ValueError("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def _adj_masks(n: int, edges: Iterable[Edge]) -> list[int]:
    masks = [0] * (n + 1)
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _interval_by_masks(n: int, adj: Sequence[int]) -> bool:
    # Search all vertex orders for one where, for positions a < b < c,
    # ac in E implies ab in E. Placing w last is legal iff no earlier vertex
    # adjacent to w has already been followed by a non-neighbour ("closed").
    full = ((1 << n) - 1) << 1
    dead: set[tuple[int, int]] = set()

    def search(placed: int, closed: int) -> bool:
        if placed == full:
            return True
        if (placed, closed) in dead:
            return False
        for w in range(1, n + 1):
            bit = 1 << w
            if placed & bit or adj[w] & closed:
                continue
            if search(placed | bit, closed | (placed & ~adj[w])):
                return True
        dead.add((placed, closed))
        return False

    return search(0, 0)


def is_interval_bruteforce(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> bool:
    """Exhaustive search over vertex orders for an interval ordering."""
    if g.n > limits.max_n_box:
        raise OracleLimitError(f"n={g.n} exceeds the oracle limit {limits.max_n_box}")
    return _interval_by_masks(g.n, _adj_masks(g.n, g.edges))


def boxicity_exact(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Smallest number of interval supergraphs whose edge sets meet in E(g).

    Every supergraph (one per subset of non-edges) is tested for being an
    interval graph; the answer is then the size of a smallest family of
    their missing-edge sets that covers all non-edges, found by
    breadth-first search over covered subsets.
    """
    if g.n > limits.max_n_box:
        raise OracleLimitError(f"n={g.n} exceeds the oracle limit {limits.max_n_box}")
    non_edges = g.non_edges()
    h = len(non_edges)
    if h > limits.max_non_edges:
        raise OracleLimitError(f"{h} non-edges exceed the oracle limit {limits.max_non_edges}")
    if h == 0:
        return 0
    base = _adj_masks(g.n, g.edges)
    full = (1 << h) - 1
    missing_sets = []
    for added in range(1 << h):
        adj = list(base)
        for i, (u, v) in enumerate(non_edges):
            if added >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if added != full and _interval_by_masks(g.n, adj):
            missing_sets.append(full ^ added)
    # a set contained in another is never needed in a smallest cover
    missing_sets.sort(key=lambda s: (-bin(s).count("1"), s))
    maximal: list[int] = []
    for s in missing_sets:
        if not any(s & t == s for t in maximal):
            maximal.append(s)
    reached = {0}
    for k in range(1, h + 1):
        reached = {r | s for r in reached for s in maximal}
        if full in reached:
            return k
    raise AssertionError("no interval cover found; impossible for a valid graph")


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    perms = list(itertools.permutations(range(k)))
    return np.array(perms, dtype=np.int64).reshape(len(perms), k)


def absent_counts(g: Graph, prefix: Sequence[int], pairs: Sequence[Edge],
                  limits: OracleLimits = DEFAULT_LIMITS) -> tuple[list[int], int]:
    """For each pair, the number of completions of ``prefix`` under which the
    pair is absent from M(g, π), and the total number of completions.

    Intervals are taken straight from the definition of M (left end = least
    rank over the closed neighbourhood), for all completions at once.
    """
    n = g.n
    if n > limits.max_n_perm:
        raise OracleLimitError(f"n={n} exceeds the enumeration limit {limits.max_n_perm}")
    prefix = list(prefix)
    if len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        raise ValueError(f"invalid prefix {prefix}")
    rest = np.array([v for v in g.vertices if v not in set(prefix)], dtype=np.int64)
    perms = _perm_table(len(rest))
    total = perms.shape[0]
    orders = np.empty((total, n), dtype=np.int64)
    orders[:, :len(prefix)] = prefix
    orders[:, len(prefix):] = rest[perms]
    rank = np.zeros((total, n + 1), dtype=np.int64)
    rank[np.arange(total)[:, None], orders] = np.arange(1, n + 1)
    left = np.zeros_like(rank)
    for v in g.vertices:
        left[:, v] = rank[:, [v, *g.adj[v]]].min(axis=1)
    counts = []
    for u, v in pairs:
        meet = np.maximum(left[:, u], left[:, v]) <= np.minimum(rank[:, u], rank[:, v])
        counts.append(total - int(np.count_nonzero(meet)))
    return counts, total


def _check_non_edge(g: Graph, u: int, v: int) -> None:
    if u == v or not (1 <= u <= g.n and 1 <= v <= g.n) or g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a non-edge")


def edge_prob_exact(g: Graph, u: int, v: int, limits: OracleLimits = DEFAULT_LIMITS) -> Fraction:
    """Fraction of all n! orders π with (u, v) an edge of M(g, π)."""
    _check_non_edge(g, u, v)
    (absent,), total = absent_counts(g, (), [(u, v)], limits)
    return Fraction(total - absent, total)


def edge_probs_exact(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> dict[Edge, Fraction]:
    """:func:`edge_prob_exact` for every non-edge, sharing one enumeration."""
    pairs = g.non_edges()
    absent, total = absent_counts(g, (), pairs, limits)
    return {e: Fraction(total - a, total) for e, a in zip(pairs, absent)}


def cond_prob_exact(g: Graph, pp: PartialPermutation | Sequence[int], e: Edge,
                    limits: OracleLimits = DEFAULT_LIMITS) -> Fraction:
    """Fraction of completions of the prefix under which ``e`` stays absent."""
    _check_non_edge(g, *e)
    prefix = pp.order if isinstance(pp, PartialPermutation) else pp
    (absent,), total = absent_counts(g, prefix, [e], limits)
    return Fraction(absent, total)
