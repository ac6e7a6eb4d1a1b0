"""Vertex orders and the interval supergraphs they induce.

Ranks and interval endpoints are integers; every intersection test is an
exact integer comparison. Arrays indexed by vertex carry an unused slot 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Edge, Graph
from .rng import Rng


@dataclass(frozen=True)
class Permutation:
    """Bijection between vertices ``1..n`` and ranks ``1..n``.

    ``rank[v]`` is the rank of vertex ``v``; ``order[r]`` is the vertex at
    rank ``r``. Both have a placeholder at index 0.
    """

    rank: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rank) - 1

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """Build from the vertices listed by increasing rank."""
        n = len(order)
        rank = [0] * (n + 1)
        for r, v in enumerate(order, start=1):
            if not 1 <= v <= n or rank[v]:
                raise ValueError(f"not a permutation of 1..{n}: {list(order)}")
            rank[v] = r
        return cls(tuple(rank), (0, *order))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "Permutation":
        """Build from ``ranks[i]`` = rank of vertex ``i + 1``."""
        n = len(ranks)
        order = [0] * (n + 1)
        for v, r in enumerate(ranks, start=1):
            if not 1 <= r <= n or order[r]:
                raise ValueError(f"not a permutation of 1..{n}: {list(ranks)}")
            order[r] = v
        return cls((0, *ranks), tuple(order))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        t = tuple(range(n + 1))
        return cls(t, t)

    def __call__(self, v: int) -> int:
        return self.rank[v]


def random_permutation(n: int, rng: Rng) -> Permutation:
    """Uniform permutation of ``1..n`` (Fisher-Yates, O(n))."""
    if n < 1:
        raise ValueError("n must be positive")
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return Permutation.from_order(order)


def project(pi: Permutation, subset: Iterable[int]) -> dict[int, int]:
    """Rank-compress ``pi`` onto ``subset``, preserving relative order."""
    xs = set(subset)
    if not xs:
        raise ValueError("projection onto an empty set")
    for x in xs:
        if not 1 <= x <= pi.n:
            raise ValueError(f"vertex {x} out of range 1..{pi.n}")
    return {v: i for i, v in enumerate(sorted(xs, key=pi.rank.__getitem__), start=1)}


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals ``[left[v], right[v]]`` for ``v`` in ``1..n``."""

    n: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.left) != self.n + 1 or len(self.right) != self.n + 1:
            raise ValueError("endpoint arrays must have length n + 1")
        for v in range(1, self.n + 1):
            if self.left[v] > self.right[v]:
                raise ValueError(f"vertex {v}: left {self.left[v]} > right {self.right[v]}")

    @classmethod
    def from_intervals(cls, intervals: Sequence[tuple[int, int]]) -> "IntervalRepresentation":
        """``intervals[i]`` is the interval of vertex ``i + 1``."""
        return cls(len(intervals), (0, *(a for a, _ in intervals)),
                   (0, *(b for _, b in intervals)))

    def interval(self, v: int) -> tuple[int, int]:
        return self.left[v], self.right[v]

    def intersects(self, u: int, v: int) -> bool:
        return max(self.left[u], self.left[v]) <= min(self.right[u], self.right[v])

    def is_rank_form(self) -> bool:
        """True when the right endpoints are exactly ``1..n`` (as M produces)."""
        return sorted(self.right[1:]) == list(range(1, self.n + 1))


def m_map(g: Graph, pi: Permutation) -> IntervalRepresentation:
    """Interval supergraph of ``g`` induced by the order ``pi``.

    Vertex ``u`` gets ``[min rank over N(u) + u, rank(u)]``. One pass over
    ranks: the first time a vertex or one of its neighbours is reached, its
    left endpoint is fixed. O(n + m).
    """
    n = g.n
    if pi.n != n:
        raise ValueError(f"permutation on {pi.n} vertices, graph has {n}")
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    adj = g.adj
    order = pi.order
    for i in range(1, n + 1):
        u = order[i]
        right[u] = i
        if not left[u]:
            left[u] = i
        for w in adj[u]:
            if not left[w]:
                left[w] = i
    return IntervalRepresentation(n, tuple(left), tuple(right))


def interval_edges(ir: IntervalRepresentation) -> set[Edge]:
    """Edge set of the intersection graph of ``ir``.

    Rank-form representations use a sweep over ranks, O(n + output):
    with ``r(u) < r(v)`` the pair meets iff ``l(v) <= r(u)``. Anything else
    falls back to the pairwise test.
    """
    n = ir.n
    if ir.is_rank_form():
        at = [0] * (n + 1)
        for v in range(1, n + 1):
            at[ir.right[v]] = v
        out = set()
        for v in range(1, n + 1):
            for j in range(max(ir.left[v], 1), ir.right[v]):
                u = at[j]
                out.add((u, v) if u < v else (v, u))
        return out
    return {(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
            if ir.intersects(u, v)}


def intersection_matrix(ir: IntervalRepresentation) -> np.ndarray:
    """Boolean ``(n+1) x (n+1)`` adjacency of the intersection graph.

    Row and column 0 and the diagonal are False.
    """
    lo = np.asarray(ir.left, dtype=np.int64)
    hi = np.asarray(ir.right, dtype=np.int64)
    mat = np.maximum.outer(lo, lo) <= np.minimum.outer(hi, hi)
    mat[0, :] = False
    mat[:, 0] = False
    np.fill_diagonal(mat, False)
    return mat
