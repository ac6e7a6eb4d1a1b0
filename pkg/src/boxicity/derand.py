"""Deterministic construction by the method of conditional probabilities.

The random order of RAND is fixed one vertex at a time. For a prefix
``V_i`` and a target set H of non-edges, ``f_e(V_i)`` is the probability
that non-edge ``e`` stays absent from M(G, π) when π is a uniform
extension of the prefix, and ``F(V_i)`` is the sum of ``f_e`` over H. Each
step appends the vertex maximising F, so F never decreases and the final
interval supergraph keeps at least ``2|H| / (Δ + 2)`` members of H absent.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .boxrep import BoxRepresentation, verify
from .graph import Edge, Graph
from .intervals import IntervalRepresentation, Permutation, m_map
from .rand_build import default_dimension, direct_interval_rep

log = logging.getLogger(__name__)

INF = math.inf


class PartialPermutation:
    """The first ``i`` vertices of an order under construction.

    ``position[v]`` is the rank of a placed vertex (0 if unplaced) and
    ``first[v]`` the smallest rank among placed members of N(v) + v, or
    ``INF`` if none is placed yet. For a placed vertex ``first[v]`` is its
    final left endpoint.
    """

    __slots__ = ("g", "order", "position", "first")

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.order: list[int] = []
        self.position = [0] * (g.n + 1)
        self.first: list[float] = [INF] * (g.n + 1)

    @classmethod
    def from_prefix(cls, g: Graph, prefix: Iterable[int]) -> "PartialPermutation":
        pp = cls(g)
        for v in prefix:
            pp.place(v)
        return pp

    @property
    def i(self) -> int:
        return len(self.order)

    def is_placed(self, v: int) -> bool:
        return self.position[v] != 0

    def place(self, u: int) -> None:
        if not 1 <= u <= self.g.n:
            raise ValueError(f"vertex {u} out of range 1..{self.g.n}")
        if self.position[u]:
            raise ValueError(f"vertex {u} already placed")
        self.order.append(u)
        r = len(self.order)
        self.position[u] = r
        first = self.first
        if first[u] == INF:
            first[u] = r
        for w in self.g.adj[u]:
            if first[w] == INF:
                first[w] = r

    def extend(self, u: int) -> "PartialPermutation":
        """A copy with ``u`` appended (the ``V_i ⋄ u`` operation)."""
        pp = self.copy()
        pp.place(u)
        return pp

    def copy(self) -> "PartialPermutation":
        pp = PartialPermutation.__new__(PartialPermutation)
        pp.g = self.g
        pp.order = list(self.order)
        pp.position = list(self.position)
        pp.first = list(self.first)
        return pp

    def __repr__(self) -> str:
        return f"PartialPermutation({self.order})"


def normalize_non_edges(g: Graph, pairs: Iterable[Edge]) -> list[Edge]:
    """Sorted, de-duplicated ``(u, v)`` with ``u < v``; rejects edges of g."""
    out = set()
    for u, v in pairs:
        if u > v:
            u, v = v, u
        if u == v or not (1 <= u and v <= g.n):
            raise ValueError(f"({u}, {v}) is not a vertex pair of the graph")
        if g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is an edge, not a non-edge")
        out.add((u, v))
    return sorted(out)


def cond_prob(g: Graph, pp: PartialPermutation, e: Edge) -> Fraction:
    """``f_e(V_i)``: probability that non-edge ``e`` stays absent, given the prefix."""
    u, v = e
    if u == v or g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a non-edge")
    pos, first = pp.position, pp.first
    pu, pv = pos[u], pos[v]
    if pu and pv:
        meet = max(first[u], first[v]) <= min(pu, pv)
        return Fraction(0 if meet else 1)
    if pv and not pu:
        u, v = v, u
        pu, pv = pv, pu
    if pu:
        # u placed, v not; r(v) > r(u) whatever happens
        t = first[v]
        if t == INF:
            return Fraction(1)
        return Fraction(0 if pu > t else 1)
    tu, tv = first[u], first[v]
    if tu != INF and tv != INF:
        return Fraction(0)
    if tu == INF and tv == INF:
        return Fraction(1, g.degree[u] + 2) + Fraction(1, g.degree[v] + 2)
    if tu == INF:
        return Fraction(1, g.degree[u] + 2)
    return Fraction(1, g.degree[v] + 2)


def cond_expectation(g: Graph, pp: PartialPermutation, H: Iterable[Edge]) -> Fraction:
    """``F(V_i)``: the sum of ``cond_prob`` over H."""
    return sum((cond_prob(g, pp, e) for e in H), Fraction(0))


class _Greedy:
    """Incremental F for the greedy step, in integers scaled by ``L``.

    ``L`` is the lcm of all ``d(x) + 2``, so every ``f_e`` times ``L`` is an
    integer and comparisons stay exact. Only non-edges with both endpoints
    unplaced can still change; for those ``f_e`` equals ``c(a)[first(a)
    unset] + c(b)[first(b) unset]`` with ``c(x) = 1/(d(x)+2)``. Placing ``w``
    affects exactly the H-edges at ``w`` and at the neighbours of ``w``
    whose ``first`` is still unset, which gives ``delta`` in O(d(w)).
    """

    def __init__(self, g: Graph, H: Sequence[Edge]) -> None:
        self.g = g
        n = g.n
        self.L = L = math.lcm(*(d + 2 for d in g.degree[1:]))
        self.c = c = [0] + [L // (d + 2) for d in g.degree[1:]]
        hn: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in H:
            hn[u].append(v)
            hn[v].append(u)
        self.hnbrs = hn
        self.pp = PartialPermutation(g)
        # over unplaced H-neighbours: count, count with first unset, sum of c
        self.k = [len(x) for x in hn]
        self.inf_cnt = list(self.k)
        self.inf_c = [sum(c[y] for y in x) for x in hn]
        self.F = sum(c[u] + c[v] for u, v in H)

    def delta(self, w: int) -> int:
        pos, first, c, k = self.pp.position, self.pp.first, self.c, self.k
        d = self.L * self.inf_cnt[w] - self.inf_c[w]
        if first[w] == INF:
            d -= c[w] * k[w]
        for x in self.g.adj[w]:
            if not pos[x] and first[x] == INF:
                d -= c[x] * k[x]
        return d

    def place(self, w: int, d: int) -> None:
        pp = self.pp
        pos, first, c = pp.position, pp.first, self.c
        w_unset = first[w] == INF
        newly = [x for x in self.g.adj[w] if not pos[x] and first[x] == INF]
        pp.place(w)
        k, inf_cnt, inf_c, hn = self.k, self.inf_cnt, self.inf_c, self.hnbrs
        for y in hn[w]:
            k[y] -= 1
            if w_unset:
                inf_cnt[y] -= 1
                inf_c[y] -= c[w]
        for x in newly:
            cx = c[x]
            for y in hn[x]:
                inf_cnt[y] -= 1
                inf_c[y] -= cx
        self.F += d


class SupergraphResult(NamedTuple):
    rep: IntervalRepresentation
    covered: list[Edge]


def derand_supergraph(g: Graph, H: Iterable[Edge], chain: list[Fraction] | None = None,
                      check: bool = False) -> SupergraphResult:
    """Greedy interval supergraph keeping as much of H absent as possible.

    Each step appends the unplaced vertex maximising F (smallest index on
    ties). Returns M(g, π) and the members of H absent from it. If ``chain``
    is given, F(V_0), ..., F(V_n) are appended to it. ``check`` recomputes F
    naively from :func:`cond_prob` at every step.
    """
    H = normalize_non_edges(g, H)
    if not H:
        raise ValueError("H must be non-empty")
    st = _Greedy(g, H)
    L = st.L
    if check and cond_expectation(g, st.pp, H) * L != st.F:
        raise AssertionError("incremental F(V_0) disagrees with the case table")
    if chain is not None:
        chain.append(Fraction(st.F, L))
    pos = st.pp.position
    for _ in range(g.n):
        best, best_d = 0, None
        for w in g.vertices:
            if pos[w]:
                continue
            d = st.delta(w)
            if best_d is None or d > best_d:
                best, best_d = w, d
        if best_d < 0:
            raise AssertionError(f"F decreased at step {st.pp.i + 1}")
        st.place(best, best_d)
        if check and cond_expectation(g, st.pp, H) * L != st.F:
            raise AssertionError(f"incremental F disagrees with the case table "
                                 f"after placing {st.pp.order}")
        if chain is not None:
            chain.append(Fraction(st.F, L))
    rep = m_map(g, Permutation.from_order(st.pp.order))
    covered = [e for e in H if not rep.intersects(*e)]
    if st.F != L * len(covered):
        raise AssertionError("F(V_n) differs from the number of covered non-edges")
    if len(covered) * (g.max_degree + 2) < 2 * len(H):
        raise AssertionError(f"covered {len(covered)} of {len(H)}, below 2|H|/(Δ+2)")
    return SupergraphResult(rep, covered)


@dataclass
class DerandTrace:
    """One ``derand_supergraph`` call inside :func:`build_derandomized`."""

    h: int
    covered: int
    chain: list[Fraction]


def build_derandomized(g: Graph, trace: list[DerandTrace] | None = None,
                       check: bool = False) -> BoxRepresentation:
    """Fully deterministic representation within ``ceil((Δ+2) ln n)`` dimensions.

    Repeats :func:`derand_supergraph` on the still-uncovered non-edges until
    none remain. Complete graphs give dimension 0 and graphs with Δ <= 1 are
    built directly in one dimension.
    """
    if g.is_complete():
        return BoxRepresentation(g.n)
    delta = g.max_degree
    if delta <= 1:
        return direct_interval_rep(g)
    H = g.non_edges()
    h = len(H)
    log.debug("derand: n=%d Δ=%d h=%d, tighter dimension estimate %.3f",
              g.n, delta, h, delta * delta / (2 * (delta - 1)) * math.log(h))
    dims = []
    while H:
        chain: list[Fraction] | None = [] if trace is not None else None
        rep, covered = derand_supergraph(g, H, chain=chain, check=check)
        if not covered:
            raise AssertionError("a derandomized step covered no non-edge")
        if trace is not None:
            trace.append(DerandTrace(len(H), len(covered), chain))
        done = set(covered)
        H = [e for e in H if e not in done]
        dims.append(rep)
    out = BoxRepresentation(g.n, tuple(dims))
    bound = default_dimension(g)
    if out.dimension > bound:
        raise AssertionError(f"dimension {out.dimension} exceeds bound {bound}")
    if not verify(g, out).valid:
        raise AssertionError("derandomized representation failed verification")
    return out
