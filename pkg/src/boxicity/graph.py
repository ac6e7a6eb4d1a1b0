"""Simple undirected graphs on vertices 1..n, file I/O and generators."""

from __future__ import annotations

import bisect
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rng import Rng

Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Malformed graph file; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class GraphParseWarning(UserWarning):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``1..n``.

    ``adj[v]`` is the sorted neighbour tuple of ``v``; index 0 is an unused
    placeholder so that vertex numbers index directly.
    """

    __slots__ = ("n", "edges", "adj", "degree", "_adjsets")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es: set[Edge] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            es.add(_norm(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(tuple(sorted(x)) for x in nbrs)
        self.degree = tuple(len(x) for x in self.adj)
        self._adjsets = tuple(frozenset(x) for x in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degree[1:], default=0)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        """All absent pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(1, self.n + 1)
                for v in range(u + 1, self.n + 1) if v not in self._adjsets[u]]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``1..k``.

        Returns the subgraph and ``labels`` with ``labels[i]`` the original
        vertex of new vertex ``i`` (``labels[0]`` is 0).
        """
        labels = [0] + sorted(set(keep))
        index = {v: i for i, v in enumerate(labels) if i}
        es = [(index[u], index[v]) for u, v in self.edges
              if u in index and v in index]
        return Graph(len(labels) - 1, es), labels

    def without_vertex(self, v: int) -> "Graph":
        """Same vertex set with every edge at ``v`` removed."""
        return Graph(self.n, (e for e in self.edges if v not in e))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented ``p edge <n> <m>`` / ``e <u> <v>`` format.

    Comment lines start with ``c``. Duplicate edges are dropped with a
    single summary warning, as is a declared edge count that disagrees with
    the distinct edges found.
    """
    n = None
    declared = 0
    header_line = 0
    edges: set[Edge] = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError("second 'p' header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError("non-integer in header", lineno) from None
            if n < 0 or declared < 0:
                raise GraphParseError("negative count in header", lineno)
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise GraphParseError("edge line before 'p' header", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer vertex", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphParseError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            e = _norm(u, v)
            if e in edges:
                duplicates += 1
            edges.add(e)
        else:
            raise GraphParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge <n> <m>' header")
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) ignored",
                      GraphParseWarning, stacklevel=2)
    if declared != len(edges):
        warnings.warn(f"line {header_line}: header declares {declared} edges, "
                      f"found {len(edges)}", GraphParseWarning, stacklevel=2)
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g, comment))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph(g.n, g.non_edges())


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return Graph(leaves + 1, ((1, i) for i in range(2, leaves + 2)))


def gen_roberts(k: int) -> Graph:
    """K_k minus the perfect matching {(i, i + k/2)}; (k-2)-regular."""
    if k < 2 or k % 2:
        raise ValueError(f"Roberts graph needs an even k >= 2, got {k}")
    half = k // 2
    return Graph(k, ((u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)
                     if v - u != half))


def gen_roberts_path(n: int, n1: int) -> Graph:
    """Roberts graph on 1..n1, a path on n1+1..n, joined by the edge (n1, n1+1)."""
    if n1 < 2 or n1 % 2:
        raise ValueError(f"n1 must be even and >= 2, got {n1}")
    if n1 >= n:
        raise ValueError(f"need n1 < n, got n1={n1}, n={n}")
    edges = list(gen_roberts(n1).edges)
    edges.extend((i, i + 1) for i in range(n1, n))
    return Graph(n, edges)


def _pair_offsets(n: int) -> list[int]:
    # offsets[u-1] = index of the first pair (u, u+1) in lexicographic order
    offs = [0]
    for u in range(1, n):
        offs.append(offs[-1] + (n - u))
    return offs


def _decode_pair(k: int, n: int, offs: Sequence[int]) -> Edge:
    u = bisect.bisect_right(offs, k)  # 1-based row
    return u, u + 1 + (k - offs[u - 1])


def gen_gnm(n: int, m: int, rng: Rng) -> Graph:
    """Uniform graph with exactly m edges.

    A sparse partial Fisher-Yates over the n(n-1)/2 pair indices; O(m) work
    and memory regardless of n.
    """
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m must lie in 0..{total}, got {m}")
    swapped: dict[int, int] = {}
    chosen = []
    for i in range(m):
        j = i + rng.below(total - i)
        chosen.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    offs = _pair_offsets(n)
    return Graph(n, (_decode_pair(k, n, offs) for k in chosen))


def gen_gnp(n: int, p: float, rng: Rng) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return Graph(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
                     if rng.random() < p))


FAMILIES = ("roberts", "roberts-path", "gnm", "gnp", "path", "complete", "empty")


@dataclass(frozen=True)
class GraphFamilySpec:
    family: str
    n: int | None = None
    k: int | None = None
    n1: int | None = None
    m: int | None = None
    p: float | None = None
    seed: int = 0

    def validate(self) -> None:
        f = self.family
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        need = {"roberts": ("k",), "roberts-path": ("n", "n1"), "gnm": ("n", "m"),
                "gnp": ("n", "p"), "path": ("n",), "complete": ("n",), "empty": ("n",)}[f]
        for name in need:
            if getattr(self, name) is None:
                raise ValueError(f"family {f} requires --{name}")
        if self.n is not None and self.n < 0:
            raise ValueError("n must be non-negative")
        if f == "roberts" and (self.k < 2 or self.k % 2):
            raise ValueError("roberts requires an even k >= 2")
        if f == "roberts-path" and (self.n1 < 2 or self.n1 % 2 or self.n1 + 1 > self.n):
            raise ValueError("roberts-path requires an even n1 >= 2 with n1 + 1 <= n")
        if f == "gnm" and not 0 <= self.m <= self.n * (self.n - 1) // 2:
            raise ValueError("gnm requires 0 <= m <= n(n-1)/2")
        if f == "gnp" and not 0.0 <= self.p <= 1.0:
            raise ValueError("gnp requires 0 <= p <= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def gen_random(spec: GraphFamilySpec) -> Graph:
    """G(n, m) or G(n, p) drawn from the stream seeded by ``spec.seed``."""
    spec.validate()
    if spec.family == "gnm":
        return gen_gnm(spec.n, spec.m, Rng(spec.seed))
    if spec.family == "gnp":
        return gen_gnp(spec.n, spec.p, Rng(spec.seed))
    raise ValueError(f"gen_random handles gnm and gnp, not {spec.family}")


def generate(spec: GraphFamilySpec) -> Graph:
    spec.validate()
    f = spec.family
    if f in ("gnm", "gnp"):
        return gen_random(spec)
    if f == "roberts":
        return gen_roberts(spec.k)
    if f == "roberts-path":
        return gen_roberts_path(spec.n, spec.n1)
    if f == "path":
        return path_graph(spec.n)
    if f == "complete":
        return complete_graph(spec.n)
    return empty_graph(spec.n)
