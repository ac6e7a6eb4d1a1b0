"""Box representations as lists of interval representations.

A graph G is represented by interval graphs I_1..I_t on V(G) when the
intersection of their edge sets is exactly E(G). With t = 0 the
intersection is over no constraints, i.e. the complete graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Edge, Graph
from .intervals import IntervalRepresentation, intersection_matrix


class BoxRepParseError(ValueError):
    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class BoxRepresentation:
    n: int
    dims: tuple[IntervalRepresentation, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(self.dims))
        for j, d in enumerate(self.dims, start=1):
            if d.n != self.n:
                raise ValueError(f"dimension {j} has {d.n} vertices, expected {self.n}")

    @property
    def dimension(self) -> int:
        return len(self.dims)

    def boxes(self) -> list[list[tuple[int, int]]]:
        """Per vertex, its box as a list of ``(l, r)`` per dimension; index 0 unused."""
        return [[]] + [[d.interval(v) for d in self.dims] for v in range(1, self.n + 1)]


@dataclass
class VerifyReport:
    dimension: int
    missing_edges: list[tuple[int, int, int]] = field(default_factory=list)
    """``(j, u, v)``: edge (u, v) of G absent from dimension j (1-based)."""
    extra_edges: list[Edge] = field(default_factory=list)
    """Non-edges of G present in every dimension."""

    @property
    def valid(self) -> bool:
        return not self.missing_edges and not self.extra_edges

    def summary(self, limit: int = 20) -> str:
        lines = [f"valid: {'yes' if self.valid else 'no'}", f"dimension: {self.dimension}",
                 f"missing edges: {len(self.missing_edges)}",
                 f"extra edges: {len(self.extra_edges)}"]
        for j, u, v in self.missing_edges[:limit]:
            lines.append(f"  missing ({u},{v}) in dim {j}")
        for u, v in self.extra_edges[:limit]:
            lines.append(f"  extra ({u},{v})")
        return "\n".join(lines)


def adjacency_matrix(g: Graph) -> np.ndarray:
    mat = np.zeros((g.n + 1, g.n + 1), dtype=bool)
    if g.edges:
        es = np.array(sorted(g.edges), dtype=np.int64)
        mat[es[:, 0], es[:, 1]] = True
        mat[es[:, 1], es[:, 0]] = True
    return mat


def _pairs(mask: np.ndarray) -> list[Edge]:
    us, vs = np.nonzero(np.triu(mask, 1))
    return list(zip(us.tolist(), vs.tolist()))


def verify(g: Graph, rep: BoxRepresentation) -> VerifyReport:
    """Exact comparison of the intersection of all dimensions with E(g)."""
    if rep.n != g.n:
        raise ValueError(f"representation has {rep.n} vertices, graph has {g.n}")
    adj = adjacency_matrix(g)
    report = VerifyReport(rep.dimension)
    common = np.ones_like(adj)
    np.fill_diagonal(common, False)
    common[0, :] = False
    common[:, 0] = False
    for j, d in enumerate(rep.dims, start=1):
        mat = intersection_matrix(d)
        report.missing_edges.extend((j, u, v) for u, v in _pairs(adj & ~mat))
        common &= mat
    report.extra_edges = _pairs(common & ~adj)
    return report


def add_vertex_dimension(rep_minus_v: BoxRepresentation, v: int,
                         nbrs: Iterable[int]) -> BoxRepresentation:
    """Extend a representation of G - v to one of G, one dimension larger.

    ``rep_minus_v`` is over the full vertex set; whatever it assigns to ``v``
    is ignored. In every existing dimension ``v`` is stretched across that
    dimension's whole span, so it meets everyone there. The new dimension
    puts ``v`` at [0, 0], its neighbours at [0, 1] and the rest at [1, 2].
    """
    n = rep_minus_v.n
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} out of range 1..{n}")
    nb = set(nbrs)
    if v in nb:
        raise ValueError(f"vertex {v} listed as its own neighbour")
    for w in nb:
        if not 1 <= w <= n:
            raise ValueError(f"neighbour {w} out of range 1..{n}")
    dims = []
    for d in rep_minus_v.dims:
        others = [w for w in range(1, n + 1) if w != v]
        lo = min((d.left[w] for w in others), default=d.left[v])
        hi = max((d.right[w] for w in others), default=d.right[v])
        left, right = list(d.left), list(d.right)
        left[v], right[v] = lo, hi
        dims.append(IntervalRepresentation(n, tuple(left), tuple(right)))
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    for w in range(1, n + 1):
        if w == v:
            left[w], right[w] = 0, 0
        elif w in nb:
            left[w], right[w] = 0, 1
        else:
            left[w], right[w] = 1, 2
    dims.append(IntervalRepresentation(n, tuple(left), tuple(right)))
    return BoxRepresentation(n, tuple(dims))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def serialize(rep: BoxRepresentation) -> str:
    out = [f"boxrep {rep.n} {rep.dimension}"]
    for j, d in enumerate(rep.dims, start=1):
        out.append(f"dim {j}")
        out.extend(f"{v} {d.left[v]} {d.right[v]}" for v in range(1, rep.n + 1))
    return "\n".join(out) + "\n"


def _ints(parts: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise BoxRepParseError("expected integers", lineno) from None


def deserialize(text: str) -> BoxRepresentation:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln.rstrip("\r") for ln in lines]
    if not lines:
        raise BoxRepParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "boxrep":
        raise BoxRepParseError("expected 'boxrep <n> <t>'", 1)
    n, t = _ints(head[1:], 1)
    if n < 0 or t < 0:
        raise BoxRepParseError("negative count in header", 1)
    expected = 1 + t * (n + 1)
    if len(lines) < expected:
        raise BoxRepParseError(f"truncated: expected {expected} lines, got {len(lines)}",
                               len(lines) + 1)
    if len(lines) > expected:
        raise BoxRepParseError("trailing content after last dimension", expected + 1)
    dims = []
    pos = 1
    for j in range(1, t + 1):
        parts = lines[pos].split()
        if len(parts) != 2 or parts[0] != "dim" or _ints(parts[1:], pos + 1) != [j]:
            raise BoxRepParseError(f"expected 'dim {j}'", pos + 1)
        pos += 1
        left = [0] * (n + 1)
        right = [0] * (n + 1)
        for v in range(1, n + 1):
            parts = lines[pos].split()
            if len(parts) != 3:
                raise BoxRepParseError("expected '<v> <l> <r>'", pos + 1)
            w, lo, hi = _ints(parts, pos + 1)
            if w != v:
                raise BoxRepParseError(f"expected vertex {v}, got {w}", pos + 1)
            if lo > hi:
                raise BoxRepParseError(f"left endpoint {lo} > right endpoint {hi}", pos + 1)
            left[v], right[v] = lo, hi
            pos += 1
        dims.append(IntervalRepresentation(n, tuple(left), tuple(right)))
    return BoxRepresentation(n, tuple(dims))


def read_boxrep(path: str) -> BoxRepresentation:
    with open(path, encoding="ascii", newline="") as fh:
        return deserialize(fh.read())


def write_boxrep(rep: BoxRepresentation, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize(rep))
