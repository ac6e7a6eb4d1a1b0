"""Representation via a degree split: low-degree core plus one dimension per hub."""

from __future__ import annotations

import math
import warnings
from decimal import Decimal, localcontext

from .boxrep import BoxRepresentation, add_vertex_dimension, verify
from .derand import build_derandomized
from .graph import Graph
from .intervals import IntervalRepresentation
from .rand_build import RandBuildConfig, build_randomized, direct_interval_rep
from .rng import Rng

METHODS = ("rand", "derand")


def high_degree_vertices(g: Graph) -> list[int]:
    """Vertices with ``d(v) >= sqrt(m / ln n)``, ascending.

    Decided as ``d(v)^2 ln n >= m`` with a 50-digit ln, which avoids
    misclassifying degrees sitting at the threshold.
    """
    if g.n < 2 or g.m == 0:
        return []
    with localcontext() as ctx:
        ctx.prec = 50
        ln_n = Decimal(g.n).ln()
        m = Decimal(g.m)
        return [v for v in g.vertices if Decimal(g.degree[v] ** 2) * ln_n >= m]


def split_bound(g: Graph) -> int:
    """``ceil(5 sqrt(m ln n))``."""
    return math.ceil(5 * math.sqrt(g.m * math.log(g.n)))


def _embed(core: BoxRepresentation, labels: list[int], n: int) -> BoxRepresentation:
    """Lift a representation of an induced subgraph to vertices ``1..n``.

    Vertices outside the subgraph get the full span of each dimension.
    """
    dims = []
    for d in core.dims:
        lo = min(d.left[1:], default=0)
        hi = max(d.right[1:], default=0)
        left = [lo] * (n + 1)
        right = [hi] * (n + 1)
        left[0] = right[0] = 0
        for i in range(1, core.n + 1):
            left[labels[i]] = d.left[i]
            right[labels[i]] = d.right[i]
        dims.append(IntervalRepresentation(n, tuple(left), tuple(right)))
    return BoxRepresentation(n, tuple(dims))


def build_split(g: Graph, cfg: RandBuildConfig = RandBuildConfig(),
                method: str = "derand", rng: Rng | None = None) -> BoxRepresentation:
    """Represent the subgraph of low-degree vertices, then add each hub.

    Hubs (see :func:`high_degree_vertices`) are added back one at a time in
    ascending order, each costing one extra dimension. For connected graphs
    the result has at most ``ceil(5 sqrt(m ln n))`` dimensions.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if g.m < 1:
        raise ValueError("split construction needs at least one edge")
    connected = g.is_connected()
    if not connected:
        warnings.warn("graph is disconnected; the 5 sqrt(m ln n) bound is not asserted",
                      RuntimeWarning, stacklevel=2)
    hubs = high_degree_vertices(g)
    hub_set = set(hubs)
    core, labels = g.induced_subgraph(v for v in g.vertices if v not in hub_set)
    if core.is_complete():
        core_rep = BoxRepresentation(core.n)
    elif core.m == 0:
        core_rep = direct_interval_rep(core)
    elif method == "rand":
        core_rep = build_randomized(core, cfg, rng)
    else:
        core_rep = build_derandomized(core)
    rep = _embed(core_rep, labels, g.n)
    present = set(labels[1:])
    for v in hubs:
        rep = add_vertex_dimension(rep, v, g.neighbors(v) & present)
        present.add(v)
    if connected and rep.dimension > split_bound(g):
        raise AssertionError(f"dimension {rep.dimension} exceeds {split_bound(g)}")
    if not verify(g, rep).valid:
        raise AssertionError("split representation failed verification")
    return rep
