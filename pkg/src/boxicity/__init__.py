"""Box representations of graphs in low dimension.

Builders produce a list of interval supergraphs whose edge sets intersect
exactly in the input graph's edges: randomized (:func:`build_randomized`),
derandomized (:func:`build_derandomized`) and degree-split
(:func:`build_split`). :mod:`boxicity.oracle` holds brute-force checks for
small instances.
"""

from .boxrep import (BoxRepresentation, VerifyReport, add_vertex_dimension, deserialize,
                     serialize, verify)
from .derand import (PartialPermutation, build_derandomized, cond_expectation, cond_prob,
                     derand_supergraph)
from .graph import (Graph, GraphFamilySpec, complement, gen_random, gen_roberts,
                    gen_roberts_path, parse_graph)
from .intervals import (IntervalRepresentation, Permutation, interval_edges, m_map, project,
                        random_permutation)
from .rand_build import (AttemptsExhausted, RandBuildConfig, build_randomized,
                         edge_presence_probability, rand_supergraph)
from .rng import Rng
from .split import build_split

__all__ = [
    "AttemptsExhausted", "BoxRepresentation", "Graph", "GraphFamilySpec",
    "IntervalRepresentation", "PartialPermutation", "Permutation", "RandBuildConfig", "Rng",
    "VerifyReport", "add_vertex_dimension", "build_derandomized", "build_randomized",
    "build_split", "complement", "cond_expectation", "cond_prob", "derand_supergraph",
    "deserialize", "edge_presence_probability", "gen_random", "gen_roberts",
    "gen_roberts_path", "interval_edges", "m_map", "parse_graph", "project",
    "rand_supergraph", "random_permutation", "serialize", "verify",
]
