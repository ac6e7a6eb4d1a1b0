import math
import warnings
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings

from boxicity.graph import (Graph, GraphFamilySpec, GraphParseError, GraphParseWarning,
                            complement, complete_graph, empty_graph, format_graph, gen_gnm,
                            gen_gnp, gen_random, gen_roberts, gen_roberts_path, generate,
                            parse_graph, path_graph)
from boxicity.rng import Rng
from suites import graphs


def check_invariants(g: Graph) -> None:
    assert sum(g.degree[1:]) == 2 * g.m
    for u in g.vertices:
        assert g.degree[u] == len(g.adj[u])
        assert list(g.adj[u]) == sorted(g.adj[u])
        assert u not in g.adj[u]
        for w in g.adj[u]:
            assert u in g.adj[w]
            assert g.has_edge(u, w) and g.has_edge(w, u)
    assert g.max_degree == max(g.degree[1:], default=0)


class TestParse:
    def test_path(self):
        g = parse_graph("p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3 and g.edges == {(1, 2), (2, 3)}

    def test_empty(self):
        g = parse_graph("p edge 2 0\n")
        assert g.n == 2 and g.m == 0

    def test_out_of_range(self):
        with pytest.raises(GraphParseError, match="vertex 4 out of range") as info:
            parse_graph("p edge 3 1\ne 1 4")
        assert info.value.line == 2

    def test_comments_and_crlf(self):
        g = parse_graph("c hello\r\np edge 3 1\r\nc mid\r\ne 3 1\r\n")
        assert g.edges == {(1, 3)}

    def test_duplicates_warn_and_dedupe(self):
        with pytest.warns(GraphParseWarning, match="1 duplicate"):
            g = parse_graph("p edge 3 1\ne 1 2\ne 2 1\n")
        assert g.m == 1

    def test_count_mismatch_warns(self):
        with pytest.warns(GraphParseWarning, match="declares 5"):
            parse_graph("p edge 3 5\ne 1 2\n")

    @pytest.mark.parametrize("text,line", [
        ("e 1 2\np edge 2 1\n", 1),
        ("p edge 3\n", 1),
        ("p col 3 1\n", 1),
        ("p edge 3 1\ne 2 2\n", 2),
        ("p edge 3 1\ne 1 x\n", 2),
        ("p edge 3 1\np edge 3 1\n", 2),
        ("p edge 3 1\nq 1 2\n", 2),
        ("c nothing\n", 0),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(GraphParseError) as info:
            parse_graph(text)
        assert info.value.line == line

    @given(graphs())
    def test_round_trip(self, g):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert parse_graph(format_graph(g, "x")) == g


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete_graph(4)) == empty_graph(4)

    def test_path(self):
        assert complement(path_graph(3)).edges == {(1, 3)}

    @given(graphs())
    def test_involution(self, g):
        c = complement(g)
        assert complement(c) == g
        assert c.edges.isdisjoint(g.edges)
        assert c.m + g.m == g.n * (g.n - 1) // 2


class TestRoberts:
    def test_k4_is_c4(self):
        assert gen_roberts(4).edges == {(1, 2), (2, 3), (3, 4), (1, 4)}

    def test_k6_octahedron(self):
        g = gen_roberts(6)
        assert g.m == 12 and set(g.degree[1:]) == {4}
        assert not g.has_edge(1, 4) and not g.has_edge(2, 5) and not g.has_edge(3, 6)

    def test_k2(self):
        assert gen_roberts(2) == empty_graph(2)

    @pytest.mark.parametrize("k", range(2, 13, 2))
    def test_regular(self, k):
        g = gen_roberts(k)
        check_invariants(g)
        assert set(g.degree[1:]) == {k - 2}
        assert g.m == k * (k - 2) // 2

    @pytest.mark.parametrize("k", [0, 1, 3, -2])
    def test_bad_k(self, k):
        with pytest.raises(ValueError):
            gen_roberts(k)


class TestRobertsPath:
    def test_small(self):
        g = gen_roberts_path(6, 4)
        assert g.edges == {(1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (5, 6)}
        assert g.m == 6

    def test_average_degree_100_20(self):
        assert gen_roberts_path(100, 20).average_degree() == Fraction(26, 5)

    def test_pendant(self):
        g = gen_roberts_path(7, 6)
        assert g.degree[7] == 1 and g.has_edge(6, 7)
        assert g.m == gen_roberts(6).m + 1

    @pytest.mark.parametrize("n,n1", [(n, n1) for n in range(3, 16)
                                      for n1 in range(2, n, 2)])
    def test_counts(self, n, n1):
        g = gen_roberts_path(n, n1)
        check_invariants(g)
        # Roberts(2) has no edges, so vertex 1 is isolated
        assert g.is_connected() == (n1 >= 4)
        assert g.m == n1 * (n1 - 2) // 2 + (n - n1 - 1) + 1
        assert g.average_degree() == Fraction(n1 * (n1 - 2) + 2 * (n - n1), n)

    @pytest.mark.parametrize("n,n1", [(4, 4), (5, 3), (5, 0), (3, 6)])
    def test_bad(self, n, n1):
        with pytest.raises(ValueError):
            gen_roberts_path(n, n1)


class TestRandom:
    def test_gnm_complete(self):
        assert gen_gnm(5, 10, Rng(3)) == complete_graph(5)

    def test_gnm_empty(self):
        assert gen_gnm(5, 0, Rng(3)) == empty_graph(5)

    def test_gnp_deterministic(self):
        spec = GraphFamilySpec("gnp", n=30, p=0.2, seed=7)
        assert gen_random(spec) == gen_random(spec)

    def test_gnp_extremes(self):
        assert gen_gnp(6, 0.0, Rng(1)).m == 0
        assert gen_gnp(6, 1.0, Rng(1)).m == 15

    @pytest.mark.parametrize("n,m", [(1, 0), (2, 1), (10, 7), (40, 300), (200, 150)])
    def test_gnm_count(self, n, m):
        g = gen_gnm(n, m, Rng(n * 1000 + m))
        check_invariants(g)
        assert g.m == m

    def test_gnm_uniform(self):
        # C(6, 3) = 20 labelled 3-edge graphs on 4 vertices
        counts = Counter(gen_gnm(4, 3, Rng(11, i)).edges for i in range(2000))
        assert len(counts) == 20
        mean = 2000 / 20
        sd = math.sqrt(2000 * (1 / 20) * (19 / 20))
        assert all(abs(c - mean) <= 5 * sd for c in counts.values())

    def test_gnm_distinct_seeds_differ(self):
        assert gen_gnm(30, 40, Rng(1)) != gen_gnm(30, 40, Rng(2))

    @pytest.mark.parametrize("spec", [
        GraphFamilySpec("gnm", n=4, m=7),
        GraphFamilySpec("gnm", n=4, m=-1),
        GraphFamilySpec("gnp", n=4, p=1.5),
        GraphFamilySpec("roberts", k=5),
        GraphFamilySpec("roberts-path", n=4, n1=4),
        GraphFamilySpec("nope", n=4),
        GraphFamilySpec("gnm", n=4),
        GraphFamilySpec("gnm", n=4, m=1, seed=-1),
    ])
    def test_bad_specs(self, spec):
        with pytest.raises(ValueError):
            generate(spec)

    def test_gen_random_rejects_other_families(self):
        with pytest.raises(ValueError):
            gen_random(GraphFamilySpec("path", n=3))

    @pytest.mark.parametrize("family,kw,m", [("path", {"n": 5}, 4), ("complete", {"n": 5}, 10),
                                             ("empty", {"n": 5}, 0), ("roberts", {"k": 8}, 24)])
    def test_generate(self, family, kw, m):
        assert generate(GraphFamilySpec(family, **kw)).m == m


class TestGraph:
    @given(graphs())
    def test_invariants(self, g):
        check_invariants(g)

    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(1, 4)])

    def test_induced_subgraph(self):
        g = path_graph(5)
        sub, labels = g.induced_subgraph([2, 3, 5])
        assert labels == [0, 2, 3, 5]
        assert sub.edges == {(1, 2)}

    def test_connectivity(self):
        assert path_graph(5).is_connected()
        assert not empty_graph(2).is_connected()
        assert empty_graph(1).is_connected()

    @settings(max_examples=50)
    @given(graphs(max_n=8))
    def test_non_edges_sorted(self, g):
        ne = g.non_edges()
        assert ne == sorted(ne)
        assert set(ne) == complement(g).edges
