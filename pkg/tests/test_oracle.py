import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from boxicity.derand import PartialPermutation, build_derandomized
from boxicity.graph import Graph, complete_graph, empty_graph, gen_roberts, path_graph
from boxicity.intervals import Permutation, interval_edges, m_map
from boxicity.oracle import (OracleLimitError, OracleLimits, absent_counts, boxicity_exact,
                             cond_prob_exact, edge_prob_exact, edge_probs_exact,
                             is_interval_bruteforce)
from boxicity.rand_build import edge_presence_probability
from boxicity.rng import Rng
from suites import all_graphs, graphs, random_gnm_suite


def c4() -> Graph:
    return gen_roberts(4)


def is_interval_by_m(g: Graph) -> bool:
    # an interval graph ordered by right endpoints is its own M(g, π)
    return any(interval_edges(m_map(g, Permutation.from_order(p))) == g.edges
               for p in itertools.permutations(range(1, g.n + 1)))


class TestInterval:
    def test_examples(self):
        assert is_interval_bruteforce(path_graph(4))
        assert not is_interval_bruteforce(c4())
        assert is_interval_bruteforce(complete_graph(4))
        assert is_interval_bruteforce(empty_graph(0))

    def test_claw_and_c5(self):
        assert is_interval_bruteforce(Graph(4, [(1, 2), (1, 3), (1, 4)]))
        assert not is_interval_bruteforce(Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]))

    def test_asteroidal_triple(self):
        # subdivided claw: chordal but not interval
        g = Graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
        assert not is_interval_bruteforce(g)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive_against_m_orders(self, n):
        for g in all_graphs(n):
            assert is_interval_bruteforce(g) == is_interval_by_m(g)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=8, min_n=1))
    def test_m_outputs_are_interval(self, g):
        order = list(g.vertices)
        Rng(g.m).shuffle(order)
        ir = m_map(g, Permutation.from_order(order))
        assert is_interval_bruteforce(Graph(g.n, interval_edges(ir)))

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            is_interval_bruteforce(path_graph(9))


class TestBoxicity:
    @pytest.mark.parametrize("k,box", [(2, 1), (4, 2), (6, 3)])
    def test_roberts(self, k, box):
        assert boxicity_exact(gen_roberts(k)) == box

    def test_small(self):
        assert boxicity_exact(path_graph(3)) == 1
        assert boxicity_exact(complete_graph(4)) == 0
        assert boxicity_exact(Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])) == 2

    def test_limits(self):
        with pytest.raises(OracleLimitError):
            boxicity_exact(path_graph(9))
        with pytest.raises(OracleLimitError):
            boxicity_exact(empty_graph(6))
        assert boxicity_exact(empty_graph(6), OracleLimits(max_non_edges=15)) == 1

    def test_at_most_derand(self):
        for n in range(2, 6):
            for g in all_graphs(n)[::7]:
                assert boxicity_exact(g) <= build_derandomized(g).dimension

    def test_at_most_derand_random(self):
        for g in random_gnm_suite(8, 6, 7, seed=5, deg_lo=1.5, deg_hi=2.5):
            if len(g.non_edges()) <= 12:
                assert boxicity_exact(g) <= build_derandomized(g).dimension


class TestProbabilities:
    def test_p3(self):
        assert edge_prob_exact(path_graph(3), 1, 3) == Fraction(1, 3)

    def test_empty(self):
        assert edge_prob_exact(empty_graph(4), 2, 4) == 0

    def test_k4_minus_edge(self):
        g = Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        assert edge_prob_exact(g, 1, 2) == Fraction(1, 2)

    def test_all_pairs(self):
        g = path_graph(4)
        probs = edge_probs_exact(g)
        assert set(probs) == {(1, 3), (1, 4), (2, 4)}
        assert probs[(1, 3)] == edge_prob_exact(g, 1, 3)

    def test_cond_examples(self):
        g = path_graph(3)
        assert cond_prob_exact(g, [], (1, 3)) == Fraction(2, 3)
        assert cond_prob_exact(g, [2], (1, 3)) == 0
        assert cond_prob_exact(g, PartialPermutation.from_prefix(g, [1]), (1, 3)) == 1

    def test_full_prefix(self):
        g = path_graph(3)
        assert cond_prob_exact(g, [1, 3, 2], (1, 3)) == 1

    def test_counts(self):
        counts, total = absent_counts(path_graph(3), [], [(1, 3)])
        assert (counts, total) == ([4], 6)

    @pytest.mark.parametrize("args", [(1, 2), (2, 2), (1, 7)])
    def test_rejects_non_pairs(self, args):
        with pytest.raises(ValueError):
            edge_prob_exact(path_graph(3), *args)

    def test_bad_prefix(self):
        with pytest.raises(ValueError):
            cond_prob_exact(path_graph(3), [1, 1], (1, 3))

    def test_limits(self):
        with pytest.raises(OracleLimitError):
            edge_prob_exact(empty_graph(8), 1, 2)
        assert edge_prob_exact(empty_graph(8), 1, 2, OracleLimits(max_n_perm=8)) == 0

    def test_bad_limits(self):
        with pytest.raises(ValueError):
            OracleLimits(max_n_perm=0)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_closed_form_all_graphs(self, n):
        for g in all_graphs(n):
            for e, p in edge_probs_exact(g).items():
                assert p == edge_presence_probability(g, *e)
