import random
from fractions import Fraction
from unittest import TestCase

import networkx as nx
import numpy as np

from sigma_lab.enumeration import enumerate_up_to
from sigma_lab.graphs import *
from sigma_lab.spectra import *
from sigma_lab.utils import format_values


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


class TestLaplacian(TestCase):

    def test_path(self):
        np.testing.assert_array_equal(
            laplacian(path(3)), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
        )

    def test_empty_graph_is_rejected(self):
        with self.assertRaises(SpectrumError):
            laplacian(empty(0))
        with self.assertRaises(SpectrumError):
            sigma(empty(0))

    def test_average_degree_is_exact(self):
        self.assertEqual(average_degree(path(3)), Fraction(4, 3))
        self.assertEqual(average_degree(empty(4)), 0)


class TestEigenvalues(TestCase):

    def test_matches_networkx(self):
        rng = random.Random(1)
        for n in range(1, 13):
            graph = random_graph(n, 0.5, rng)
            expected = sorted(nx.laplacian_spectrum(to_networkx(graph)), reverse=True)
            self.assertTrue(eigenvalues(graph).matches(expected, 1e-9))

    def test_mu(self):
        self.assertAlmostEqual(mu(path(2), 1), 2.0)
        self.assertAlmostEqual(mu(complete(4), 4), 0.0)
        with self.assertRaises(IndexError):
            eigenvalues(path(2)).mu(3)

    def test_multiplicities(self):
        self.assertEqual(
            [(round(v, 6), k) for v, k in eigenvalues(star(5)).multiplicities()],
            [(5.0, 1), (1.0, 3), (0.0, 1)],
        )

    def test_matches_is_multiset_equality(self):
        spectrum = Spectrum((0.0, 2.0, 2.0))
        self.assertTrue(spectrum.matches([2.0, 0.0, 2.0]))
        self.assertFalse(spectrum.matches([2.0, 0.0, 0.0]))
        self.assertFalse(spectrum.matches([2.0, 0.0]))

    def test_printed_star_spectrum(self):
        self.assertEqual(format_values(eigenvalues(star(5))), "5, 1, 1, 1, 0")


class TestExactCounts(TestCase):

    def test_inertia_shifted(self):
        self.assertEqual(inertia_shifted(star(4), 1).as_tuple(), (1, 2, 1))
        inertia = inertia_shifted(complete(3), Fraction(3))
        self.assertEqual(inertia.as_tuple(), (0, 2, 1))

    def test_count_at_least(self):
        self.assertEqual(count_at_least(complete(3), 3), 2)
        self.assertEqual(count_at_least(path(4), 0), 4)
        self.assertEqual(count_at_least(cycle(5), 5), 0)

    def test_multiplicity_of_n(self):
        self.assertEqual(multiplicity_of_n(complete(4)), 3)
        self.assertEqual(multiplicity_of_n(complete_bipartite(2, 3)), 1)
        self.assertEqual(multiplicity_of_n(path(4)), 0)

    def test_sigma_agrees_with_float_path(self):
        rng = random.Random(2)
        for n in range(1, 11):
            for p in (0.2, 0.5, 0.8):
                graph = random_graph(n, p, rng)
                self.assertEqual(sigma(graph), sigma_float(graph), graph)


class TestCorpusInvariants(TestCase):

    def test_spectral_identities_up_to_six_vertices(self):
        for graph in enumerate_up_to(6):
            n = graph.n
            self.assertEqual(inertia_shifted(graph, -1).as_tuple(), (n, 0, 0))
            self.assertEqual(inertia_shifted(graph, n + 1).as_tuple(), (0, 0, n))
            components = len(connected_components(graph))
            self.assertEqual(inertia_shifted(graph, 0).n_zero, components)

            spectrum = eigenvalues(graph)
            self.assertLess(abs(sum(spectrum.values) - 2 * graph.m), 1e-8 * n)
            other = eigenvalues(complement(graph))
            for i in range(1, n):
                self.assertAlmostEqual(spectrum.mu(i) + other.mu(n - i), n, places=8)


class TestNamedValues(TestCase):

    def test_star_law(self):
        for n in range(2, 51):
            self.assertEqual(sigma(star(n)), 1, n)
            if n >= 3:
                expected = [n] + [1] * (n - 2) + [0]
                self.assertTrue(eigenvalues(star(n)).matches(expected, 1e-9), n)

    def test_remark_family(self):
        for s in range(2, 21):
            graph = remark_family(s)
            self.assertEqual(len(anticomponents(graph)), s + 1)
            expected = [s + 8] * s + [s + 2] * 4 + [s] * 3 + [0]
            self.assertTrue(eigenvalues(graph).matches(expected, 1e-9), s)
            self.assertEqual(average_degree(graph), s + 7 - Fraction(48, s + 8))
            self.assertEqual(sigma(graph), s)

    def test_five_vertex_graphs(self):
        self.assertEqual(sigma(path(5)), 2)
        self.assertEqual(sigma(cycle(5)), 2)
        self.assertEqual(sigma(complement(path(5))), 2)

    def test_star_plus_isolated_vertices(self):
        for r in range(2, 13):
            for s in range(0, 13):
                graph = disjoint_union(star(r + 1), empty(s))
                self.assertEqual(sigma(graph) == 1, s < r - 1, (r, s))

    def test_small_values(self):
        self.assertEqual(sigma(complete(1)), 1)
        self.assertEqual(sigma(complete(2)), 1)
        self.assertEqual(sigma(complete(4)), 3)
        self.assertEqual(sigma(empty(3)), 3)


class TestSpectrumCalculus(TestCase):

    def test_join_spectrum_matches_direct_computation(self):
        rng = random.Random(4)
        for _ in range(200):
            n1 = rng.randint(1, 11)
            n2 = rng.randint(1, 12 - n1)
            first = random_graph(n1, rng.random(), rng)
            second = random_graph(n2, rng.random(), rng)
            composed = join_spectrum(eigenvalues(first), n1, eigenvalues(second), n2)
            direct = eigenvalues(join(first, second))
            self.assertLess(composed.max_error(direct), 1e-8)

    def test_union_spectrum_matches_direct_computation(self):
        rng = random.Random(6)
        for _ in range(10):
            first = random_graph(rng.randint(1, 6), 0.5, rng)
            second = random_graph(rng.randint(1, 6), 0.5, rng)
            composed = union_spectrum(eigenvalues(first), eigenvalues(second))
            direct = eigenvalues(disjoint_union(first, second))
            self.assertTrue(composed.matches(direct))

    def test_complete_bipartite(self):
        composed = join_spectrum([0, 0], 2, [0, 0, 0], 3)
        self.assertTrue(composed.matches([5, 3, 2, 2, 0]))

    def test_join_spectrum_rejects_malformed_input(self):
        with self.assertRaises(SpectrumError):
            join_spectrum([2, 0], 3, [0], 1)
        with self.assertRaises(SpectrumError):
            join_spectrum([2, 1], 2, [0], 1)
