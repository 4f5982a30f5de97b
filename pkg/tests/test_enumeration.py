import collections
import itertools
import random
from unittest import TestCase

import networkx as nx
import pytest

from sigma_lab.enumeration import *
from sigma_lab.graphs import (
    complement,
    cycle,
    from_edges,
    path,
    relabel,
    star,
    to_networkx,
)


KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def brute_force_classes(n):
    """Count classes by keeping the lexicographically smallest relabeling."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pair for i, pair in enumerate(pairs) if bits >> i & 1]
        seen.add(
            min(
                tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
                for p in perms
            )
        )
    return len(seen)


class TestCanonicalForm(TestCase):

    def test_relabeling_does_not_change_key(self):
        rng = random.Random(21)
        for n in range(1, 9):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            edges = [pair for pair in pairs if rng.random() < 0.5]
            graph = from_edges(n, edges)
            key = canonical_key(graph)
            for _ in range(5):
                permutation = list(range(n))
                rng.shuffle(permutation)
                self.assertEqual(canonical_key(relabel(graph, permutation)), key)

    def test_canonical_form_is_isomorphic(self):
        graph = from_edges(6, [(0, 5), (5, 1), (1, 4), (4, 2), (2, 3)])
        form, _ = canonical_form(graph)
        self.assertTrue(nx.is_isomorphic(to_networkx(graph), to_networkx(form)))

    def test_are_isomorphic(self):
        self.assertTrue(are_isomorphic(cycle(5), complement(cycle(5))))
        self.assertTrue(are_isomorphic(path(4), complement(path(4))))
        self.assertFalse(are_isomorphic(path(4), star(4)))
        self.assertFalse(are_isomorphic(path(4), path(5)))

    def test_refined_colors_separate_degrees(self):
        colors = refine_colors(path(4))
        self.assertEqual(colors[0], colors[3])
        self.assertEqual(colors[1], colors[2])
        self.assertNotEqual(colors[0], colors[1])


class TestEnumeration(TestCase):

    def test_counts_up_to_seven(self):
        for n in range(1, 8):
            self.assertEqual(len(list(enumerate_nonisomorphic(n))), KNOWN_COUNTS[n], n)

    def test_counts_match_graph_atlas(self):
        atlas = collections.Counter(g.number_of_nodes() for g in nx.graph_atlas_g())
        for n in range(1, 7):
            self.assertEqual(len(list(enumerate_nonisomorphic(n))), atlas[n], n)

    def test_counts_match_permutation_filter(self):
        for n in range(1, 6):
            count = len(list(enumerate_nonisomorphic(n)))
            self.assertEqual(count, brute_force_classes(n))

    def test_representatives_are_pairwise_non_isomorphic(self):
        graphs = [to_networkx(graph) for graph in enumerate_nonisomorphic(5)]
        for first, second in itertools.combinations(graphs, 2):
            self.assertFalse(nx.is_isomorphic(first, second))

    def test_up_to(self):
        graphs = list(enumerate_up_to(4))
        self.assertEqual(len(graphs), 1 + 2 + 4 + 11)
        orders = [graph.n for graph in graphs]
        self.assertEqual(orders, sorted(orders))

    def test_output_is_deterministic(self):
        first = list(enumerate_nonisomorphic(5))
        self.assertEqual(first, list(enumerate_nonisomorphic(5)))

    def test_out_of_range(self):
        for n in [0, 9, -1]:
            with self.assertRaises(EnumerationError) as ctx:
                list(enumerate_nonisomorphic(n))
            self.assertIn("graph6", str(ctx.exception))

    @pytest.mark.slow
    def test_count_eight(self):
        self.assertEqual(sum(1 for _ in enumerate_nonisomorphic(8)), KNOWN_COUNTS[8])
