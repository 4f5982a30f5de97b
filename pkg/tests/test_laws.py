from unittest import TestCase, mock

from sigma_lab import spectra
from sigma_lab.enumeration import enumerate_up_to
from sigma_lab.graphs import *
from sigma_lab.laws import *


class TestRegistry(TestCase):

    def test_law_ids(self):
        self.assertEqual(
            list(LAWS),
            [
                "grone",
                "second-degree",
                "join-multiplicity",
                "anticomponent-count",
                "nonempty-anticomponents",
                "theorem33-inequalities",
                "complete-bipartite",
                "star",
                "spider",
                "split",
                "reduction",
                "forest",
                "cograph",
                "p4-laden-structure",
                "p4-laden-conjecture",
                "sigma-oracle",
                "conjecture1",
            ],
        )

    def test_only_the_conjecture_is_a_report(self):
        reports = [law.id for law in LAWS.values() if law.kind == "report"]
        self.assertEqual(reports, ["conjecture1"])

    def test_resolve(self):
        self.assertEqual(len(resolve_laws("all")), len(LAWS))
        self.assertEqual(
            [law.id for law in resolve_laws("star, grone,star")], ["star", "grone"]
        )
        self.assertEqual([law.id for law in resolve_laws(["split"])], ["split"])

    def test_resolve_rejects_unknown_or_empty(self):
        with self.assertRaises(ValueError) as ctx:
            resolve_laws("grone,lemma9")
        self.assertIn("lemma9", str(ctx.exception))
        with self.assertRaises(ValueError):
            resolve_laws("")


class TestFacts(TestCase):

    def test_facts_are_shared(self):
        graph = remark_family(2)
        facts = GraphFacts(graph)
        self.assertEqual(facts.sigma, 2)
        self.assertEqual(facts.k, 3)
        self.assertEqual(facts.ell, 1)
        self.assertEqual(audit_conjecture1(graph, facts).evidence["sigma"], 2)

    def test_facts_of_another_graph_are_ignored(self):
        record = audit_conjecture1(star(5), GraphFacts(path(5)))
        self.assertEqual(record.graph6, "Ds_")
        self.assertEqual(record.evidence["sigma"], 1)


class TestSpectralAudits(TestCase):

    def test_grone(self):
        record = audit_grone(path(4))
        self.assertEqual(record.verdict, HOLDS)
        self.assertEqual(record.evidence["threshold"], 3)
        self.assertEqual(audit_grone(empty(3)).verdict, NOT_APPLICABLE)

    def test_second_degree(self):
        self.assertEqual(audit_second_degree(cycle(5)).verdict, HOLDS)
        self.assertEqual(audit_second_degree(complete(1)).verdict, NOT_APPLICABLE)

    def test_second_degree_skips_single_edge_graphs(self):
        for s in range(4):
            record = audit_second_degree(disjoint_union(complete(2), empty(s)))
            self.assertEqual(record.verdict, NOT_APPLICABLE, s)
        record = audit_second_degree(path(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["eigenvalues_at_least_d2"], 2)
        for n in range(3, 7):
            self.assertTrue(audit_second_degree(complete(n)).holds, n)

    def test_join_multiplicity(self):
        record = audit_join_multiplicity(complete(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["multiplicity_of_n"], 3)

    def test_anticomponent_count(self):
        record = audit_anticomponent_count(remark_family(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["anticomponents"], 5)
        self.assertEqual(record.evidence["sigma"], 4)

    def test_nonempty_anticomponents(self):
        record = audit_nonempty_anticomponents(remark_family(2))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["ell"], 1)
        record = audit_nonempty_anticomponents(complete_bipartite(2, 3))
        self.assertEqual(record.verdict, NOT_APPLICABLE)
        record = audit_nonempty_anticomponents(star(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["ell"], 0)
        self.assertEqual(audit_nonempty_anticomponents(path(4)).verdict, NOT_APPLICABLE)

    def test_theorem33_inequalities(self):
        record = audit_theorem33_inequalities(remark_family(2))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["terms"], [{"n_i": 8, "m_i": 4, "value": 16}])
        record = audit_theorem33_inequalities(star(4))
        self.assertEqual(record.verdict, NOT_APPLICABLE)

    def test_complete_bipartite_corollary(self):
        record = audit_complete_bipartite_corollary(star(5))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["complete_bipartite"], [1, 4])
        self.assertEqual(
            audit_complete_bipartite_corollary(path(4)).verdict, NOT_APPLICABLE
        )

    def test_star_characterization(self):
        self.assertTrue(audit_star_characterization(star(6)).holds)
        record = audit_star_characterization(complete_bipartite(2, 3))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["sigma"], 2)
        self.assertEqual(audit_star_characterization(cycle(5)).verdict, NOT_APPLICABLE)


class TestStructureAudits(TestCase):

    def test_spider_bound(self):
        for kind in ["thin", "thick"]:
            for head in [empty(0), complete(1), empty(2)]:
                graph, _ = spider(kind, 3, head)
                record = audit_spider_bound(graph)
                self.assertTrue(record.holds, (kind, head))
                self.assertEqual(record.evidence["kind"], kind)
        record = audit_spider_bound(path(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["d2"], 2)
        self.assertEqual(record.evidence["average_degree"], "3/2")
        self.assertEqual(audit_spider_bound(cycle(5)).verdict, NOT_APPLICABLE)

    def test_spider_plus_twin_bound(self):
        graph, _ = spider_with_twin("thick", 3, complete(1), 4, adjacent=True)
        record = audit_spider_bound(graph)
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["twin_part"], "body")

    def test_split_theorem(self):
        record = audit_split_theorem(star(5))
        self.assertTrue(record.holds)
        self.assertTrue(record.evidence["star_shaped"])
        record = audit_split_theorem(complete(4))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["d2"], 3)
        self.assertEqual(audit_split_theorem(cycle(5)).verdict, NOT_APPLICABLE)

    def test_reduction(self):
        record = audit_reduction(disjoint_union(star(4), empty(1)))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["chain"], [0, "6/5", "3/2"])
        self.assertEqual(record.evidence["component_n"], 4)
        record = audit_reduction(disjoint_union(complete(2), empty(2)))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["component_sigma"], 1)
        self.assertEqual(audit_reduction(path(4)).verdict, NOT_APPLICABLE)

    def test_reduction_picks_the_component_exactly(self):
        graph = disjoint_union(empty(1), disjoint_union(star(5), empty(1)))
        with mock.patch.object(spectra, "eigenvalues", side_effect=AssertionError):
            record = audit_reduction(graph)
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["component_n"], 5)
        self.assertEqual(record.evidence["chain"], [0, "8/7", "8/5"])

    def test_forest(self):
        record = audit_forest(path(5))
        self.assertTrue(record.holds)
        self.assertEqual(
            record.evidence["long_trees"],
            [{"n": 5, "d2": 2, "average_degree": "8/5", "sigma": 2}],
        )
        self.assertTrue(audit_forest(disjoint_union(star(5), empty(2))).holds)
        self.assertEqual(audit_forest(cycle(3)).verdict, NOT_APPLICABLE)

    def test_cograph(self):
        self.assertTrue(audit_cograph(complete_bipartite(2, 3)).holds)
        self.assertTrue(audit_cograph(complete(1)).holds)
        self.assertEqual(audit_cograph(path(4)).verdict, NOT_APPLICABLE)

    def test_p4_laden(self):
        record = audit_p4_laden_structure(cycle(5))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["case"], "trivial-or-five")
        self.assertEqual(audit_p4_laden_structure(star(4)).verdict, NOT_APPLICABLE)
        self.assertTrue(audit_p4_laden_conjecture(path(5)).holds)
        self.assertEqual(audit_p4_laden_conjecture(cycle(6)).verdict, NOT_APPLICABLE)

    def test_sigma_oracle(self):
        record = audit_sigma_oracle(remark_family(3))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["sigma_float"], 3)

    def test_conjecture1(self):
        record = audit_conjecture1(disjoint_union(star(4), empty(1)))
        self.assertTrue(record.holds)
        self.assertEqual(record.evidence["conjecture_form"], "K1,3+1K1")
        record = audit_conjecture1(disjoint_union(star(4), empty(2)))
        self.assertTrue(record.holds)
        self.assertIsNone(record.evidence["conjecture_form"])
        self.assertEqual(record.evidence["raw_shape"], "K1,3+2K1")


class TestSmallCorpus(TestCase):

    def test_no_law_fails_up_to_six_vertices(self):
        laws = resolve_laws("all")
        for graph in enumerate_up_to(6):
            facts = GraphFacts(graph)
            for law in laws:
                record = law.audit(graph, facts)
                self.assertFalse(record.fails, (law.id, record.graph6, record.evidence))
