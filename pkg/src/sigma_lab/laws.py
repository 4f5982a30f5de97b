"""Executable audits, one per proven statement about sigma plus the conjecture.

Every audit takes a graph (and optionally the :class:`GraphFacts` already
computed for it) and returns an :class:`AuditRecord`. Inequalities are decided
with exact integers and fractions; floating eigenvalues only appear in the
evidence for readability.

Laws of kind ``"oracle"`` are theorems: a ``fails`` verdict there is a defect
in this package. The single ``"report"`` law, ``conjecture1``, is open: a
``fails`` verdict there is a counterexample.
"""

from __future__ import annotations

import dataclasses
import functools
import typing
from fractions import Fraction

from sigma_lab import recognizers, settings, spectra
from sigma_lab.graph6 import graph6_encode
from sigma_lab.graphs import (
    Graph,
    anticomponent_sets,
    connected_components,
    degree_sequence,
    induced_subgraph,
    is_co_connected,
    is_connected,
    max_degree,
)
from sigma_lab.utils import fraction_to_json


__all__ = [
    "HOLDS",
    "FAILS",
    "NOT_APPLICABLE",
    "AuditRecord",
    "Law",
    "LAWS",
    "GraphFacts",
    "resolve_laws",
    "audit_grone",
    "audit_second_degree",
    "audit_join_multiplicity",
    "audit_anticomponent_count",
    "audit_nonempty_anticomponents",
    "audit_theorem33_inequalities",
    "audit_complete_bipartite_corollary",
    "audit_star_characterization",
    "audit_spider_bound",
    "audit_split_theorem",
    "audit_reduction",
    "audit_forest",
    "audit_cograph",
    "audit_p4_laden_structure",
    "audit_p4_laden_conjecture",
    "audit_sigma_oracle",
    "audit_conjecture1",
]


HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

Verdict: typing.TypeAlias = typing.Literal["holds", "fails", "not-applicable"]


@dataclasses.dataclass(frozen=True)
class AuditRecord:
    law: str
    graph6: str
    verdict: Verdict
    evidence: dict[str, typing.Any] = dataclasses.field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    @property
    def applicable(self) -> bool:
        return self.verdict != NOT_APPLICABLE

    def json(self) -> dict[str, typing.Any]:
        return {"graph6": self.graph6, "evidence": self.evidence}


class GraphFacts:
    """Quantities of one graph computed at most once and shared by its audits."""

    def __init__(self, graph: Graph, tie_tol: float | None = None):
        self.graph = graph
        self.tie_tol = settings.SIGMA_LAB_TIE_TOL if tie_tol is None else tie_tol

    @functools.cached_property
    def graph6(self) -> str:
        return graph6_encode(self.graph)

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        return degree_sequence(self.graph)

    @functools.cached_property
    def d2(self) -> int:
        return self.degrees[1]

    @functools.cached_property
    def average_degree(self) -> Fraction:
        return spectra.average_degree(self.graph)

    @functools.cached_property
    def sigma(self) -> int:
        return spectra.sigma(self.graph)

    @functools.cached_property
    def spectrum(self) -> spectra.Spectrum:
        return spectra.eigenvalues(self.graph)

    @functools.cached_property
    def components(self) -> list[tuple[int, ...]]:
        return connected_components(self.graph)

    @functools.cached_property
    def anticomponents(self) -> list[Graph]:
        return [induced_subgraph(self.graph, p) for p in anticomponent_sets(self.graph)]

    @property
    def k(self) -> int:
        return len(self.anticomponents)

    @functools.cached_property
    def ell(self) -> int:
        return sum(1 for part in self.anticomponents if part.m > 0)

    @functools.cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @functools.cached_property
    def co_connected(self) -> bool:
        return is_co_connected(self.graph)

    @functools.cached_property
    def raw_shape(self) -> recognizers.ConjectureForm | None:
        return recognizers.raw_shape(self.graph)

    @functools.cached_property
    def conjecture_form(self) -> recognizers.ConjectureForm | None:
        return recognizers.conjecture_form(self.graph)

    @functools.cached_property
    def split(self) -> recognizers.SplitPartition | None:
        return recognizers.is_split(self.graph)

    @functools.cached_property
    def forest(self) -> bool:
        return recognizers.is_forest(self.graph)

    @functools.cached_property
    def cograph(self) -> bool:
        return recognizers.is_cograph(self.graph)

    @functools.cached_property
    def extended_p4_laden(self) -> bool:
        return recognizers.is_extended_p4_laden(self.graph)

    @functools.cached_property
    def spider_origin(self) -> recognizers.SpiderOrigin | None:
        return recognizers.spider_twin_origin(self.graph)

    @functools.cached_property
    def complete_bipartite(self) -> tuple[int, int] | None:
        return recognizers.is_complete_bipartite(self.graph)


AuditFunction: typing.TypeAlias = typing.Callable[
    [Graph, typing.Optional[GraphFacts]], AuditRecord
]


@dataclasses.dataclass(frozen=True)
class Law:
    id: str
    audit: AuditFunction
    kind: typing.Literal["oracle", "report"]
    statement: str


LAWS: dict[str, Law] = {}


def register_law(law_id: str, statement: str, kind: str = "oracle"):
    if kind not in ["oracle", "report"]:
        raise ValueError(
            f"Invalid law kind: {kind}. Must be one of ['oracle', 'report']"
        )

    def decorator(audit):
        @functools.wraps(audit)
        def wrapper(graph: Graph, facts: GraphFacts | None = None) -> AuditRecord:
            if facts is None or facts.graph is not graph:
                facts = GraphFacts(graph)
            return audit(facts)

        LAWS[law_id] = Law(law_id, wrapper, kind, statement)
        wrapper.law_id = law_id
        return wrapper

    return decorator


def resolve_laws(selection: str | typing.Iterable[str]) -> list[Law]:
    """Turn ``"all"`` or a comma separated / iterable selection into laws."""
    if isinstance(selection, str):
        names = [name.strip() for name in selection.split(",") if name.strip()]
    else:
        names = list(selection)
    if not names:
        raise ValueError("law selection must not be empty")
    if "all" in names:
        return list(LAWS.values())
    unknown = [name for name in names if name not in LAWS]
    if unknown:
        raise ValueError(
            f"Invalid law: {', '.join(unknown)}. Must be one of {list(LAWS)} or 'all'"
        )
    return [LAWS[name] for name in dict.fromkeys(names)]


def _verdict(facts: GraphFacts, law: str, holds: bool, **evidence) -> AuditRecord:
    return AuditRecord(law, facts.graph6, HOLDS if holds else FAILS, evidence)


def _not_applicable(facts: GraphFacts, law: str, reason: str) -> AuditRecord:
    return AuditRecord(law, facts.graph6, NOT_APPLICABLE, {"reason": reason})


def _q(value: Fraction | int):
    return fraction_to_json(value)


def _round(value: float) -> float:
    return round(value, 10)


@register_law("grone", "mu1 >= 1 + Delta for graphs with an edge")
def audit_grone(facts: GraphFacts) -> AuditRecord:
    graph = facts.graph
    if graph.m == 0:
        return _not_applicable(facts, "grone", "graph has no edges")
    threshold = 1 + max_degree(graph)
    at_least = spectra.count_at_least(graph, threshold)
    return _verdict(
        facts,
        "grone",
        at_least >= 1,
        delta=threshold - 1,
        threshold=threshold,
        eigenvalues_at_least_threshold=at_least,
        mu1=_round(facts.spectrum.mu(1)),
    )


@register_law("second-degree", "mu2 >= d2 unless G is K2 + sK1")
def audit_second_degree(facts: GraphFacts) -> AuditRecord:
    graph = facts.graph
    if graph.n < 2:
        return _not_applicable(
            facts, "second-degree", "graph has fewer than 2 vertices"
        )
    # K2 + sK1 is the one family where mu2 < d2
    if graph.m == 1:
        return _not_applicable(
            facts, "second-degree", "graph is K2 plus isolated vertices"
        )
    at_least = spectra.count_at_least(graph, facts.d2)
    return _verdict(
        facts,
        "second-degree",
        at_least >= 2,
        d2=facts.d2,
        eigenvalues_at_least_d2=at_least,
        mu2=_round(facts.spectrum.mu(2)),
    )


@register_law("join-multiplicity", "n has multiplicity >= k - 1 for k anticomponents")
def audit_join_multiplicity(facts: GraphFacts) -> AuditRecord:
    multiplicity = spectra.multiplicity_of_n(facts.graph)
    return _verdict(
        facts,
        "join-multiplicity",
        multiplicity >= facts.k - 1,
        n=facts.graph.n,
        multiplicity_of_n=multiplicity,
        anticomponents=facts.k,
    )


@register_law("anticomponent-count", "k <= sigma + 1")
def audit_anticomponent_count(facts: GraphFacts) -> AuditRecord:
    return _verdict(
        facts,
        "anticomponent-count",
        facts.k <= facts.sigma + 1,
        anticomponents=facts.k,
        sigma=facts.sigma,
    )


@register_law(
    "nonempty-anticomponents",
    "k = sigma + 1 implies ell <= sigma, and ell = sigma leaves one empty"
    " nontrivial anticomponent",
)
def audit_nonempty_anticomponents(facts: GraphFacts) -> AuditRecord:
    if facts.k != facts.sigma + 1:
        return _not_applicable(facts, "nonempty-anticomponents", "k != sigma + 1")
    holds = facts.ell <= facts.sigma
    evidence = {"anticomponents": facts.k, "sigma": facts.sigma, "ell": facts.ell}
    if facts.ell == facts.sigma:
        remaining = [part for part in facts.anticomponents if part.m == 0]
        sizes = [part.n for part in remaining]
        evidence["remaining_sizes"] = sizes
        holds = holds and len(remaining) == 1 and sizes[0] >= 2
    return _verdict(facts, "nonempty-anticomponents", holds, **evidence)


@register_law(
    "theorem33-inequalities",
    "2 n_i sum(m_j) - n_i sum(n_j^2) + n n_i^2 - 2 n m_i - n n_i > 0 for every"
    " nonempty anticomponent when k = sigma + 1",
)
def audit_theorem33_inequalities(facts: GraphFacts) -> AuditRecord:
    if facts.k != facts.sigma + 1 or facts.k < 2:
        return _not_applicable(
            facts, "theorem33-inequalities", "k != sigma + 1 or k < 2"
        )
    if facts.ell == 0:
        return _not_applicable(
            facts, "theorem33-inequalities", "no nonempty anticomponent"
        )

    n = facts.graph.n
    total_m = sum(part.m for part in facts.anticomponents)
    total_n2 = sum(part.n**2 for part in facts.anticomponents)
    terms = []
    for part in facts.anticomponents:
        if part.m == 0:
            continue
        ni, mi = part.n, part.m
        value = 2 * ni * total_m - ni * total_n2 + n * ni**2 - 2 * n * mi - n * ni
        terms.append({"n_i": ni, "m_i": mi, "value": value})
    return _verdict(
        facts,
        "theorem33-inequalities",
        all(term["value"] > 0 for term in terms),
        n=n,
        sum_m=total_m,
        sum_n_squared=total_n2,
        terms=terms,
    )


@register_law(
    "complete-bipartite",
    "sigma = 1 with disconnected complement implies complete bipartite",
)
def audit_complete_bipartite_corollary(facts: GraphFacts) -> AuditRecord:
    if facts.sigma != 1 or facts.co_connected:
        return _not_applicable(
            facts, "complete-bipartite", "sigma != 1 or complement connected"
        )
    parts = facts.complete_bipartite
    return _verdict(
        facts,
        "complete-bipartite",
        parts is not None,
        sigma=facts.sigma,
        complete_bipartite=list(parts) if parts else None,
        anticomponent_sizes=[part.n for part in facts.anticomponents],
    )


@register_law(
    "star", "with disconnected complement, sigma = 1 iff G is K_{1,n-1}"
)
def audit_star_characterization(facts: GraphFacts) -> AuditRecord:
    if facts.co_connected:
        return _not_applicable(facts, "star", "complement is connected")
    is_star = facts.complete_bipartite == (1, facts.graph.n - 1)
    return _verdict(
        facts,
        "star",
        (facts.sigma == 1) == is_star,
        sigma=facts.sigma,
        is_star=is_star,
    )


@register_law(
    "spider", "spiders and spiders plus a twin have d2 >= average degree and sigma >= 2"
)
def audit_spider_bound(facts: GraphFacts) -> AuditRecord:
    origin = facts.spider_origin
    if origin is None:
        return _not_applicable(facts, "spider", "not a spider nor a spider plus twin")
    return _verdict(
        facts,
        "spider",
        facts.d2 >= facts.average_degree and facts.sigma >= 2,
        kind=origin.shape.kind,
        k=origin.shape.k,
        head_size=len(origin.shape.head),
        twin_part=origin.twin_part,
        twin_adjacent=origin.adjacent,
        d2=facts.d2,
        average_degree=_q(facts.average_degree),
        sigma=facts.sigma,
    )


@register_law(
    "split",
    "a split graph with sigma = 1 is K_{1,r-1} + (n-r)K1; any other split graph"
    " has d2 >= average degree",
)
def audit_split_theorem(facts: GraphFacts) -> AuditRecord:
    partition = facts.split
    if partition is None:
        return _not_applicable(facts, "split", "not a split graph")
    star_shaped = facts.raw_shape is not None
    evidence = {
        "clique": list(partition.clique),
        "stable": list(partition.stable),
        "sigma": facts.sigma,
        "star_shaped": star_shaped,
    }
    holds = facts.sigma != 1 or star_shaped
    if not star_shaped and facts.graph.n >= 2:
        evidence["d2"] = facts.d2
        evidence["average_degree"] = _q(facts.average_degree)
        holds = holds and facts.d2 >= facts.average_degree
    return _verdict(facts, "split", holds, **evidence)


@register_law(
    "reduction",
    "a disconnected graph with sigma = 1 is a sigma = 1 component plus isolated"
    " vertices, with 2m2/n2 < 2m/n < 2m1/n1",
)
def audit_reduction(facts: GraphFacts) -> AuditRecord:
    graph = facts.graph
    if facts.connected or facts.sigma != 1 or graph.m == 0:
        return _not_applicable(
            facts, "reduction", "connected, sigma != 1 or no nonempty component"
        )

    parts = [induced_subgraph(graph, part) for part in facts.components]
    first = max(parts, key=lambda part: (part.m, part.n))
    n1, m1 = first.n, first.m
    n2 = graph.n - n1
    m2 = graph.m - m1

    low = Fraction(2 * m2, n2)
    middle = Fraction(2 * (m1 + m2), n1 + n2)
    high = Fraction(2 * m1, n1)
    first_sigma = spectra.sigma(first)
    rest_empty = m2 == 0
    return _verdict(
        facts,
        "reduction",
        low < middle < high and first_sigma == 1 and rest_empty,
        component_n=n1,
        component_m=m1,
        chain=[_q(low), _q(middle), _q(high)],
        component_sigma=first_sigma,
        rest_empty=rest_empty,
    )


@register_law(
    "forest",
    "for forests sigma = 1 iff the conjectured shape, and trees of diameter > 2"
    " have d2 >= 2 > average degree",
)
def audit_forest(facts: GraphFacts) -> AuditRecord:
    if not facts.forest:
        return _not_applicable(facts, "forest", "graph has a cycle")
    holds = (facts.sigma == 1) == (facts.conjecture_form is not None)
    trees = []
    for part in facts.components:
        tree = induced_subgraph(facts.graph, part)
        if tree.n < 4 or recognizers.diameter(tree) <= 2:
            continue
        d2 = degree_sequence(tree)[1]
        average = spectra.average_degree(tree)
        tree_sigma = spectra.sigma(tree)
        trees.append(
            {"n": tree.n, "d2": d2, "average_degree": _q(average), "sigma": tree_sigma}
        )
        holds = holds and d2 >= 2 > average and tree_sigma >= 2
    return _verdict(
        facts,
        "forest",
        holds,
        sigma=facts.sigma,
        conjecture_form=str(facts.conjecture_form) if facts.conjecture_form else None,
        long_trees=trees,
    )


@register_law(
    "cograph",
    "the only connected and co-connected cograph is K1, and cographs satisfy"
    " the conjecture",
)
def audit_cograph(facts: GraphFacts) -> AuditRecord:
    if not facts.cograph:
        return _not_applicable(facts, "cograph", "graph has an induced P4")
    both = facts.connected and facts.co_connected
    return _verdict(
        facts,
        "cograph",
        (not both or facts.graph.n == 1)
        and (facts.sigma == 1) == (facts.conjecture_form is not None),
        connected_and_co_connected=both,
        sigma=facts.sigma,
        conjecture_form=str(facts.conjecture_form) if facts.conjecture_form else None,
    )


@register_law(
    "p4-laden-structure",
    "a connected co-connected extended P4-laden graph is K1, P5, co-P5, C5, a"
    " spider (plus twin) or split",
)
def audit_p4_laden_structure(facts: GraphFacts) -> AuditRecord:
    if not (facts.connected and facts.co_connected):
        return _not_applicable(
            facts, "p4-laden-structure", "disconnected graph or complement"
        )
    if not facts.extended_p4_laden:
        return _not_applicable(facts, "p4-laden-structure", "not extended P4-laden")
    case = recognizers.p4_laden_case(facts.graph)
    return _verdict(facts, "p4-laden-structure", case is not None, case=case)


@register_law(
    "p4-laden-conjecture", "extended P4-laden graphs satisfy the conjecture"
)
def audit_p4_laden_conjecture(facts: GraphFacts) -> AuditRecord:
    if not facts.extended_p4_laden:
        return _not_applicable(facts, "p4-laden-conjecture", "not extended P4-laden")
    return _verdict(
        facts,
        "p4-laden-conjecture",
        (facts.sigma == 1) == (facts.conjecture_form is not None),
        sigma=facts.sigma,
        conjecture_form=str(facts.conjecture_form) if facts.conjecture_form else None,
    )


@register_law("sigma-oracle", "exact sigma equals the floating-point count")
def audit_sigma_oracle(facts: GraphFacts) -> AuditRecord:
    floating = spectra.sigma_float(facts.graph, facts.tie_tol)
    return _verdict(
        facts,
        "sigma-oracle",
        floating == facts.sigma,
        sigma=facts.sigma,
        sigma_float=floating,
        tie_tol=facts.tie_tol,
        average_degree=_q(facts.average_degree),
    )


@register_law(
    "conjecture1",
    "sigma = 1 iff G is K1, K2 + sK1, or K_{1,r} + sK1 with r >= 2 and s < r - 1",
    kind="report",
)
def audit_conjecture1(facts: GraphFacts) -> AuditRecord:
    form = facts.conjecture_form
    raw = facts.raw_shape
    return _verdict(
        facts,
        "conjecture1",
        (facts.sigma == 1) == (form is not None),
        sigma=facts.sigma,
        average_degree=_q(facts.average_degree),
        conjecture_form=str(form) if form else None,
        raw_shape=str(raw) if raw else None,
    )
