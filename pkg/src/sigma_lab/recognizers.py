from __future__ import annotations

import dataclasses
import itertools
import math
import typing

from sigma_lab.enumeration import are_isomorphic
from sigma_lab.graphs import (
    Graph,
    SpiderShape,
    anticomponent_sets,
    complement,
    connected_components,
    cycle,
    delete_vertex,
    is_co_connected,
    is_connected,
    path,
    twins,
)
from sigma_lab.utils import bitmask, iter_bits


__all__ = [
    "ConjectureForm",
    "SplitPartition",
    "SpiderOrigin",
    "is_forest",
    "is_tree",
    "diameter",
    "is_star",
    "raw_shape",
    "conjecture_form",
    "is_split",
    "is_pseudo_split",
    "is_cograph",
    "has_induced_p4",
    "count_induced_p4",
    "is_extended_p4_laden",
    "recognize_spider",
    "spider_twin_origin",
    "is_complete_bipartite",
    "p4_laden_case",
    "is_connected_and_co_connected",
]


@dataclasses.dataclass(frozen=True)
class ConjectureForm:
    """One of the right-hand side shapes: K1, K2 + sK1 or K_{1,r} + sK1."""

    variant: typing.Literal["K1", "K2_plus_isolated", "Star_plus_isolated"]
    r: int = 0
    s: int = 0
    constraint_holds: bool = True

    def __str__(self):
        if self.variant == "K1":
            return "K1"
        if self.variant == "K2_plus_isolated":
            return f"K2+{self.s}K1"
        return f"K1,{self.r}+{self.s}K1"


@dataclasses.dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    stable: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class SpiderOrigin:
    """A spider witness, possibly for the graph minus an added twin.

    ``shape`` uses the labels of the original graph. When ``twin`` is set the
    graph is the spider on ``shape``'s vertices plus ``twin``, which is a twin
    of ``twin_of``.
    """

    shape: SpiderShape
    twin: int | None = None
    twin_of: int | None = None
    adjacent: bool | None = None

    @property
    def twin_part(self) -> str | None:
        if self.twin_of is None:
            return None
        if self.twin_of in self.shape.legs:
            return "legs"
        if self.twin_of in self.shape.body:
            return "body"
        return "head"


def is_forest(graph: Graph) -> bool:
    return graph.m == graph.n - len(connected_components(graph))


def is_tree(graph: Graph) -> bool:
    return graph.n >= 1 and is_connected(graph) and is_forest(graph)


def _eccentricity(graph: Graph, source: int) -> float:
    reached = frontier = 1 << source
    distance = 0
    while True:
        grown = 0
        for v in iter_bits(frontier):
            grown |= graph.adj[v]
        frontier = grown & ~reached
        if not frontier:
            break
        reached |= frontier
        distance += 1
    return distance if reached.bit_count() == graph.n else math.inf


def diameter(graph: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` for disconnected graphs."""
    if graph.n == 0:
        raise ValueError("diameter needs a graph with at least one vertex")
    return max(_eccentricity(graph, v) for v in graph.vertices())


def is_star(graph: Graph) -> bool:
    if graph.n == 1:
        return True
    return is_tree(graph) and graph.n - 1 in graph.degrees()


def raw_shape(graph: Graph) -> ConjectureForm | None:
    """Match K1, K2+sK1 or K_{1,r}+sK1 without enforcing ``s < r - 1``."""
    if graph.n == 0:
        return None
    if graph.n == 1:
        return ConjectureForm("K1")

    nontrivial = [part for part in connected_components(graph) if len(part) > 1]
    if len(nontrivial) != 1:
        return None
    size = len(nontrivial[0])
    r = size - 1
    s = graph.n - size
    degrees = sorted((graph.degree(v) for v in nontrivial[0]), reverse=True)
    if graph.m != r or degrees != [r] + [1] * r:
        return None
    if r == 1:
        return ConjectureForm("K2_plus_isolated", r=1, s=s)
    return ConjectureForm("Star_plus_isolated", r=r, s=s, constraint_holds=s < r - 1)


def conjecture_form(graph: Graph) -> ConjectureForm | None:
    shape = raw_shape(graph)
    if shape is None or not shape.constraint_holds:
        return None
    return shape


def is_split(graph: Graph) -> SplitPartition | None:
    """Split partition with a maximal clique, or ``None``.

    Decided by the degree-sequence criterion: with degrees sorted decreasingly
    and ``c = max{i : d_i >= i - 1}``, the graph is split exactly when the top
    ``c`` degrees sum to ``c(c - 1)`` plus the remaining degrees.
    """
    order = sorted(graph.vertices(), key=lambda v: (-graph.degree(v), v))
    degrees = [graph.degree(v) for v in order]
    c = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            c = i
    if sum(degrees[:c]) != c * (c - 1) + sum(degrees[c:]):
        return None

    clique = set(order[:c])
    stable = set(order[c:])
    clique_mask = bitmask(clique)
    for v in sorted(stable):
        if graph.adj[v] & clique_mask == clique_mask:
            clique.add(v)
            stable.discard(v)
            clique_mask |= 1 << v
    return SplitPartition(tuple(sorted(clique)), tuple(sorted(stable)))


def _quad_kind(graph: Graph, quad: typing.Sequence[int]) -> str | None:
    mask = bitmask(quad)
    degrees = sorted((graph.adj[v] & mask).bit_count() for v in quad)
    if degrees == [1, 1, 2, 2]:
        return "P4"
    if degrees == [1, 1, 1, 1]:
        return "2K2"
    if degrees == [2, 2, 2, 2]:
        return "C4"
    return None


def _quad_kinds(graph: Graph) -> dict[tuple[int, ...], str]:
    kinds = {}
    for quad in itertools.combinations(graph.vertices(), 4):
        kind = _quad_kind(graph, quad)
        if kind is not None:
            kinds[quad] = kind
    return kinds


def is_pseudo_split(graph: Graph) -> bool:
    """True when there is no induced 2K2 and no induced C4."""
    return all(
        _quad_kind(graph, quad) not in ("2K2", "C4")
        for quad in itertools.combinations(graph.vertices(), 4)
    )


def count_induced_p4(graph: Graph) -> int:
    return sum(
        1
        for quad in itertools.combinations(graph.vertices(), 4)
        if _quad_kind(graph, quad) == "P4"
    )


def has_induced_p4(graph: Graph) -> bool:
    return any(
        _quad_kind(graph, quad) == "P4"
        for quad in itertools.combinations(graph.vertices(), 4)
    )


def _split_by_components(rows: typing.Sequence[int], mask: int) -> list[int]:
    parts = []
    unseen = mask
    while unseen:
        frontier = reached = unseen & -unseen
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= rows[v]
            frontier = grown & mask & ~reached
            reached |= frontier
        unseen &= ~reached
        parts.append(reached)
    return parts


def _is_cograph_on(graph: Graph, co_rows: typing.Sequence[int], mask: int) -> bool:
    if mask.bit_count() <= 1:
        return True
    parts = _split_by_components(graph.adj, mask)
    if len(parts) == 1:
        parts = _split_by_components(co_rows, mask)
        if len(parts) == 1:
            return False
    return all(_is_cograph_on(graph, co_rows, part) for part in parts)


def is_cograph(graph: Graph) -> bool:
    """Every induced subgraph on two or more vertices is disconnected or
    co-disconnected."""
    return _is_cograph_on(graph, complement(graph).adj, (1 << graph.n) - 1)


def is_extended_p4_laden(graph: Graph) -> bool:
    """Every induced subgraph on at most six vertices with more than two
    induced P4s is pseudo-split."""
    kinds = _quad_kinds(graph)
    for size in (5, 6):
        for chosen in itertools.combinations(graph.vertices(), size):
            found = [kinds.get(quad) for quad in itertools.combinations(chosen, 4)]
            if found.count("P4") > 2 and ("2K2" in found or "C4" in found):
                return False
    return True


def _thin_spider(graph: Graph) -> SpiderShape | None:
    legs = tuple(v for v in graph.vertices() if graph.degree(v) == 1)
    if len(legs) < 2 or 2 * len(legs) > graph.n:
        return None
    body = tuple(graph.neighbors(s)[0] for s in legs)
    if len(set(body)) != len(body):
        return None
    taken = set(legs) | set(body)
    head = tuple(v for v in graph.vertices() if v not in taken)
    shape = SpiderShape("thin", legs, body, head)
    return shape if shape.is_witness_for(graph) else None


def _thick_spider(graph: Graph, k: int) -> SpiderShape | None:
    legs = tuple(v for v in graph.vertices() if graph.degree(v) == k - 1)
    if len(legs) != k:
        return None
    body_mask = 0
    for s in legs:
        body_mask |= graph.adj[s]
    if body_mask.bit_count() != k or body_mask & bitmask(legs):
        return None
    body = tuple(
        next(iter_bits(body_mask & ~graph.adj[s]), -1) for s in legs
    )
    if -1 in body or len(set(body)) != k:
        return None
    taken = set(legs) | set(body)
    head = tuple(v for v in graph.vertices() if v not in taken)
    shape = SpiderShape("thick", legs, body, head)
    return shape if shape.is_witness_for(graph) else None


def recognize_spider(graph: Graph) -> SpiderShape | None:
    """Spider witness, or ``None``; the k = 2 overlap is reported as thin."""
    shape = _thin_spider(graph)
    if shape is not None:
        return shape
    for k in range(3, graph.n // 2 + 1):
        shape = _thick_spider(graph, k)
        if shape is not None:
            return shape
    return None


def spider_twin_origin(graph: Graph) -> SpiderOrigin | None:
    """Spider witness for ``graph`` or for ``graph`` minus an added twin."""
    shape = recognize_spider(graph)
    if shape is not None:
        return SpiderOrigin(shape)

    for v, w, adjacent in twins(graph):
        for removed, kept in ((w, v), (v, w)):
            shape = recognize_spider(delete_vertex(graph, removed))
            if shape is None:
                continue

            def original(u: int) -> int:
                return u if u < removed else u + 1

            lifted = SpiderShape(
                shape.kind,
                tuple(map(original, shape.legs)),
                tuple(map(original, shape.body)),
                tuple(map(original, shape.head)),
            )
            return SpiderOrigin(lifted, twin=removed, twin_of=kept, adjacent=adjacent)
    return None


def is_complete_bipartite(graph: Graph) -> tuple[int, int] | None:
    parts = anticomponent_sets(graph)
    if len(parts) != 2:
        return None
    if any(graph.adj[v] & bitmask(part) for part in parts for v in part):
        return None
    r, s = sorted(len(part) for part in parts)
    return r, s


def _is_small_exception(graph: Graph) -> bool:
    """P5, its complement or C5, up to isomorphism."""
    if graph.n != 5:
        return False
    shapes = (path(5), complement(path(5)), cycle(5))
    return any(are_isomorphic(graph, shape) for shape in shapes)


def p4_laden_case(
    graph: Graph,
) -> typing.Literal["trivial-or-five", "spider", "split"] | None:
    """Which case of the structure theorem for connected, co-connected
    extended P4-laden graphs holds, if any."""
    if graph.n == 1 or _is_small_exception(graph):
        return "trivial-or-five"
    if spider_twin_origin(graph) is not None:
        return "spider"
    if is_split(graph) is not None:
        return "split"
    return None


def is_connected_and_co_connected(graph: Graph) -> bool:
    return is_connected(graph) and is_co_connected(graph)
