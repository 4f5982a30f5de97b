"""Immutable simple graphs stored as per-vertex adjacency bitsets.

Vertices are the dense integers ``0..n-1``. Every operation returns a fresh
:class:`Graph`; nothing here mutates its arguments.
"""

from __future__ import annotations

import dataclasses
import typing

import networkx as nx

from sigma_lab.utils import bitmask, iter_bits


__all__ = [
    "GraphError",
    "Graph",
    "SpiderShape",
    "from_edges",
    "complement",
    "disjoint_union",
    "k_copies",
    "join",
    "join_all",
    "add_twin",
    "delete_vertex",
    "relabel",
    "induced_subgraph",
    "connected_components",
    "is_connected",
    "is_co_connected",
    "anticomponent_sets",
    "anticomponents",
    "degree_sequence",
    "max_degree",
    "is_empty",
    "is_trivial",
    "twins",
    "empty",
    "complete",
    "star",
    "path",
    "cycle",
    "complete_bipartite",
    "spider",
    "spider_with_twin",
    "remark_family",
    "to_networkx",
    "from_networkx",
]


class GraphError(ValueError):
    pass


class Graph:
    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: typing.Sequence[int]):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")

        full = (1 << n) - 1
        adj = tuple(int(row) for row in adj)
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} has neighbours outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")

        self._n = n
        self._adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj: typing.Sequence[int]) -> "Graph":
        # internal constructor for rows that are symmetric by construction
        graph = cls.__new__(cls)
        graph._n = n
        graph._adj = tuple(adj)
        graph._m = sum(row.bit_count() for row in graph._adj) // 2
        return graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphError(f"invalid vertex {v!r} for a graph on {self._n} vertices")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __len__(self):
        return self._n

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edges()})"


@dataclasses.dataclass(frozen=True)
class SpiderShape:
    """Witness partition of a spider: ``legs[i]`` pairs with ``body[i]``."""

    kind: typing.Literal["thin", "thick"]
    legs: tuple[int, ...]
    body: tuple[int, ...]
    head: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.legs)

    def is_witness_for(self, graph: Graph) -> bool:
        if self.kind not in ("thin", "thick"):
            return False
        k = self.k
        if k < 2 or len(self.body) != k:
            return False
        parts = list(self.legs) + list(self.body) + list(self.head)
        if sorted(parts) != list(graph.vertices()):
            return False

        legs_mask = bitmask(self.legs)
        body_mask = bitmask(self.body)
        for i, s in enumerate(self.legs):
            if graph.adj[s] & legs_mask:
                return False
            for j, c in enumerate(self.body):
                wanted = (i == j) if self.kind == "thin" else (i != j)
                if graph.has_edge(s, c) != wanted:
                    return False
        for c in self.body:
            if (graph.adj[c] | 1 << c) & body_mask != body_mask:
                return False
        for r in self.head:
            if graph.adj[r] & body_mask != body_mask or graph.adj[r] & legs_mask:
                return False
        return True


def from_edges(n: int, edges: typing.Iterable[tuple[int, int]]) -> Graph:
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {edge!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {edge!r} is a loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    return Graph._trusted(
        graph.n, [full & ~row & ~(1 << v) for v, row in enumerate(graph.adj)]
    )


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    return Graph._trusted(
        first.n + second.n, list(first.adj) + [row << shift for row in second.adj]
    )


def k_copies(k: int, graph: Graph) -> Graph:
    if k < 0:
        raise GraphError(f"number of copies must be non-negative, got {k}")
    result = Graph._trusted(0, [])
    for _ in range(k):
        result = disjoint_union(result, graph)
    return result


def join(first: Graph, second: Graph) -> Graph:
    shift = first.n
    first_mask = (1 << first.n) - 1
    second_mask = ((1 << second.n) - 1) << shift
    rows = [row | second_mask for row in first.adj]
    rows += [row << shift | first_mask for row in second.adj]
    return Graph._trusted(first.n + second.n, rows)


def join_all(graphs: typing.Iterable[Graph]) -> Graph:
    result = Graph._trusted(0, [])
    for graph in graphs:
        result = join(result, graph)
    return result


def add_twin(graph: Graph, v: int, adjacent: bool) -> Graph:
    """Append vertex ``n`` as a twin of ``v``; a true twin when ``adjacent``."""
    graph.check_vertex(v)
    new = graph.n
    row = graph.adj[v] | (1 << v if adjacent else 0)
    rows = [
        r | (1 << new if (row >> u & 1) else 0) for u, r in enumerate(graph.adj)
    ]
    rows.append(row)
    return Graph._trusted(graph.n + 1, rows)


def induced_subgraph(graph: Graph, vertices: typing.Iterable[int]) -> Graph:
    chosen = sorted(set(vertices))
    for v in chosen:
        graph.check_vertex(v)
    position = {v: i for i, v in enumerate(chosen)}
    mask = bitmask(chosen)
    rows = [
        bitmask(position[u] for u in iter_bits(graph.adj[v] & mask)) for v in chosen
    ]
    return Graph._trusted(len(chosen), rows)


def delete_vertex(graph: Graph, v: int) -> Graph:
    graph.check_vertex(v)
    return induced_subgraph(graph, (u for u in graph.vertices() if u != v))


def relabel(graph: Graph, permutation: typing.Sequence[int]) -> Graph:
    """Return the graph where vertex ``v`` is renamed ``permutation[v]``."""
    if sorted(permutation) != list(graph.vertices()):
        raise GraphError(
            f"{list(permutation)!r} is not a permutation of 0..{graph.n - 1}"
        )
    rows = [0] * graph.n
    for v, row in enumerate(graph.adj):
        rows[permutation[v]] = bitmask(permutation[u] for u in iter_bits(row))
    return Graph._trusted(graph.n, rows)


def _components_of_rows(n: int, rows: typing.Sequence[int]) -> list[tuple[int, ...]]:
    unseen = (1 << n) - 1
    components = []
    while unseen:
        frontier = unseen & -unseen
        reached = frontier
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= rows[v]
            frontier = grown & ~reached
            reached |= frontier
        unseen &= ~reached
        components.append(tuple(iter_bits(reached)))
    return components


def connected_components(graph: Graph) -> list[tuple[int, ...]]:
    return _components_of_rows(graph.n, graph.adj)


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def is_co_connected(graph: Graph) -> bool:
    return is_connected(complement(graph))


def anticomponent_sets(graph: Graph) -> list[tuple[int, ...]]:
    return connected_components(complement(graph))


def anticomponents(graph: Graph) -> list[Graph]:
    return [induced_subgraph(graph, part) for part in anticomponent_sets(graph)]


def degree_sequence(graph: Graph) -> tuple[int, ...]:
    return tuple(sorted(graph.degrees(), reverse=True))


def max_degree(graph: Graph) -> int:
    return max(graph.degrees(), default=0)


def is_empty(graph: Graph) -> bool:
    return graph.m == 0


def is_trivial(graph: Graph) -> bool:
    return graph.n == 1


def twins(graph: Graph) -> list[tuple[int, int, bool]]:
    """All pairs ``(v, w)``, ``v < w``, with equal neighbourhoods outside the pair."""
    pairs = []
    for v in graph.vertices():
        for w in range(v + 1, graph.n):
            outside = ~(1 << v | 1 << w)
            if graph.adj[v] & outside == graph.adj[w] & outside:
                pairs.append((v, w, graph.has_edge(v, w)))
    return pairs


def _require(n: int, minimum: int, family: str) -> None:
    if not isinstance(n, int) or n < minimum:
        raise GraphError(f"{family} needs at least {minimum} vertices, got {n!r}")


def empty(n: int) -> Graph:
    _require(n, 0, "empty graph")
    return Graph._trusted(n, [0] * n)


def complete(n: int) -> Graph:
    _require(n, 1, "complete graph")
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0; ``star(1)`` is K1 and ``star(2)`` is K2."""
    _require(n, 1, "star")
    return from_edges(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    _require(n, 1, "path")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n, 3, "cycle")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite(r: int, s: int) -> Graph:
    _require(r, 1, "complete bipartite part")
    _require(s, 1, "complete bipartite part")
    return join(empty(r), empty(s))


def spider(
    kind: typing.Literal["thin", "thick"], k: int, head: Graph | None = None
) -> tuple[Graph, SpiderShape]:
    """Legs are ``0..k-1``, body ``k..2k-1`` and the head follows."""
    if kind not in ("thin", "thick"):
        raise GraphError(
            f"Invalid spider kind: {kind}. Must be one of ['thin', 'thick']"
        )
    if not isinstance(k, int) or k < 2:
        raise GraphError(f"spider needs k >= 2, got {k!r}")
    head = head if head is not None else empty(0)

    legs = tuple(range(k))
    body = tuple(range(k, 2 * k))
    head_vertices = tuple(range(2 * k, 2 * k + head.n))
    edges = [(c, d) for i, c in enumerate(body) for d in body[i + 1 :]]
    for i, s in enumerate(legs):
        for j, c in enumerate(body):
            if (i == j) == (kind == "thin"):
                edges.append((s, c))
    edges += [(c, r) for c in body for r in head_vertices]
    edges += [(2 * k + u, 2 * k + v) for u, v in head.edges()]

    graph = from_edges(2 * k + head.n, edges)
    return graph, SpiderShape(kind, legs, body, head_vertices)


def spider_with_twin(
    kind: typing.Literal["thin", "thick"],
    k: int,
    head: Graph | None,
    vertex: int,
    adjacent: bool,
) -> tuple[Graph, SpiderShape]:
    """Spider plus a twin of one of its leg or body vertices (appended last)."""
    graph, shape = spider(kind, k, head)
    if vertex not in shape.legs and vertex not in shape.body:
        raise GraphError(f"vertex {vertex!r} is neither a leg nor a body vertex")
    return add_twin(graph, vertex, adjacent), shape


def remark_family(s: int) -> Graph:
    """4K2 joined with s copies of K1; the 4K2 part occupies vertices 0..7."""
    _require(s, 0, "remark family")
    return join_all([k_copies(4, complete(2))] + [complete(1)] * s)


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(graph.vertices())
    result.add_edges_from(graph.edges())
    return result


def from_networkx(other: nx.Graph) -> Graph:
    if other.is_directed() or other.is_multigraph():
        raise GraphError("only simple undirected graphs are supported")
    position = {node: i for i, node in enumerate(other.nodes)}
    edges = ((position[u], position[v]) for u, v in other.edges)
    return from_edges(len(position), edges)
