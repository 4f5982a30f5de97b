"""Canonical forms and exhaustive generation of small non-isomorphic graphs.

The canonical form of a graph is its relabeling whose upper-triangle bit
string ``(0,1), (0,2), (1,2), (0,3), ...`` is lexicographically smallest
among the labelings that respect the colour-refined degree partition. The
partition and its cell order are isomorphism invariants, so two graphs are
isomorphic exactly when their canonical keys are equal.
"""

import time
import typing

import structlog

from sigma_lab import settings
from sigma_lab.graphs import Graph, relabel


__all__ = [
    "EnumerationError",
    "refine_colors",
    "canonical_labeling",
    "canonical_form",
    "canonical_key",
    "are_isomorphic",
    "enumerate_nonisomorphic",
    "enumerate_up_to",
]


logger = structlog.get_logger(__name__)


class EnumerationError(ValueError):
    pass


def refine_colors(graph: Graph) -> list[int]:
    """Stable colouring obtained by iterated neighbourhood refinement of degrees."""
    colors = graph.degrees()
    distinct = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in graph.neighbors(v))))
            for v in graph.vertices()
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == distinct:
            return refined
        colors, distinct = refined, len(palette)


def canonical_labeling(graph: Graph) -> tuple[list[int], int]:
    """Return ``(order, key)``: ``order[p]`` is the vertex placed at position ``p``."""
    n = graph.n
    if n == 0:
        return [], 0
    colors = refine_colors(graph)
    position_colors = sorted(colors)
    cells: dict[int, list[int]] = {}
    for v in graph.vertices():
        cells.setdefault(colors[v], []).append(v)

    adj = graph.adj
    twin_of = [
        [
            u != v and not (adj[u] ^ adj[v]) & ~(1 << u | 1 << v)
            for u in graph.vertices()
        ]
        for v in graph.vertices()
    ]

    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    key = 0
    for position in range(n):
        best = None
        survivors: list[tuple[tuple[int, ...], int]] = []
        for placed, used in frontier:
            representatives: list[int] = []
            for v in cells[position_colors[position]]:
                if used >> v & 1:
                    continue
                if any(twin_of[v][u] for u in representatives):
                    continue
                representatives.append(v)

            for v in representatives:
                column = 0
                for u in placed:
                    column = column << 1 | (adj[u] >> v & 1)
                if best is None or column < best:
                    best = column
                    survivors = [(placed + (v,), used | 1 << v)]
                elif column == best:
                    survivors.append((placed + (v,), used | 1 << v))
        frontier = survivors
        key = key << position | best

    return list(frontier[0][0]), key


def canonical_form(graph: Graph) -> tuple[Graph, int]:
    order, key = canonical_labeling(graph)
    permutation = [0] * graph.n
    for position, v in enumerate(order):
        permutation[v] = position
    return relabel(graph, permutation), key


def canonical_key(graph: Graph) -> tuple[int, int]:
    return graph.n, canonical_labeling(graph)[1]


def are_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.m != second.m:
        return False
    return canonical_key(first) == canonical_key(second)


def _with_new_vertex(graph: Graph, neighbours: int) -> Graph:
    new = graph.n
    rows = [row | ((neighbours >> v & 1) << new) for v, row in enumerate(graph.adj)]
    rows.append(neighbours)
    return Graph._trusted(new + 1, rows)


def _check_order(n: int) -> None:
    limit = settings.SIGMA_LAB_MAX_ENUMERATE
    if not isinstance(n, int) or not 1 <= n <= limit:
        raise EnumerationError(
            f"built-in enumeration supports 1 <= n <= {limit}, got {n!r}; generate"
            " larger corpora externally and pass them as graph6 lines (--file)"
        )


def _levels(n: int) -> typing.Iterator[tuple[int, list[Graph]]]:
    level = {canonical_form(Graph(1, [0]))[1]: Graph(1, [0])}
    yield 1, list(level.values())
    for size in range(2, n + 1):
        started = time.perf_counter()
        grown: dict[int, Graph] = {}
        for graph in level.values():
            for neighbours in range(1 << graph.n):
                child, key = canonical_form(_with_new_vertex(graph, neighbours))
                grown.setdefault(key, child)
        level = grown
        logger.info(
            "enumeration level finished",
            n=size,
            count=len(level),
            elapsed_ms=round((time.perf_counter() - started) * 1000),
        )
        yield size, [level[key] for key in sorted(level)]


def enumerate_nonisomorphic(n: int) -> typing.Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices,
    ordered by canonical key."""
    _check_order(n)
    for size, graphs in _levels(n):
        if size == n:
            yield from graphs


def enumerate_up_to(n: int) -> typing.Iterator[Graph]:
    """All classes with ``1 <= order <= n``, smallest orders first."""
    _check_order(n)
    for _, graphs in _levels(n):
        yield from graphs
