"""Laplacian spectra, exact inertia and the spectral parameter sigma.

The exact path (:func:`inertia_shifted`, :func:`sigma`) is the ground truth;
the floating path (:func:`eigenvalues`, :func:`sigma_float`) is an independent
oracle for it.
"""

from __future__ import annotations

import dataclasses
import typing
from fractions import Fraction

import numpy as np
import structlog

from sigma_lab import settings
from sigma_lab.graph6 import graph6_encode
from sigma_lab.graphs import Graph
from sigma_lab.linalg import ConvergenceError, exact_inertia, symmetric_eigenvalues


__all__ = [
    "Rational",
    "SpectrumError",
    "Spectrum",
    "Inertia",
    "laplacian",
    "average_degree",
    "eigenvalues",
    "mu",
    "inertia_shifted",
    "count_at_least",
    "sigma",
    "sigma_float",
    "join_spectrum",
    "union_spectrum",
    "multiplicity_of_n",
]


logger = structlog.get_logger(__name__)

Rational: typing.TypeAlias = Fraction


class SpectrumError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "values", tuple(sorted((float(v) for v in self.values), reverse=True))
        )

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def mu(self, i: int) -> float:
        """The ``i``-th largest value, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"mu index must be in 1..{self.n}, got {i}")
        return self.values[i - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def multiplicities(self, tol: float | None = None) -> list[tuple[float, int]]:
        tol = settings.SIGMA_LAB_SPECTRUM_TOL if tol is None else tol
        groups: list[list[float]] = []
        for value in self.values:
            if groups and abs(groups[-1][0] - value) <= tol:
                groups[-1].append(value)
            else:
                groups.append([value])
        return [(sum(group) / len(group), len(group)) for group in groups]

    def max_error(self, other: "Spectrum | typing.Sequence[float]") -> float:
        other = other if isinstance(other, Spectrum) else Spectrum(tuple(other))
        if other.n != self.n:
            return float("inf")
        if not self.n:
            return 0.0
        return float(np.max(np.abs(self.as_array() - other.as_array())))

    def matches(
        self, other: "Spectrum | typing.Sequence[float]", tol: float | None = None
    ) -> bool:
        """Multiset equality up to ``tol``; pairing is positional after sorting."""
        tol = settings.SIGMA_LAB_SPECTRUM_TOL if tol is None else tol
        return self.max_error(other) <= tol

    def __repr__(self):
        return f"Spectrum({', '.join(f'{v:.6g}' for v in self.values)})"


@dataclasses.dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return self.n_plus, self.n_zero, self.n_minus


def _require_vertices(graph: Graph) -> None:
    if graph.n == 0:
        raise SpectrumError("spectral operations need a graph with at least one vertex")


def laplacian(graph: Graph) -> np.ndarray:
    """L(G) = D(G) - A(G) as an integer matrix."""
    _require_vertices(graph)
    matrix = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges():
        matrix[u, v] = matrix[v, u] = -1
    matrix[np.diag_indices(graph.n)] = graph.degrees()
    return matrix


def average_degree(graph: Graph) -> Rational:
    _require_vertices(graph)
    return Fraction(2 * graph.m, graph.n)


def eigenvalues(graph: Graph, tol: float | None = None) -> Spectrum:
    _require_vertices(graph)
    try:
        values = symmetric_eigenvalues(laplacian(graph), tol=tol)
    except ConvergenceError as exc:
        exc.graph6 = graph6_encode(graph)
        logger.warning("eigensolver failed", graph6=exc.graph6, index=exc.index)
        raise
    return Spectrum(tuple(values))


def mu(graph: Graph, i: int) -> float:
    return eigenvalues(graph).mu(i)


def inertia_shifted(graph: Graph, t: Rational | int) -> Inertia:
    """Exact sign counts of the eigenvalues of L(G) - t*I."""
    _require_vertices(graph)
    t = Fraction(t)
    rows = [[Fraction(int(x)) for x in row] for row in laplacian(graph).tolist()]
    for v in graph.vertices():
        rows[v][v] -= t
    return Inertia(*exact_inertia(rows))


def count_at_least(graph: Graph, t: Rational | int) -> int:
    """Exact number of Laplacian eigenvalues ``>= t``."""
    inertia = inertia_shifted(graph, t)
    return inertia.n_plus + inertia.n_zero


def sigma(graph: Graph) -> int:
    return count_at_least(graph, average_degree(graph))


def sigma_float(graph: Graph, tie_tol: float | None = None) -> int:
    tie_tol = settings.SIGMA_LAB_TIE_TOL if tie_tol is None else tie_tol
    threshold = float(average_degree(graph)) - tie_tol
    return sum(1 for value in eigenvalues(graph) if value >= threshold)


def _drop_zero(spectrum: Spectrum, size: int, tol: float, name: str) -> list[float]:
    if spectrum.n != size:
        raise SpectrumError(f"{name} has {spectrum.n} values but n = {size}")
    if size < 1:
        raise SpectrumError(f"{name} must describe a graph with at least one vertex")
    if abs(spectrum[-1]) > tol:
        raise SpectrumError(
            f"{name} has no zero eigenvalue (smallest value {spectrum[-1]!r})"
        )
    return list(spectrum.values[:-1])


def join_spectrum(
    first: Spectrum | typing.Sequence[float],
    n1: int,
    second: Spectrum | typing.Sequence[float],
    n2: int,
    tol: float | None = None,
) -> Spectrum:
    """Laplacian spectrum of a join from the spectra of its two sides."""
    tol = settings.SIGMA_LAB_SPECTRUM_TOL if tol is None else tol
    first = first if isinstance(first, Spectrum) else Spectrum(tuple(first))
    second = second if isinstance(second, Spectrum) else Spectrum(tuple(second))
    rest1 = _drop_zero(first, n1, tol, "first spectrum")
    rest2 = _drop_zero(second, n2, tol, "second spectrum")
    values = [float(n1 + n2)]
    values += [n2 + value for value in rest1]
    values += [n1 + value for value in rest2]
    values.append(0.0)
    return Spectrum(tuple(values))


def union_spectrum(
    first: Spectrum | typing.Sequence[float],
    second: Spectrum | typing.Sequence[float],
) -> Spectrum:
    return Spectrum(tuple(first) + tuple(second))


def multiplicity_of_n(graph: Graph) -> int:
    return inertia_shifted(graph, graph.n).n_zero
