"""Dense symmetric eigenvalues and exact inertia.

Floating eigenvalues come from Householder tridiagonalization followed by the
implicit-shift QL iteration. Exact inertia comes from symmetric congruence
elimination over :class:`fractions.Fraction`, so the sign counts are those of
the original matrix by Sylvester's law of inertia.
"""

import math
import typing
from fractions import Fraction

import numpy as np

from sigma_lab import settings


__all__ = [
    "ConvergenceError",
    "tridiagonalize",
    "tridiagonal_eigenvalues",
    "symmetric_eigenvalues",
    "exact_inertia",
]


class ConvergenceError(ArithmeticError):
    def __init__(self, message: str, index: int, graph6: str | None = None):
        super().__init__(message)
        self.index = index
        self.graph6 = graph6


def tridiagonalize(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Return the diagonal and sub-diagonal of a similar tridiagonal matrix."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"matrix is not square (shape = {a.shape})")

    for k in range(n - 2):
        u = a[k + 1 :, k].copy()
        norm = math.sqrt(float(u @ u))
        if norm == 0.0:
            continue
        if u[0] < 0.0:
            norm = -norm
        u[0] += norm
        h = float(u @ u) / 2.0
        v = a[k + 1 :, k + 1 :] @ u / h
        g = float(u @ v) / (2.0 * h)
        v -= g * u
        a[k + 1 :, k + 1 :] -= np.outer(v, u) + np.outer(u, v)
        a[k, k + 1] = a[k + 1, k] = -norm
        a[k, k + 2 :] = a[k + 2 :, k] = 0.0

    return np.diagonal(a).copy(), np.diagonal(a, 1).copy()


def tridiagonal_eigenvalues(
    diagonal: typing.Sequence[float],
    off_diagonal: typing.Sequence[float],
    tol: float | None = None,
    max_sweeps: int | None = None,
) -> list[float]:
    """Implicit-shift QL on a symmetric tridiagonal matrix (unsorted result)."""
    tol = settings.SIGMA_LAB_EIG_TOL if tol is None else tol
    max_sweeps = settings.SIGMA_LAB_MAX_SWEEPS if max_sweeps is None else max_sweeps

    d = [float(x) for x in diagonal]
    n = len(d)
    e = [float(x) for x in off_diagonal] + [0.0]
    if len(e) != n and n > 0:
        raise ValueError(f"off-diagonal must have {n - 1} entries, got {len(e) - 1}")
    # absolute floor for blocks whose diagonal is numerically zero
    floor = tol * tol * max((abs(x) for x in d + e), default=0.0)

    for lo in range(n):
        sweeps = 0
        while True:
            m = lo
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= tol * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == lo:
                break
            if sweeps == max_sweeps:
                raise ConvergenceError(
                    f"QL iteration did not converge for eigenvalue {lo} after"
                    f" {max_sweeps} sweeps",
                    index=lo,
                )
            sweeps += 1

            g = (d[lo + 1] - d[lo]) / (2.0 * e[lo])
            r = math.hypot(g, 1.0)
            g = d[m] - d[lo] + e[lo] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, lo - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[lo] -= p
            e[lo] = g
            e[m] = 0.0

    return d


def symmetric_eigenvalues(
    matrix, tol: float | None = None, max_sweeps: int | None = None
) -> list[float]:
    """Eigenvalues of a real symmetric matrix in descending order."""
    diagonal, off_diagonal = tridiagonalize(matrix)
    values = tridiagonal_eigenvalues(diagonal, off_diagonal, tol, max_sweeps)
    return sorted(values, reverse=True)


def exact_inertia(matrix) -> tuple[int, int, int]:
    """(positive, zero, negative) eigenvalue counts of a rational symmetric matrix.

    Each step eliminates a 1x1 pivot taken from a non-zero diagonal entry. When
    the remaining diagonal is entirely zero but an off-diagonal entry ``b`` is
    not, the 2x2 block ``[[0, b], [b, 0]]`` is eliminated instead; it has one
    positive and one negative eigenvalue.
    """
    a = np.array([[Fraction(x) for x in row] for row in matrix], dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix is not square (shape = {a.shape})")

    plus = zero = minus = 0
    while a.shape[0]:
        size = a.shape[0]
        pivot = next((i for i in range(size) if a[i, i] != 0), None)

        if pivot is not None:
            value = a[pivot, pivot]
            if value > 0:
                plus += 1
            else:
                minus += 1
            rest = [i for i in range(size) if i != pivot]
            column = a[rest, pivot]
            a = a[np.ix_(rest, rest)] - np.outer(column, column) / value
            continue

        pair = next(
            ((i, j) for i in range(size) for j in range(i + 1, size) if a[i, j] != 0),
            None,
        )
        if pair is None:
            zero += size
            break

        i, j = pair
        plus += 1
        minus += 1
        b = a[i, j]
        block_inverse = np.array(
            [[Fraction(0), 1 / b], [1 / b, Fraction(0)]], dtype=object
        )
        rest = [v for v in range(size) if v not in pair]
        coupling = a[np.ix_(rest, [i, j])]
        a = a[np.ix_(rest, rest)] - coupling @ block_inverse @ coupling.T

    return plus, zero, minus
