"""Exact determinants: integer Bareiss and polynomial matrices by interpolation."""

from __future__ import annotations

from typing import Sequence

from .intpoly import ONE, IntPoly, interpolate


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def poly_det(matrix: Sequence[Sequence[IntPoly]], degree_bound: int | None = None) -> IntPoly:
    """Determinant of a square matrix of IntPoly entries.

    Evaluates at t = 0, 1, ..., d and interpolates, where d bounds the
    degree of the determinant (sum of the row-wise maximal degrees when
    not given).
    """
    n = len(matrix)
    if n == 0:
        return ONE
    if degree_bound is None:
        degree_bound = 0
        for row in matrix:
            d = max((e.degree for e in row if not e.is_zero()), default=None)
            if d is None:
                return IntPoly()
            degree_bound += d
    points = []
    for t in range(degree_bound + 1):
        points.append((t, bareiss_det([[e(t) for e in row] for row in matrix])))
    return interpolate(points, degree_bound)


def linear_pencil_det(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntPoly:
    """det(x*A + B) for integer matrices A, B of equal size."""
    n = len(a)
    points = []
    for t in range(n + 1):
        points.append((t, bareiss_det([[t * a[i][j] + b[i][j] for j in range(n)] for i in range(n)])))
    return interpolate(points, n)
