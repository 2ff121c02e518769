"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction

import numpy as np

from refcox.intpoly import ONE, ZERO, IntPoly


def leibniz_det(M):
    """Permutation expansion of a determinant with IntPoly (or int) entries."""
    n = len(M)
    total = [ZERO]

    def walk(row, used, sign, acc):
        if row == n:
            total[0] = total[0] + acc * sign
            return
        # sign tracked by counting inversions as columns are chosen
        for col in range(n):
            if col in used:
                continue
            e = M[row][col]
            if isinstance(e, int):
                e = IntPoly([e])
            if e.is_zero():
                continue
            inv = sum(1 for u in used if u > col)
            walk(row + 1, used | {col}, sign * (-1) ** inv, acc * e)

    walk(0, frozenset(), 1, ONE)
    return total[0]


def pencil(C):
    n = len(C)
    return [[IntPoly([C[j][i], C[i][j]]) for j in range(n)] for i in range(n)]


def coxeter_by_permutations(C):
    """det(x C + C^T) by full permutation expansion."""
    return leibniz_det(pencil(C))


def rank_fraction(rows):
    rows = [[Fraction(v) for v in r] for r in rows if any(r)]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def paths(arrows, start, end):
    """All paths start -> end as tuples of arrow indices."""
    out = []

    def dfs(v, acc):
        if v == end:
            out.append(tuple(acc))
        for k, (a, b) in enumerate(arrows):
            if a == v:
                dfs(b, acc + [k])

    dfs(start, [])
    return out


def hom_dimension(arrows, relations, start, end):
    """dim of the space of paths start -> end modulo the two-sided ideal of the relations.

    ``relations`` is a list of ``(source, target, {path: coeff})``.
    """
    basis = paths(arrows, start, end)
    index = {p: i for i, p in enumerate(basis)}
    vectors = []
    for src, tgt, combo in relations:
        for pre in paths(arrows, start, src):
            for post in paths(arrows, tgt, end):
                vec = [0] * len(basis)
                for path, c in combo.items():
                    vec[index[pre + path + post]] += c
                vectors.append(vec)
    return len(basis) - (rank_fraction(vectors) if vectors else 0)


def numpy_roots(p: IntPoly):
    return np.roots(np.array(p.coeffs[::-1], dtype=float))


def numeric_mahler(p: IntPoly) -> float:
    return float(np.prod([max(1.0, abs(z)) for z in numpy_roots(p)])) * abs(p.leading)
