"""Coxeter polynomials, refined Coxeter polynomials and insertion formulas."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence, Union

from . import cartan as _cartan
from . import poset as _poset
from .cartan import CartanAlgebra
from .intpoly import ONE, X, ZERO, IntPoly, reciprocal_check
from .linalg import linear_pencil_det, poly_det
from .poset import Poset

__all__ = [
    "RefinedPair",
    "CoxeterError",
    "coxeter_poly",
    "refined_pair",
    "refined_pair_minor",
    "refined_pair_recovery",
    "predicted_insertion",
    "refined_insertion",
    "multi_insert",
    "iterated_insert",
    "ordinal_sum_poly",
    "insert_hat_formula",
]

XP1 = X + ONE
X2P = X * X + X + ONE

Algebra = Union[Poset, CartanAlgebra]


class CoxeterError(ArithmeticError):
    """An internal invariant failed (non-integral interpolation, reciprocity, ...)."""


@dataclass(frozen=True)
class RefinedPair:
    phi0: IntPoly
    phi1: IntPoly
    source: str = field(default="minor-formula", compare=False)

    @property
    def phi(self) -> IntPoly:
        return XP1 * self.phi0 + self.phi1

    @property
    def phi_hat(self) -> IntPoly:
        return X2P * self.phi0 + XP1 * self.phi1

    def __iter__(self):
        return iter((self.phi0, self.phi1))


EMPTY_PAIR = RefinedPair(ZERO, ONE, "table")
POINT_PAIR = RefinedPair(ONE, ZERO, "table")


def _as_cartan(alg: Algebra) -> CartanAlgebra:
    return _cartan.from_poset(alg) if isinstance(alg, Poset) else alg


def coxeter_poly(alg: Algebra) -> IntPoly:
    """det(x*C + C^T), by integer determinants at 0..n and interpolation."""
    C = _as_cartan(alg).C
    n = len(C)
    phi = linear_pencil_det(C, [list(r) for r in zip(*C)])
    if phi.degree != n and n > 0 or not reciprocal_check(phi, n):
        raise CoxeterError(f"Coxeter polynomial {phi} fails degree/reciprocity checks")
    return phi


def _pencil(S: Poset):
    n = len(S)
    # C[i][j] = [j <= i]; entry of x*C + C^T
    return [
        [IntPoly([int(S.leq[i][j]), int(S.leq[j][i])]) for j in range(n)]
        for i in range(n)
    ]


def refined_pair_minor(S: Poset, pivot: str | None = None) -> RefinedPair:
    """Refined pair from the principal minor of the pivot-reduced pencil."""
    n = len(S)
    if n == 0:
        return RefinedPair(ZERO, ONE, "minor-formula")
    s = S.index(pivot) if pivot is not None else 0
    M = _pencil(S)
    A = [[M[i][j] - (M[s][j] if i != s else ZERO) for j in range(n)] for i in range(n)]
    A = [[A[i][j] - (A[i][s] if j != s else ZERO) for j in range(n)] for i in range(n)]
    rest = [i for i in range(n) if i != s]
    phi0 = poly_det([[A[i][j] for j in rest] for i in rest], n - 1)
    det_a = poly_det(A, n)
    phi1 = det_a - XP1 * phi0
    return RefinedPair(phi0, phi1, "minor-formula")


def refined_pair_recovery(S: Poset) -> RefinedPair:
    """Refined pair from phi_S and phi of S with a maximum adjoined."""
    phi = coxeter_poly(S)
    phi_hat = coxeter_poly(_poset.add_max(S))
    num0 = XP1 * phi - phi_hat
    num1 = XP1 * phi_hat - X2P * phi
    phi0, phi1 = num0.divide_exact(X), num1.divide_exact(X)
    if phi0 is None or phi1 is None:
        raise CoxeterError("recovery formula is not divisible by x")
    return RefinedPair(phi0, phi1, "recovery-formula")


def refined_pair(S: Poset) -> RefinedPair:
    return refined_pair_minor(S)


def predicted_insertion(phi: IntPoly, phi_minus: IntPoly, pair: RefinedPair) -> IntPoly:
    return phi * pair.phi0 + phi_minus * pair.phi1


def refined_insertion(pair_x: RefinedPair, pair_xminus: RefinedPair, pair_s: RefinedPair) -> RefinedPair:
    """Refined pair of X <-v- S from those of X, X minus v, and S."""
    return RefinedPair(
        pair_x.phi0 * pair_s.phi0 + pair_xminus.phi0 * pair_s.phi1,
        pair_x.phi1 * pair_s.phi0 + pair_xminus.phi1 * pair_s.phi1,
        "insertion-formula",
    )


def _delete(alg: Algebra, vertices):
    for v in vertices:
        alg = _poset.remove(alg, v) if isinstance(alg, Poset) else _cartan.remove(alg, v)
    return alg


def multi_insert(Y: Algebra, assignments: Mapping[str, Poset]):
    """Coxeter polynomial (and refined pair, for posets) of a multiple insertion.

    Sums over all subsets I of the assigned vertices:
    phi*(Y minus I) * prod(phi^1 for i in I) * prod(phi^0 for i not in I).
    Returns ``(phi, pair)``; ``pair`` is None when Y is a CartanAlgebra.
    """
    verts = list(assignments)
    if len(set(verts)) != len(verts):
        raise ValueError("assigned vertices must be pairwise distinct")
    for v in verts:
        (Y.index(v))
    pairs = [refined_pair(assignments[v]) for v in verts]
    n = len(verts)
    is_poset = isinstance(Y, Poset)
    phi = phi0 = phi1 = ZERO
    for k in range(n + 1):
        for I in combinations(range(n), k):
            sub = _delete(Y, [verts[i] for i in I])
            coef = ONE
            for i in range(n):
                coef = coef * (pairs[i].phi1 if i in I else pairs[i].phi0)
            if coef.is_zero():
                continue
            phi = phi + coxeter_poly(sub) * coef
            if is_poset:
                p = refined_pair(sub)
                phi0 = phi0 + p.phi0 * coef
                phi1 = phi1 + p.phi1 * coef
    return phi, (RefinedPair(phi0, phi1, "multi-insertion") if is_poset else None)


def iterated_insert(Y: Algebra, assignments: Mapping[str, Poset]) -> Algebra:
    out = Y
    for v, S in assignments.items():
        out = _poset.poset_insert(out, v, S) if isinstance(out, Poset) else _cartan.insert(out, v, S)
    return out


def _geometric(m: int) -> IntPoly:
    """1 + x + ... + x^(m-1)."""
    return IntPoly([1] * m)


def ordinal_sum_poly(pairs: Sequence[RefinedPair]) -> IntPoly:
    """Coxeter polynomial of an ordinal sum from the refined pairs of its summands."""
    n = len(pairs)
    # elem[k] = sum over eps with |eps| = k of prod phi^{eps_i}
    elem = [ONE] + [ZERO] * n
    for p in pairs:
        for k in range(n, 0, -1):
            elem[k] = elem[k] * p.phi0 + elem[k - 1] * p.phi1
        elem[0] = elem[0] * p.phi0
    total = ZERO
    for k in range(n + 1):
        total = total + _geometric(n + 1 - k) * elem[k]
    return total


def insert_hat_formula(phi: IntPoly, phi_minus: IntPoly, phi_s: IntPoly, phi_s_hat: IntPoly) -> IntPoly:
    """Coxeter polynomial of an insertion of S-hat, in ordinary Coxeter polynomials."""
    return phi * phi_s + phi_minus * phi_s_hat - XP1 * phi_minus * phi_s
