"""Cyclotomic profiles, representing polynomials, Sturm sequences, Mahler measure."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .intpoly import ONE, ZERO, IntPoly, cyclotomic, reciprocal_check

__all__ = [
    "CyclotomicProfile",
    "MahlerResult",
    "ConvergenceError",
    "totient",
    "cyclotomic_profile",
    "is_cyclotomic_type",
    "represent",
    "expand_represented",
    "sturm_sequence",
    "sign_variations",
    "count_real_roots",
    "sturm_real_simple",
    "isolate_real_roots",
    "check_interlacing",
    "aberth_roots",
    "mahler_measure",
]

DEFAULT_TOL = 1e-12
MAX_ITER = 10_000


class ConvergenceError(RuntimeError):
    pass


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class CyclotomicProfile:
    factors: dict
    remainder: IntPoly

    def product(self) -> IntPoly:
        out = self.remainder
        for n, m in self.factors.items():
            out = out * cyclotomic(n) ** m
        return out

    def to_dict(self) -> dict:
        return {
            "factors": {str(n): m for n, m in sorted(self.factors.items())},
            "remainder": self.remainder.to_list(),
        }


def cyclotomic_profile(p: IntPoly) -> CyclotomicProfile:
    """Strip every cyclotomic factor of p, with multiplicity."""
    if p.is_zero():
        raise ValueError("profile of the zero polynomial is undefined")
    d = p.degree
    factors = {}
    rest = p
    # totient(n) >= sqrt(n/2), so n <= 2 d^2 covers every Phi_n of degree <= d
    for n in range(1, 2 * d * d + 1):
        if rest.degree < 1:
            break
        if totient(n) > rest.degree:
            continue
        phi_n = cyclotomic(n)
        while True:
            q = rest.divide_exact(phi_n)
            if q is None:
                break
            factors[n] = factors.get(n, 0) + 1
            rest = q
    return CyclotomicProfile(factors, rest)


def is_cyclotomic_type(p: IntPoly) -> bool:
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")
    return cyclotomic_profile(p).remainder == ONE


# -- representability ---------------------------------------------------------


def represent(p: IntPoly, n: int | None = None) -> IntPoly:
    """q with p(x^2) = x^n q(x + 1/x) for self-reciprocal p of degree <= n."""
    if n is None:
        n = max(p.degree, 0)
    if p.degree > n or not reciprocal_check(p, n):
        raise ValueError(f"{p} is not self-reciprocal of degree bound {n}")
    r = p.substitute_square()
    base = IntPoly([1, 0, 1])
    b = [0] * (n + 1)
    for k in range(n, -1, -1):
        bk = r.coeff(n + k)
        if bk:
            b[k] = bk
            r = r - (base ** k).shift(n - k).scale(bk)
    if not r.is_zero():
        raise ArithmeticError(f"nonzero residual {r} while representing {p}")
    return IntPoly(b)


def expand_represented(q: IntPoly, n: int) -> IntPoly:
    """x^n q(x + 1/x) as a polynomial in x."""
    base = IntPoly([1, 0, 1])
    out = ZERO
    for k, c in enumerate(q.coeffs):
        if c:
            out = out + (base ** k).shift(n - k).scale(c)
    return out


# -- Sturm sequences ----------------------------------------------------------


def _positive_primitive(p: IntPoly) -> IntPoly:
    g = p.content()
    return IntPoly(c // g for c in p.coeffs) if g > 1 else p


def _remainder_positive_multiple(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive rational multiple of (a mod b), with integer coefficients."""
    r = [Fraction(c) for c in a.coeffs]
    bc = b.coeffs
    db, lc = len(bc) - 1, bc[-1]
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lc
        if c:
            for j, bj in enumerate(bc):
                r[k + j] -= c * bj
    r = r[:db]
    den = 1
    for c in r:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return IntPoly(int(c * den) for c in r)


def sturm_sequence(q: IntPoly) -> list[IntPoly]:
    """Sturm chain of q; each term primitive and a positive multiple of the classical one."""
    if q.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [_positive_primitive(q)]
    d = q.derivative()
    if d.is_zero():
        return seq
    seq.append(_positive_primitive(d))
    while True:
        r = _remainder_positive_multiple(seq[-2], seq[-1])
        if r.is_zero():
            return seq
        seq.append(_positive_primitive(-r))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_variations(signs: Sequence[int]) -> int:
    s = [v for v in signs if v]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(seq, t):
    if t == math.inf:
        return [_sign(p.leading) for p in seq]
    if t == -math.inf:
        return [_sign(p.leading) * (-1) ** p.degree for p in seq]
    return [_sign(p(t)) for p in seq]


def count_real_roots(q: IntPoly, a=-math.inf, b=math.inf, seq=None) -> int:
    """Distinct real roots in (a, b], a and b not roots of q."""
    seq = seq or sturm_sequence(q)
    return sign_variations(_signs_at(seq, a)) - sign_variations(_signs_at(seq, b))


def sturm_real_simple(q: IntPoly) -> bool:
    """All roots of q real and simple; constants pass vacuously."""
    if q.is_zero():
        raise ValueError("zero polynomial")
    if q.degree == 0:
        return True
    seq = sturm_sequence(q)
    if seq[-1].degree > 0:
        return False
    return count_real_roots(q, seq=seq) == q.degree


def _root_bound(q: IntPoly) -> Fraction:
    lc = abs(q.leading)
    return 1 + Fraction(max(abs(c) for c in q.coeffs[:-1]), lc) if q.degree > 0 else Fraction(1)


def isolate_real_roots(q: IntPoly, tol: float = 1e-6, avoid: Sequence[IntPoly] = ()) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi), each holding one real root of q.

    Endpoints are never roots of q nor of any polynomial in ``avoid``.
    """
    if q.degree < 1:
        return []
    seq = sturm_sequence(q)
    width = Fraction(tol)
    checks = [q, *avoid]

    def safe(t, lo, hi):
        step = (hi - lo) / 97
        k = 0
        while any(p(t) == 0 for p in checks):
            k += 1
            t = t + step / (k + 1)
        return t

    bound = _root_bound(q) + 1
    lo, hi = safe(-bound, -bound - 1, -bound), safe(bound, bound, bound + 1)
    out = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_real_roots(q, a, b, seq)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append((a, b))
            continue
        m = safe((a + b) / 2, a, b)
        stack.append((m, b))
        stack.append((a, m))
    out.sort()
    return out


def check_interlacing(q1: IntPoly, q2: IntPoly, tol: float = 1e-6) -> bool:
    """Exactly one root of q1 strictly between consecutive roots of q2."""
    if q2.degree != max(q1.degree, 0) + 1:
        raise ValueError("need deg q2 = deg q1 + 1")
    if not (sturm_real_simple(q1) and sturm_real_simple(q2)):
        raise ValueError("both polynomials must have real simple roots")
    if q1.degree <= 0:
        return True
    # a common root rules out strict interlacing
    if _share_root(q1, q2):
        return False
    seq1 = sturm_sequence(q1)
    intervals = []
    for a, b in isolate_real_roots(q2, tol, avoid=[q1]):
        while count_real_roots(q1, a, b, seq1):
            m = (a + b) / 2
            while q1(m) == 0 or q2(m) == 0:
                m += (b - a) / 101
            if count_real_roots(q2, a, m):
                b = m
            else:
                a = m
        intervals.append((a, b))
    if count_real_roots(q1, -math.inf, intervals[0][0], seq1):
        return False
    if count_real_roots(q1, intervals[-1][1], math.inf, seq1):
        return False
    return all(
        count_real_roots(q1, hi, lo_next, seq1) == 1
        for (_, hi), (lo_next, _) in zip(intervals, intervals[1:])
    )


def _share_root(a: IntPoly, b: IntPoly) -> bool:
    x, y = a, b
    while not y.is_zero():
        x, y = y, _remainder_positive_multiple(x, y)
    return x.degree > 0


# -- Mahler measure -------------------------------------------------------------


@dataclass
class MahlerResult:
    measure: float
    exact_one: bool
    roots_outside_unit: list = field(default_factory=list)
    residual_bound: float = 0.0
    iterations: int = 0

    def to_dict(self) -> dict:
        return {
            "measure": f"{self.measure:.12f}",
            "exact_one": self.exact_one,
            "roots_outside_unit": [[z.real, z.imag] for z in self.roots_outside_unit],
            "residual_bound": self.residual_bound,
        }


def aberth_roots(p: IntPoly, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER):
    """All complex roots of p by Aberth-Ehrlich simultaneous iteration.

    Returns ``(roots, iterations)``.
    """
    if p.degree < 1:
        return np.array([], dtype=complex), 0
    c = np.array(p.coeffs[::-1], dtype=float)  # descending for numpy
    dc = np.polyder(c)
    d = p.degree
    radius = 1.0 + max(abs(a) for a in p.coeffs[:-1]) / abs(p.leading)
    radius = min(radius, 2.0)
    k = np.arange(d)
    z = radius * np.exp(1j * (2 * np.pi * k / d + 0.4)) * (1 + 0.01 * k / d)
    for it in range(1, max_iter + 1):
        pv = np.polyval(c, z)
        dv = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            return z, it
    raise ConvergenceError(f"Aberth iteration did not converge in {max_iter} steps for {p}")


def mahler_measure(p: IntPoly, tol: float = DEFAULT_TOL) -> MahlerResult:
    """Mahler measure of a monic polynomial; exactly 1 when p is cyclotomic."""
    if p.is_zero() or not p.is_monic():
        raise ValueError(f"{p} must be nonzero and monic")
    rem = cyclotomic_profile(p).remainder
    if rem == ONE:
        return MahlerResult(1.0, True)
    roots, its = aberth_roots(rem, tol)
    c = np.array(rem.coeffs[::-1], dtype=float)
    residual = float(np.max(np.abs(np.polyval(c, roots)))) if len(roots) else 0.0
    outside = sorted((complex(z) for z in roots if abs(z) > 1), key=lambda z: (-abs(z), z.imag))
    measure = float(np.prod([max(1.0, abs(z)) for z in roots]))
    return MahlerResult(measure, False, outside, residual, its)
