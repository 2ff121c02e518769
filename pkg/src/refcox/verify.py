"""Seeded verification suites over random and exhaustive instances."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from . import cartan as _cartan
from . import classc as _classc
from . import poset as _poset
from . import towers as _towers
from .coxeter import (
    coxeter_poly,
    insert_hat_formula,
    iterated_insert,
    multi_insert,
    ordinal_sum_poly,
    predicted_insertion,
    refined_insertion,
    refined_pair_minor,
    refined_pair_recovery,
)
from .intpoly import ONE, X, IntPoly
from .polyspec import is_cyclotomic_type, mahler_measure
from .sampling import random_algebra, random_poset

__all__ = ["CheckResult", "SUITES", "run_suite", "default_threads", "instance_rng"]

XP1 = X + ONE


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("REFCOX_THREADS", "1")))
    except ValueError:
        return 1


def instance_rng(seed: int, index: int) -> random.Random:
    """Independent stream per instance so results do not depend on scheduling."""
    return random.Random(f"{seed}:{index}")


def _pmap(fn, items, threads):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# -- identities ------------------------------------------------------------------


def insertion_instance(rng: random.Random):
    alg = random_algebra(rng, 8)
    v = rng.choice(alg.labels)
    S = random_poset(rng, rng.randint(0, 6))
    return alg, v, S


def _identities_one(seed, i):
    rng = instance_rng(seed, i)
    out = []
    alg, v, S = insertion_instance(rng)
    pair = refined_pair_minor(S)
    direct = coxeter_poly(_cartan.insert(alg, v, S))
    pred = predicted_insertion(coxeter_poly(alg), coxeter_poly(_cartan.remove(alg, v)), pair)
    out.append(CheckResult(f"insertion-formula[{i}]", pred == direct, f"{pred} vs {direct}"))

    T = random_poset(rng, rng.randint(0, 8))
    a, b = refined_pair_minor(T), refined_pair_recovery(T)
    pivots_ok = all(refined_pair_minor(T, s) == a for s in T.labels)
    out.append(CheckResult(f"refined-minor-vs-recovery[{i}]", a == b and pivots_ok, f"{a} vs {b}"))

    phi_t, phi_th = coxeter_poly(T), coxeter_poly(_poset.add_max(T))
    sys_ok = phi_t == XP1 * a.phi0 + a.phi1 and phi_th == (X * X + X + ONE) * a.phi0 + XP1 * a.phi1
    out.append(CheckResult(f"pair-linear-system[{i}]", sys_ok))
    eq = (a.phi0.is_zero(), a.phi1 == phi_t, phi_th == XP1 * phi_t)
    out.append(CheckResult(f"phi0-zero-equivalences[{i}]", len(set(eq)) == 1, str(eq)))

    hat = insert_hat_formula(coxeter_poly(alg), coxeter_poly(_cartan.remove(alg, v)), coxeter_poly(S), coxeter_poly(_poset.add_max(S)))
    direct_hat = coxeter_poly(_cartan.insert(alg, v, _poset.add_max(S)))
    out.append(CheckResult(f"hat-insertion[{i}]", hat == direct_hat))

    Xp = random_poset(rng, rng.randint(1, 6))
    w = rng.choice(Xp.labels)
    comb = refined_insertion(refined_pair_minor(Xp), refined_pair_minor(_poset.remove(Xp, w)), pair)
    out.append(CheckResult(f"refined-insertion[{i}]", comb == refined_pair_minor(_poset.poset_insert(Xp, w, S))))

    parts = [random_poset(rng, rng.randint(0, 3)) for _ in range(3)]
    polys, pairs_ = set(), set()
    for order in permutations(range(3)):
        P = _poset.ordinal_sum([parts[k] for k in order])
        polys.add(coxeter_poly(P))
        pairs_.add(tuple(refined_pair_minor(P)))
    formula = ordinal_sum_poly([refined_pair_minor(p) for p in parts])
    out.append(CheckResult(f"ordinal-sum-symmetry[{i}]", len(polys) == 1 and len(pairs_) == 1 and formula in polys))

    Y = random_poset(rng, rng.randint(2, 5))
    chosen = rng.sample(list(Y.labels), rng.randint(1, min(3, len(Y))))
    assign = {y: random_poset(rng, rng.randint(0, 3)) for y in chosen}
    phi_m, pair_m = multi_insert(Y, assign)
    Z = iterated_insert(Y, assign)
    out.append(CheckResult(f"multi-insertion[{i}]", phi_m == coxeter_poly(Z) and pair_m == refined_pair_minor(Z)))
    return out


def suite_identities(seed: int, count: int, threads: int = 1):
    rows = _pmap(lambda i: _identities_one(seed, i), range(count), threads)
    return [r for row in rows for r in row]


# -- type A~ -------------------------------------------------------------------


def atilde_checks(max_size: int = 10):
    out = []
    for runs in _classc.atilde_run_classes(max_size):
        S = _poset.a_tilde(runs)
        p, q = sum(runs[0::2]), sum(runs[1::2])
        pair = refined_pair_minor(S)
        expect = (IntPoly.monomial(p) - ONE) * (IntPoly.monomial(q) - ONE)
        tag = ",".join(map(str, runs))
        out.append(CheckResult(f"atilde-phi0-zero[{tag}]", pair.phi0.is_zero()))
        out.append(CheckResult(f"atilde-phi[{tag}]", coxeter_poly(S) == expect, str(coxeter_poly(S))))
        for v in S.labels:
            arrows = S.hasse_arrows()
            valency = sum(v in a for a in arrows)
            if valency != 2:
                continue
            try:
                R = _poset.bgp_reflect(S, v)
            except _poset.PosetError:
                continue
            if not _poset.is_path_algebra_poset(R):
                continue
            out.append(CheckResult(f"bgp-invariance[{tag}@{v}]", refined_pair_minor(R) == pair))
    return out


def suite_atilde(seed: int, count: int, threads: int = 1):
    return atilde_checks(10)


# -- class C -------------------------------------------------------------------------


def _classc_one(seed, i, members):
    rng = instance_rng(seed, i)
    S, _ = members[i % len(members)]
    alg = random_algebra(rng, 6)
    v = rng.choice(alg.labels)
    lhs = coxeter_poly(_cartan.insert(alg, v, S))
    rhs = coxeter_poly(_cartan.remove(alg, v)) * coxeter_poly(S)
    out = [CheckResult(f"classc-product[{i}]", lhs == rhs)]
    # both phi0(X) and phi0(X minus v) vanish => phi0 of any insertion vanishes
    Xc, _ = members[rng.randrange(len(members))]
    w = rng.choice(Xc.labels)
    if refined_pair_minor(_poset.remove(Xc, w)).phi0.is_zero():
        T = random_poset(rng, rng.randint(1, 4))
        out.append(CheckResult(f"phi0-closure[{i}]", refined_pair_minor(_poset.poset_insert(Xc, w, T)).phi0.is_zero()))
    return out


def suite_classc(seed: int, count: int, threads: int = 1):
    members = _classc.enumerate_class_c(8)
    out = []
    for k, (S, cert) in enumerate(members):
        rep = _classc.verify_class_c(S)
        out.append(CheckResult(f"classc-member[{k}]", rep.certified, str(rep.phi)))
    rows = _pmap(lambda i: _classc_one(seed, i, members), range(count), threads)
    return out + [r for row in rows for r in row]


# -- towers ------------------------------------------------------------------------------


def tower_checks(report) -> list:
    tag = report.name
    return [
        CheckResult(f"tower-degree[{tag}]", report.degree_ok),
        CheckResult(f"tower-recurrence[{tag}]", report.recurrence_ok),
        CheckResult(f"tower-q-recurrence[{tag}]", report.q_recurrence_ok),
        CheckResult(
            f"tower-kronecker[{tag}]",
            all(lv.mahler.exact_one == is_cyclotomic_type(lv.phi) for lv in report.levels),
        ),
    ]


def _tower_one(seed, i):
    rng = instance_rng(seed, i)
    alg = random_algebra(rng, 6)
    v = rng.choice(alg.labels)
    rep = _towers.build_tower(alg, v, rng.randint(2, 4), name=f"random{i}")
    return tower_checks(rep)


def suite_towers(seed: int, count: int, threads: int = 1):
    out = []
    for name in _towers.COUNTEREXAMPLES:
        out += tower_checks(_towers.counterexample(name))
    rows = _pmap(lambda i: _tower_one(seed, i), range(count), threads)
    return out + [r for row in rows for r in row]


SUITES = {
    "identities": suite_identities,
    "atilde": suite_atilde,
    "classc": suite_classc,
    "towers": suite_towers,
}


def run_suite(name: str, seed: int = 0, count: int = 200, threads: int | None = None):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](seed, count, threads or default_threads())
