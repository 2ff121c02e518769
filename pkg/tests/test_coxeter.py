import random

import pytest

from oracles import coxeter_by_permutations
from refcox import cartan
from refcox import poset as P
from refcox.coxeter import (
    RefinedPair,
    coxeter_poly,
    insert_hat_formula,
    iterated_insert,
    multi_insert,
    ordinal_sum_poly,
    predicted_insertion,
    refined_insertion,
    refined_pair,
    refined_pair_minor,
    refined_pair_recovery,
)
from refcox.intpoly import ONE, ZERO, parse_poly
from refcox.sampling import random_algebra, random_poset

X = parse_poly("x")


def fork():
    return P.from_relations(["m", "a", "b"], [("m", "a"), ("m", "b")])


TABLE = [
    (P.empty(), "1", "0", "1"),
    (P.chain(1), "x+1", "1", "0"),
    (P.chain(2), "x^2+x+1", "x+1", "-x"),
    (P.antichain(2), "x^2+2*x+1", "2*x+2", "-x^2-2*x-1"),
    (P.chain(3), "x^3+x^2+x+1", "x^2+x+1", "-x^2-x"),
    (fork(), "x^3+x^2+x+1", "x^2+2*x+1", "-2*x^2-2*x"),
]


@pytest.mark.parametrize("S,phi,p0,p1", TABLE)
def test_small_table(S, phi, p0, p1):
    assert coxeter_poly(S) == parse_poly(phi)
    for pair in (refined_pair_minor(S), refined_pair_recovery(S)):
        assert pair.phi0 == parse_poly(p0)
        assert pair.phi1 == parse_poly(p1)
        assert pair.phi == parse_poly(phi)


def test_insertion_into_two_chain():
    two = P.chain(2)
    assert coxeter_poly(P.poset_insert(two, "1", P.chain(3))) == parse_poly("x^4+x^3+x^2+x+1")
    assert coxeter_poly(P.poset_insert(two, "1", fork())) == parse_poly("x^4+x^3+x+1")


def test_coxeter_matches_permutation_expansion():
    rng = random.Random(21)
    for _ in range(40):
        A = random_algebra(rng, 6)
        assert coxeter_poly(A) == coxeter_by_permutations(A.C)


def test_coxeter_is_monic_and_reciprocal():
    for A in (cartan.star([2, 3, 7]), cartan.extended_canonical([2, 3, 6]), cartan.canonical([3, 3, 3])):
        phi = coxeter_poly(A)
        assert phi.degree == len(A) and phi.is_monic()
        assert phi.coeffs == phi.coeffs[::-1]


def test_known_values():
    lehmer = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")
    assert coxeter_poly(cartan.star([2, 3, 7])) == lehmer
    assert coxeter_poly(cartan.extended_canonical([2, 3, 5])) == lehmer
    assert coxeter_poly(cartan.extended_canonical([2, 3, 4])) == coxeter_poly(cartan.star([2, 4, 5]))
    assert coxeter_poly(cartan.extended_canonical([2, 3, 6])) == coxeter_poly(cartan.canonical([2, 3, 7]))


def test_pivot_independence():
    rng = random.Random(4)
    for _ in range(30):
        S = random_poset(rng, rng.randint(1, 6))
        base = refined_pair_minor(S)
        assert all(refined_pair_minor(S, s) == base for s in S.labels)


def test_pair_properties():
    S = fork()
    pair = refined_pair(S)
    assert pair == RefinedPair(pair.phi0, pair.phi1, "other")
    assert pair.phi_hat == coxeter_poly(P.add_max(S))
    a, b = pair
    assert (a, b) == (pair.phi0, pair.phi1)


def test_predicted_insertion_random():
    rng = random.Random(9)
    for _ in range(40):
        A = random_algebra(rng, 6)
        v = rng.choice(A.labels)
        S = random_poset(rng, rng.randint(0, 5))
        direct = coxeter_poly(cartan.insert(A, v, S))
        pred = predicted_insertion(coxeter_poly(A), coxeter_poly(cartan.remove(A, v)), refined_pair(S))
        assert pred == direct
        hat = insert_hat_formula(
            coxeter_poly(A), coxeter_poly(cartan.remove(A, v)), coxeter_poly(S), coxeter_poly(P.add_max(S))
        )
        assert hat == coxeter_poly(cartan.insert(A, v, P.add_max(S)))


def test_refined_insertion_random():
    rng = random.Random(10)
    for _ in range(40):
        Xp = random_poset(rng, rng.randint(1, 5))
        S = random_poset(rng, rng.randint(0, 4))
        v = rng.choice(Xp.labels)
        got = refined_insertion(refined_pair(Xp), refined_pair(P.remove(Xp, v)), refined_pair(S))
        assert got == refined_pair(P.poset_insert(Xp, v, S))


def test_multi_insert_matches_iterated():
    rng = random.Random(12)
    for _ in range(20):
        Y = random_poset(rng, rng.randint(2, 5))
        chosen = rng.sample(list(Y.labels), rng.randint(1, min(3, len(Y))))
        assign = {y: random_poset(rng, rng.randint(0, 3)) for y in chosen}
        phi, pair = multi_insert(Y, assign)
        Z = iterated_insert(Y, assign)
        assert phi == coxeter_poly(Z) and pair == refined_pair(Z)
    A = cartan.star([2, 3, 4])
    assign = {"a1_1": P.chain(2), "a3_2": P.antichain(2)}
    phi, pair = multi_insert(A, assign)
    assert pair is None and phi == coxeter_poly(iterated_insert(A, assign))


def test_ordinal_sum_formula():
    rng = random.Random(13)
    for _ in range(30):
        parts = [random_poset(rng, rng.randint(0, 3)) for _ in range(rng.randint(1, 4))]
        assert ordinal_sum_poly([refined_pair(S) for S in parts]) == coxeter_poly(P.ordinal_sum(parts))
    assert ordinal_sum_poly([]) == ONE


def test_empty_pair():
    pair = refined_pair(P.empty())
    assert pair.phi0 == ZERO and pair.phi1 == ONE
