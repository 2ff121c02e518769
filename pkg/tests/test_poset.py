import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from refcox import poset as P
from refcox.poset import (
    CycleError,
    LabelCollisionError,
    NotPathAlgebraError,
    NotSourceOrSinkError,
    Poset,
    PosetError,
    UnknownLabelError,
)
from refcox.sampling import random_poset

seeds = st.integers(0, 2**32)


def rand(seed, lo=0, hi=6):
    rng = random.Random(seed)
    return random_poset(rng, rng.randint(lo, hi))


def fork():
    return P.from_relations(["m", "a", "b"], [("m", "a"), ("m", "b")])


def test_from_relations_closure_and_hasse():
    S = P.from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert S.le("a", "c") and not S.le("c", "a")
    assert S.hasse_arrows() == [("a", "b"), ("b", "c")]
    assert S.minimal() == ["a"] and S.maximal() == ["c"]
    assert S.down_set("c") == ["a", "b"]
    assert S.up_set("a", strict=False) == ["a", "b", "c"]


def test_construction_errors():
    with pytest.raises(CycleError):
        P.from_relations(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(LabelCollisionError):
        P.from_relations(["a", "a"], [])
    with pytest.raises(UnknownLabelError):
        P.chain(2).index("z")
    with pytest.raises(KeyError):
        P.chain(2).le("0", "z")
    with pytest.raises(PosetError):
        Poset(["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_basic_families():
    assert len(P.empty()) == 0
    assert P.chain(3).hasse_arrows() == [("0", "1"), ("1", "2")]
    assert P.antichain(3).hasse_arrows() == []
    S = P.add_max(P.antichain(2))
    assert S.maximal() == ["top"] and len(S.hasse_arrows()) == 2
    T = P.add_min(S)
    assert T.minimal() == ["bottom"]
    assert P.add_max(P.from_relations(["top"], [])).labels[-1] != "top"


def test_extend_checks():
    C = P.chain(3)
    E = P.extend(C, "n", below=["0"], above=["2"])
    assert E.le("0", "n") and E.le("n", "2") and not E.le("1", "n")
    with pytest.raises(PosetError):
        P.extend(C, "n", below=["1"])  # not down-closed
    with pytest.raises(PosetError):
        P.extend(C, "n", above=["1"])  # not up-closed
    with pytest.raises(PosetError):
        P.extend(P.antichain(2), "n", below=["0"], above=["1"])
    with pytest.raises(LabelCollisionError):
        P.extend(C, "0")


def test_poset_insert_example():
    X = P.poset_insert(P.chain(2), "1", fork())
    assert X.labels == ("0", "1/m", "1/a", "1/b")
    assert X.le("0", "1/a") and X.le("1/m", "1/b") and not X.le("1/a", "1/b")


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_insert_singleton_is_identity(seed):
    X = rand(seed, 1)
    v = X.labels[seed % len(X)]
    Y = P.poset_insert(X, v, P.singleton("z"))
    assert P.is_isomorphic(X, Y)
    assert Y.relabel({f"{v}/z": v}).reordered(X.labels) == X


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_insert_at_distinct_points_commutes(seed):
    rng = random.Random(seed)
    X = random_poset(rng, rng.randint(2, 6))
    v, w = rng.sample(list(X.labels), 2)
    A, B = random_poset(rng, rng.randint(0, 3)), random_poset(rng, rng.randint(0, 3))
    one = P.poset_insert(P.poset_insert(X, v, A), w, B)
    two = P.poset_insert(P.poset_insert(X, w, B), v, A)
    assert one == two.reordered(one.labels)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_insert_associative(seed):
    rng = random.Random(seed)
    X = random_poset(rng, rng.randint(1, 4))
    S = random_poset(rng, rng.randint(1, 4))
    T = random_poset(rng, rng.randint(0, 3))
    v, s = rng.choice(X.labels), rng.choice(S.labels)
    left = P.poset_insert(P.poset_insert(X, v, S), f"{v}/{s}", T)
    right = P.poset_insert(X, v, P.poset_insert(S, s, T))
    assert P.is_isomorphic(left, right)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_sums_are_insertions_into_chain_and_antichain(seed):
    rng = random.Random(seed)
    parts = [random_poset(rng, rng.randint(0, 3)) for _ in range(rng.randint(1, 4))]
    for base, summed in ((P.chain, P.ordinal_sum), (P.antichain, P.disjoint_union)):
        Z = base(len(parts))
        for k, S in enumerate(parts):
            Z = P.poset_insert(Z, str(k), S)
        assert P.is_isomorphic(Z, summed(parts))


def test_ordinal_sum_labels():
    S = P.ordinal_sum([P.chain(1), P.antichain(2)])
    assert S.labels == ("1/0", "2/0", "2/1")
    assert S.le("1/0", "2/1") and not S.le("2/0", "2/1")


def test_a_tilde_and_recognition():
    S = P.a_tilde([1, 1, 1, 1])
    assert len(S) == 4 and len(S.hasse_arrows()) == 4
    assert sorted(S.minimal()) == ["0", "2"]
    assert P.is_a_tilde(S) == (2, 2)
    assert P.is_a_tilde(P.a_tilde([2, 1, 3, 2])) in ((5, 3), (3, 5))
    assert P.is_a_tilde(P.chain(4)) is None
    assert P.is_a_tilde(P.antichain(4)) is None
    for bad in ([1, 1], [1, 1, 1], [0, 1, 1, 1]):
        with pytest.raises(PosetError):
            P.a_tilde(bad)


def test_path_algebra_detection():
    assert P.is_path_algebra_poset(P.a_tilde([2, 1, 1, 2]))
    diamond = P.from_relations(list("abcd"), [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert not P.is_path_algebra_poset(diamond)
    assert P.hasse_path_counts(diamond)[0][3] == 2


def test_bgp_reflect():
    S = P.a_tilde([2, 1, 2, 1])
    R = P.bgp_reflect(S, "0")
    assert set(R.hasse_arrows()) == {(b, a) if "0" in (a, b) else (a, b) for a, b in S.hasse_arrows()}
    with pytest.raises(NotSourceOrSinkError):
        P.bgp_reflect(S, "1")
    diamond = P.from_relations(list("abcd"), [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    with pytest.raises(NotPathAlgebraError):
        P.bgp_reflect(diamond, "a")
    tri = P.from_relations(list("abc"), [("a", "b"), ("a", "c")])
    assert P.bgp_reflect(tri, "b").hasse_arrows() == [("a", "c"), ("b", "a")]


def test_all_posets_counts():
    assert [len(P.all_posets(n)) for n in range(7)] == [1, 1, 2, 5, 16, 63, 318]


def test_canonical_form_invariance():
    rng = random.Random(11)
    for _ in range(100):
        S = random_poset(rng, rng.randint(0, 9))
        order = list(S.labels)
        rng.shuffle(order)
        T = S.reordered(order).relabel(prefix="r")
        assert P.canonical_form(S) == P.canonical_form(T)
    assert not P.is_isomorphic(P.chain(3), fork())
    with pytest.raises(PosetError):
        P.canonical_form(P.antichain(13))


def test_order_ideals():
    assert len(P.order_ideals(P.chain(4))) == 5
    assert len(P.order_ideals(P.antichain(4))) == 16
    assert len(P.order_ideals(fork())) == 5


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_json_round_trip(seed):
    S = rand(seed, 0, 8)
    assert Poset.from_json(S.to_json()) == S


def test_json_errors():
    for bad in ([], {}, {"elements": "ab"}, {"elements": ["a"], "relations": [["a"]]}, {"elements": ["a"], "relations": [["a", "z"]]}):
        with pytest.raises(PosetError):
            Poset.from_dict(bad)
