import random
from fractions import Fraction

import pytest

from oracles import hom_dimension
from refcox import cartan
from refcox import poset as P
from refcox.cartan import CartanAlgebra, CartanError
from refcox.coxeter import coxeter_poly
from refcox.sampling import random_algebra, random_poset


def test_from_poset_convention():
    A = cartan.from_poset(P.chain(2))
    # C[x][y] = 1 iff y <= x
    assert A.entry("1", "0") == 1 and A.entry("0", "1") == 0


def test_from_quiver_counts_paths():
    A = cartan.from_quiver(["a", "b", "c"], [("a", "b"), ("a", "b"), ("b", "c")])
    assert A.entry("b", "a") == 2
    assert A.entry("c", "a") == 2
    assert A.entry("a", "c") == 0
    with pytest.raises(CartanError):
        cartan.from_quiver(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CartanError):
        cartan.from_quiver(["a"], [("a", "z")])


def test_validation():
    with pytest.raises(CartanError):
        CartanAlgebra(["a", "b"], [[1, 0], [0, 2]])
    with pytest.raises(CartanError):
        CartanAlgebra(["a", "b"], [[1, 1], [1, 1]])
    with pytest.raises(CartanError):
        CartanAlgebra(["a", "a"], [[1, 0], [0, 1]])
    with pytest.raises(CartanError):
        CartanAlgebra(["a"], [[1, 0]])


def test_star_shape():
    A = cartan.star([2, 3, 6])
    assert len(A) == 1 + 1 + 2 + 5
    assert A.vertex(3, 5) == "a3_5"
    assert A.entry("a3_5", "c") == 1
    assert A.entry("c", "a3_5") == 0
    with pytest.raises(CartanError):
        A.vertex(1, 2)
    with pytest.raises(CartanError):
        cartan.star([1, 3])


def _canonical_oracle(weights, extended, lam=(Fraction(3), Fraction(5), Fraction(-7))):
    """Cartan matrix of the bound quiver algebra via path bases modulo relations."""
    vertices = (["s"] if extended else []) + ["b"]
    arrows = [("s", "b")] if extended else []
    arm_paths = []
    for i, p in enumerate(weights, start=1):
        prev, path = "b", []
        for k in range(1, p):
            name = f"a{i}_{k}"
            vertices.append(name)
            path.append(len(arrows))
            arrows.append((prev, name))
            prev = name
        path.append(len(arrows))
        arrows.append((prev, "w"))
        arm_paths.append(tuple(path))
    vertices.append("w")
    relations = []
    for i in range(2, len(weights)):
        combo = {arm_paths[i]: 1, arm_paths[0]: -1, arm_paths[1]: lam[i - 2]}
        relations.append(("b", "w", combo))
    n = len(vertices)
    C = [[hom_dimension(arrows, relations, vertices[j], vertices[i]) for j in range(n)] for i in range(n)]
    return vertices, C


@pytest.mark.parametrize("weights", [(2, 3, 4), (2, 3, 5), (2, 2, 2, 3), (3, 3, 3, 3), (2, 3)])
@pytest.mark.parametrize("extended", [False, True])
def test_canonical_matches_path_basis(weights, extended):
    A = (cartan.extended_canonical if extended else cartan.canonical)(weights)
    labels, C = _canonical_oracle(weights, extended)
    assert list(A.labels) == labels
    assert [list(r) for r in A.C] == C


def test_canonical_handles():
    A = cartan.extended_canonical([2, 3, 4])
    assert A.vertex(3, 2) == "a3_2"
    assert A.entry("w", "s") == 2 and A.entry("w", "b") == 2


def test_insert_matches_poset_insert():
    rng = random.Random(3)
    for _ in range(80):
        X = random_poset(rng, rng.randint(1, 6))
        S = random_poset(rng, rng.randint(0, 4))
        v = rng.choice(X.labels)
        assert cartan.insert(cartan.from_poset(X), v, S) == cartan.from_poset(P.poset_insert(X, v, S))


def test_insert_empty_is_remove():
    A = cartan.extended_canonical([2, 3, 4])
    assert cartan.insert(A, "b", P.empty()) == cartan.remove(A, "b")


def test_insert_entries():
    A = cartan.canonical([2, 2, 3])
    B = cartan.insert(A, "a3_1", P.antichain(2))
    for s in ("a3_1/0", "a3_1/1"):
        for u in ("b", "w", "a1_1"):
            assert B.entry(u, s) == A.entry(u, "a3_1")
            assert B.entry(s, u) == A.entry("a3_1", u)
    assert B.entry("a3_1/0", "a3_1/1") == 0
    with pytest.raises(CartanError):
        cartan.insert(A, "zz", P.chain(1))


def test_tip_insertion_lengthens_arm():
    base = cartan.star([2, 3, 6])
    for k in range(1, 4):
        grown = cartan.insert(base, base.vertex(3, 5), P.chain(k + 1))
        assert coxeter_poly(grown) == coxeter_poly(cartan.star([2, 3, 6 + k]))
        assert grown.handles.get((3, 5)) is None and grown.vertex(3, 4) == "a3_4"


def test_determinant_is_one():
    rng = random.Random(8)
    for _ in range(60):
        assert random_algebra(rng, 8).determinant() == 1
    assert cartan.extended_canonical([2, 3, 6]).determinant() == 1


def test_reorder_and_json():
    A = cartan.canonical([2, 3, 3])
    B = A.reordered(list(reversed(A.labels)))
    assert B.sorted_by_label() == A.sorted_by_label()
    assert coxeter_poly(A) == coxeter_poly(B)
    assert CartanAlgebra.from_json(A.to_json()) == A
    with pytest.raises(CartanError):
        A.reordered(["b"])


def test_json_errors():
    bad = [
        [],
        {"labels": ["a"]},
        {"labels": "a", "matrix": [[1]]},
        {"labels": ["a"], "matrix": [1]},
        {"labels": ["a"], "matrix": [[1.5]]},
        {"labels": ["a"], "matrix": [[True]]},
        {"labels": ["a", "b"], "matrix": [[1, 1], [1, 1]]},
    ]
    for data in bad:
        with pytest.raises(CartanError):
            CartanAlgebra.from_dict(data)
