"""Triangular algebras seen through their Cartan matrices."""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .linalg import bareiss_det
from .poset import Poset

__all__ = [
    "CartanAlgebra",
    "CartanError",
    "from_poset",
    "from_quiver",
    "star",
    "extended_canonical",
    "canonical",
    "insert",
    "remove",
]


class CartanError(ValueError):
    pass


class CartanAlgebra:
    """Labeled square integer matrix, ``C[i][j] = dim Hom(P_i, P_j)``.

    The diagonal must be 1 and the off-diagonal support acyclic, so that
    some simultaneous permutation makes ``C`` unitriangular.
    """

    __slots__ = ("labels", "C", "_index", "handles")

    def __init__(self, labels: Sequence[str], C: Sequence[Sequence[int]], check: bool = True, handles=None):
        self.labels = tuple(str(a) for a in labels)
        self.C = tuple(tuple(int(v) for v in row) for row in C)
        self._index = {a: i for i, a in enumerate(self.labels)}
        self.handles = dict(handles or {})
        if check:
            self.validate()

    def validate(self):
        n = len(self.labels)
        if len(self._index) != n:
            raise CartanError("labels must be distinct")
        if len(self.C) != n or any(len(row) != n for row in self.C):
            raise CartanError(f"matrix must be {n}x{n}")
        for i in range(n):
            if self.C[i][i] != 1:
                raise CartanError(f"diagonal entry at {self.labels[i]!r} is {self.C[i][i]}, expected 1")
        if self.topological_order() is None:
            raise CartanError("support of the Cartan matrix has an oriented cycle")

    def topological_order(self):
        """Vertex indices ordered so that C becomes lower unitriangular, or None."""
        n = len(self.labels)
        # i depends on j whenever C[i][j] != 0, i != j
        pending = [sum(1 for j in range(n) if j != i and self.C[i][j]) for i in range(n)]
        ready = [i for i in range(n) if pending[i] == 0]
        order = []
        while ready:
            j = ready.pop(0)
            order.append(j)
            for i in range(n):
                if i != j and self.C[i][j]:
                    pending[i] -= 1
                    if pending[i] == 0:
                        ready.append(i)
        return order if len(order) == n else None

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, CartanAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.C == other.C

    def __hash__(self):
        return hash((self.labels, self.C))

    def __repr__(self):
        return f"CartanAlgebra({list(self.labels)}, {[list(r) for r in self.C]})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise CartanError(f"unknown vertex {label!r}") from None

    def entry(self, a: str, b: str) -> int:
        return self.C[self.index(a)][self.index(b)]

    def vertex(self, arm: int, position: int) -> str:
        """Label of the internal vertex at (arm, position) for canonical-type builders."""
        try:
            return self.handles[(arm, position)]
        except KeyError:
            raise CartanError(f"no vertex handle ({arm}, {position})") from None

    def determinant(self) -> int:
        return bareiss_det(self.C)

    def reordered(self, order: Sequence[str]) -> "CartanAlgebra":
        idx = [self.index(a) for a in order]
        if sorted(idx) != list(range(len(self))):
            raise CartanError("order must be a permutation of the labels")
        return CartanAlgebra(order, [[self.C[i][j] for j in idx] for i in idx], check=False)

    def relabel(self, mapping: Mapping[str, str]) -> "CartanAlgebra":
        return CartanAlgebra([mapping.get(a, a) for a in self.labels], self.C, check=False)

    def sorted_by_label(self) -> "CartanAlgebra":
        return self.reordered(sorted(self.labels))

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "matrix": [list(r) for r in self.C]}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "CartanAlgebra":
        if not isinstance(data, Mapping):
            raise CartanError("Cartan JSON must be an object")
        for key in ("labels", "matrix"):
            if key not in data:
                raise CartanError(f"Cartan JSON: missing field {key!r}")
        labels, matrix = data["labels"], data["matrix"]
        if not isinstance(labels, list) or not isinstance(matrix, list):
            raise CartanError("Cartan JSON: 'labels' and 'matrix' must be lists")
        for r, row in enumerate(matrix):
            if not isinstance(row, list):
                raise CartanError(f"Cartan JSON: matrix[{r}] must be a list")
            for c, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise CartanError(f"Cartan JSON: matrix[{r}][{c}] = {v!r} is not an integer")
        return cls([str(a) for a in labels], matrix)

    @classmethod
    def from_json(cls, text: str) -> "CartanAlgebra":
        return cls.from_dict(json.loads(text))


def from_poset(X: Poset) -> CartanAlgebra:
    """Incidence algebra: C[x][y] = 1 iff y <= x."""
    n = len(X)
    return CartanAlgebra(X.labels, [[int(X.leq[j][i]) for j in range(n)] for i in range(n)], check=False)


def _path_counts(vertices: Sequence[str], arrows: Iterable[tuple[str, str]]):
    index = {a: i for i, a in enumerate(vertices)}
    n = len(vertices)
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in arrows:
        if a not in index or b not in index:
            raise CartanError(f"arrow ({a!r}, {b!r}) uses an unknown vertex")
        succ[index[a]].append(index[b])
        indeg[index[b]] += 1
    order, ready = [], [i for i in range(n) if indeg[i] == 0]
    while ready:
        u = ready.pop()
        order.append(u)
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != n:
        raise CartanError("quiver has an oriented cycle")
    counts = [[0] * n for _ in range(n)]
    for s in range(n):
        counts[s][s] = 1
        for u in order:
            c = counts[s][u]
            if c:
                for w in succ[u]:
                    counts[s][w] += c
    return counts


def from_quiver(vertices: Sequence[str], arrows: Iterable[tuple[str, str]]) -> CartanAlgebra:
    """Path algebra of an acyclic quiver; C[i][j] counts paths j -> i.

    Repeated arrows are parallel arrows.
    """
    vertices = [str(v) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise CartanError("vertex names must be distinct")
    counts = _path_counts(vertices, [(str(a), str(b)) for a, b in arrows])
    n = len(vertices)
    return CartanAlgebra(vertices, [[counts[j][i] for j in range(n)] for i in range(n)], check=False)


def _check_weights(weights, minimum_arms):
    weights = [int(p) for p in weights]
    if len(weights) < minimum_arms:
        raise CartanError(f"need at least {minimum_arms} weights")
    if any(p < 2 for p in weights):
        raise CartanError("every weight must be at least 2")
    return weights


def star(arm_sizes: Sequence[int]) -> CartanAlgebra:
    """Path algebra of a star, arrows oriented away from the center.

    Arm i contributes ``arm_sizes[i] - 1`` vertices ``a{i}_1, a{i}_2, ...``
    counted outward from the center ``c``.
    """
    arms = _check_weights(arm_sizes, 1)
    vertices, arrows, handles = ["c"], [], {}
    for i, p in enumerate(arms, start=1):
        prev = "c"
        for k in range(1, p):
            name = f"a{i}_{k}"
            vertices.append(name)
            arrows.append((prev, name))
            handles[(i, k)] = name
            prev = name
    alg = from_quiver(vertices, arrows)
    alg.handles = handles
    return alg


def _canonical_type(weights, extended):
    weights = _check_weights(weights, 2)
    vertices = (["s"] if extended else []) + ["b"]
    arrows = [("s", "b")] if extended else []
    handles = {}
    for i, p in enumerate(weights, start=1):
        prev = "b"
        for k in range(1, p):
            name = f"a{i}_{k}"
            vertices.append(name)
            arrows.append((prev, name))
            handles[(i, k)] = name
            prev = name
        arrows.append((prev, "w"))
    vertices.append("w")
    alg = from_quiver(vertices, arrows)
    C = [list(r) for r in alg.C]
    w = alg.index("w")
    # t parallel paths b -> w modulo t-2 independent relations
    for src in (["s", "b"] if extended else ["b"]):
        C[w][alg.index(src)] = 2
    return CartanAlgebra(vertices, C, handles=handles)


def extended_canonical(weights: Sequence[int]) -> CartanAlgebra:
    """Extended canonical algebra: a source ``s`` attached to the canonical quiver."""
    return _canonical_type(weights, extended=True)


def canonical(weights: Sequence[int]) -> CartanAlgebra:
    """Canonical algebra with source ``b``, sink ``w`` and arms ``a{i}_{k}``."""
    return _canonical_type(weights, extended=False)


def insert(alg: CartanAlgebra, v: str, S: Poset) -> CartanAlgebra:
    """Cartan matrix of the insertion of S at the vertex v.

    Retained vertices keep their labels, elements of S become ``v/s``.
    Inserting the empty poset removes v.
    """
    iv = alg.index(v)
    keep = [i for i in range(len(alg)) if i != iv]
    labels = [alg.labels[i] for i in keep] + [f"{v}/{s}" for s in S.labels]
    if len(set(labels)) != len(labels):
        raise CartanError(f"inserting at {v!r} produces duplicate labels")
    ns = len(S)
    C = alg.C
    rows = []
    for u in keep:
        rows.append([C[u][u2] for u2 in keep] + [C[u][iv]] * ns)
    for a in range(ns):
        rows.append([C[iv][u2] for u2 in keep] + [int(S.leq[b][a]) for b in range(ns)])
    handles = {k: (h if h != v else None) for k, h in alg.handles.items()}
    handles = {k: h for k, h in handles.items() if h is not None}
    return CartanAlgebra(labels, rows, check=False, handles=handles)


def remove(alg: CartanAlgebra, v: str) -> CartanAlgebra:
    """Delete the row and column of v."""
    iv = alg.index(v)
    keep = [i for i in range(len(alg)) if i != iv]
    handles = {k: h for k, h in alg.handles.items() if h != v}
    return CartanAlgebra(
        [alg.labels[i] for i in keep], [[alg.C[i][j] for j in keep] for i in keep], check=False, handles=handles
    )
