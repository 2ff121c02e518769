"""Finite posets, Hasse quivers, insertion and the type-A~ family."""

from __future__ import annotations

import json
from itertools import chain as _chain
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Poset",
    "PosetError",
    "CycleError",
    "UnknownLabelError",
    "LabelCollisionError",
    "NotPathAlgebraError",
    "NotSourceOrSinkError",
    "ReflectionNotHasseError",
    "from_relations",
    "chain",
    "antichain",
    "singleton",
    "empty",
    "add_max",
    "add_min",
    "remove",
    "poset_insert",
    "ordinal_sum",
    "disjoint_union",
    "a_tilde",
    "is_a_tilde",
    "is_path_algebra_poset",
    "bgp_reflect",
    "canonical_form",
    "is_isomorphic",
    "extend",
    "hasse_path_counts",
    "order_ideals",
    "all_posets",
]

CANONICAL_SIZE_CAP = 12


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    pass


class UnknownLabelError(PosetError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown label"


class LabelCollisionError(PosetError):
    pass


class NotPathAlgebraError(PosetError):
    pass


class NotSourceOrSinkError(PosetError):
    pass


class ReflectionNotHasseError(PosetError):
    pass


class Poset:
    """A finite partial order on string labels.

    ``leq[i][j]`` is True iff ``labels[i] <= labels[j]``.
    """

    __slots__ = ("labels", "leq", "_index", "_hasse")

    def __init__(self, labels: Sequence[str], leq: Sequence[Sequence[bool]], check: bool = True):
        labels = tuple(str(a) for a in labels)
        if len(set(labels)) != len(labels):
            raise LabelCollisionError(f"duplicate labels in {labels}")
        n = len(labels)
        mat = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise PosetError("order matrix has the wrong shape")
        self.labels = labels
        self.leq = mat
        self._index = {a: i for i, a in enumerate(labels)}
        self._hasse = None
        if check:
            self.validate()

    def validate(self):
        n, m = len(self.labels), self.leq
        for i in range(n):
            if not m[i][i]:
                raise PosetError(f"not reflexive at {self.labels[i]!r}")
            for j in range(i + 1, n):
                if m[i][j] and m[j][i]:
                    raise CycleError(f"{self.labels[i]!r} and {self.labels[j]!r} form a cycle")
        for k in range(n):
            for i in range(n):
                if m[i][k]:
                    for j in range(n):
                        if m[k][j] and not m[i][j]:
                            raise PosetError("order relation is not transitive")

    # -- queries ----------------------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.leq == other.leq

    def __hash__(self):
        return hash((self.labels, self.leq))

    def __repr__(self):
        rel = ", ".join(f"{a}<{b}" for a, b in self.hasse_arrows())
        return f"Poset({list(self.labels)}; {rel})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    def le(self, a: str, b: str) -> bool:
        return self.leq[self.index(a)][self.index(b)]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    def down_set(self, label: str, strict: bool = True) -> list[str]:
        j = self.index(label)
        return [a for i, a in enumerate(self.labels) if self.leq[i][j] and (i != j or not strict)]

    def up_set(self, label: str, strict: bool = True) -> list[str]:
        i = self.index(label)
        return [b for j, b in enumerate(self.labels) if self.leq[i][j] and (i != j or not strict)]

    def hasse_arrows(self) -> list[tuple[str, str]]:
        """Cover pairs (x, y): x < y with nothing strictly in between."""
        if self._hasse is None:
            n, m = len(self.labels), self.leq
            arrows = []
            for i in range(n):
                for j in range(n):
                    if i == j or not m[i][j]:
                        continue
                    if not any(k != i and k != j and m[i][k] and m[k][j] for k in range(n)):
                        arrows.append((self.labels[i], self.labels[j]))
            self._hasse = tuple(arrows)
        return list(self._hasse)

    def minimal(self) -> list[str]:
        n = len(self.labels)
        return [self.labels[j] for j in range(n) if not any(self.leq[i][j] for i in range(n) if i != j)]

    def maximal(self) -> list[str]:
        n = len(self.labels)
        return [self.labels[i] for i in range(n) if not any(self.leq[i][j] for j in range(n) if j != i)]

    def relabel(self, mapping: Mapping[str, str] | None = None, prefix: str = "") -> "Poset":
        if mapping is None:
            new = [prefix + a for a in self.labels]
        else:
            new = [prefix + mapping.get(a, a) for a in self.labels]
        return Poset(new, self.leq, check=False)

    def reordered(self, order: Sequence[str]) -> "Poset":
        idx = [self.index(a) for a in order]
        if sorted(idx) != list(range(len(self))):
            raise PosetError("order must be a permutation of the labels")
        return Poset(order, [[self.leq[i][j] for j in idx] for i in idx], check=False)

    def restrict(self, keep: Iterable[str]) -> "Poset":
        keep = set(keep)
        idx = [i for i, a in enumerate(self.labels) if a in keep]
        return Poset([self.labels[i] for i in idx], [[self.leq[i][j] for j in idx] for i in idx], check=False)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"elements": list(self.labels), "relations": [list(a) for a in self.hasse_arrows()]}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Poset":
        if not isinstance(data, Mapping):
            raise PosetError("poset JSON must be an object")
        if "elements" not in data:
            raise PosetError("poset JSON: missing field 'elements'")
        elements = data["elements"]
        relations = data.get("relations", [])
        if not isinstance(elements, list):
            raise PosetError("poset JSON: field 'elements' must be a list")
        if not isinstance(relations, list):
            raise PosetError("poset JSON: field 'relations' must be a list")
        pairs = []
        for k, r in enumerate(relations):
            if not isinstance(r, (list, tuple)) or len(r) != 2:
                raise PosetError(f"poset JSON: relations[{k}] must be a pair")
            pairs.append((str(r[0]), str(r[1])))
        return from_relations([str(e) for e in elements], pairs)

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_dict(json.loads(text))


# -- construction ------------------------------------------------------------


def from_relations(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    """Reflexive-transitive closure of the generating pairs ``a < b``."""
    labels = [str(a) for a in labels]
    if len(set(labels)) != len(labels):
        raise LabelCollisionError("labels must be distinct")
    index = {a: i for i, a in enumerate(labels)}
    n = len(labels)
    m = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        a, b = str(a), str(b)
        for lab in (a, b):
            if lab not in index:
                raise UnknownLabelError(f"unknown element {lab!r}")
        m[index[a]][index[b]] = True
    for k in range(n):
        mk = m[k]
        for i in range(n):
            if m[i][k]:
                mi = m[i]
                for j in range(n):
                    if mk[j]:
                        mi[j] = True
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] and m[j][i]:
                raise CycleError(f"relations contain a cycle through {labels[i]!r} and {labels[j]!r}")
    return Poset(labels, m, check=False)


def empty() -> Poset:
    return Poset([], [], check=False)


def singleton(label: str = "0") -> Poset:
    return Poset([label], [[True]], check=False)


def chain(n: int) -> Poset:
    """Chain 0 < 1 < ... < n-1."""
    return Poset([str(i) for i in range(n)], [[i <= j for j in range(n)] for i in range(n)], check=False)


def antichain(n: int) -> Poset:
    return Poset([str(i) for i in range(n)], [[i == j for j in range(n)] for i in range(n)], check=False)


def _fresh(base: str, taken) -> str:
    label, k = base, 1
    while label in taken:
        label = f"{base}{k}"
        k += 1
    return label


def add_max(S: Poset, label: str = "top") -> Poset:
    """S with a new maximum adjoined (S-hat)."""
    label = _fresh(label, S._index)
    n = len(S)
    rows = [list(r) + [True] for r in S.leq] + [[False] * n + [True]]
    return Poset(list(S.labels) + [label], rows, check=False)


def add_min(S: Poset, label: str = "bottom") -> Poset:
    label = _fresh(label, S._index)
    n = len(S)
    rows = [[True] * (n + 1)] + [[False] + list(r) for r in S.leq]
    return Poset([label] + list(S.labels), rows, check=False)


def remove(X: Poset, v: str) -> Poset:
    X.index(v)
    return X.restrict(a for a in X.labels if a != v)


def extend(X: Poset, label: str, below: Iterable[str] = (), above: Iterable[str] = ()) -> Poset:
    """One-element extension of X by ``label`` lying above ``below`` and below ``above``.

    ``below`` must be a down-set, ``above`` an up-set, and every element of
    ``below`` must lie under every element of ``above``.
    """
    if label in X:
        raise LabelCollisionError(f"label {label!r} already present")
    below, above = set(below), set(above)
    for a in below | above:
        X.index(a)
    if below & above:
        raise PosetError("down set and up set must be disjoint")
    for d in below:
        for e in X.down_set(d):
            if e not in below:
                raise PosetError(f"down set not closed: {e!r} < {d!r}")
    for u in above:
        for e in X.up_set(u):
            if e not in above:
                raise PosetError(f"up set not closed: {u!r} < {e!r}")
    for d in below:
        for u in above:
            if not X.le(d, u):
                raise PosetError(f"{d!r} must lie below {u!r}")
    n = len(X)
    rows = [list(r) + [X.labels[i] in below] for i, r in enumerate(X.leq)]
    rows.append([X.labels[j] in above for j in range(n)] + [True])
    return Poset(list(X.labels) + [label], rows, check=False)


def poset_insert(X: Poset, v: str, S: Poset) -> Poset:
    """Replace the element v of X by the poset S.

    Elements of S are relabeled ``v/s``; retained elements of X keep their
    labels.
    """
    iv = X.index(v)
    keep = [i for i in range(len(X)) if i != iv]
    new_s = [f"{v}/{s}" for s in S.labels]
    labels = [X.labels[i] for i in keep] + new_s
    if len(set(labels)) != len(labels):
        raise LabelCollisionError(f"inserting at {v!r} produces duplicate labels")
    ns = len(S)
    rows = []
    for i in keep:
        rows.append([X.leq[i][j] for j in keep] + [X.leq[i][iv]] * ns)
    for a in range(ns):
        rows.append([X.leq[iv][j] for j in keep] + list(S.leq[a]))
    return Poset(labels, rows, check=False)


def ordinal_sum(parts: Sequence[Poset]) -> Poset:
    """X_1 + ... + X_n stacked; elements labeled ``i/x`` with i from 1."""
    return _sum(parts, ordinal=True)


def disjoint_union(parts: Sequence[Poset]) -> Poset:
    return _sum(parts, ordinal=False)


def _sum(parts: Sequence[Poset], ordinal: bool) -> Poset:
    labels, block, local = [], [], []
    for k, P in enumerate(parts, start=1):
        for i, a in enumerate(P.labels):
            labels.append(f"{k}/{a}")
            block.append(k)
            local.append(i)
    n = len(labels)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if block[i] == block[j]:
                row.append(parts[block[i] - 1].leq[local[i]][local[j]])
            else:
                row.append(ordinal and block[i] < block[j])
        rows.append(row)
    return Poset(labels, rows, check=False)


# -- type A~ -------------------------------------------------------------------


def a_tilde(runs: Sequence[int]) -> Poset:
    """Poset whose Hasse quiver is the cycle with the given run lengths.

    ``runs = [n+_1, n-_1, ..., n+_k, n-_k]`` with k >= 2; vertex i is joined
    to vertex i+1 (mod n), arrows of a + run point forward.
    """
    runs = [int(r) for r in runs]
    if len(runs) % 2 or any(r < 1 for r in runs):
        raise PosetError("runs must be an even-length sequence of positive integers")
    if len(runs) < 4:
        raise PosetError("type A~ needs at least two runs of each sign (k >= 2)")
    signs = list(_chain.from_iterable([+1 if t % 2 == 0 else -1] * r for t, r in enumerate(runs)))
    n = len(signs)
    labels = [str(i) for i in range(n)]
    arrows = []
    for i, s in enumerate(signs):
        j = (i + 1) % n
        arrows.append((labels[i], labels[j]) if s > 0 else (labels[j], labels[i]))
    return from_relations(labels, arrows)


def is_a_tilde(S: Poset):
    """Return (p, q) if the Hasse quiver is a cycle with at least two sources."""
    n = len(S)
    if n < 4:
        return None
    arrows = S.hasse_arrows()
    if len(arrows) != n:
        return None
    nbrs = {a: [] for a in S.labels}
    indeg = {a: 0 for a in S.labels}
    for a, b in arrows:
        nbrs[a].append(b)
        nbrs[b].append(a)
        indeg[b] += 1
    if any(len(v) != 2 for v in nbrs.values()):
        return None
    if sum(1 for a in S.labels if indeg[a] == 0) < 2:
        return None
    arrow_set = set(arrows)
    start = S.labels[0]
    prev, cur = start, min(nbrs[start], key=S.index)
    p = q = 0
    seen = 1
    while True:
        if (prev, cur) in arrow_set:
            p += 1
        else:
            q += 1
        if cur == start:
            break
        seen += 1
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if seen != n:
        return None
    return p, q


def hasse_path_counts(S: Poset) -> list[list[int]]:
    """counts[i][j] = number of directed Hasse paths from element i to j."""
    n = len(S)
    order = sorted(range(n), key=lambda i: sum(S.leq[k][i] for k in range(n)))
    succ = [[] for _ in range(n)]
    for a, b in S.hasse_arrows():
        succ[S.index(a)].append(S.index(b))
    counts = [[0] * n for _ in range(n)]
    for i in range(n):
        counts[i][i] = 1
    for i in range(n):
        for u in order:
            c = counts[i][u]
            if c:
                for w in succ[u]:
                    counts[i][w] += c
    return counts


def is_path_algebra_poset(S: Poset) -> bool:
    counts = hasse_path_counts(S)
    return all(c <= 1 for row in counts for c in row)


def bgp_reflect(S: Poset, v: str) -> Poset:
    """Reverse every Hasse arrow at a source or sink v."""
    S.index(v)
    if not is_path_algebra_poset(S):
        raise NotPathAlgebraError("incidence algebra is not the path algebra of the Hasse quiver")
    arrows = S.hasse_arrows()
    incoming = [a for a in arrows if a[1] == v]
    outgoing = [a for a in arrows if a[0] == v]
    if incoming and outgoing:
        raise NotSourceOrSinkError(f"{v!r} is neither a source nor a sink")
    flipped = [(b, a) if v in (a, b) else (a, b) for a, b in arrows]
    R = from_relations(S.labels, flipped)
    if set(R.hasse_arrows()) != set(flipped):
        raise ReflectionNotHasseError("reflected quiver is not the Hasse quiver of its path order")
    return R


# -- isomorphism ---------------------------------------------------------------


def _refine(n, rel, colors):
    while True:
        sigs = []
        for i in range(n):
            nb = sorted((colors[j], rel[i][j], rel[j][i]) for j in range(n) if j != i)
            sigs.append((colors[i], tuple(nb)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(S: Poset) -> tuple:
    """Isomorphism-invariant certificate of S (size at most 12)."""
    n = len(S)
    if n > CANONICAL_SIZE_CAP:
        raise PosetError(f"canonical form limited to {CANONICAL_SIZE_CAP} elements, got {n}")
    rel = [[int(S.leq[i][j] and i != j) for j in range(n)] for i in range(n)]
    init = [(sum(rel[j][i] for j in range(n)), sum(rel[i])) for i in range(n)]
    ranks = {s: r for r, s in enumerate(sorted(set(init)))}
    colors = _refine(n, rel, [ranks[s] for s in init])
    best = [None]

    def twins(u, w):
        if rel[u][w] or rel[w][u]:
            return False
        return all(rel[u][k] == rel[w][k] and rel[k][u] == rel[k][w] for k in range(n) if k != u and k != w)

    def search(colors):
        cells = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            perm = sorted(range(n), key=lambda i: colors[i])
            cert = tuple(sum(rel[perm[i]][perm[j]] << j for j in range(n)) for i in range(n))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        tried = []
        for u in target:
            if any(twins(u, t) for t in tried):
                continue
            tried.append(u)
            split = [2 * c + (1 if (c == colors[u] and i != u) else 0) for i, c in enumerate(colors)]
            search(_refine(n, rel, split))

    search(colors)
    return (n, best[0] or ())


def is_isomorphic(A: Poset, B: Poset) -> bool:
    return len(A) == len(B) and canonical_form(A) == canonical_form(B)


def order_ideals(X: Poset) -> list[frozenset]:
    """All down-closed subsets of X."""
    n = len(X)
    below = [frozenset(i for i in range(n) if X.leq[i][j] and i != j) for j in range(n)]
    order = sorted(range(n), key=lambda j: len(below[j]))
    ideals = [frozenset()]
    for j in order:
        # ideals containing j must contain everything below j; those are built once j is reachable
        ideals += [I | {j} for I in ideals if below[j] <= I and j not in I]
    return [frozenset(X.labels[i] for i in I) for I in ideals]


def all_posets(n: int) -> list[Poset]:
    """One representative of every isomorphism class of posets on n elements."""
    if n == 0:
        return [empty()]
    out = {}
    for P in all_posets(n - 1):
        for I in order_ideals(P):
            Q = extend(P, str(n - 1), below=I)
            out.setdefault(canonical_form(Q), Q)
    return [out[k] for k in sorted(out)]
