"""Constructive membership certificates for the class C of posets with phi^0 = 0.

A certificate replays one-element extensions followed by insertion of a
type-A~ poset at the new element, starting from the empty poset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import poset as _poset
from .coxeter import coxeter_poly, refined_pair
from .intpoly import IntPoly
from .polyspec import is_cyclotomic_type
from .poset import Poset, PosetError

__all__ = [
    "Step",
    "ClassCCertificate",
    "ClassCReport",
    "build",
    "verify_class_c",
    "enumerate_class_c",
    "atilde_run_classes",
    "ordinal_sum_certificate",
    "eight_element_certificates",
]

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class Step:
    down_set: tuple = ()
    up_set: tuple = ()
    atilde_runs: tuple = (1, 1, 1, 1)

    def __post_init__(self):
        object.__setattr__(self, "down_set", tuple(sorted(self.down_set)))
        object.__setattr__(self, "up_set", tuple(sorted(self.up_set)))
        object.__setattr__(self, "atilde_runs", tuple(int(r) for r in self.atilde_runs))
        if set(self.down_set) & set(self.up_set):
            raise PosetError("down set and up set of a step must be disjoint")
        if len(self.atilde_runs) < 4 or len(self.atilde_runs) % 2:
            raise PosetError("atilde_runs must describe k >= 2 pairs of runs")

    def to_dict(self) -> dict:
        return {"down_set": list(self.down_set), "up_set": list(self.up_set), "atilde_runs": list(self.atilde_runs)}


@dataclass(frozen=True)
class ClassCCertificate:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps]}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "ClassCCertificate":
        if not isinstance(data, Mapping) or not isinstance(data.get("steps"), list):
            raise PosetError("certificate JSON needs a 'steps' list")
        steps = []
        for k, s in enumerate(data["steps"]):
            if not isinstance(s, Mapping) or "atilde_runs" not in s:
                raise PosetError(f"certificate JSON: steps[{k}] needs 'atilde_runs'")
            steps.append(Step(s.get("down_set", ()), s.get("up_set", ()), s["atilde_runs"]))
        return cls(steps)

    @classmethod
    def from_json(cls, text: str) -> "ClassCCertificate":
        return cls.from_dict(json.loads(text))


def step_label(k: int) -> str:
    return f"c{k}"


def build(cert: ClassCCertificate) -> Poset:
    """Replay the certificate; elements inserted at step k are labeled ``c{k}/i``."""
    X = _poset.empty()
    for k, step in enumerate(cert.steps, start=1):
        v = step_label(k)
        X = _poset.extend(X, v, below=step.down_set, above=step.up_set)
        X = _poset.poset_insert(X, v, _poset.a_tilde(step.atilde_runs))
    return X


def ordinal_sum_certificate(first: ClassCCertificate, second: ClassCCertificate) -> ClassCCertificate:
    """Certificate for build(first) stacked below build(second)."""
    below = tuple(build(first).labels)
    offset = len(first.steps)
    steps = list(first.steps)
    for k, s in enumerate(second.steps, start=1):
        rename = lambda a: _shift_label(a, offset)  # noqa: E731
        steps.append(
            Step(
                below + tuple(rename(a) for a in s.down_set),
                tuple(rename(a) for a in s.up_set),
                s.atilde_runs,
            )
        )
    return ClassCCertificate(steps)


def _shift_label(label: str, offset: int) -> str:
    head, _, tail = label.partition("/")
    return f"c{int(head[1:]) + offset}/{tail}"


@dataclass
class ClassCReport:
    phi: IntPoly
    phi0: IntPoly
    phi1: IntPoly
    phi0_zero: bool
    cyclotomic: bool
    certified: bool = field(init=False)

    def __post_init__(self):
        self.certified = self.phi0_zero and self.cyclotomic

    def to_dict(self) -> dict:
        return {
            "phi": str(self.phi),
            "phi0": str(self.phi0),
            "phi1": str(self.phi1),
            "phi0_zero": self.phi0_zero,
            "cyclotomic": self.cyclotomic,
            "certified": self.certified,
        }


def verify_class_c(S: Poset) -> ClassCReport:
    phi = coxeter_poly(S)
    pair = refined_pair(S)
    return ClassCReport(phi, pair.phi0, pair.phi1, pair.phi0.is_zero(), is_cyclotomic_type(phi))


def _run_sequences(n: int):
    """All run sequences of total n with at least two runs of each sign."""

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for pairs in range(2, n // 2 + 1):
        yield from compositions(n, 2 * pairs)


def atilde_run_classes(max_size: int) -> list[tuple]:
    """One run sequence per isomorphism class of type-A~ posets of size <= max_size."""
    seen, out = set(), []
    for n in range(4, max_size + 1):
        for runs in _run_sequences(n):
            key = _poset.canonical_form(_poset.a_tilde(runs))
            if key not in seen:
                seen.add(key)
                out.append(runs)
    return out


def _extensions(X: Poset):
    """(down, up) pairs describing every one-element extension of X."""
    ideals = _poset.order_ideals(X)
    labels = set(X.labels)
    for D in ideals:
        for complement in ideals:
            U = labels - complement
            if U & D or not D <= complement:
                continue
            if all(X.le(d, u) for d in D for u in U):
                yield D, U


def enumerate_class_c(max_size: int):
    """Members of C with at most max_size elements, one per isomorphism class.

    Returns a list of ``(poset, certificate)`` ordered by size, then canonical form.
    """
    if max_size > ENUMERATION_CAP:
        raise PosetError(f"enumeration limited to {ENUMERATION_CAP} elements")
    runs_by_size = {}
    for runs in atilde_run_classes(max_size):
        runs_by_size.setdefault(sum(runs), []).append(runs)
    found = {}
    frontier = [(_poset.empty(), ClassCCertificate())]
    while frontier:
        nxt = []
        for X, cert in frontier:
            room = max_size - len(X)
            if room < 4:
                continue
            for D, U in _extensions(X):
                for m in range(4, room + 1):
                    for runs in runs_by_size.get(m, []):
                        new = ClassCCertificate(cert.steps + (Step(tuple(D), tuple(U), runs),))
                        S = build(new)
                        key = _poset.canonical_form(S)
                        if key not in found:
                            found[key] = (S, new)
                            nxt.append((S, new))
        frontier = nxt
    return [found[k] for k in sorted(found, key=lambda k: (k[0], k))]


def eight_element_certificates() -> list[ClassCCertificate]:
    """Three non-isomorphic 8-element members, each an A~(2,2) inserted over another.

    The second piece sits above a maximal element of the first, between a
    minimal and a maximal element of it, or above all of it (ordinal sum).
    """
    first = Step((), (), (1, 1, 1, 1))
    return [
        ClassCCertificate([first, Step(("c1/0", "c1/1", "c1/2"), (), (1, 1, 1, 1))]),
        ClassCCertificate([first, Step(("c1/0",), ("c1/1",), (1, 1, 1, 1))]),
        ClassCCertificate([first, Step(("c1/0", "c1/1", "c1/2", "c1/3"), (), (1, 1, 1, 1))]),
    ]
