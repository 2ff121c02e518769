"""Interlaced towers built by inserting chains at a vertex, and the Mahler counterexamples."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

from . import cartan as _cartan
from . import poset as _poset
from .cartan import CartanAlgebra
from .coxeter import coxeter_poly
from .intpoly import ONE, X, IntPoly
from .polyspec import (
    DEFAULT_TOL,
    MahlerResult,
    check_interlacing,
    mahler_measure,
    represent,
    sturm_real_simple,
)

__all__ = [
    "TowerLevel",
    "TowerReport",
    "build_tower",
    "verify_interlaced",
    "counterexample",
    "counterexample_algebra",
    "COUNTEREXAMPLES",
]

Y = X  # the representing variable prints as y


@dataclass
class TowerLevel:
    label: str
    phi: IntPoly
    q: IntPoly
    mahler: MahlerResult
    real_simple: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "degree": self.phi.degree,
            "phi": str(self.phi),
            "q": self.q.to_text("y"),
            "real_simple": self.real_simple,
            "mahler": self.mahler.to_dict(),
        }


@dataclass
class TowerReport:
    levels: list
    degree_ok: bool
    recurrence_ok: bool
    q_recurrence_ok: bool
    sturm0_ok: bool
    interlacing_ok: bool
    interlacing: list = field(default_factory=list)
    name: str = ""

    def mahler_values(self) -> list[float]:
        return [lv.mahler.measure for lv in self.levels]

    def flags(self) -> dict:
        return {
            "degree_ok": self.degree_ok,
            "recurrence_ok": self.recurrence_ok,
            "q_recurrence_ok": self.q_recurrence_ok,
            "sturm0_ok": self.sturm0_ok,
            "interlacing_ok": self.interlacing_ok,
        }

    def to_dict(self) -> dict:
        out = {"name": self.name} if self.name else {}
        out["levels"] = [lv.to_dict() for lv in self.levels]
        out.update(self.flags())
        out["interlacing"] = self.interlacing
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        flags = self.flags()
        w.writerow(["level", "label", "degree", "mahler", "exact_one", "real_simple", *flags])
        for i, lv in enumerate(self.levels):
            w.writerow(
                [i, lv.label, lv.phi.degree, f"{lv.mahler.measure:.12f}", lv.mahler.exact_one, lv.real_simple]
                + [flags[k] for k in flags]
            )
        return buf.getvalue()


def _recurrence_holds(phis: Sequence[IntPoly]) -> bool:
    return all(phis[i + 1] == (X + ONE) * phis[i] - X * phis[i - 1] for i in range(1, len(phis) - 1))


def verify_interlaced(phis: Sequence[IntPoly]) -> dict:
    """Check degree increments, the (x+1)/-x recurrence and real simple roots at the base."""
    if len(phis) < 3:
        raise ValueError("a tower needs at least three levels")
    degree_ok = all(b.degree == a.degree + 1 for a, b in zip(phis, phis[1:]))
    recurrence_ok = _recurrence_holds(phis)
    sturm0_ok = sturm_real_simple(represent(phis[0]))
    return {"degree_ok": degree_ok, "recurrence_ok": recurrence_ok, "sturm0_ok": sturm0_ok}


def _level(label: str, alg: CartanAlgebra, tol: float) -> TowerLevel:
    phi = coxeter_poly(alg)
    q = represent(phi)
    return TowerLevel(label, phi, q, mahler_measure(phi, tol), sturm_real_simple(q))


def build_tower(alg: CartanAlgebra, v: str, top_length: int, tol: float = DEFAULT_TOL, name: str = "") -> TowerReport:
    """Levels: alg without v, alg, then alg with v replaced by chains of 2..top_length."""
    alg.index(v)
    if top_length < 2:
        raise ValueError("top_length must be at least 2")
    algebras = [("minus", _cartan.remove(alg, v)), ("base", alg)]
    for i in range(2, top_length + 1):
        algebras.append((f"chain{i}", _cartan.insert(alg, v, _poset.chain(i))))
    levels = [_level(label, a, tol) for label, a in algebras]
    phis = [lv.phi for lv in levels]
    qs = [lv.q for lv in levels]
    verdict = verify_interlaced(phis)
    q_rec = all(qs[i + 1] == Y * qs[i] - qs[i - 1] for i in range(1, len(qs) - 1))
    pairs = []
    for i in range(len(levels) - 1):
        a, b = levels[i], levels[i + 1]
        if a.real_simple and b.real_simple:
            pairs.append({"levels": [i, i + 1], "interlaced": check_interlacing(a.q, b.q)})
    return TowerReport(
        levels,
        verdict["degree_ok"],
        verdict["recurrence_ok"],
        q_rec,
        verdict["sturm0_ok"],
        all(p["interlaced"] for p in pairs),
        pairs,
        name,
    )


def _tree_nine() -> CartanAlgebra:
    # a1 - a2 - c1 -> w -> c2 - b1 - b2, with u1 on c1 and u2 on c2
    vertices = ["a1", "a2", "u1", "c1", "w", "c2", "u2", "b1", "b2"]
    arrows = [("a1", "a2"), ("a2", "c1"), ("u1", "c1"), ("c1", "w"), ("w", "c2"), ("u2", "c2"), ("c2", "b1"), ("b1", "b2")]
    return _cartan.from_quiver(vertices, arrows)


def counterexample_algebra(name: str) -> tuple[CartanAlgebra, str]:
    """The fixture algebra and its marked vertex."""
    if name == "ext-canonical-234":
        alg = _cartan.extended_canonical([2, 3, 4])
        return alg, alg.vertex(3, 2)
    if name == "tree-11":
        return _tree_nine(), "w"
    if name == "e8-star":
        alg = _cartan.star([2, 3, 6])
        return alg, alg.vertex(3, 5)
    raise KeyError(f"unknown counterexample {name!r}; choose from {', '.join(COUNTEREXAMPLES)}")


COUNTEREXAMPLES = ("ext-canonical-234", "tree-11", "e8-star")


def counterexample(name: str, tol: float = DEFAULT_TOL) -> TowerReport:
    """Tower of length 3 at the marked vertex; levels 1..3 carry the Mahler triple."""
    alg, v = counterexample_algebra(name)
    return build_tower(alg, v, 3, tol, name=name)
