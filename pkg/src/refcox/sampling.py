"""Seeded random instances for property checks and verification suites."""

from __future__ import annotations

import random

from . import cartan as _cartan
from .intpoly import IntPoly
from .poset import Poset, from_relations

__all__ = ["random_poset", "random_quiver_algebra", "random_algebra", "random_self_reciprocal"]


def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """Random order on n elements from a random DAG compatible with 0 < 1 < ... ."""
    if density is None:
        density = rng.uniform(0.1, 0.6)
    labels = [f"e{i}" for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(labels[perm[i]], labels[perm[j]]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return from_relations(labels, pairs)


def random_quiver_algebra(rng: random.Random, n: int, max_parallel: int = 2) -> _cartan.CartanAlgebra:
    """Path algebra of a random acyclic quiver, parallel arrows allowed."""
    labels = [f"q{i}" for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.35:
                arrows += [(labels[perm[i]], labels[perm[j]])] * rng.randint(1, max_parallel)
    return _cartan.from_quiver(labels, arrows)


def random_algebra(rng: random.Random, max_n: int = 8) -> _cartan.CartanAlgebra:
    n = rng.randint(1, max_n)
    if rng.random() < 0.5:
        return _cartan.from_poset(random_poset(rng, n))
    return random_quiver_algebra(rng, n)


def random_self_reciprocal(rng: random.Random, max_degree: int = 12, bound: int = 9) -> tuple[IntPoly, int]:
    """Random p with p(x) = x^n p(1/x); returns (p, n)."""
    n = rng.randint(0, max_degree)
    c = [0] * (n + 1)
    for i in range(n // 2 + 1):
        c[i] = c[n - i] = rng.randint(-bound, bound)
    return IntPoly(c), n
