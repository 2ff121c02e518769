"""Exact Coxeter and refined Coxeter polynomials of posets and triangular algebras."""

from .cartan import CartanAlgebra
from .coxeter import RefinedPair, coxeter_poly, refined_pair
from .intpoly import IntPoly, cyclotomic, parse_poly
from .poset import Poset

__all__ = [
    "CartanAlgebra",
    "IntPoly",
    "Poset",
    "RefinedPair",
    "coxeter_poly",
    "cyclotomic",
    "parse_poly",
    "refined_pair",
]

__version__ = "0.1.0"
