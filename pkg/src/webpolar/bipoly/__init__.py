"""Exact polynomial algebra over Q in two variables plus univariate elimination tools."""

from fractions import Fraction as Rat

from .elim import (
    Root,
    count_roots,
    gcd_many,
    gcd_poly,
    real_roots,
    resultant_x,
    resultant_y,
    squarefree_part,
    sturm_sequence,
    sylvester,
)
from .format import format_poly, format_ratfn
from .poly import NEG_INF, BiPoly, divides, exact_divide
from .ratfn import RationalFn, ratfn
from .uni import UniPoly, uni_gcd, uni_squarefree

X = BiPoly.x()
Y = BiPoly.y()


def add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def sub(a: BiPoly, b: BiPoly) -> BiPoly:
    return a - b


def mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def scale(a: BiPoly, c) -> BiPoly:
    return a.scale(c)


def partial(p: BiPoly, var: str) -> BiPoly:
    return p.partial(var)


def translate(p: BiPoly, point) -> BiPoly:
    return p.translate(point)


__all__ = [
    "BiPoly",
    "NEG_INF",
    "Rat",
    "RationalFn",
    "Root",
    "UniPoly",
    "X",
    "Y",
    "add",
    "count_roots",
    "divides",
    "exact_divide",
    "format_poly",
    "format_ratfn",
    "gcd_many",
    "gcd_poly",
    "mul",
    "partial",
    "ratfn",
    "real_roots",
    "resultant_x",
    "resultant_y",
    "scale",
    "squarefree_part",
    "sturm_sequence",
    "sub",
    "sylvester",
    "translate",
    "uni_gcd",
    "uni_squarefree",
]
