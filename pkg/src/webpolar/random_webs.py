"""Seeded random webs for property checks."""

from __future__ import annotations

import random

from .bipoly import BiPoly
from .oneform import CoincidentFoliationsError, OneForm, Web, gradient_form

COEFF_RANGE = range(-3, 4)


def random_poly(rng: random.Random, max_degree: int, density: float = 0.6) -> BiPoly:
    """Random polynomial of total degree <= max_degree with coefficients in {-3..3}."""
    terms = {}
    for d in range(max_degree + 1):
        for i in range(d + 1):
            if rng.random() < density:
                terms[(i, d - i)] = rng.choice(COEFF_RANGE)
    return BiPoly(terms)


def _nonzero_poly(rng, max_degree):
    while True:
        p = random_poly(rng, max_degree)
        if not p.is_zero():
            return p


def random_form(rng: random.Random, max_degree: int = 3) -> OneForm:
    while True:
        w1, w2 = random_poly(rng, max_degree), random_poly(rng, max_degree)
        if not (w1.is_zero() and w2.is_zero()):
            return OneForm(w1, w2)


def random_polynomial_web(rng: random.Random, max_degree: int = 3) -> Web:
    while True:
        try:
            return Web(random_form(rng, max_degree), random_form(rng, max_degree), "random")
        except CoincidentFoliationsError:
            continue


def random_exact_web(rng: random.Random, max_degree: int = 4) -> Web:
    """Web of two gradient forms of random polynomials of degree <= max_degree."""
    while True:
        f, g = _nonzero_poly(rng, max_degree), _nonzero_poly(rng, max_degree)
        if f.is_constant() or g.is_constant():
            continue
        try:
            return Web(gradient_form(f), gradient_form(g), "random-exact")
        except CoincidentFoliationsError:
            continue


def random_webs(n: int, seed: int, max_degree: int = 3) -> list[Web]:
    rng = random.Random(seed)
    return [random_polynomial_web(rng, max_degree) for _ in range(n)]


def random_nonzero_factor(rng: random.Random, max_degree: int = 2) -> BiPoly:
    return _nonzero_poly(rng, max_degree)
